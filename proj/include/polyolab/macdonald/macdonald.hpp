#pragma once

#include "polyolab/exec.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <vector>

namespace polyolab::macdonald {

using algebra::BigRational;
using algebra::QTPoly;
using algebra::QTRat;
using symfunc::Basis;
using symfunc::Composition;
using symfunc::Expansion;
using symfunc::Partition;
using symfunc::SymF;

// Degree caps for the generic operators (default 8) and for the
// specialized t = 1, 0, 1/q modes (default 10).
int generic_degree_cap();
void set_generic_degree_cap(int cap);
int special_degree_cap();
void set_special_degree_cap(int cap);

// B_mu = sum of q^i t^j over the cells of mu; i is the column, j the row.
QTPoly bmu(const Partition& mu);

// Schur coefficients K_{lambda,mu}(q,t) of H_mu, normalized by K_{(n),mu} = 1.
// Values are interpolated from exact solves at integer points and then
// certified against the triangularity conditions; cached per partition.
const Expansion& kostka_qt(const Partition& mu);
SymF macdonald_H(const Partition& mu);
// Same computation without the cache, for comparing execution modes.
Expansion compute_kostka_qt(const Partition& mu, Exec exec);

// H_mu(z;q,0), solved directly at t = 0 (no generic cache involved).
const Expansion& kostka_q0(const Partition& mu);
SymF macdonald_H_t0(const Partition& mu);

struct Triangularity {
    bool q_condition = false;  // H[z(1-q)] supported on lambda >= mu
    bool t_condition = false;  // H[z(1-t)] supported on lambda >= mu'
    bool normalized = false;   // K_{(n),mu} = 1
    bool ok() const { return q_condition && t_condition && normalized; }
};
// With at_t0 the t-condition reads H[z] (t = 0).
Triangularity check_triangularity(const SymF& H, const Partition& mu, bool at_t0 = false);

enum class TMode { generic, t_one, t_zero, t_inv_q };

struct OpSpec {
    SymF f;
    TMode mode = TMode::generic;
};

// f[B_mu] with t specialized according to mode.
QTRat eigenvalue(const SymF& f, const Partition& mu, TMode mode);

// <p_lambda, p_mu>_* = z_mu (-1)^{|mu|-l(mu)} prod (1-q^{mu_i})(1-t^{mu_i}) delta.
QTRat star_product(const SymF& f, const SymF& g);
// <H_mu, H_mu>_* = prod over cells of (q^a - t^{l+1})(t^l - q^{a+1}).
QTPoly star_norm(const Partition& mu);
// Coefficients of a homogeneous g in the H basis (generic q,t).
Expansion expand_H(const SymF& g);

SymF delta(const OpSpec& op, const SymF& g);
// Delta_{e_d} on each degree-d component, applied r times.
SymF nabla(const SymF& g, int r = 1, TMode mode = TMode::generic);

// E_{n,r}, from e_n[z [k+1]_q] = sum_r qbinom(k+r, r) E_{n,r} for k = 0..n-1.
SymF e_nr(int n, int r);
// C_a f = (-q)^{1-a} f[z - (q-1)/(q u)] * sum_k h_k u^k |_{u^a}.
SymF c_op(int a, const SymF& f);
// E_gamma = C_{gamma_1} E_{tail}, E_empty = 1.
SymF e_gamma(const Composition& gamma);
// q^{-n(mu)} (-1/q)^{n-r} H_{mu'}(z;q,0).
SymF e_mu_via_H(const Partition& mu);

// Sum of rationals over a common denominator with a single reduction.
QTRat sum_rats(const std::vector<QTRat>& xs);

}  // namespace polyolab::macdonald
