#pragma once

#include "polyolab/exec.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <string>

namespace polyolab::characters {

using algebra::QTPoly;
using algebra::QTRat;
using symfunc::BiSymF;
using symfunc::Partition;
using symfunc::SymF;

// h of a composition (parts in any order, zeros dropped).
SymF h_comp(const std::vector<int>& parts);
// h_n[z A] for the alphabet given by its power-sum multipliers.
SymF h_pleth(int n, const std::function<QTRat(int)>& alphabet);
SymF e_pleth(int n, const std::function<QTRat(int)>& alphabet);
// Alphabet (1 - x^a)/(1 - x) in q or in t.
std::function<QTRat(int)> qint_alphabet(int a);
std::function<QTRat(int)> tint_alphabet(int a);

// Labelled paths in the k x n rectangle: h_n[(k+1) z], or h_n[z [k+1]_q]
// when graded by the area below the path.
SymF frob_labelled_paths(int k, int n, bool graded);
SymF frob_labelled_paths_brute(int k, int n, bool graded);

// (1/k) h_n[k z] binom(n+k-2, k-1) and the sum over P_{k,n} of h_gamma.
SymF frob_L(int k, int n);
SymF frob_L_brute(int k, int n, Exec exec = Exec::parallel);
// sum over P_{k,n} of q^area h_gamma.
SymF frob_L_q(int k, int n, Exec exec = Exec::parallel);

// sum over the ribbons of P_{k,n} of t^dinv h_gamma, with the calibrated dinv.
SymF ribbon_frob(int k, int n, Exec exec = Exec::parallel);
// t^n (h_n[z [k]_t] - h_n[z [k-1]_t]).
SymF ribbon_formula(int k, int n);

// sum over P_{k,n} of (q^area) h_delta(y) h_gamma(z).
BiSymF frob_L2(int k, int n, bool graded, Exec exec = Exec::parallel);
// Three-term closed form; throws DomainError("formula out of domain") when
// k < 2 or n < 2.
BiSymF frob_L2_closed(int k, int n);
// Star labelling: the first lower east step is fixed to label 1.
BiSymF frob_L2star(int k, int n, Exec exec = Exec::parallel);
// (1/k) h_n[k z] h_{k-1}[n y]
BiSymF frob_L2star_closed(int k, int n);

// Coefficient of s_{r^n}(y) in frob_L2(rn, n) and the two formulas for it:
// (1/(rn-1)) h_n[(rn-1) z], and omega nabla~^r((-q)^{1-n} h_n) at t = 1.
SymF s_rho_coefficient(int r, int n, bool graded);
SymF s_rho_formula(int r, int n, bool graded);

// <nabla e_{k+n-2}, h_{k-1} h_{n-1}>
QTRat bounce_pairing(int k, int n);
// (1/[n+k]) qbinom(n+k, n) qbinom(n+k-2, n-1)
QTRat bounce_qanalog(int k, int n);

// sum over lambda of (rn+1)^{l-2} prod binom((r+1)j, j) p_lambda / z_lambda
SymF trivariate_frob(int n, int r);

// Right-hand sides of the operator identities.
// omega Delta_{h_k} e_n at q = 0, in the t <-> q swapped form:
// q^{-k} (h_n[z [k+1]_q] - h_n[z [k]_q]).
SymF prop1_rhs(int k, int n);
// q^{n+k-nk-1}/[k] h_n[z [k]_q] qbinom(n+k-2, k-1)
SymF prop2_rhs(int k, int n);
// (1/[k+1]) qbinom(n,k) e_n[z [k+1]_q] q^{-(kn - binom(k+1,2))}
SymF delta_bar_rhs(int k, int n);

// Coefficients lie in N[q,t] (nonnegative integer polynomials).
bool in_nat_qt(const QTRat& c);
bool positive_in(const SymF& f, symfunc::Basis b);

}  // namespace polyolab::characters
