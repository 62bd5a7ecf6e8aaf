#include "polyolab/identities/identities.hpp"

#include "polyolab/algebra/evalcheck.hpp"
#include "polyolab/characters/characters.hpp"
#include "polyolab/error.hpp"
#include "polyolab/macdonald/macdonald.hpp"
#include "polyolab/polyomino/path.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/sl2/sl2.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polyolab::identities {

using algebra::BigInt;
using algebra::BigRational;
using algebra::QTPoly;
using algebra::TSpec;
using macdonald::OpSpec;
using macdonald::TMode;
using symfunc::Basis;
using symfunc::BiSymF;
using symfunc::Composition;
using symfunc::Partition;
using symfunc::SymF;

std::string to_string(Status s) {
    switch (s) {
    case Status::theorem: return "theorem";
    case Status::conjecture: return "conjecture";
    case Status::observation: return "observation";
    }
    return "?";
}

namespace {

void put(Value& v, const std::string& key, const QTRat& c) {
    if (!c.is_zero()) v.coeffs[key] = c;
}

// Merges several values under "prefix|" keys.
void merge(Value& into, const std::string& prefix, const Value& v) {
    for (const auto& [key, c] : v.coeffs) into.coeffs[prefix + "|" + key] = c;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    BigInt r = 1;
    int left = n;
    for (int a : parts) {
        r *= algebra::binomial(left, a);
        left -= a;
    }
    return r;
}

BigInt power(long b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

QTPoly poly_of(const std::vector<std::int64_t>& coeffs) {
    QTPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        r += QTPoly::monomial(BigRational(long(coeffs[i])), int(i), 0);
    return r;
}

BigRational dimension(const SymF& f, int n) {
    return symfunc::hall(f, SymF::h(Partition(std::vector<int>(std::size_t(n), 1)))).eval(1, 1);
}

SymF h(int n) { return SymF::h({n}); }
SymF e(int n) { return SymF::e({n}); }

SymF pleth_inv_one_minus_q(const SymF& f) { return symfunc::pleth_scale(f, symfunc::alphabet_inv_one_minus_q()); }

QTPoly qpoch(int n) {
    QTPoly r(1L);
    for (int i = 1; i <= n; ++i) r *= QTPoly(1L) - QTPoly::q(i);
    return r;
}

std::map<std::string, Builder> make_builders() {
    using characters::frob_L;
    std::map<std::string, Builder> b;

    // labelled polyominoes
    b["frob_L.brute"] = [](const Params& p) { return Value::of(characters::frob_L_brute(p.k, p.n), Basis::h); };
    b["frob_L.closed"] = [](const Params& p) { return Value::of(frob_L(p.k, p.n), Basis::h); };
    b["count.labelled.brute"] = [](const Params& p) {
        long c = 0;
        polyomino::for_each_labelled(p.k, p.n, [&](const polyomino::LabelledPolyomino&) { ++c; });
        return Value::of(BigInt(c));
    };
    b["count.labelled.formula"] = [](const Params& p) {
        return Value::of(power(p.k, p.n - 1) * algebra::binomial(p.n + p.k - 2, p.k - 1));
    };
    b["count.labelled.multinomial"] = [](const Params& p) {
        BigInt s = 0;
        polyomino::for_each_polyomino(p.k, p.n, [&](const polyomino::Polyomino& pi) { s += multinomial(p.n, pi.gamma()); });
        return Value::of(s);
    };
    b["count.unlabeled.brute"] = [](const Params& p) {
        long c = 0;
        polyomino::for_each_polyomino(p.k, p.n, [&](const polyomino::Polyomino&) { ++c; });
        return Value::of(BigInt(c));
    };
    b["count.unlabeled.formula"] = [](const Params& p) {
        // |P_{k,n}| = (1/k) binom(n+k-1, k-1) binom(n+k-2, k-1)
        BigInt v = algebra::binomial(p.n + p.k - 1, p.k - 1) * algebra::binomial(p.n + p.k - 2, p.k - 1) / p.k;
        return Value::of(v);
    };

    // paths
    b["area.paths.brute"] = [](const Params& p) {
        std::vector<std::int64_t> c;
        polyomino::for_each_path(p.k, p.n, [&](const polyomino::LatticePath& path) {
            std::size_t a = std::size_t(path.area());
            if (c.size() <= a) c.resize(a + 1, 0);
            ++c[a];
        });
        return Value::of(QTRat(poly_of(c)));
    };
    b["area.paths.qbinom"] = [](const Params& p) { return Value::of(QTRat(algebra::qbinom(p.n + p.k, p.k))); };
    b["area.labelled_paths.brute"] = [](const Params& p) {
        std::vector<std::int64_t> c;
        polyomino::for_each_labelled_path(p.k, p.n, [&](const polyomino::LabelledPath& lp) {
            std::size_t a = std::size_t(lp.path.area());
            if (c.size() <= a) c.resize(a + 1, 0);
            ++c[a];
        });
        return Value::of(QTRat(poly_of(c)));
    };
    b["area.labelled_paths.qint"] = [](const Params& p) {
        QTPoly r(1L);
        for (int i = 0; i < p.n; ++i) r *= algebra::qint(p.k + 1);
        return Value::of(QTRat(r));
    };
    b["frob.paths.brute"] = [](const Params& p) { return Value::of(characters::frob_labelled_paths_brute(p.k, p.n, false)); };
    b["frob.paths.closed"] = [](const Params& p) { return Value::of(characters::frob_labelled_paths(p.k, p.n, false)); };
    b["frobq.paths.brute"] = [](const Params& p) { return Value::of(characters::frob_labelled_paths_brute(p.k, p.n, true)); };
    b["frobq.paths.closed"] = [](const Params& p) { return Value::of(characters::frob_labelled_paths(p.k, p.n, true)); };

    // doubly labelled
    b["frob_L2.brute"] = [](const Params& p) { return Value::of(characters::frob_L2(p.k, p.n, false)); };
    b["frob_L2.closed"] = [](const Params& p) { return Value::of(characters::frob_L2_closed(p.k, p.n)); };
    b["frob_L2.swapped"] = [](const Params& p) { return Value::of(characters::frob_L2(p.n, p.k, false).swap()); };
    b["count.doubly.brute"] = [](const Params& p) {
        SymF z = characters::frob_L2(p.k, p.n, false).pair_y(SymF::h(Partition(std::vector<int>(std::size_t(p.k), 1))));
        return Value::of(QTRat(dimension(z, p.n)));
    };
    b["count.doubly.formula"] = [](const Params& p) {
        long k = p.k, n = p.n;
        return Value::of(power(k, n) * power(n - 1, k - 1) + power(k - 1, n - 1) * power(n, k) -
                         power(k - 1, n - 1) * power(n - 1, k - 1) * (n + k - 1));
    };
    b["frob_L2star.brute"] = [](const Params& p) { return Value::of(characters::frob_L2star(p.k, p.n)); };
    b["frob_L2star.closed"] = [](const Params& p) { return Value::of(characters::frob_L2star_closed(p.k, p.n)); };
    b["count.star.brute"] = [](const Params& p) {
        long c = 0;
        polyomino::for_each_doubly(p.k, p.n, true, [&](const polyomino::DoublyLabelledPolyomino&) { ++c; });
        return Value::of(BigInt(c));
    };
    b["count.star.formula"] = [](const Params& p) { return Value::of(power(p.k, p.n - 1) * power(p.n, p.k - 1)); };
    b["srho.coefficient"] = [](const Params& p) { return Value::of(characters::s_rho_coefficient(p.r, p.n, false)); };
    b["srho.formula"] = [](const Params& p) { return Value::of(characters::s_rho_formula(p.r, p.n, false)); };
    b["srho.coefficient_q"] = [](const Params& p) { return Value::of(characters::s_rho_coefficient(p.r, p.n, true)); };
    b["srho.formula_q"] = [](const Params& p) { return Value::of(characters::s_rho_formula(p.r, p.n, true)); };

    // operator identities
    b["frob_L_q.shifted"] = [](const Params& p) { return Value::of(characters::frob_L_q(p.k + 1, p.n)); };
    b["omega_delta_hk.t1"] = [](const Params& p) {
        return Value::of(symfunc::omega(macdonald::delta(OpSpec{h(p.k), TMode::t_one}, e(p.n))));
    };
    b["omega_delta_hk.t0"] = [](const Params& p) {
        return Value::of(symfunc::omega(macdonald::delta(OpSpec{h(p.k), TMode::t_zero}, e(p.n))));
    };
    b["prop1.rhs"] = [](const Params& p) { return Value::of(characters::prop1_rhs(p.k, p.n)); };
    b["omega_delta_hk1.tinvq"] = [](const Params& p) {
        return Value::of(symfunc::omega(macdonald::delta(OpSpec{h(p.k - 1), TMode::t_inv_q}, e(p.n))));
    };
    b["prop2.rhs"] = [](const Params& p) { return Value::of(characters::prop2_rhs(p.k, p.n)); };
    b["ribbon.brute"] = [](const Params& p) { return Value::of(characters::ribbon_frob(p.k, p.n)); };
    b["ribbon.formula"] = [](const Params& p) { return Value::of(characters::ribbon_formula(p.k, p.n)); };
    b["delta_ek.tinvq"] = [](const Params& p) {
        return Value::of(macdonald::delta(OpSpec{e(p.k), TMode::t_inv_q}, e(p.n)));
    };
    b["deltabar.rhs"] = [](const Params& p) { return Value::of(characters::delta_bar_rhs(p.k, p.n)); };

    // bounce pairing
    b["bounce"] = [](const Params& p) { return Value::of(characters::bounce_pairing(p.k, p.n)); };
    b["bounce.qt_swapped"] = [](const Params& p) { return Value::of(characters::bounce_pairing(p.k, p.n).swap_qt()); };
    b["bounce.kn_swapped"] = [](const Params& p) { return Value::of(characters::bounce_pairing(p.n, p.k)); };
    b["bounce.t1"] = [](const Params& p) {
        return Value::of(characters::bounce_pairing(p.k, p.n).specialize_t(TSpec::one));
    };
    b["area.polyominoes"] = [](const Params& p) { return Value::of(QTRat(poly_of(polyomino::area_polynomial(p.k, p.n)))); };
    b["bounce.tinvq"] = [](const Params& p) {
        return Value::of(characters::bounce_pairing(p.k, p.n).specialize_t(TSpec::inv_q) *
                         QTRat::qpow((p.k - 1) * (p.n - 1)));
    };
    b["bounce.qanalog"] = [](const Params& p) { return Value::of(characters::bounce_qanalog(p.k, p.n)); };
    b["bounce.schur"] = [](const Params& p) {
        return Value::of(QTRat(symfunc::rect_principal(p.k - 1, 2, p.n + 1)) * QTRat::qpow(-(p.k - 1)));
    };

    // positivity
    b["diffschur"] = [](const Params& p) {
        int n = p.n, r = p.r;
        SymF d = macdonald::delta(OpSpec{h(r * n - 1)}, e(n)) -
                 macdonald::nabla(e(n), r).scaled(QTRat::qpow((n - 1) * (n - 2) / 2));
        return Value::of(d, Basis::s);
    };
    b["trivariate.diff"] = [](const Params& p) {
        return Value::of(frob_L(p.r * p.n, p.n) - characters::trivariate_frob(p.n, p.r), Basis::h);
    };

    // Macdonald polynomials; n ranges over all partitions of n
    b["H.one_row"] = [](const Params& p) { return Value::of(macdonald::macdonald_H(Partition{p.n})); };
    b["H.one_row.formula"] = [](const Params& p) {
        return Value::of(pleth_inv_one_minus_q(h(p.n)).scaled(QTRat(qpoch(p.n))));
    };
    b["H.t1"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n))
            merge(v, mu.to_string(), Value::of(macdonald::macdonald_H(mu).specialize_t(TSpec::one)));
        return v;
    };
    b["H.t1.product"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n)) {
            SymF prod(1L);
            for (int part : mu.parts()) prod = prod * macdonald::macdonald_H(Partition{part}).specialize_t(TSpec::one);
            merge(v, mu.to_string(), Value::of(prod));
        }
        return v;
    };
    b["H.tinvq"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n))
            merge(v, mu.to_string(), Value::of(macdonald::macdonald_H(mu).specialize_t(TSpec::inv_q)));
        return v;
    };
    b["H.tinvq.formula"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n)) {
            QTPoly hooks(1L);
            for (int i = 0; i < mu.length(); ++i)
                for (int j = 0; j < mu[i]; ++j) hooks *= QTPoly(1L) - QTPoly::q(mu.hook(i, j));
            SymF rhs = pleth_inv_one_minus_q(SymF::s(mu)).scaled(QTRat(hooks) * QTRat::qpow(-mu.n()));
            merge(v, mu.to_string(), Value::of(rhs));
        }
        return v;
    };
    b["enr.sum"] = [](const Params& p) {
        SymF total;
        for (int r = 1; r <= p.n; ++r) total += macdonald::e_nr(p.n, r);
        return Value::of(total);
    };
    b["e_n"] = [](const Params& p) { return Value::of(e(p.n)); };
    b["e_mu_via_H"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n)) merge(v, mu.to_string(), Value::of(macdonald::e_mu_via_H(mu)));
        return v;
    };
    b["e_gamma.partitions"] = [](const Params& p) {
        Value v;
        for (const auto& mu : symfunc::partitions(p.n))
            merge(v, mu.to_string(), Value::of(macdonald::e_gamma(Composition(mu.parts()))));
        return v;
    };
    // C operators with a = k, b = r, on the seeds 1 and s_1
    auto seeds = [] { return std::vector<std::pair<std::string, SymF>>{{"1", SymF(1L)}, {"s1", SymF::s({1})}}; };
    b["commC.lhs"] = [seeds](const Params& p) {
        Value v;
        int a = p.k, bb = p.r;
        for (const auto& [name, f] : seeds()) {
            SymF x = macdonald::c_op(bb, macdonald::c_op(a, f)) + macdonald::c_op(a - 1, macdonald::c_op(bb + 1, f));
            merge(v, name, Value::of(x.scaled(QTRat(QTPoly::q()))));
        }
        return v;
    };
    b["commC.rhs"] = [seeds](const Params& p) {
        Value v;
        int a = p.k, bb = p.r;
        for (const auto& [name, f] : seeds())
            merge(v, name, Value::of(macdonald::c_op(a, macdonald::c_op(bb, f)) + macdonald::c_op(bb + 1, macdonald::c_op(a - 1, f))));
        return v;
    };
    b["eigen.lhs"] = [](const Params& p) {
        Value v;
        for (const auto& g : symfunc::compositions(p.n))
            merge(v, g.to_string(), Value::of(macdonald::delta(OpSpec{h(p.k), TMode::t_zero}, macdonald::e_gamma(g))));
        return v;
    };
    b["eigen.rhs"] = [](const Params& p) {
        Value v;
        for (const auto& g : symfunc::compositions(p.n)) {
            int r = g.length();
            merge(v, g.to_string(), Value::of(macdonald::e_gamma(g).scaled(QTRat(algebra::qbinom(p.k + r - 1, r - 1)))));
        }
        return v;
    };

    // SL2 invariants
    b["sl2.rank"] = [](const Params& p) { return Value::of(BigInt(sl2::rank_check(p.d, p.n).rank)); };
    b["sl2.basis_size"] = [](const Params& p) { return Value::of(BigInt(long(sl2::minor_basis(p.d, p.n).size()))); };
    b["littlewood.dim"] = [](const Params& p) { return Value::of(QTRat(dimension(sl2::littlewood_frob(p.d, p.n), p.n))); };
    b["plucker.nonzero"] = [](const Params& p) {
        long bad = 0;
        int n = p.n;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) bad += !sl2::plucker(n, i, j, k, l).is_zero();
        return Value::of(BigInt(bad));
    };
    b["zero"] = [](const Params&) { return Value(); };
    return b;
}

Range R(int lo, int hi) { return Range{lo, hi}; }
Range none() { return Range{0, 0}; }

std::vector<IdentityEntry> make_registry() {
    using S = Status;
    const Relation eq = Relation::equal, pos = Relation::positive;
    // clang-format off
    return {
        {"eqFrob", S::theorem, "Frobenius characteristic of labelled parallelogram polyominoes: (1/k) h_n[kz] binom(n+k-2,k-1)",
         "frob_L.brute", "frob_L.closed", eq, {R(1, 6), R(1, 6), none(), none(), ""}},
        {"labelled", S::theorem, "number of labelled parallelogram polyominoes k^{n-1} binom(n+k-2,k-1)",
         "count.labelled.brute", "count.labelled.formula", eq, {R(1, 6), R(1, 6), none(), none(), ""}},
        {"labelled2", S::theorem, "k^{n-1} binom(n+k-2,k-1) as a sum of multinomials over P_{k,n}",
         "count.labelled.multinomial", "count.labelled.formula", eq, {R(1, 6), R(1, 6), none(), none(), ""}},
        {"unlabeled", S::theorem, "number of parallelogram polyominoes (1/k) binom(n+k-1,k-1) binom(n+k-2,k-1)",
         "count.unlabeled.brute", "count.unlabeled.formula", eq, {R(1, 6), R(1, 6), none(), none(), ""}},
        {"pathArea", S::theorem, "area generating function of lattice paths is the q-binomial",
         "area.paths.brute", "area.paths.qbinom", eq, {R(0, 6), R(0, 6), none(), none(), ""}},
        {"labelledPathArea", S::theorem, "area generating function of labelled paths is [k+1]_q^n",
         "area.labelled_paths.brute", "area.labelled_paths.qint", eq, {R(0, 6), R(1, 6), none(), none(), ""}},
        {"chemins", S::theorem, "Frobenius characteristic of labelled paths h_n[(k+1)z]",
         "frob.paths.brute", "frob.paths.closed", eq, {R(0, 5), R(1, 5), none(), none(), ""}},
        {"frobq", S::theorem, "area-graded Frobenius characteristic of labelled paths h_n[z [k+1]_q]",
         "frobq.paths.brute", "frobq.paths.closed", eq, {R(0, 5), R(1, 5), none(), none(), ""}},
        {"double_frob", S::observation, "three-term formula for doubly labelled parallelogram polyominoes",
         "frob_L2.brute", "frob_L2.closed", eq, {R(2, 4), R(2, 4), none(), none(), ""}},
        {"doubleCount", S::observation, "number of doubly labelled parallelogram polyominoes",
         "count.doubly.brute", "count.doubly.formula", eq, {R(2, 4), R(2, 4), none(), none(), ""}},
        {"doubleSwap", S::theorem, "symmetry of the doubly labelled Frobenius under exchanging coordinates",
         "frob_L2.brute", "frob_L2.swapped", eq, {R(1, 4), R(1, 4), none(), none(), ""}},
        {"Frob2star", S::theorem, "star labelling: (1/k) h_n[kz] h_{k-1}[ny]",
         "frob_L2star.brute", "frob_L2star.closed", eq, {R(1, 4), R(1, 4), none(), none(), ""}},
        {"starCount", S::theorem, "number of star labelled polyominoes k^{n-1} n^{k-1}",
         "count.star.brute", "count.star.formula", eq, {R(1, 4), R(1, 4), none(), none(), ""}},
        {"doubly_diag", S::observation, "coefficient of s_{r^n}(y): (1/(rn-1)) h_n[(rn-1)z]",
         "srho.coefficient", "srho.formula", eq, {none(), R(1, 6), R(1, 2), none(), "2<=rn<=6"}},
        {"doubly_area", S::conjecture, "area-graded coefficient of s_{r^n}(y) equals omega nabla~^r((-q)^{1-n} h_n)",
         "srho.coefficient_q", "srho.formula_q", eq, {none(), R(1, 6), R(1, 2), none(), "rn<=6"}},
        {"michele", S::conjecture, "area-graded labelled polyominoes equal omega Delta_{h_k} e_n at t=1",
         "frob_L_q.shifted", "omega_delta_hk.t1", eq, {R(0, 3), R(1, 5), none(), none(), ""}},
        {"prop_equation1", S::theorem, "q-free component of omega Delta_{h_k} e_n, with q and t exchanged",
         "omega_delta_hk.t0", "prop1.rhs", eq, {R(0, 4), R(1, 5), none(), none(), ""}},
        {"prop_equation2", S::theorem, "omega Delta_{h_{k-1}} e_n at t=1/q",
         "omega_delta_hk1.tinvq", "prop2.rhs", eq, {R(1, 5), R(1, 6), none(), none(), ""}},
        {"Frob-ribbon", S::observation, "ribbons graded by dinv: t^n (h_n[z[k]_t] - h_n[z[k-1]_t])",
         "ribbon.brute", "ribbon.formula", eq, {R(1, 5), R(1, 5), none(), none(), ""}},
        {"angela", S::theorem, "bounce pairing <nabla e_{k+n-2}, h_{k-1} h_{n-1}> at t=1 is the area enumerator",
         "bounce.t1", "area.polyominoes", eq, {R(1, 8), R(1, 8), none(), none(), "k+n<=9"}},
        {"angelaSymQT", S::theorem, "bounce pairing is symmetric in q and t",
         "bounce", "bounce.qt_swapped", eq, {R(1, 8), R(1, 8), none(), none(), "k+n<=9"}},
        {"angelaSymKN", S::theorem, "bounce pairing is symmetric in k and n",
         "bounce", "bounce.kn_swapped", eq, {R(1, 8), R(1, 8), none(), none(), "k+n<=9"}},
        {"qangela", S::theorem, "bounce pairing at t=1/q: (1/[n+k]) qbinom(n+k,n) qbinom(n+k-2,n-1)",
         "bounce.tinvq", "bounce.qanalog", eq, {R(1, 8), R(1, 8), none(), none(), "k+n<=9"}},
        {"qangelaSchur", S::theorem, "bounce pairing at t=1/q as q^{-(k-1)} s_{(k-1,k-1)}(1,...,q^n)",
         "bounce.tinvq", "bounce.schur", eq, {R(1, 8), R(1, 8), none(), none(), "k+n<=9"}},
        {"deltaBar", S::observation, "Delta_{e_k} e_n at t=1/q for k <= n",
         "delta_ek.tinvq", "deltabar.rhs", eq, {R(1, 6), R(1, 6), none(), none(), "k<=n"}},
        {"diff_shur_pos", S::observation, "Delta_{h_{rn-1}} e_n - q^{binom(n-1,2)} nabla^r e_n is Schur positive",
         "diffschur", "", pos, {none(), R(1, 4), R(1, 1), none(), ""}},
        {"trivariateDiff", S::observation, "labelled polyominoes minus the trivariate formula is h-positive",
         "trivariate.diff", "", pos, {none(), R(1, 5), R(1, 2), none(), ""}},
        {"H_unepart", S::theorem, "one-row Macdonald polynomial (q;q)_n h_n[z/(1-q)]",
         "H.one_row", "H.one_row.formula", eq, {none(), R(1, 6), none(), none(), ""}},
        {"H_t1", S::theorem, "Macdonald polynomials at t=1 are multiplicative in the rows",
         "H.t1", "H.t1.product", eq, {none(), R(1, 6), none(), none(), ""}},
        {"H_t_invq", S::theorem, "Macdonald polynomials at t=1/q: q^{-n(mu)} prod (1-q^hook) s_mu[z/(1-q)]",
         "H.tinvq", "H.tinvq.formula", eq, {none(), R(1, 6), none(), none(), ""}},
        {"Enr", S::theorem, "sum over r of E_{n,r} is e_n",
         "enr.sum", "e_n", eq, {none(), R(1, 6), none(), none(), ""}},
        {"Emu_H", S::theorem, "E_mu from C operators agrees with the specialized H_{mu'}",
         "e_gamma.partitions", "e_mu_via_H", eq, {none(), R(1, 5), none(), none(), ""}},
        {"commC", S::theorem, "commutation relation of the C operators on the seeds 1 and s_1 (a=k, b=r)",
         "commC.lhs", "commC.rhs", eq, {R(2, 4), none(), R(1, 3), none(), "r<k"}},
        {"eigenfunctD", S::theorem, "E_gamma are eigenfunctions of Delta_{h_k} at t=0",
         "eigen.lhs", "eigen.rhs", eq, {R(1, 4), R(1, 5), none(), none(), ""}},
        {"sl2Rank", S::theorem, "minor monomials indexed by P_{d+1,n-1} are linearly independent",
         "sl2.rank", "sl2.basis_size", eq, {none(), R(2, 5), none(), R(0, 3), ""}},
        {"plucker", S::theorem, "Plucker relations among 2x2 minors vanish",
         "plucker.nonzero", "zero", eq, {none(), R(4, 6), none(), none(), ""}},
        {"littlewood", S::theorem, "GL_n character s_{dd} evaluated at the identity is |P_{d+1,n-1}|",
         "littlewood.dim", "sl2.basis_size", eq, {none(), R(2, 6), none(), R(0, 2), ""}},
    };
    // clang-format on
}

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Value Value::of(const SymF& f, Basis b) {
    Value v;
    char letter = symfunc::basis_letter(b);
    for (const auto& [mu, c] : f.to_basis(b)) put(v, letter + mu.to_string(), c);
    return v;
}

Value Value::of(const BiSymF& f) {
    Value v;
    for (const auto& [key, c] : f.to_basis(Basis::s, Basis::s))
        put(v, "sY" + key.first.to_string() + "*sZ" + key.second.to_string(), c);
    return v;
}

Value Value::of(const QTRat& c) {
    Value v;
    put(v, "1", c);
    return v;
}

Value Value::of(const BigInt& c) { return of(QTRat(BigRational(c))); }

std::string Value::text() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + key;
    }
    return out;
}

std::string digest(const std::string& text) {
    std::uint64_t hsh = 14695981039346656037ull;
    for (unsigned char ch : text) {
        hsh ^= ch;
        hsh *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hsh));
    return buf;
}

const std::map<std::string, Builder>& builders() {
    static const auto b = make_builders();
    return b;
}

const std::map<std::string, std::function<bool(const Params&)>>& constraints() {
    static const std::map<std::string, std::function<bool(const Params&)>> c = {
        {"", [](const Params&) { return true; }},
        {"k<=n", [](const Params& p) { return p.k <= p.n; }},
        {"k+n<=9", [](const Params& p) { return p.k + p.n <= 9; }},
        {"rn<=6", [](const Params& p) { return p.r * p.n <= 6; }},
        {"2<=rn<=6", [](const Params& p) { return p.r * p.n >= 2 && p.r * p.n <= 6; }},
        {"r<k", [](const Params& p) { return p.r < p.k; }},
    };
    return c;
}

const std::vector<IdentityEntry>& registry() {
    static const auto r = [] {
        auto v = make_registry();
        for (const auto& e : v) {
            if (!builders().count(e.lhs) || (e.relation == Relation::equal && !builders().count(e.rhs)))
                throw std::logic_error("identity " + e.id + ": unknown builder");
            if (!constraints().count(e.lattice.constraint))
                throw std::logic_error("identity " + e.id + ": unknown constraint");
        }
        return v;
    }();
    return r;
}

const IdentityEntry* find(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<Params> points(const IdentityEntry& e, std::optional<int> max_k, std::optional<int> max_n) {
    Lattice L = e.lattice;
    if (max_k && L.k.hi >= L.k.lo && !(L.k.lo == 0 && L.k.hi == 0)) L.k.hi = *max_k;
    if (max_n && L.n.hi >= L.n.lo && !(L.n.lo == 0 && L.n.hi == 0)) L.n.hi = *max_n;
    const auto& pred = constraints().at(L.constraint);
    std::vector<Params> out;
    for (int k = L.k.lo; k <= L.k.hi; ++k)
        for (int n = L.n.lo; n <= L.n.hi; ++n)
            for (int r = L.r.lo; r <= L.r.hi; ++r)
                for (int d = L.d.lo; d <= L.d.hi; ++d) {
                    Params p{k, n, r, d};
                    if (pred(p)) out.push_back(p);
                }
    return out;
}

PointReport check_point(const IdentityEntry& e, const Params& p, Mode mode) {
    PointReport rep;
    rep.id = e.id;
    rep.status = e.status;
    rep.params = p;
    rep.time_ms = timed([&] {
        Value lhs = builders().at(e.lhs)(p);
        Value rhs;
        if (e.relation == Relation::positive) {
            for (const auto& [key, c] : lhs.coeffs)
                if (characters::in_nat_qt(c)) rhs.coeffs[key] = c;
        } else {
            rhs = builders().at(e.rhs)(p);
        }
        rep.lhs_digest = digest(lhs.text());
        rep.rhs_digest = digest(rhs.text());
        if (mode == Mode::symbolic || e.relation == Relation::positive) {
            rep.equal = lhs == rhs;
            return;
        }
        rep.equal = true;
        std::map<std::string, std::pair<QTRat, QTRat>> both;
        for (const auto& [key, c] : lhs.coeffs) both[key].first = c;
        for (const auto& [key, c] : rhs.coeffs) both[key].second = c;
        for (const auto& [key, pr] : both) {
            auto proof = algebra::equal_by_evaluation(pr.first, pr.second);
            rep.deg_q_bound = std::max(rep.deg_q_bound, proof.deg_q_bound);
            rep.deg_t_bound = std::max(rep.deg_t_bound, proof.deg_t_bound);
            rep.eval_points += proof.points;
            if (!proof.equal) rep.equal = false;
        }
    });
    return rep;
}

bool VerifyReport::theorems_ok() const {
    for (const auto& p : points)
        if (p.status == Status::theorem && !p.equal) return false;
    return true;
}

bool VerifyReport::all_ok() const {
    for (const auto& p : points)
        if (!p.equal) return false;
    return true;
}

VerifyReport verify(const VerifyOptions& opt) {
    std::vector<const IdentityEntry*> entries;
    if (opt.ids.empty()) {
        for (const auto& e : registry()) entries.push_back(&e);
    } else {
        for (const auto& id : opt.ids) {
            const IdentityEntry* e = find(id);
            if (!e) throw std::out_of_range("unknown identity: " + id);
            entries.push_back(e);
        }
    }
    std::vector<std::pair<const IdentityEntry*, Params>> work;
    for (const auto* e : entries)
        for (const auto& p : points(*e, opt.max_k, opt.max_n)) work.emplace_back(e, p);

    VerifyReport rep;
    rep.mode = opt.mode;
    rep.points.resize(work.size());
    std::exception_ptr failure;
    rep.total_ms = timed([&] {
        const long nw = long(work.size());
        auto one = [&](long i) {
            try {
                rep.points[std::size_t(i)] = check_point(*work[std::size_t(i)].first, work[std::size_t(i)].second, opt.mode);
            } catch (...) {
#pragma omp critical(polyolab_verify_failure)
                if (!failure) failure = std::current_exception();
            }
        };
        if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < nw; ++i) one(i);
        } else {
            for (long i = 0; i < nw; ++i) one(i);
        }
    });
    if (failure) std::rethrow_exception(failure);
    std::sort(rep.points.begin(), rep.points.end(), [](const PointReport& a, const PointReport& b) {
        return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    });
    if (!opt.timing) {
        rep.total_ms = 0;
        for (auto& p : rep.points) p.time_ms = 0;
    }
    return rep;
}

nlohmann::json to_json(const PointReport& p, Mode mode) {
    nlohmann::json j = {
        {"id", p.id},
        {"status", to_string(p.status)},
        {"params", {{"k", p.params.k}, {"n", p.params.n}, {"r", p.params.r}, {"d", p.params.d}}},
        {"equal", p.equal},
        {"lhs_digest", p.lhs_digest},
        {"rhs_digest", p.rhs_digest},
        {"time_ms", std::round(p.time_ms * 1000) / 1000},
    };
    if (mode == Mode::evaluation)
        j["evaluation"] = {{"deg_q_bound", p.deg_q_bound}, {"deg_t_bound", p.deg_t_bound}, {"points", p.eval_points}};
    return j;
}

nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p, r.mode));
    long failed_theorems = 0, failed_other = 0;
    for (const auto& p : r.points)
        if (!p.equal) (p.status == Status::theorem ? failed_theorems : failed_other)++;
    return {
        {"mode", r.mode == Mode::symbolic ? "symbolic" : "evaluation"},
        {"total_ms", std::round(r.total_ms * 1000) / 1000},
        {"summary", {{"points", r.points.size()}, {"failed_theorems", failed_theorems}, {"failed_other", failed_other}}},
        {"records", pts},
    };
}

}  // namespace polyolab::identities
