#include "polyolab/macdonald/macdonald.hpp"

#include "polyolab/algebra/auxseries.hpp"
#include "polyolab/algebra/linear.hpp"
#include "polyolab/error.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>

namespace polyolab::macdonald {

using algebra::QMatrix;
using symfunc::dominates;
using symfunc::partitions;
using symfunc::tables;

namespace {

std::atomic<int> g_generic_cap{8};
std::atomic<int> g_special_cap{10};

void require_generic(int n) {
    if (n > g_generic_cap.load()) throw CapExceeded("generic Macdonald degree", n, g_generic_cap.load());
}
void require_special(int n) {
    if (n > g_special_cap.load()) throw CapExceeded("specialized operator degree", n, g_special_cap.load());
}

// ---- univariate interpolation over Q

// Monomial coefficients of the polynomial through (xs[i], ys[i]).
std::vector<BigRational> interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
    std::size_t m = xs.size();
    std::vector<BigRational> dd = ys;  // Newton divided differences
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    std::vector<BigRational> coef(m, 0);
    // Horner on the Newton form: p = dd[m-1]; p = p*(x - xs[i]) + dd[i].
    for (std::size_t step = m; step-- > 0;) {
        std::vector<BigRational> next(m, 0);
        for (std::size_t k = 0; k + 1 < m; ++k) {
            next[k + 1] += coef[k];
            next[k] -= coef[k] * xs[step];
        }
        next[0] += dd[step];
        coef = std::move(next);
    }
    return coef;
}

const std::vector<long>& primes() {
    static const std::vector<long> ps = [] {
        std::vector<long> out;
        for (long c = 2; out.size() < 400; ++c) {
            bool prime = true;
            for (long p : out) {
                if (p * p > c) break;
                if (c % p == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) out.push_back(c);
        }
        return out;
    }();
    return ps;
}

// q takes the primes of even index, t those of odd index, so q^a != t^b.
long q_node(std::size_t i) { return primes()[2 * i]; }
long t_node(std::size_t i) { return primes()[2 * i + 1]; }

// s_lambda[z(1-x)] = sum_nu M[lambda][nu] s_nu at a rational x.
QMatrix one_minus_matrix(int n, const BigRational& x) {
    const auto& T = tables(n);
    std::size_t N = T.parts.size();
    std::vector<BigRational> w(N);
    for (std::size_t r = 0; r < N; ++r) {
        BigRational prod = 1;
        for (int part : T.parts[r].parts()) {
            BigRational xp = 1;
            for (int i = 0; i < part; ++i) xp *= x;
            prod *= 1 - xp;
        }
        w[r] = prod / BigRational(T.z[r]);
    }
    QMatrix M(N, std::vector<BigRational>(N, 0));
    for (std::size_t l = 0; l < N; ++l)
        for (std::size_t v = 0; v < N; ++v) {
            BigRational acc = 0;
            for (std::size_t r = 0; r < N; ++r) acc += w[r] * T.chi[l][r] * T.chi[v][r];
            M[l][v] = acc;
        }
    return M;
}

// Schur coefficients of H_mu at one point (t ignored when at_t0).
std::optional<std::vector<BigRational>> solve_point(const Partition& mu, const BigRational& q, const BigRational& t,
                                                    bool at_t0) {
    int n = mu.size();
    const auto& T = tables(n);
    std::size_t N = T.parts.size();
    Partition mup = mu.conjugate();
    QMatrix Mq = one_minus_matrix(n, q);
    QMatrix Mt = at_t0 ? QMatrix() : one_minus_matrix(n, t);
    QMatrix rows;
    std::vector<BigRational> rhs;
    std::vector<BigRational> norm(N, 0);
    norm[0] = 1;  // partitions(n) starts with (n)
    rows.push_back(norm);
    rhs.push_back(1);
    for (std::size_t v = 0; v < N; ++v) {
        if (dominates(T.parts[v], mu)) continue;
        std::vector<BigRational> row(N);
        for (std::size_t l = 0; l < N; ++l) row[l] = Mq[l][v];
        rows.push_back(row);
        rhs.push_back(0);
    }
    for (std::size_t v = 0; v < N; ++v) {
        if (dominates(T.parts[v], mup)) continue;
        std::vector<BigRational> row(N, 0);
        if (at_t0) row[v] = 1;
        else
            for (std::size_t l = 0; l < N; ++l) row[l] = Mt[l][v];
        rows.push_back(row);
        rhs.push_back(0);
    }
    auto ind = algebra::independent_rows(rows);
    if (ind.size() < N) return std::nullopt;
    QMatrix A;
    std::vector<BigRational> b;
    for (std::size_t i = 0; i < N; ++i) {
        A.push_back(rows[std::size_t(ind[i])]);
        b.push_back(rhs[std::size_t(ind[i])]);
    }
    auto sol = algebra::solve_rational(A, b);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BigRational acc = 0;
        for (std::size_t l = 0; l < N; ++l) acc += rows[i][l] * (*sol)[l];
        if (acc != rhs[i]) throw Error("inconsistent triangularity system for " + mu.to_string());
    }
    return sol;
}

SymF from_schur(const Expansion& e) { return SymF::from_expansion(Basis::s, e); }

// Interpolates the Schur coefficients on a grid of dq+1 q-nodes and dt+1 t-nodes.
Expansion interpolate_kostka(const Partition& mu, int dq, int dt, bool at_t0, Exec exec) {
    int n = mu.size();
    const auto& T = tables(n);
    std::size_t N = T.parts.size();
    std::size_t nq = std::size_t(dq) + 1, nt = at_t0 ? 1 : std::size_t(dt) + 1;
    std::vector<BigRational> ts(nt);
    for (std::size_t j = 0; j < nt; ++j) ts[j] = at_t0 ? 0 : t_node(j);

    using Column = std::vector<std::vector<BigRational>>;  // [t node][lambda]
    auto solve_column = [&](long qv, Column& col) {
        col.assign(nt, {});
        for (std::size_t j = 0; j < nt; ++j) {
            auto s = solve_point(mu, BigRational(qv), ts[j], at_t0);
            if (!s) return false;
            col[j] = std::move(*s);
        }
        return true;
    };

    std::vector<long> qs(nq);
    for (std::size_t i = 0; i < nq; ++i) qs[i] = q_node(i);
    std::vector<Column> cols(nq);
    std::vector<char> good(nq, 0);
    long count = long(nq);
    if (exec == Exec::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            try {
                good[std::size_t(i)] = solve_column(qs[std::size_t(i)], cols[std::size_t(i)]);
            } catch (...) {
#pragma omp critical(polyolab_interp_error)
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (long i = 0; i < count; ++i) good[std::size_t(i)] = solve_column(qs[std::size_t(i)], cols[std::size_t(i)]);
    }
    // Replace degenerate q nodes with later primes.
    std::size_t next = nq;
    for (std::size_t i = 0; i < nq; ++i) {
        while (!good[i]) {
            if (next >= primes().size() / 2) throw Error("no regular interpolation nodes for " + mu.to_string());
            qs[i] = q_node(next++);
            good[i] = solve_column(qs[i], cols[i]);
        }
    }

    std::vector<BigRational> qx(nq);
    for (std::size_t i = 0; i < nq; ++i) qx[i] = qs[i];
    Expansion out;
    for (std::size_t l = 0; l < N; ++l) {
        // coefficient of t^b, as values over the q nodes
        std::vector<std::vector<BigRational>> by_t(nt, std::vector<BigRational>(nq));
        for (std::size_t i = 0; i < nq; ++i) {
            std::vector<BigRational> ys(nt);
            for (std::size_t j = 0; j < nt; ++j) ys[j] = cols[i][j][l];
            auto ct = at_t0 ? ys : interpolate(ts, ys);
            for (std::size_t b = 0; b < nt; ++b) by_t[b][i] = ct[b];
        }
        std::vector<QTPoly::Term> terms;
        for (std::size_t b = 0; b < nt; ++b) {
            auto cq = interpolate(qx, by_t[b]);
            for (std::size_t a = 0; a < nq; ++a)
                if (cq[a] != 0) terms.push_back({QTPoly::make_key(int(a), int(b)), cq[a]});
        }
        QTPoly p = QTPoly::from_terms(std::move(terms));
        if (!p.is_zero()) out.emplace(T.parts[l], QTRat(p));
    }
    return out;
}

Expansion certified_kostka(const Partition& mu, bool at_t0, Exec exec) {
    int dq = mu.conjugate().n(), dt = mu.n();
    for (int attempt = 0; attempt < 3; ++attempt) {
        Expansion e = interpolate_kostka(mu, dq, dt, at_t0, exec);
        if (check_triangularity(from_schur(e), mu, at_t0).ok()) return e;
        dq = 2 * dq + 2;
        dt = 2 * dt + 2;
    }
    throw Error("Macdonald polynomial for " + mu.to_string() + " failed certification");
}

struct KostkaCache {
    std::mutex mu;
    std::map<Partition, Expansion> map;
};

const Expansion& cached(KostkaCache& cache, const Partition& mu, bool at_t0) {
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(mu);
        if (it != cache.map.end()) return it->second;
    }
    Expansion e = certified_kostka(mu, at_t0, Exec::parallel);
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.map.emplace(mu, std::move(e)).first->second;
}

KostkaCache& generic_cache() {
    static KostkaCache c;
    return c;
}
KostkaCache& t0_cache() {
    static KostkaCache c;
    return c;
}

// Cell monomials (q-exponent, t-exponent) of mu.
std::vector<std::pair<int, int>> cells(const Partition& mu) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < mu.length(); ++j)
        for (int i = 0; i < mu[j]; ++i) out.emplace_back(i, j);
    return out;
}

}  // namespace

int generic_degree_cap() { return g_generic_cap.load(); }
void set_generic_degree_cap(int cap) { g_generic_cap.store(cap); }
int special_degree_cap() { return g_special_cap.load(); }
void set_special_degree_cap(int cap) { g_special_cap.store(cap); }

QTPoly bmu(const Partition& mu) {
    QTPoly b;
    for (auto [i, j] : cells(mu)) b += QTPoly::monomial(1, i, j);
    return b;
}

QTRat sum_rats(const std::vector<QTRat>& xs) {
    QTPoly L(1L);
    for (const auto& x : xs)
        if (!x.is_zero()) L = algebra::lcm(L, x.den());
    QTPoly num;
    for (const auto& x : xs)
        if (!x.is_zero()) num += x.num() * algebra::divide_exact(L, x.den());
    return QTRat(num, L);
}

Triangularity check_triangularity(const SymF& H, const Partition& mu, bool at_t0) {
    Triangularity r;
    int n = mu.size();
    auto supported = [&](const SymF& g, const Partition& floor) {
        for (const auto& [lam, c] : g.to_basis(Basis::s))
            if (!c.is_zero() && !dominates(lam, floor)) return false;
        return true;
    };
    r.q_condition = supported(symfunc::pleth_scale(H, symfunc::alphabet_one_minus_q()), mu);
    r.t_condition = supported(at_t0 ? H : symfunc::pleth_scale(H, symfunc::alphabet_one_minus_t()), mu.conjugate());
    r.normalized = H.coeff(Basis::s, Partition{n}) == QTRat(1L);
    if (n == 0) r.normalized = H == SymF(1L);
    return r;
}

Expansion compute_kostka_qt(const Partition& mu, Exec exec) {
    require_generic(mu.size());
    if (mu.empty()) return {{Partition(), QTRat(1L)}};
    return certified_kostka(mu, false, exec);
}

const Expansion& kostka_qt(const Partition& mu) {
    require_generic(mu.size());
    if (mu.empty()) {
        static const Expansion one{{Partition(), QTRat(1L)}};
        return one;
    }
    return cached(generic_cache(), mu, false);
}

SymF macdonald_H(const Partition& mu) { return from_schur(kostka_qt(mu)); }

const Expansion& kostka_q0(const Partition& mu) {
    require_special(mu.size());
    if (mu.empty()) {
        static const Expansion one{{Partition(), QTRat(1L)}};
        return one;
    }
    return cached(t0_cache(), mu, true);
}

SymF macdonald_H_t0(const Partition& mu) { return from_schur(kostka_q0(mu)); }

QTRat eigenvalue(const SymF& f, const Partition& mu, TMode mode) {
    auto cs = cells(mu);
    std::map<int, QTRat> pr;
    auto power_sum = [&](int r) -> const QTRat& {
        auto it = pr.find(r);
        if (it != pr.end()) return it->second;
        std::vector<QTRat> terms;
        for (auto [i, j] : cs) {
            switch (mode) {
            case TMode::generic: terms.emplace_back(QTPoly::monomial(1, r * i, r * j)); break;
            case TMode::t_one: terms.emplace_back(QTPoly::monomial(1, r * i, 0)); break;
            case TMode::t_zero:
                if (j == 0) terms.emplace_back(QTPoly::monomial(1, r * i, 0));
                break;
            case TMode::t_inv_q: terms.push_back(QTRat::qpow(r * (i - j))); break;
            }
        }
        return pr.emplace(r, sum_rats(terms)).first->second;
    };
    std::vector<QTRat> terms;
    for (const auto& [rho, c] : f.pcoeffs()) {
        QTRat v = c;
        for (int part : rho.parts()) v *= power_sum(part);
        terms.push_back(v);
    }
    return sum_rats(terms);
}

QTRat star_product(const SymF& f, const SymF& g) {
    std::vector<QTRat> terms;
    const auto& gp = g.pcoeffs();
    for (const auto& [rho, c] : f.pcoeffs()) {
        auto it = gp.find(rho);
        if (it == gp.end()) continue;
        QTPoly w(BigRational(symfunc::zmu(rho) * symfunc::sign(rho)));
        for (int part : rho.parts()) w *= (QTPoly(1L) - QTPoly::q(part)) * (QTPoly(1L) - QTPoly::t(part));
        terms.push_back(c * it->second * QTRat(w));
    }
    return sum_rats(terms);
}

QTPoly star_norm(const Partition& mu) {
    QTPoly w(1L);
    for (int j = 0; j < mu.length(); ++j)
        for (int i = 0; i < mu[j]; ++i) {
            int a = mu.arm(j, i), l = mu.leg(j, i);
            w *= (QTPoly::q(a) - QTPoly::t(l + 1)) * (QTPoly::t(l) - QTPoly::q(a + 1));
        }
    return w;
}

Expansion expand_H(const SymF& g) {
    if (g.is_zero()) return {};
    if (!g.homogeneous()) throw DomainError("expand_H needs a homogeneous symmetric function");
    int n = g.degree();
    require_generic(n);
    Expansion out;
    for (const auto& mu : partitions(n)) {
        QTRat c = star_product(g, macdonald_H(mu)) / QTRat(star_norm(mu));
        if (!c.is_zero()) out.emplace(mu, c);
    }
    return out;
}

namespace {

// sum over the terms of w * K, where every K has polynomial entries. The
// common denominator and its cofactors are shared by all Schur indices.
Expansion combine_schur(const std::vector<std::pair<QTRat, const Expansion*>>& terms) {
    QTPoly L(1L);
    for (const auto& [w, K] : terms) L = algebra::lcm(L, w.den());
    std::vector<QTPoly> lifted;
    lifted.reserve(terms.size());
    for (const auto& [w, K] : terms) lifted.push_back(w.num() * algebra::divide_exact(L, w.den()));
    std::map<Partition, QTPoly> num;
    std::map<Partition, std::vector<QTRat>> rational;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (const auto& [lam, k] : *terms[i].second) {
            if (k.is_polynomial()) num[lam] += lifted[i] * k.num();
            else rational[lam].push_back(terms[i].first * k);
        }
    Expansion out;
    for (auto& [lam, nl] : num) {
        QTRat v(nl, L);
        auto it = rational.find(lam);
        if (it != rational.end()) {
            it->second.push_back(v);
            v = sum_rats(it->second);
            rational.erase(it);
        }
        if (!v.is_zero()) out.emplace(lam, v);
    }
    for (auto& [lam, xs] : rational) {
        QTRat v = sum_rats(xs);
        if (!v.is_zero()) out.emplace(lam, v);
    }
    return out;
}

// Delta_f on the degree-d component in a specialized eigenbasis
// b_mu = basis_mu[z/(1-q)].
SymF delta_pleth_basis(const SymF& f, const SymF& g, Basis basis, TMode mode) {
    SymF lifted = symfunc::pleth_scale(g, symfunc::alphabet_one_minus_q());
    std::map<Partition, QTRat> scaled;
    for (const auto& [mu, c] : lifted.to_basis(basis)) {
        QTRat v = c * eigenvalue(f, mu, mode);
        if (!v.is_zero()) scaled.emplace(mu, v);
    }
    return symfunc::pleth_scale(SymF::from_expansion(basis, scaled), symfunc::alphabet_inv_one_minus_q());
}

SymF delta_generic(const SymF& f, const SymF& g) {
    int n = g.degree();
    require_generic(n);
    auto coeffs = expand_H(g);
    std::vector<std::pair<QTRat, const Expansion*>> terms;
    for (const auto& [mu, c] : coeffs) {
        QTRat scale = c * eigenvalue(f, mu, TMode::generic);
        if (!scale.is_zero()) terms.emplace_back(scale, &kostka_qt(mu));
    }
    return SymF::from_expansion(Basis::s, combine_schur(terms));
}

// Triangular solve in the basis H_mu(z;q,0): H_mu has s-support on lambda >= mu'.
SymF delta_t0(const SymF& f, const SymF& g) {
    int n = g.degree();
    const auto& T = tables(n);
    auto gs = g.to_basis(Basis::s);
    std::map<Partition, QTRat> c;  // keyed by mu
    // partitions(n) is a linear extension of dominance from the top; walk it
    // from the bottom so every mu' below lambda is already solved.
    for (std::size_t idx = T.parts.size(); idx-- > 0;) {
        const Partition& lam = T.parts[idx];
        Partition mu = lam.conjugate();
        std::vector<QTRat> rest;
        auto it = gs.find(lam);
        if (it != gs.end()) rest.push_back(it->second);
        for (const auto& [nu, cn] : c) {
            const auto& K = kostka_q0(nu);
            auto kt = K.find(lam);
            if (kt != K.end()) rest.push_back(-(cn * kt->second));
        }
        QTRat num = sum_rats(rest);
        if (num.is_zero()) continue;
        const auto& K = kostka_q0(mu);
        auto diag = K.find(lam);
        if (diag == K.end()) throw Error("H(z;q,0) basis is not triangular at " + mu.to_string());
        c.emplace(mu, num / diag->second);
    }
    std::vector<std::pair<QTRat, const Expansion*>> terms;
    for (const auto& [mu, cm] : c) {
        QTRat scale = cm * eigenvalue(f, mu, TMode::t_zero);
        if (!scale.is_zero()) terms.emplace_back(scale, &kostka_q0(mu));
    }
    return SymF::from_expansion(Basis::s, combine_schur(terms));
}

}  // namespace

SymF delta(const OpSpec& op, const SymF& g) {
    if (g.is_zero()) return SymF();
    SymF out;
    for (int d = 0; d <= g.degree(); ++d) {
        SymF gd = g.component(d);
        if (gd.is_zero()) continue;
        if (d == 0) {
            out += gd.scaled(eigenvalue(op.f, Partition(), op.mode));
            continue;
        }
        switch (op.mode) {
        case TMode::generic: out += delta_generic(op.f, gd); break;
        case TMode::t_one:
            require_special(d);
            out += delta_pleth_basis(op.f, gd, Basis::h, TMode::t_one);
            break;
        case TMode::t_inv_q:
            require_special(d);
            out += delta_pleth_basis(op.f, gd, Basis::s, TMode::t_inv_q);
            break;
        case TMode::t_zero:
            require_special(d);
            out += delta_t0(op.f, gd);
            break;
        }
    }
    return out;
}

SymF nabla(const SymF& g, int r, TMode mode) {
    SymF cur = g;
    for (int it = 0; it < r; ++it) {
        SymF next;
        for (int d = 0; d <= cur.degree(); ++d) {
            SymF gd = cur.component(d);
            if (gd.is_zero()) continue;
            next += d == 0 ? gd : delta(OpSpec{SymF::e({d}), mode}, gd);
        }
        cur = next;
    }
    return cur;
}

SymF e_nr(int n, int r) {
    if (n < 1 || r < 1 || r > n) throw DomainError("e_nr needs 1 <= r <= n");
    require_special(n);
    static std::mutex m;
    static std::map<int, std::vector<SymF>> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second[std::size_t(r - 1)];
    }
    const auto& parts = partitions(n);
    std::size_t N = parts.size();
    std::size_t nn = static_cast<std::size_t>(n);
    algebra::QTMatrix A(nn, std::vector<QTRat>(nn));
    algebra::QTMatrix B(nn, std::vector<QTRat>(N));
    for (int k = 0; k < n; ++k) {
        for (int rr = 1; rr <= n; ++rr) A[std::size_t(k)][std::size_t(rr - 1)] = QTRat(algebra::qbinom(k + rr, rr));
        auto rhs = symfunc::pleth_scale(SymF::e({n}), symfunc::alphabet_qint(k + 1)).to_basis(Basis::s);
        for (std::size_t c = 0; c < N; ++c) {
            auto it = rhs.find(parts[c]);
            if (it != rhs.end()) B[std::size_t(k)][c] = it->second;
        }
    }
    auto X = algebra::solve_linear_multi(A, B);
    std::vector<SymF> all;
    for (int rr = 0; rr < n; ++rr) {
        Expansion e;
        for (std::size_t c = 0; c < N; ++c)
            if (!X[std::size_t(rr)][c].is_zero()) e.emplace(parts[c], X[std::size_t(rr)][c]);
        all.push_back(SymF::from_expansion(Basis::s, e));
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(n, std::move(all)).first->second[std::size_t(r - 1)];
}

SymF c_op(int a, const SymF& f) {
    if (a < 1) throw DomainError("c_op needs a >= 1");
    if (f.is_zero()) return SymF();
    int d = std::max(0, f.degree());
    require_special(d + a);
    using Series = algebra::AuxSeries<SymF>;
    // f[z - (q-1)/(q u)]: p_r -> p_r - (q^r - 1)/q^r u^{-r}
    Series shifted(-d, 0);
    for (const auto& [rho, c] : f.pcoeffs()) {
        Series term = Series::monomial(SymF(c), 0, -d, 0);
        for (int part : rho.parts()) {
            Series factor = Series::monomial(SymF::p({part}), 0, -d, 0);
            QTRat shift = QTRat(QTPoly::q(part) - QTPoly(1L)) * QTRat::qpow(-part);
            factor.add_term(-part, SymF(-shift));
            term = term.mul(factor, -d, 0);
        }
        shifted += term;
    }
    SymF out;
    for (const auto& [e, coef] : shifted.coeffs()) {
        int k = a - e;  // h_k u^k pairs with u^e
        out += k == 0 ? coef : coef * SymF::h({k});
    }
    QTRat scale = QTRat::qpow(1 - a);
    if ((1 - a) % 2 != 0) scale = -scale;
    return out.scaled(scale);
}

SymF e_gamma(const Composition& gamma) {
    if (gamma.empty()) return SymF(1L);
    static std::mutex m;
    static std::map<Composition, SymF> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(gamma);
        if (it != cache.end()) return it->second;
    }
    SymF v = c_op(gamma.parts().front(), e_gamma(gamma.tail()));
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(gamma, v).first->second;
}

SymF e_mu_via_H(const Partition& mu) {
    int n = mu.size(), r = mu.length();
    QTRat scale = QTRat::qpow(-mu.n() - (n - r));
    if ((n - r) % 2 != 0) scale = -scale;
    return macdonald_H_t0(mu.conjugate()).scaled(scale);
}

}  // namespace polyolab::macdonald
