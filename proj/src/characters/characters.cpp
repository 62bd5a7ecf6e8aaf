#include "polyolab/characters/characters.hpp"

#include "polyolab/error.hpp"
#include "polyolab/macdonald/macdonald.hpp"
#include "polyolab/polyomino/path.hpp"
#include "polyolab/polyomino/polyomino.hpp"

#include <map>
#include <mutex>

namespace polyolab::characters {

using algebra::BigInt;
using algebra::BigRational;
using symfunc::Basis;

namespace {

QTRat qmono(int e) { return QTRat::qpow(e); }
QTRat tmono(int e) { return QTRat::tpow(e); }

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

// Accumulates c * h_gamma with equal gammas merged first.
class HSum {
public:
    void add(const std::vector<int>& gamma, const QTRat& c) { acc_[Partition(gamma)] += c; }
    SymF result() const {
        SymF out;
        for (const auto& [mu, c] : acc_)
            if (!c.is_zero()) out += SymF::h(mu).scaled(c);
        return out;
    }

private:
    std::map<Partition, QTRat> acc_;
};

class HHSum {
public:
    void add(const std::vector<int>& y, const std::vector<int>& z, const QTRat& c) {
        acc_[{Partition(y), Partition(z)}] += c;
    }
    BiSymF result() const {
        std::map<Partition, SymF> hy, hz;
        BiSymF out;
        for (const auto& [key, c] : acc_) {
            if (c.is_zero()) continue;
            auto yi = hy.try_emplace(key.first, SymF::h(key.first)).first;
            auto zi = hz.try_emplace(key.second, SymF::h(key.second)).first;
            out += BiSymF::tensor(yi->second, zi->second).scaled(c);
        }
        return out;
    }

private:
    std::map<std::pair<Partition, Partition>, QTRat> acc_;
};

}  // namespace

SymF h_comp(const std::vector<int>& parts) { return SymF::h(Partition(parts)); }

SymF h_pleth(int n, const std::function<QTRat(int)>& alphabet) {
    return symfunc::pleth_scale(SymF::h({n}), alphabet);
}

SymF e_pleth(int n, const std::function<QTRat(int)>& alphabet) {
    return symfunc::pleth_scale(SymF::e({n}), alphabet);
}

std::function<QTRat(int)> qint_alphabet(int a) { return symfunc::alphabet_qint(a); }

std::function<QTRat(int)> tint_alphabet(int a) {
    return [a](int r) {
        QTPoly s;
        for (int i = 0; i < a; ++i) s += QTPoly::t(i * r);
        return QTRat(s);
    };
}

SymF frob_labelled_paths(int k, int n, bool graded) {
    require(n >= 1 && k >= 0, "labelled paths need n >= 1, k >= 0");
    if (graded) return h_pleth(n, qint_alphabet(k + 1));
    return h_pleth(n, symfunc::alphabet_constant(QTRat(long(k + 1))));
}

SymF frob_labelled_paths_brute(int k, int n, bool graded) {
    require(n >= 1 && k >= 0, "labelled paths need n >= 1, k >= 0");
    HSum acc;
    polyomino::for_each_path(k, n, [&](const polyomino::LatticePath& p) {
        acc.add(p.north_runs(), graded ? qmono(p.area()) : QTRat(1L));
    });
    return acc.result();
}

SymF frob_L(int k, int n) {
    require(k >= 1 && n >= 1, "frob_L needs k, n >= 1");
    SymF f = h_pleth(n, symfunc::alphabet_constant(QTRat(long(k))));
    return f.scaled(QTRat(BigRational(algebra::binomial(n + k - 2, k - 1), BigInt(k))));
}

SymF frob_L_brute(int k, int n, Exec exec) {
    require(k >= 1 && n >= 1, "frob_L needs k, n >= 1");
    HSum acc;
    for (const auto& [key, count] : polyomino::shape_histogram(k, n, exec))
        acc.add(key.first, QTRat(long(count)));
    return acc.result();
}

SymF frob_L_q(int k, int n, Exec exec) {
    require(k >= 1 && n >= 1, "frob_L_q needs k, n >= 1");
    HSum acc;
    for (const auto& [key, count] : polyomino::shape_histogram(k, n, exec))
        acc.add(key.first, qmono(key.second) * QTRat(long(count)));
    return acc.result();
}

SymF ribbon_frob(int k, int n, Exec exec) {
    require(k >= 1 && n >= 1, "ribbon_frob needs k, n >= 1");
    const auto& cal = polyomino::dinv_calibration();
    require(cal.found, "dinv calibration failed");
    HSum acc;
    for (const auto& [key, count] : polyomino::ribbon_dinv_histogram(k, n, cal.convention, exec))
        acc.add(key.first, tmono(key.second) * QTRat(long(count)));
    return acc.result();
}

SymF ribbon_formula(int k, int n) {
    SymF d = h_pleth(n, tint_alphabet(k)) - h_pleth(n, tint_alphabet(k - 1));
    return d.scaled(tmono(n));
}

BiSymF frob_L2(int k, int n, bool graded, Exec exec) {
    require(k >= 1 && n >= 1, "frob_L2 needs k, n >= 1");
    HHSum acc;
    for (const auto& [key, count] : polyomino::double_histogram(k, n, exec)) {
        const auto& [gamma, delta, area] = key;
        QTRat c = QTRat(long(count));
        if (graded) c *= qmono(area);
        acc.add(delta, gamma, c);
    }
    return acc.result();
}

BiSymF frob_L2_closed(int k, int n) {
    if (k < 2 || n < 2) throw DomainError("formula out of domain");
    auto c = [](long v) { return symfunc::alphabet_constant(QTRat(v)); };
    SymF hy_n1 = symfunc::pleth_scale(SymF::h({k}), c(n - 1));
    SymF hy_n = symfunc::pleth_scale(SymF::h({k}), c(n));
    SymF hz_k = h_pleth(n, c(k));
    SymF hz_k1 = h_pleth(n, c(k - 1));
    BiSymF out = BiSymF::tensor(hy_n1, hz_k).scaled(QTRat(BigRational(1, n - 1)));
    out += BiSymF::tensor(hy_n, hz_k1).scaled(QTRat(BigRational(1, k - 1)));
    out -= BiSymF::tensor(hy_n1, hz_k1).scaled(QTRat(BigRational(n + k - 1, (n - 1) * (k - 1))));
    return out;
}

BiSymF frob_L2star(int k, int n, Exec exec) {
    require(k >= 1 && n >= 1, "frob_L2star needs k, n >= 1");
    HHSum acc;
    for (const auto& [key, count] : polyomino::double_histogram(k, n, exec)) {
        std::vector<int> delta = std::get<1>(key);
        delta.front() -= 1;
        acc.add(delta, std::get<0>(key), QTRat(long(count)));
    }
    return acc.result();
}

BiSymF frob_L2star_closed(int k, int n) {
    require(k >= 1 && n >= 1, "frob_L2star needs k, n >= 1");
    SymF z = h_pleth(n, symfunc::alphabet_constant(QTRat(long(k)))).scaled(QTRat(BigRational(1, k)));
    SymF y = symfunc::pleth_scale(SymF::h({k - 1}), symfunc::alphabet_constant(QTRat(long(n))));
    return BiSymF::tensor(y, z);
}

SymF s_rho_coefficient(int r, int n, bool graded) {
    require(r >= 1 && n >= 1, "s_rho needs r, n >= 1");
    std::vector<int> rho(std::size_t(n), r);
    return frob_L2(r * n, n, graded).coeff_y(Basis::s, Partition(rho));
}

SymF s_rho_formula(int r, int n, bool graded) {
    require(r >= 1 && n >= 1, "s_rho needs r, n >= 1");
    if (!graded) {
        int m = r * n - 1;
        if (m == 0) throw DomainError("formula out of domain");
        return h_pleth(n, symfunc::alphabet_constant(QTRat(long(m)))).scaled(QTRat(BigRational(1, m)));
    }
    QTRat c = QTRat::qpow(1 - n);
    if ((n - 1) % 2) c = -c;
    SymF g = SymF::h({n}).scaled(c);
    return symfunc::omega(macdonald::nabla(g, r, macdonald::TMode::t_one));
}

QTRat bounce_pairing(int k, int n) {
    require(k >= 1 && n >= 1, "bounce_pairing needs k, n >= 1");
    static std::mutex m;
    static std::map<int, SymF> cache;
    int N = k + n - 2;
    SymF ne;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(N);
        if (it != cache.end()) ne = it->second;
    }
    if (ne.is_zero()) {
        ne = macdonald::nabla(SymF::e({N}));
        std::lock_guard<std::mutex> lock(m);
        cache.emplace(N, ne);
    }
    return symfunc::hall(ne, SymF::h(Partition{k - 1, n - 1}));
}

QTRat bounce_qanalog(int k, int n) {
    QTRat v(algebra::qbinom(n + k, n) * algebra::qbinom(n + k - 2, n - 1));
    return v * QTRat(QTPoly(1L), algebra::qint(n + k));
}

SymF trivariate_frob(int n, int r) {
    require(n >= 1 && r >= 0, "trivariate_frob needs n >= 1");
    SymF out;
    for (const auto& lam : symfunc::partitions(n)) {
        BigRational c(1);
        int base = r * n + 1;
        int e = lam.length() - 2;
        for (int i = 0; i < std::abs(e); ++i) c *= base;
        if (e < 0) c = 1 / c;
        for (int j : lam.parts()) c *= BigRational(algebra::binomial((r + 1) * j, j));
        c /= BigRational(symfunc::zmu(lam));
        out += SymF::p(lam).scaled(QTRat(c));
    }
    return out;
}

SymF prop1_rhs(int k, int n) {
    SymF d = h_pleth(n, qint_alphabet(k + 1)) - h_pleth(n, qint_alphabet(k));
    return d.scaled(QTRat::qpow(-k));
}

SymF prop2_rhs(int k, int n) {
    QTRat c = QTRat::qpow(n + k - n * k - 1) * QTRat(algebra::qbinom(n + k - 2, k - 1)) *
              QTRat(QTPoly(1L), algebra::qint(k));
    return h_pleth(n, qint_alphabet(k)).scaled(c);
}

SymF delta_bar_rhs(int k, int n) {
    QTRat c = QTRat(algebra::qbinom(n, k)) * QTRat(QTPoly(1L), algebra::qint(k + 1)) *
              QTRat::qpow(-(k * n - (k + 1) * k / 2));
    return e_pleth(n, qint_alphabet(k + 1)).scaled(c);
}

bool in_nat_qt(const QTRat& c) {
    if (!c.is_polynomial()) return false;
    for (const auto& tm : c.num().terms()) {
        if (tm.qexp() < 0 || tm.texp() < 0) return false;
        if (tm.coeff < 0 || tm.coeff.get_den() != 1) return false;
    }
    return true;
}

bool positive_in(const SymF& f, Basis b) {
    for (const auto& [mu, c] : f.to_basis(b))
        if (!in_nat_qt(c)) return false;
    return true;
}

}  // namespace polyolab::characters
