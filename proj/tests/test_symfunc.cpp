#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyolab/algebra/auxseries.hpp"
#include "polyolab/error.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <functional>
#include <random>

using namespace polyolab;
using namespace polyolab::symfunc;
using algebra::parse_poly;

namespace {

QTRat R(const char* s) { return QTRat::parse(s); }
const Basis kBases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s, Basis::f};

SymF random_symf(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-4, 4), ex(0, 2);
    SymF f;
    for (int i = 0; i < 4; ++i) {
        const auto& ps = partitions(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        QTRat c(QTPoly::monomial(coef(rng), ex(rng), ex(rng)) + QTPoly(long(coef(rng))));
        f += SymF::s(ps[pick(rng)]).scaled(c);
    }
    return f;
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) by cofactor expansion.
SymF jacobi_trudi(const Partition& lam) {
    int L = lam.length();
    std::function<SymF(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) -> SymF {
        if (row == L) return SymF(1L);
        SymF acc;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int k = lam[row] - row + cols[c];
            if (k < 0) continue;
            SymF hk = k == 0 ? SymF(1L) : SymF::h({k});
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + long(c));
            SymF term = hk * det(rest, row + 1);
            if (c % 2) acc -= term;
            else acc += term;
        }
        return acc;
    };
    std::vector<int> cols(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) cols[std::size_t(j)] = j;
    return det(cols, 0);
}

// Number of standard tableaux via the hook length formula.
BigInt syt_count(const Partition& lam) {
    BigInt r = algebra::factorial(lam.size());
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) r /= lam.hook(i, j);
    return r;
}

// Sum of q^{sum(entries-1)} over semistandard tableaux of shape lam with entries in 1..m.
QTPoly ssyt_sum(const Partition& lam, int m) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> T(std::size_t(lam.length()), std::vector<int>(std::size_t(lam[0]), 0));
    QTPoly total;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int weight) {
        if (idx == cells.size()) {
            total += QTPoly::q(weight);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 0) lo = std::max(lo, T[std::size_t(i)][std::size_t(j - 1)]);
        if (i > 0) lo = std::max(lo, T[std::size_t(i - 1)][std::size_t(j)] + 1);
        for (int v = lo; v <= m; ++v) {
            T[std::size_t(i)][std::size_t(j)] = v;
            rec(idx + 1, weight + v - 1);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace

TEST_CASE("partitions and compositions") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(12).size() == 77);
    CHECK(partitions(4).front() == Partition{4});
    CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
    CHECK(Partition{3, 1, 1}.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    CHECK(Partition{3, 2, 1}.n() == 4);
    CHECK(Partition{3, 1, 1}.to_string() == "[3,1,1]");
    CHECK(Partition::parse(" [3, 1,1] ") == Partition{3, 1, 1});
    CHECK_THROWS_AS(Partition::parse("[1,2]"), ParseError);
    CHECK(Composition{1, 2, 1}.to_string() == "(1,2,1)");
    CHECK(Composition::parse("(1,2,1)") == Composition{1, 2, 1});
    CHECK(compositions(4, 2).size() == 3);
    CHECK(compositions(5).size() == 16);
    CHECK(compositions(0).size() == 1);
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK(multinomial({2, 1}) == 3);
}

TEST_CASE("zmu and characters") {
    CHECK(zmu(Partition{1, 1, 1}) == 6);
    CHECK(zmu(Partition{2, 1}) == 2);
    CHECK(zmu(Partition{3, 3}) == 18);
    CHECK(schur_char(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(schur_char(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(schur_char(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK_THROWS_AS(schur_char(Partition{2}, Partition{1}), DomainError);
    for (int n = 1; n <= 8; ++n) {
        const auto& ps = partitions(n);
        for (const auto& lam : ps) {
            CHECK(BigInt(schur_char(lam, Partition(std::vector<int>(std::size_t(n), 1)))) == syt_count(lam));
            CHECK(schur_char(lam.conjugate(), Partition{n}) == (n % 2 ? 1 : -1) * schur_char(lam, Partition{n}));
            // Row orthogonality.
            for (const auto& mu : ps) {
                BigRational s = 0;
                for (const auto& rho : ps)
                    s += BigRational(schur_char(lam, rho) * schur_char(mu, rho)) / BigRational(zmu(rho));
                CHECK(s == (lam == mu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("basis conversion examples") {
    auto h2 = SymF::h({2}).to_basis(Basis::p);
    CHECK(h2.size() == 2);
    CHECK(h2[Partition{2}] == QTRat(BigRational(1, 2)));
    CHECK(h2[Partition{1, 1}] == QTRat(BigRational(1, 2)));
    auto e3 = SymF::e({3}).to_basis(Basis::s);
    CHECK(e3.size() == 1);
    CHECK(e3[Partition{1, 1, 1}] == QTRat(1L));
    auto s21 = SymF::s({2, 1}).to_basis(Basis::h);
    CHECK(s21.size() == 2);
    CHECK(s21[Partition{2, 1}] == QTRat(1L));
    CHECK(s21[Partition{3}] == QTRat(-1L));
}

TEST_CASE("Jacobi-Trudi agrees with the character-table Schur functions") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions(n)) CHECK(jacobi_trudi(lam) == SymF::s(lam));
}

TEST_CASE("basis round trips") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        SymF f = random_symf(rng, 8);
        for (Basis b : kBases) CHECK(SymF::from_expansion(b, f.to_basis(b)) == f);
    }
}

TEST_CASE("hall duality") {
    CHECK(hall(SymF::p({2}), SymF::p({2})) == QTRat(2L));
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions(n))
            for (const auto& b : partitions(n)) {
                QTRat d(a == b ? 1L : 0L);
                CHECK(hall(SymF::s(a), SymF::s(b)) == d);
                CHECK(hall(SymF::h(a), SymF::m(b)) == d);
                CHECK(hall(SymF::e(a), SymF::f(b)) == d);
            }
}

TEST_CASE("omega") {
    CHECK(omega(SymF::e({3})) == SymF::h({3}));
    CHECK(omega(SymF::s({2, 1})) == SymF::s({2, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions(n)) {
            CHECK(omega(SymF::s(lam)) == SymF::s(lam.conjugate()));
            CHECK(omega(SymF::h(lam)) == SymF::e(lam));
        }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        SymF f = random_symf(rng, 6), g = random_symf(rng, 6);
        CHECK(omega(omega(f)) == f);
        CHECK(hall(omega(f), omega(g)) == hall(f, g));
    }
}

TEST_CASE("plethystic scaling") {
    CHECK(pleth_scale(SymF::h({1}), alphabet_constant(QTRat(5L))) == SymF::h({1}).scaled(QTRat(5L)));
    CHECK(pleth_scale(SymF::h({2}), alphabet_constant(QTRat(2L))) ==
          SymF::h({2}).scaled(QTRat(2L)) + SymF::h({1, 1}));
    CHECK(pleth_scale(SymF::p({3}), alphabet_one_minus_q()) == SymF::p({3}).scaled(R("1-q^3")));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        SymF f = random_symf(rng, 6);
        CHECK(pleth_scale(f, alphabet_constant(QTRat(1L))) == f);
    }
    // h_n[z(1-q)] then h_n[z/(1-q)] is the identity.
    SymF g = SymF::h({3}) + SymF::s({2, 1}).scaled(R("t"));
    CHECK(pleth_scale(pleth_scale(g, alphabet_one_minus_q()), alphabet_inv_one_minus_q()) == g);
}

TEST_CASE("principal specialization") {
    CHECK(principal(SymF::s({1, 1}), 2) == R("q"));
    for (int k = 0; k <= 6; ++k) CHECK(principal(SymF::p({1}), k) == QTRat(algebra::qint(k)));
    for (int n = 0; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k) {
            QTRat v = principal(SymF::h({k}), n + 1);
            CHECK(v.eval(1, 1) == BigRational(algebra::binomial(n + k, k)));
            CHECK(v == QTRat(algebra::qbinom(n + k, k)));
        }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        SymF f = random_symf(rng, 4), g = random_symf(rng, 4);
        for (int k : {1, 2, 3}) CHECK(principal(f * g, k) == principal(f, k) * principal(g, k));
    }
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions(n))
            for (int m = 1; m <= 4; ++m) CHECK(principal(SymF::s(lam), m) == QTRat(ssyt_sum(lam, m)));
}

TEST_CASE("rectangular principal specialization") {
    CHECK(rect_principal(1, 2, 3).eval(1, 1) == 3);
    CHECK(rect_principal(2, 2, 3) == ssyt_sum(Partition{2, 2}, 3));
    CHECK(rect_principal(2, 2, 3) == parse_poly("q^2 + q^3 + 2*q^4 + q^5 + q^6"));
    for (int k = 0; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r)
            for (int m = 1; m <= 4; ++m) {
                QTPoly expect = k == 0 ? QTPoly(1L) : ssyt_sum(Partition(std::vector<int>(std::size_t(r), k)), m);
                CHECK(rect_principal(k, r, m) == expect);
            }
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) CHECK(rect_principal(k, 1, n + 1).eval(1, 1) == BigRational(algebra::binomial(n + k, k)));
}

TEST_CASE("text form") {
    SymF f = SymF::parse("h[2,1] - 3*q*s[1,1,1]");
    CHECK(f == SymF::h({2, 1}) - SymF::s({1, 1, 1}).scaled(R("3*q")));
    CHECK(SymF::parse(f.to_string(Basis::h)) == f);
    CHECK(SymF::parse(f.to_string(Basis::s)) == f);
    SymF g = SymF::h({1, 1}).scaled(QTRat(3L)) + SymF::h({2}).scaled(QTRat(3L));
    CHECK(g.to_string(Basis::h) == "3*h[1,1] + 3*h[2]");
    CHECK(SymF::parse("h[4]").to_string(Basis::h) == "h[4]");
    SymF r = SymF::parse("(q+t)*s[2] + s[1,1] - 2/(1-q)*p[1] + 5");
    CHECK(SymF::parse(r.to_string(Basis::m)) == r);
    CHECK(SymF::parse("s[]") == SymF(1L));
    CHECK_THROWS_AS(SymF::parse("x[1]"), ParseError);
    CHECK_THROWS_AS(SymF::parse("s[1,2]"), ParseError);
    CHECK_THROWS_AS(SymF::parse("s[1]/s[1]"), ParseError);
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(tables(13), CapExceeded);
    CHECK_THROWS_AS(SymF::s({13}), CapExceeded);
    CHECK_NOTHROW(SymF::p({13}));
}

TEST_CASE("two-alphabet functions") {
    BiSymF F = BiSymF::tensor(SymF::s({2, 1}), SymF::h({2})) + BiSymF::tensor(SymF::e({3}), SymF::s({1, 1}));
    auto c = F.to_basis(Basis::s, Basis::s);
    CHECK(c.size() == 2);
    CHECK(c[{Partition{2, 1}, Partition{2}}] == QTRat(1L));
    CHECK(c[{Partition{1, 1, 1}, Partition{1, 1}}] == QTRat(1L));
    CHECK(F.coeff_y(Basis::s, Partition{2, 1}) == SymF::h({2}));
    CHECK(F.pair_y(SymF::h({3})).is_zero());
    CHECK(F.pair_y(SymF::s({1, 1, 1})) == SymF::s({1, 1}));
    CHECK(F.swap().swap() == F);
    // s11 = h11 - h2, so h2(y) also picks up -e3(z).
    CHECK(F.swap().coeff_y(Basis::h, Partition{2}) == SymF::s({2, 1}) - SymF::e({3}));
    CHECK(F.to_string() == "sY[1,1,1]*sZ[1,1] + sY[2,1]*sZ[2]");
}
