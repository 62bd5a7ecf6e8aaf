#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyolab/algebra/qtpoly.hpp"
#include "polyolab/error.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/symfunc/partition.hpp"

#include <set>

using namespace polyolab;
using namespace polyolab::polyomino;
using algebra::binomial;
using algebra::QTPoly;

namespace {

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long count_closed(int k, int n) {
    mpz_class c = binomial(n + k - 1, k - 1) * binomial(n + k - 2, k - 1) / k;
    return c.get_si();
}

long labelled_closed(int k, int n) { return ipow(k, n - 1) * binomial(n + k - 2, k - 1).get_si(); }

long multinomial(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    mpz_class r = algebra::factorial(n);
    for (int p : parts) r /= algebra::factorial(p);
    return r.get_si();
}

// Vertices of a path, endpoints included.
std::vector<std::pair<int, int>> vertices(const LatticePath& p) {
    std::vector<std::pair<int, int>> v{{0, 0}};
    int x = 0, y = 0;
    for (char c : p.steps()) {
        if (c == 'E') ++x;
        else ++y;
        v.emplace_back(x, y);
    }
    return v;
}

// Pairwise strictness test written directly from the definition: a lower
// vertex never sits on or above an upper vertex of the same column, except
// that the two paths share their endpoints.
bool strict_pair(const LatticePath& up, const LatticePath& lo) {
    auto a = vertices(up), b = vertices(lo);
    std::size_t N = a.size() - 1;
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; j <= N; ++j) {
            if (i == j && (i == 0 || i == N)) continue;
            if (b[i].first == a[j].first && b[i].second >= a[j].second) return false;
        }
    return true;
}

std::vector<std::int64_t> area_brute(int k, int n) {
    std::vector<std::int64_t> out;
    for_each_polyomino(k, n, [&](const Polyomino& p) {
        std::size_t a = std::size_t(p.area());
        if (out.size() <= a) out.resize(a + 1, 0);
        ++out[a];
    });
    return out;
}

}  // namespace

TEST_CASE("figure path sequences") {
    LatticePath p("yyxxxyyxxyxxxyxx");
    CHECK(p.width() == 10);
    CHECK(p.height() == 6);
    CHECK(p.heights() == std::vector<int>{2, 2, 2, 4, 4, 5, 5, 5, 6, 6});
    CHECK(p.indents() == std::vector<int>{0, 0, 3, 3, 5, 8});
    CHECK(p.area() == 41);
    CHECK(LatticePath::from_heights(p.heights(), 6) == p);
    CHECK(LatticePath::from_indents(p.indents(), 10) == p);
    CHECK(LatticePath("yx").area() == 1);
    CHECK(p.to_string() == "NNEEENNEENEEENEE");
}

TEST_CASE("path enumeration and q-area") {
    CHECK(enum_paths(2, 2).size() == 6);
    for (int k = 0; k <= 6; ++k)
        for (int n = 0; n <= 6; ++n) {
            auto paths = enum_paths(k, n);
            CHECK(long(paths.size()) == binomial(n + k, k).get_si());
            CHECK(std::is_sorted(paths.begin(), paths.end()));
            CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
            QTPoly sum;
            for (const auto& q : paths) {
                int s = 0;
                for (int h : q.heights()) s += h;
                CHECK(q.area() == s);
                sum += QTPoly::monomial(1, q.area(), 0);
            }
            CHECK(sum == algebra::qbinom(n + k, k));
        }
}

TEST_CASE("labelled paths: q-area is [k+1]^n") {
    for (int k = 0; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            QTPoly sum;
            long count = 0;
            for_each_labelled_path(k, n, [&](const LabelledPath& lp) {
                CHECK(lp.valid());
                ++count;
                sum += QTPoly::monomial(1, lp.path.area(), 0);
            });
            QTPoly expect(1L);
            for (int i = 0; i < n; ++i) expect = expect * algebra::qint(k + 1);
            CHECK(count == ipow(k + 1, n));
            CHECK(sum == expect);
        }
}

TEST_CASE("polyomino enumeration against an independent filter") {
    CHECK(enum_polyominoes(2, 2).size() == 3);
    CHECK(enum_polyominoes(3, 3).size() == 20);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) {
            auto polys = enum_polyominoes(k, n);
            std::set<std::pair<std::string, std::string>> got, brute;
            for (const auto& p : polys) got.emplace(p.upper().steps(), p.lower().steps());
            CHECK(got.size() == polys.size());
            CHECK(std::is_sorted(polys.begin(), polys.end()));
            auto all = enum_paths(k, n);
            for (const auto& u : all)
                for (const auto& l : all) {
                    bool s = strict_pair(u, l);
                    CHECK(s == Polyomino::is_valid(u, l));
                    if (s) brute.emplace(u.steps(), l.steps());
                }
            CHECK(got == brute);
        }
}

TEST_CASE("polyomino counts and labelled counts") {
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= 6; ++n) {
            long count = 0, weighted = 0, labelled = 0;
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                ++count;
                weighted += multinomial(p.gamma());
            });
            for_each_labelled(k, n, [&](const LabelledPolyomino& lp) {
                CHECK(lp.valid());
                ++labelled;
            });
            CHECK(count == count_closed(k, n));
            CHECK(weighted == labelled_closed(k, n));
            CHECK(labelled == labelled_closed(k, n));
        }
    CHECK(enum_polyominoes(1, 5).size() == 1);
    long l22 = 0;
    for_each_labelled(2, 2, [&](const LabelledPolyomino&) { ++l22; });
    CHECK(l22 == 4);
}

TEST_CASE("generating function for labelled counts") {
    // Coefficient of x^{n-1} in (1-kx)^{-k} is binom(n+k-2, n-1) k^{n-1}.
    for (int k = 1; k <= 6; ++k) {
        std::vector<mpz_class> series(12, 0), factor(12, 0);
        series[0] = 1;
        for (int i = 0; i < 12; ++i) factor[std::size_t(i)] = ipow(k, i);
        for (int rep = 0; rep < k; ++rep) {
            std::vector<mpz_class> next(12, 0);
            for (int i = 0; i < 12; ++i)
                for (int j = 0; i + j < 12; ++j) next[std::size_t(i + j)] += series[std::size_t(i)] * factor[std::size_t(j)];
            series = next;
        }
        for (int n = 1; n <= 10; ++n) CHECK(series[std::size_t(n - 1)] == labelled_closed(k, n));
    }
}

TEST_CASE("area statistics") {
    CHECK(area_brute(2, 2) == std::vector<std::int64_t>{2, 1});
    CHECK(area_brute(3, 3) == std::vector<std::int64_t>{6, 6, 5, 2, 1});
    CHECK(area_brute(2, 4) == std::vector<std::int64_t>{4, 3, 2, 1});
    CHECK(area_brute(4, 2) == std::vector<std::int64_t>{4, 3, 2, 1});
    Polyomino sq(LatticePath("NNEE"), LatticePath("EENN"));
    CHECK(sq.area() == 1);
    CHECK(sq.gamma() == std::vector<int>{2});
    CHECK(Polyomino(LatticePath("NE"), LatticePath("EN")).area() == 0);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n)
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                CHECK(p.area() >= 0);
                CHECK(p.is_ribbon() == (p.cells() == k + n - 1));
            });
}

TEST_CASE("reflection symmetry") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) {
            std::set<Polyomino> refl, target;
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                auto r = p.reflect();
                CHECK(r.area() == p.area());
                CHECK(r.reflect() == p);
                refl.insert(r);
            });
            for_each_polyomino(n, k, [&](const Polyomino& p) { target.insert(p); });
            CHECK(refl == target);
        }
}

TEST_CASE("figure polyomino statistics") {
    auto p = Polyomino::parse("2224455566|0011112223");
    CHECK(p.upper().steps() == "NNEEENNEENEEENEE");
    CHECK(p.lower().steps() == "EENEEEENEEENENNN");
    CHECK(p.gamma() == std::vector<int>{2, 2, 1, 1});
    CHECK(to_string(to_motzkin(p)) == "d d d~ b b d d d~ b d b d~ b r d~ d~");
    CHECK(Polyomino::parse(p.to_string()) == p);
    CHECK_THROWS_AS(Polyomino(LatticePath("EN"), LatticePath("NE")), DomainError);
    CHECK_THROWS_AS(Polyomino::parse("NNEE"), ParseError);
}

TEST_CASE("Motzkin and A-word encodings") {
    Polyomino p(LatticePath("NNNEENEEE"), LatticePath("ENEENENEN"));
    CHECK(p.width() == 5);
    CHECK(p.height() == 4);
    CHECK(to_string(to_motzkin(p)) == "d r d b d~ d d~ b d~");
    CHECK(to_string(to_aword(p)) == "0~ 1 1 1~ 2 2~ 1~ 2 1~");
    CHECK(to_string(to_aword(p), ",") == "0~,1,1,1~,2,2~,1~,2,1~");
    CHECK(dinv(p, DinvConvention::successor) == 12);
    CHECK(dinv(p, DinvConvention::predecessor) == 4);
    CHECK(parse_motzkin("d r d b d~ d d~ b d~") == to_motzkin(p));
    CHECK(from_motzkin(to_motzkin(p)) == p);

    Polyomino unit(LatticePath("NE"), LatticePath("EN"));
    CHECK(to_string(to_motzkin(unit)) == "d d~");
    CHECK(to_string(to_aword(unit)) == "0~ 1");
    CHECK_THROWS_AS(from_motzkin(parse_motzkin("d d~ d d~")), DomainError);

    for (int k = 1; k <= 7; ++k)
        for (int n = 1; k + n <= 8; ++n)
            for_each_polyomino(k, n, [&](const Polyomino& q) {
                auto w = to_motzkin(q);
                CHECK(is_primitive(w));
                CHECK(from_motzkin(w) == q);
                int d = 0, rb = 0;
                for (auto m : w) {
                    if (m == Motzkin::d) ++d;
                    else if (m != Motzkin::dbar) ++rb;
                }
                CHECK(int(to_aword(q).size()) == 2 * d + rb);
            });
}

TEST_CASE("primitive Motzkin words are exactly the polyomino images") {
    const Motzkin letters[] = {Motzkin::d, Motzkin::dbar, Motzkin::r, Motzkin::b};
    for (int len = 1; len <= 8; ++len) {
        long words = 1;
        for (int i = 0; i < len; ++i) words *= 4;
        long primitive = 0;
        for (long code = 0; code < words; ++code) {
            MotzkinWord w;
            long c = code;
            for (int i = 0; i < len; ++i, c /= 4) w.push_back(letters[c % 4]);
            if (!is_primitive(w)) {
                CHECK_THROWS_AS(from_motzkin(w), DomainError);
                continue;
            }
            ++primitive;
            auto p = from_motzkin(w);
            CHECK(to_motzkin(p) == w);
        }
        long polys = 0;
        for (int k = 1; k < len; ++k) polys += long(enum_polyominoes(k, len - k).size());
        CHECK(primitive == polys);
    }
}

TEST_CASE("doubly labelled counts") {
    auto pw = [](long b, long e) { return e == 0 ? 1L : ipow(b, e); };
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            long all = 0, star = 0, per_shape = 0;
            for_each_doubly(k, n, false, [&](const DoublyLabelledPolyomino& d) {
                CHECK(d.valid());
                ++all;
            });
            for_each_doubly(k, n, true, [&](const DoublyLabelledPolyomino& d) {
                CHECK(d.valid());
                CHECK(d.lower_labels.front() == 1);
                ++star;
            });
            for_each_polyomino(k, n, [&](const Polyomino& p) { per_shape += multinomial(p.gamma()) * multinomial(p.delta()); });
            long closed = pw(k, n) * pw(n - 1, k - 1) + pw(k - 1, n - 1) * pw(n, k) -
                          pw(k - 1, n - 1) * pw(n - 1, k - 1) * (n + k - 1);
            CHECK(all == per_shape);
            CHECK(all == closed);
            CHECK(star == ipow(k, n - 1) * ipow(n, k - 1));
        }
}

TEST_CASE("parallel kernels agree with serial ones") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) {
            CHECK(shape_histogram(k, n, Exec::serial) == shape_histogram(k, n, Exec::parallel));
            CHECK(double_histogram(k, n, Exec::serial) == double_histogram(k, n, Exec::parallel));
            CHECK(area_polynomial(k, n, Exec::serial) == area_brute(k, n));
            CHECK(area_polynomial(k, n, Exec::parallel) == area_brute(k, n));
            for (auto c : {DinvConvention::successor, DinvConvention::predecessor})
                CHECK(ribbon_dinv_histogram(k, n, c, Exec::serial) == ribbon_dinv_histogram(k, n, c, Exec::parallel));
        }
}

TEST_CASE("cyclic lemma") {
    LabelledPath col{LatticePath("NNN"), {1, 2, 3}};
    auto single = cyclic_map(col, LatticePath("NN"));
    REQUIRE(single.members.size() == 1);
    REQUIRE(single.rep);
    CHECK(single.rep->shape == Polyomino(LatticePath("NNNE"), LatticePath("ENNN")));

    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            auto rep = check_cyclic_lemma(k, n, Exec::parallel);
            INFO("k=" << k << " n=" << n);
            CHECK(rep.sizes_ok);
            CHECK(rep.unique_rep);
            CHECK(rep.partition_ok);
            CHECK(rep.closed);
            CHECK(rep.reps_cover);
            CHECK(rep.inputs == k * labelled_closed(k, n));
            CHECK(rep.classes == labelled_closed(k, n));
        }
    auto s = check_cyclic_lemma(3, 3, Exec::serial);
    CHECK(s.ok());
}

TEST_CASE("dinv calibration on ribbons") {
    const auto& cal = dinv_calibration();
    REQUIRE(cal.found);
    CHECK(cal.convention == DinvConvention::successor);
    CHECK(cal.offset_is_k_plus_n_minus_1);
    CHECK(cal.ribbons_checked > 0);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n)
            for_each_polyomino(k, n, [&](const Polyomino& p) {
                if (p.is_ribbon()) CHECK(dinv(p) == p.lower().area() + k + n - 1);
            });
    CHECK(dinv(Polyomino(LatticePath("NE"), LatticePath("EN"))) == 1);
}
