#pragma once

#include "polyolab/algebra/qtpoly.hpp"
#include "polyolab/exec.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/symfunc/symf.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyolab::sl2 {

using algebra::BigInt;

// Multiset of column pairs (i, j), 1 <= i < j <= n, kept sorted.
class MinorMonomial {
public:
    MinorMonomial() = default;
    explicit MinorMonomial(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int degree() const { return int(pairs_.size()); }

    // "X[1,3]*X[2,3]^2*X[2,5]^2", "1" when empty.
    std::string to_string() const;
    static MinorMonomial parse(std::string_view text);

    friend auto operator<=>(const MinorMonomial&, const MinorMonomial&) = default;

private:
    std::vector<std::pair<int, int>> pairs_;
};

// Integer polynomial in x_1..x_n, y_1..y_n. Exponent vectors list the x
// exponents first, then the y exponents.
class BivarPoly {
public:
    using Exponents = std::vector<int>;

    BivarPoly() = default;
    explicit BivarPoly(int n) : n_(n) {}
    static BivarPoly one(int n);
    // x_i y_j - x_j y_i
    static BivarPoly minor(int n, int i, int j);

    int nvars() const { return n_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add(const Exponents& e, const BigInt& c);
    int n_ = 0;
    std::map<Exponents, BigInt> terms_;
};

// X_pi for pi in P_{d+1,n-1}: the factor pairs are (a_i + 1, b_i + 1),
// i = 1..d, with a the lower and b the upper height sequence.
MinorMonomial minor_monomial(const polyomino::Polyomino& pi);
// One monomial per polyomino of P_{d+1,n-1}.
std::vector<MinorMonomial> minor_basis(int d, int n);

// Every two factors are comparable in the componentwise weak order.
bool is_standard(const MinorMonomial& m);
// All standard monomials of degree d in the minors of a 2 x n matrix.
std::vector<MinorMonomial> standard_monomials(int d, int n);

// Throws DomainError when an index exceeds n.
BivarPoly expand(const MinorMonomial& m, int n);
// Y_il Y_jk - Y_ik Y_jl + Y_ij Y_kl, expanded.
BivarPoly plucker(int n, int i, int j, int k, int l);

// Rank caps, defaults n <= 6 and d <= 3.
int rank_cap_n();
int rank_cap_d();
void set_rank_caps(int max_d, int max_n);

// Exact rank over Q of the coefficient matrix of the expanded basis,
// by fraction-free integer elimination.
struct RankReport {
    int d = 0, n = 0;
    long expected = 0;  // |P_{d+1,n-1}|
    long rank = 0;
    bool ok() const { return rank == expected; }
};
RankReport rank_check(int d, int n, Exec exec = Exec::parallel);
// Rank of an integer matrix by Bareiss elimination.
long integer_rank(std::vector<std::vector<BigInt>> rows);

// series_a[d] = |P_{d+1,n-1}|; series_b[d] = coefficients of the displayed
// closed form (1/(1-x^{2n-1})) sum_{k<=n-2} (1/(k+1)) binom(n-2,k) binom(n-1,k) x^k.
struct HilbertReport {
    int n = 0, D = 0;
    std::vector<BigInt> series_a;
    std::vector<algebra::BigRational> series_b;
    std::vector<int> mismatches;  // degrees where the two differ
};
HilbertReport hilbert(int n, int D);

// sum over mu of (s_{dd} with p_k -> phi_k(mu)) p_mu / z_mu, where phi_k(mu)
// is the sum of the parts of mu dividing k.
symfunc::SymF littlewood_frob(int d, int n);

// s_{k^r}(1, ..., 1) with n + 1 ones.
BigInt slr_count(int k, int n, int r);

}  // namespace polyolab::sl2
