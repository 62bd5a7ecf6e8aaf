#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyolab::algebra {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigRational& c);

// Sparse polynomial in q and t with rational coefficients.
// Terms are kept sorted by decreasing (total degree, q-degree), so the
// leading term in graded lex order (q > t) is terms().front().
class QTPoly {
public:
    struct Term {
        std::uint64_t key;
        BigRational coeff;
        int qexp() const { return int((key >> kShift) & kMask); }
        int texp() const { return int(key & kMask); }
    };

    static constexpr int kShift = 20;
    static constexpr std::uint64_t kMask = (std::uint64_t(1) << kShift) - 1;
    static std::uint64_t make_key(int qe, int te) {
        return (std::uint64_t(qe + te) << (2 * kShift)) | (std::uint64_t(qe) << kShift) | std::uint64_t(te);
    }

    QTPoly() = default;
    QTPoly(long c);
    QTPoly(const BigInt& c);
    QTPoly(const BigRational& c);

    static QTPoly monomial(const BigRational& c, int qe, int te);
    static QTPoly q(int e = 1) { return monomial(1, e, 0); }
    static QTPoly t(int e = 1) { return monomial(1, 0, e); }
    // Takes unsorted, possibly repeated terms.
    static QTPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    BigRational constant_term() const;

    int deg_q() const;
    int deg_t() const;
    int min_q() const;
    int min_t() const;
    int total_degree() const { return terms_.empty() ? -1 : int(terms_.front().key >> (2 * kShift)); }
    bool t_free() const { return deg_t() <= 0; }
    bool q_free() const { return deg_q() <= 0; }
    bool integral() const;
    BigRational coeff(int qe, int te) const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    QTPoly& operator*=(const BigRational& c);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(QTPoly a, const BigRational& c) { return a *= c; }
    friend QTPoly operator*(const BigRational& c, QTPoly a) { return a *= c; }
    friend bool operator==(const QTPoly& a, const QTPoly& b);
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    QTPoly pow(int e) const;
    // Multiply by q^a t^b.
    QTPoly shift(int a, int b) const;
    // Divide by the monomial q^a t^b; every term must be divisible.
    QTPoly unshift(int a, int b) const;
    QTPoly swap_qt() const;
    QTPoly subs_q(const BigRational& v) const;  // result is t-only
    QTPoly subs_t(const BigRational& v) const;  // result is q-only
    BigRational eval(const BigRational& q, const BigRational& t) const;

    // Rational content c such that this/c is a primitive integer polynomial
    // with positive leading coefficient. Zero for the zero polynomial.
    BigRational content() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Exact quotient a/b, or nullopt if b does not divide a.
std::optional<QTPoly> try_divide(const QTPoly& a, const QTPoly& b);
QTPoly divide_exact(const QTPoly& a, const QTPoly& b);
// Greatest common divisor, normalized to a primitive integer polynomial
// with positive leading coefficient (1 if coprime, 0 only if both are 0).
QTPoly gcd(const QTPoly& a, const QTPoly& b);

QTPoly qint(int n);
QTPoly qbinom(int n, int k);
QTPoly qfactorial(int n);
QTPoly pochhammer(int a, int r);

BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace polyolab::algebra
