#pragma once

#include "polyolab/algebra/qtpoly.hpp"

#include <string>
#include <string_view>

namespace polyolab::algebra {

enum class TSpec { one, zero, inv_q };

// Reduced rational function num/den in q,t. The denominator is a primitive
// integer polynomial with positive leading coefficient; the scalar factor
// lives in the numerator. Negative powers of q appear as den = q^m.
class QTRat {
public:
    QTRat() : num_(), den_(1L) {}
    QTRat(long c) : num_(c), den_(1L) {}
    QTRat(const BigInt& c) : num_(c), den_(1L) {}
    QTRat(const BigRational& c) : num_(c), den_(1L) {}
    QTRat(const QTPoly& p) : num_(p), den_(1L) {}
    QTRat(const QTPoly& num, const QTPoly& den);

    // q^e for any integer e.
    static QTRat qpow(int e);
    static QTRat tpow(int e);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // Denominator is a pure power of q (Laurent polynomial in q).
    bool is_laurent() const { return den_.is_monomial() && den_.leading().texp() == 0; }

    QTRat operator-() const;
    QTRat& operator+=(const QTRat& o);
    QTRat& operator-=(const QTRat& o);
    QTRat& operator*=(const QTRat& o);
    QTRat& operator/=(const QTRat& o);
    friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
    friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
    friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
    friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }
    QTRat scaled(const BigRational& c) const;
    QTRat inverse() const;
    QTRat pow(int e) const;

    friend bool operator==(const QTRat& a, const QTRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QTRat& a, const QTRat& b) { return !(a == b); }
    // Equality by cross-multiplication; agrees with == on reduced values.
    static bool cross_equal(const QTRat& a, const QTRat& b);

    QTRat swap_qt() const;
    QTRat specialize_t(TSpec mode) const;
    QTRat specialize_q(TSpec mode) const { return swap_qt().specialize_t(mode).swap_qt(); }
    BigRational eval(const BigRational& q, const BigRational& t) const;

    std::string to_string() const;
    static QTRat parse(std::string_view text);

private:
    struct Raw {};
    QTRat(QTPoly num, QTPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_scalar();
    void reduce();

    QTPoly num_;
    QTPoly den_;
};

QTRat specialize_t(const QTRat& x, TSpec mode);

}  // namespace polyolab::algebra
