#include "polyolab/algebra/qtrat.hpp"

#include "polyolab/error.hpp"

namespace polyolab::algebra {

QTRat::QTRat(const QTPoly& num, const QTPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    reduce();
}

QTRat QTRat::qpow(int e) {
    if (e >= 0) return QTRat(QTPoly::q(e));
    return QTRat(QTPoly(1L), QTPoly::q(-e), Raw{});
}

QTRat QTRat::tpow(int e) {
    if (e >= 0) return QTRat(QTPoly::t(e));
    return QTRat(QTPoly(1L), QTPoly::t(-e), Raw{});
}

void QTRat::normalize_scalar() {
    if (num_.is_zero()) {
        den_ = QTPoly(1L);
        return;
    }
    BigRational c = den_.content();
    if (c != 1) {
        BigRational inv = 1 / c;
        den_ *= inv;
        num_ *= inv;
    }
}

void QTRat::reduce() {
    if (num_.is_zero()) {
        den_ = QTPoly(1L);
        return;
    }
    if (!den_.is_constant()) {
        QTPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    normalize_scalar();
}

QTRat QTRat::operator-() const { return QTRat(-num_, den_, Raw{}); }

QTRat& QTRat::operator+=(const QTRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) reduce();
        else normalize_scalar();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        // gcd(num, den) = gcd(o.num, o.den) = 1 already
        normalize_scalar();
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        normalize_scalar();
        return *this;
    }
    QTPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize_scalar();
        return *this;
    }
    QTPoly d1 = divide_exact(den_, g), d2 = divide_exact(o.den_, g);
    QTPoly n = num_ * d2 + o.num_ * d1;
    QTPoly d = d1 * o.den_;
    if (n.is_zero()) {
        num_ = QTPoly();
        den_ = QTPoly(1L);
        return *this;
    }
    QTPoly h = gcd(n, g);
    if (!h.is_one()) {
        n = divide_exact(n, h);
        d = divide_exact(d, h);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    normalize_scalar();
    return *this;
}

QTRat& QTRat::operator-=(const QTRat& o) { return *this += -o; }

QTRat& QTRat::operator*=(const QTRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QTRat();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    QTPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_one()) {
        QTPoly g = gcd(a, d);
        if (!g.is_one()) {
            a = divide_exact(a, g);
            d = divide_exact(d, g);
        }
    }
    if (!b.is_one()) {
        QTPoly g = gcd(c, b);
        if (!g.is_one()) {
            c = divide_exact(c, g);
            b = divide_exact(b, g);
        }
    }
    num_ = a * c;
    den_ = b * d;
    normalize_scalar();
    return *this;
}

QTRat QTRat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    QTRat r(den_, num_, Raw{});
    r.normalize_scalar();
    return r;
}

QTRat& QTRat::operator/=(const QTRat& o) { return *this *= o.inverse(); }

QTRat QTRat::scaled(const BigRational& c) const {
    if (c == 0) return QTRat();
    return QTRat(num_ * c, den_, Raw{});
}

QTRat QTRat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return QTRat(num_.pow(e), den_.pow(e), Raw{});
}

bool QTRat::cross_equal(const QTRat& a, const QTRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

QTRat QTRat::swap_qt() const {
    QTRat r(num_.swap_qt(), den_.swap_qt(), Raw{});
    r.normalize_scalar();
    return r;
}

namespace {

// P(q, 1/q) * q^{deg_t P}
QTPoly clear_inv(const QTPoly& p, int d) {
    std::vector<QTPoly::Term> v;
    for (const auto& tm : p.terms()) v.push_back({QTPoly::make_key(tm.qexp() + d - tm.texp(), 0), tm.coeff});
    return QTPoly::from_terms(std::move(v));
}

}  // namespace

QTRat QTRat::specialize_t(TSpec mode) const {
    QTPoly n, d;
    switch (mode) {
        case TSpec::one:
            n = num_.subs_t(1);
            d = den_.subs_t(1);
            break;
        case TSpec::zero:
            n = num_.subs_t(0);
            d = den_.subs_t(0);
            break;
        case TSpec::inv_q: {
            int dn = std::max(num_.deg_t(), 0), dd = std::max(den_.deg_t(), 0);
            n = clear_inv(num_, dn);
            d = clear_inv(den_, dd);
            if (dd > dn) n = n.shift(dd - dn, 0);
            if (dn > dd) d = d.shift(dn - dd, 0);
            break;
        }
    }
    if (d.is_zero()) throw DomainError("denominator vanishes under t-specialization");
    return QTRat(n, d);
}

BigRational QTRat::eval(const BigRational& q, const BigRational& t) const {
    BigRational d = den_.eval(q, t);
    if (d == 0) throw DomainError("denominator vanishes at evaluation point");
    return num_.eval(q, t) / d;
}

std::string QTRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QTRat specialize_t(const QTRat& x, TSpec mode) { return x.specialize_t(mode); }

}  // namespace polyolab::algebra
