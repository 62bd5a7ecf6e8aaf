#include "polyolab/algebra/qtpoly.hpp"

#include "polyolab/error.hpp"

#include <algorithm>
#include <sstream>

namespace polyolab::algebra {

namespace {

std::vector<BigRational> power_table(const BigRational& x, int maxe) {
    std::vector<BigRational> p(std::size_t(std::max(maxe, 0) + 1));
    p[0] = 1;
    for (int i = 1; i <= maxe; ++i) p[i] = p[i - 1] * x;
    return p;
}

std::string monomial_text(int qe, int te) {
    std::string s;
    if (qe > 0) {
        s += "q";
        if (qe > 1) s += "^" + std::to_string(qe);
    }
    if (te > 0) {
        if (!s.empty()) s += "*";
        s += "t";
        if (te > 1) s += "^" + std::to_string(te);
    }
    return s;
}

}  // namespace

std::string to_string(const BigRational& c) { return c.get_str(); }

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.push_back({0, BigRational(c)});
}

QTPoly::QTPoly(const BigInt& c) {
    if (c != 0) terms_.push_back({0, BigRational(c)});
}

QTPoly::QTPoly(const BigRational& c) {
    BigRational v = c;
    v.canonicalize();
    if (v != 0) terms_.push_back({0, std::move(v)});
}

QTPoly QTPoly::monomial(const BigRational& c, int qe, int te) {
    QTPoly p;
    if (qe < 0 || te < 0) throw DomainError("negative exponent in QTPoly monomial");
    BigRational v = c;
    v.canonicalize();
    if (v != 0) p.terms_.push_back({make_key(qe, te), std::move(v)});
    return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms) {
    // GMP arithmetic assumes canonical operands; callers may pass raw mpq values.
    for (auto& tm : terms)
        if (tm.coeff.get_den() != 1) tm.coeff.canonicalize();
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    QTPoly p;
    p.terms_.reserve(terms.size());
    for (auto& tm : terms) {
        if (!p.terms_.empty() && p.terms_.back().key == tm.key) {
            p.terms_.back().coeff += tm.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(tm));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

BigRational QTPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
    return 0;
}

int QTPoly::deg_q() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.qexp());
    return d;
}

int QTPoly::deg_t() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.texp());
    return d;
}

int QTPoly::min_q() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].qexp();
    for (const auto& tm : terms_) d = std::min(d, tm.qexp());
    return d;
}

int QTPoly::min_t() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].texp();
    for (const auto& tm : terms_) d = std::min(d, tm.texp());
    return d;
}

bool QTPoly::integral() const {
    for (const auto& tm : terms_)
        if (tm.coeff.get_den() != 1) return false;
    return true;
}

BigRational QTPoly::coeff(int qe, int te) const {
    if (qe < 0 || te < 0) return 0;
    std::uint64_t k = make_key(qe, te);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& a, std::uint64_t key) { return a.key > key; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return 0;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) tm.coeff = -tm.coeff;
    return r;
}

namespace {

template <bool Sub>
std::vector<QTPoly::Term> merge_terms(const std::vector<QTPoly::Term>& a, const std::vector<QTPoly::Term>& b) {
    std::vector<QTPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].key > a[i].key) {
            out.push_back({b[j].key, Sub ? BigRational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            BigRational c = Sub ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly& QTPoly::operator*=(const BigRational& c0) {
    BigRational c = c0;
    c.canonicalize();
    if (c == 0) {
        terms_.clear();
    } else if (c != 1) {
        for (auto& tm : terms_) tm.coeff *= c;
    }
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const QTPoly& small = a.size() <= b.size() ? a : b;
    const QTPoly& big = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
        QTPoly r = big;
        const auto& m = small.terms_[0];
        for (auto& tm : r.terms_) {
            tm.key += m.key;
            if (m.coeff != 1) tm.coeff *= m.coeff;
        }
        return r;
    }
    std::vector<QTPoly::Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.push_back({x.key + y.key, x.coeff * y.coeff});
    return QTPoly::from_terms(std::move(prod));
}

bool operator==(const QTPoly& a, const QTPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

QTPoly QTPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative power of QTPoly");
    QTPoly result(1L), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

QTPoly QTPoly::shift(int a, int b) const {
    QTPoly r = *this;
    std::uint64_t k = make_key(a, b);
    for (auto& tm : r.terms_) tm.key += k;
    return r;
}

QTPoly QTPoly::unshift(int a, int b) const {
    QTPoly r = *this;
    std::uint64_t k = make_key(a, b);
    for (auto& tm : r.terms_) {
        if (tm.qexp() < a || tm.texp() < b) throw DomainError("unshift: monomial does not divide");
        tm.key -= k;
    }
    return r;
}

QTPoly QTPoly::swap_qt() const {
    std::vector<Term> v;
    v.reserve(terms_.size());
    for (const auto& tm : terms_) v.push_back({make_key(tm.texp(), tm.qexp()), tm.coeff});
    return from_terms(std::move(v));
}

QTPoly QTPoly::subs_q(const BigRational& val) const {
    auto pw = power_table(val, std::max(deg_q(), 0));
    std::vector<Term> v;
    for (const auto& tm : terms_) v.push_back({make_key(0, tm.texp()), tm.coeff * pw[tm.qexp()]});
    return from_terms(std::move(v));
}

QTPoly QTPoly::subs_t(const BigRational& val) const {
    auto pw = power_table(val, std::max(deg_t(), 0));
    std::vector<Term> v;
    for (const auto& tm : terms_) v.push_back({make_key(tm.qexp(), 0), tm.coeff * pw[tm.texp()]});
    return from_terms(std::move(v));
}

BigRational QTPoly::eval(const BigRational& qv, const BigRational& tv) const {
    auto pq = power_table(qv, std::max(deg_q(), 0));
    auto pt = power_table(tv, std::max(deg_t(), 0));
    BigRational s = 0;
    for (const auto& tm : terms_) s += tm.coeff * pq[tm.qexp()] * pt[tm.texp()];
    return s;
}

BigRational QTPoly::content() const {
    if (terms_.empty()) return 0;
    BigInt g = 0, l = 1;
    for (const auto& tm : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.coeff.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), tm.coeff.get_den_mpz_t());
    }
    BigRational c(g, l);
    c.canonicalize();
    if (terms_.front().coeff < 0) c = -c;
    return c;
}

std::string QTPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : terms_) {
        BigRational c = tm.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string m = monomial_text(tm.qexp(), tm.texp());
        if (m.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << m;
        } else {
            os << c.get_str() << "*" << m;
        }
    }
    return os.str();
}

std::optional<QTPoly> try_divide(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return QTPoly();
    if (b.is_monomial()) {
        const auto& m = b.leading();
        if (a.min_q() < m.qexp() || a.min_t() < m.texp()) return std::nullopt;
        QTPoly r = a.unshift(m.qexp(), m.texp());
        r *= BigRational(1 / m.coeff);
        return r;
    }
    if (a.deg_q() < b.deg_q() || a.deg_t() < b.deg_t()) return std::nullopt;
    if (a.min_q() < b.min_q() || a.min_t() < b.min_t()) return std::nullopt;
    const auto& lb = b.leading();
    BigRational inv = 1 / lb.coeff;
    // Dense remainder over the exponent box of a, scanned in decreasing
    // term order; each step only touches the cells hit by a shifted b.
    const int wq = a.deg_q() + 1, wt = a.deg_t() + 1;
    std::vector<BigRational> rem(std::size_t(wq) * std::size_t(wt));
    auto at = [&](int qe, int te) -> BigRational& { return rem[std::size_t(qe) * std::size_t(wt) + std::size_t(te)]; };
    for (const auto& tm : a.terms()) at(tm.qexp(), tm.texp()) = tm.coeff;
    std::vector<QTPoly::Term> quot;
    const int top = a.leading().qexp() + a.leading().texp();
    for (int d = top; d >= 0; --d)
        for (int qe = std::min(d, wq - 1); qe >= 0 && d - qe < wt; --qe) {
            BigRational& c0 = at(qe, d - qe);
            if (c0 == 0) continue;
            int dq = qe - lb.qexp(), dt = d - qe - lb.texp();
            if (dq < 0 || dt < 0) return std::nullopt;
            BigRational c = c0 * inv;
            for (const auto& tb : b.terms()) {
                int q2 = tb.qexp() + dq, t2 = tb.texp() + dt;
                if (q2 >= wq || t2 >= wt) return std::nullopt;
                at(q2, t2) -= c * tb.coeff;
            }
            quot.push_back({QTPoly::make_key(dq, dt), std::move(c)});
        }
    return QTPoly::from_terms(std::move(quot));
}

QTPoly divide_exact(const QTPoly& a, const QTPoly& b) {
    auto r = try_divide(a, b);
    if (!r) throw DomainError("inexact polynomial division");
    return *r;
}

QTPoly qint(int n) {
    if (n < 0) throw DomainError("qint of negative integer");
    std::vector<QTPoly::Term> v;
    for (int i = 0; i < n; ++i) v.push_back({QTPoly::make_key(i, 0), 1});
    return QTPoly::from_terms(std::move(v));
}

QTPoly qfactorial(int n) {
    QTPoly r(1L);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

QTPoly qbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return {};
    // q-Pascal: [m,j] = [m-1,j-1] + q^j [m-1,j]
    std::vector<QTPoly> row(std::size_t(k) + 1);
    row[0] = QTPoly(1L);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + row[j].shift(j, 0);
    }
    return row[k];
}

QTPoly pochhammer(int a, int r) {
    QTPoly p(1L);
    for (int i = 0; i < r; ++i) p *= QTPoly(1L) - QTPoly::q(a + i);
    return p;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
    return r;
}

}  // namespace polyolab::algebra
