#pragma once

#include "polyolab/algebra/qtrat.hpp"
#include "polyolab/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>

namespace polyolab::algebra {

// Truncated Laurent series in an auxiliary variable u with exponents in
// [lo, hi]. C is any coefficient ring with is_zero(), +, -, *.
template <class C>
class AuxSeries {
public:
    AuxSeries(int lo, int hi) : lo_(lo), hi_(hi) {
        if (lo > hi) throw DomainError("empty AuxSeries window");
    }

    static AuxSeries monomial(const C& c, int e, int lo, int hi) {
        AuxSeries s(lo, hi);
        s.add_term(e, c);
        return s;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::map<int, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? C() : it->second;
    }

    void add_term(int e, const C& c) {
        if (e < lo_ || e > hi_ || c.is_zero()) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    AuxSeries& operator+=(const AuxSeries& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    AuxSeries& operator-=(const AuxSeries& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, C() - c);
        return *this;
    }
    friend AuxSeries operator+(AuxSeries a, const AuxSeries& b) { return a += b; }
    friend AuxSeries operator-(AuxSeries a, const AuxSeries& b) { return a -= b; }

    template <class S>
    AuxSeries scaled(const S& s) const {
        AuxSeries r(lo_, hi_);
        for (const auto& [e, c] : coeffs_) r.add_term(e, c * s);
        return r;
    }

    // Product truncated to [lo, hi].
    AuxSeries mul(const AuxSeries& o, int lo, int hi) const {
        AuxSeries r(lo, hi);
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) {
                int e = e1 + e2;
                if (e < lo || e > hi) continue;
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    // Product on the largest window where every coefficient is exact.
    friend AuxSeries operator*(const AuxSeries& a, const AuxSeries& b) {
        int lo = a.lo_ + b.lo_;
        int hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        return a.mul(b, lo, std::max(lo, hi));
    }

    friend bool operator==(const AuxSeries& a, const AuxSeries& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (const auto& [e, c] : a.coeffs_) {
            auto it = b.coeffs_.find(e);
            if (it == b.coeffs_.end() || !(it->second == c)) return false;
        }
        return true;
    }

private:
    int lo_, hi_;
    std::map<int, C> coeffs_;
};

// Geometric series 1/(1 - c u^step) on [0, hi].
template <class C>
AuxSeries<C> geometric(const C& c, int step, int hi) {
    AuxSeries<C> s(0, hi);
    C p(1L);
    for (int e = 0; e <= hi; e += step) {
        s.add_term(e, p);
        p = p * c;
    }
    return s;
}

std::string to_string(const AuxSeries<QTRat>& s);
// Text in q, t, u; u may carry negative exponents. Division only by u-free factors.
AuxSeries<QTRat> parse_aux(std::string_view text, int lo, int hi);
QTPoly parse_poly(std::string_view text);

}  // namespace polyolab::algebra
