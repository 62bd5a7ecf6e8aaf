#include "polyolab/algebra/auxseries.hpp"
#include "polyolab/algebra/parser.hpp"

namespace polyolab::algebra {

namespace {

struct RatAtoms {
    QTRat negate(const QTRat& a) { return -a; }
    QTRat add(const QTRat& a, const QTRat& b) { return a + b; }
    QTRat sub(const QTRat& a, const QTRat& b) { return a - b; }
    QTRat mul(const QTRat& a, const QTRat& b) { return a * b; }
    QTRat div(const QTRat& a, const QTRat& b, std::size_t pos) {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    }
    QTRat power(const QTRat& a, int e, std::size_t pos) {
        if (e < 0 && a.is_zero()) throw ParseError("negative power of zero", pos);
        return a.pow(e);
    }
    QTRat number(const BigInt& v) { return QTRat(v); }
    QTRat identifier(const std::string& name, bool indexed, const std::vector<int>&, std::size_t pos) {
        if (!indexed && name == "q") return QTRat(QTPoly::q());
        if (!indexed && name == "t") return QTRat(QTPoly::t());
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
};

using Aux = AuxSeries<QTRat>;

struct AuxAtoms {
    int lo, hi;

    Aux scalar(const QTRat& c) const { return Aux::monomial(c, 0, lo, hi); }
    Aux negate(const Aux& a) { return a.scaled(QTRat(-1L)); }
    Aux add(const Aux& a, const Aux& b) { return a + b; }
    Aux sub(const Aux& a, const Aux& b) { return a - b; }
    Aux mul(const Aux& a, const Aux& b) { return a.mul(b, lo, hi); }
    // Extends the window so that monomials outside [lo,hi] survive until
    // they are combined.
    Aux div(const Aux& a, const Aux& b, std::size_t pos) {
        if (b.coeffs().size() != 1) throw ParseError("division by a non-monomial u-series", pos);
        auto [e, c] = *b.coeffs().begin();
        if (c.is_zero()) throw ParseError("division by zero", pos);
        Aux r(lo, hi);
        QTRat inv = c.inverse();
        for (const auto& [k, v] : a.coeffs()) r.add_term(k - e, v * inv);
        return r;
    }
    Aux power(const Aux& a, int e, std::size_t pos) {
        if (a.coeffs().size() == 1) {
            auto [k, c] = *a.coeffs().begin();
            if (e < 0 && c.is_zero()) throw ParseError("negative power of zero", pos);
            return Aux::monomial(c.pow(e), k * e, lo, hi);
        }
        if (a.is_zero()) return a;
        if (e < 0) throw ParseError("negative power of a non-monomial u-series", pos);
        Aux r = scalar(QTRat(1L));
        for (int i = 0; i < e; ++i) r = r.mul(a, lo, hi);
        return r;
    }
    Aux number(const BigInt& v) { return scalar(QTRat(v)); }
    Aux identifier(const std::string& name, bool indexed, const std::vector<int>&, std::size_t pos) {
        if (!indexed && name == "q") return scalar(QTRat(QTPoly::q()));
        if (!indexed && name == "t") return scalar(QTRat(QTPoly::t()));
        if (!indexed && name == "u") {
            Aux r(lo, hi);
            r.add_term(1, QTRat(1L));
            return r;
        }
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
};

bool needs_parens(const QTRat& c) { return !c.is_polynomial() || c.num().size() > 1; }

}  // namespace

QTRat QTRat::parse(std::string_view text) { return ExprParser<QTRat, RatAtoms>(text, RatAtoms{}).parse(); }

QTPoly parse_poly(std::string_view text) {
    QTRat r = QTRat::parse(text);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
    return r.num();
}

Aux parse_aux(std::string_view text, int lo, int hi) {
    // Parse on a padded window so intermediate u-powers are not lost, then truncate.
    int pad = 64;
    Aux wide = ExprParser<Aux, AuxAtoms>(text, AuxAtoms{lo - pad, hi + pad}).parse();
    Aux r(lo, hi);
    for (const auto& [e, c] : wide.coeffs()) r.add_term(e, c);
    return r;
}

std::string to_string(const Aux& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : s.coeffs()) {
        if (!out.empty()) out += " + ";
        std::string mono = e == 0 ? "" : (e == 1 ? "u" : "u^" + std::to_string(e));
        if (mono.empty()) {
            out += needs_parens(c) ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += "(" + c.to_string() + ")*" + mono;
        }
    }
    return out;
}

}  // namespace polyolab::algebra
