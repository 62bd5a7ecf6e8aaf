#include "polyolab/symfunc/symf.hpp"

#include "polyolab/algebra/parser.hpp"
#include "polyolab/error.hpp"

#include <vector>

namespace polyolab::symfunc {

using algebra::lcm;

char basis_letter(Basis b) {
    switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
    case Basis::f: return 'f';
    }
    return '?';
}

Basis parse_basis(std::string_view name) {
    if (name == "m") return Basis::m;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    if (name == "p") return Basis::p;
    if (name == "s") return Basis::s;
    if (name == "f" || name == "forgotten") return Basis::f;
    throw DomainError("unknown basis '" + std::string(name) + "'");
}

namespace {

// Matrix entry W[row][col] used to move between p-coordinates and a basis.
BigRational entry(const DegreeTables& T, Basis b, bool to_p, std::size_t l, std::size_t r) {
    // to_p: coefficient of p_r in b_l. Otherwise: coefficient of b_l given p_r = 1.
    switch (b) {
    case Basis::p: return l == r ? BigRational(1) : BigRational(0);
    case Basis::s:
        return to_p ? BigRational(T.chi[l][r]) / BigRational(T.z[r]) : BigRational(T.chi[l][r]);
    case Basis::h: return to_p ? T.hp[l][r] : T.mp[l][r] * BigRational(T.z[r]);
    case Basis::e:
        return to_p ? BigRational(T.hp[l][r] * T.eps[r]) : T.mp[l][r] * BigRational(T.z[r] * T.eps[r]);
    case Basis::m: return to_p ? T.mp[l][r] : T.hp[l][r] * BigRational(T.z[r]);
    case Basis::f:
        return to_p ? BigRational(T.mp[l][r] * T.eps[r]) : T.hp[l][r] * BigRational(T.z[r] * T.eps[r]);
    }
    return 0;
}

// Common-denominator linear combination: out[o] = sum_i w(o, i) * in[i].
// Only polynomial arithmetic is done before the final reduction.
template <class W>
std::vector<QTRat> combine(const std::vector<std::pair<std::size_t, QTRat>>& in, std::size_t nout, W w) {
    QTPoly L(1L);
    for (const auto& [i, c] : in) L = lcm(L, c.den());
    std::vector<QTPoly> nums;
    nums.reserve(in.size());
    for (const auto& [i, c] : in)
        nums.push_back(c.den().is_one() ? c.num() * L : c.num() * algebra::divide_exact(L, c.den()));
    std::vector<QTRat> out(nout);
    for (std::size_t o = 0; o < nout; ++o) {
        QTPoly acc;
        for (std::size_t k = 0; k < in.size(); ++k) {
            BigRational c = w(o, in[k].first);
            if (c != 0) acc += nums[k] * c;
        }
        if (!acc.is_zero()) out[o] = QTRat(acc, L);
    }
    return out;
}

std::map<int, std::vector<std::pair<Partition, QTRat>>> by_degree(const Expansion& e) {
    std::map<int, std::vector<std::pair<Partition, QTRat>>> out;
    for (const auto& [mu, c] : e) out[mu.size()].emplace_back(mu, c);
    return out;
}

Expansion convert(const Expansion& in, Basis b, bool to_p) {
    if (b == Basis::p) return in;
    Expansion out;
    for (const auto& [n, terms] : by_degree(in)) {
        const DegreeTables& T = tables(n);
        std::vector<std::pair<std::size_t, QTRat>> v;
        for (const auto& [mu, c] : terms) v.emplace_back(std::size_t(T.idx(mu)), c);
        auto res = combine(v, T.parts.size(), [&](std::size_t o, std::size_t i) {
            return to_p ? entry(T, b, true, i, o) : entry(T, b, false, o, i);
        });
        for (std::size_t o = 0; o < res.size(); ++o)
            if (!res[o].is_zero()) out.emplace(T.parts[o], std::move(res[o]));
    }
    return out;
}

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(v));
}

std::string term_string(const QTRat& c, const std::string& mono) {
    bool simple = c.is_polynomial() && c.num().is_monomial();
    if (mono.empty()) return simple ? c.to_string() : "(" + c.to_string() + ")";
    if (c.is_one()) return mono;
    if (c == QTRat(-1L)) return "-" + mono;
    if (simple) return c.to_string() + "*" + mono;
    return "(" + c.to_string() + ")*" + mono;
}

void append_term(std::string& out, const std::string& term) {
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
}

struct SymAtoms {
    SymF negate(const SymF& a) { return -a; }
    SymF add(const SymF& a, const SymF& b) { return a + b; }
    SymF sub(const SymF& a, const SymF& b) { return a - b; }
    SymF mul(const SymF& a, const SymF& b) { return a * b; }
    SymF div(const SymF& a, const SymF& b, std::size_t pos) {
        if (!b.is_constant() || b.is_zero()) throw ParseError("division by a non-scalar or zero", pos);
        return a.scaled(b.pcoeffs().begin()->second.inverse());
    }
    SymF power(const SymF& a, int e, std::size_t pos) {
        if (e < 0) {
            if (!a.is_constant() || a.is_zero()) throw ParseError("negative power of a non-scalar", pos);
            return SymF(a.pcoeffs().begin()->second.pow(e));
        }
        return a.pow(e);
    }
    SymF number(const BigInt& v) { return SymF(QTRat(v)); }
    SymF identifier(const std::string& name, bool indexed, const std::vector<int>& idx, std::size_t pos) {
        if (!indexed) {
            if (name == "q") return SymF(QTRat(QTPoly::q()));
            if (name == "t") return SymF(QTRat(QTPoly::t()));
            throw ParseError("unknown symbol '" + name + "'", pos);
        }
        if (name.size() != 1 || std::string("mehpsf").find(name[0]) == std::string::npos)
            throw ParseError("unknown basis '" + name + "'", pos);
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (idx[i] <= 0 || (i && idx[i] > idx[i - 1]))
                throw ParseError("index is not a partition", pos);
        return SymF::basis(parse_basis(name), Partition(idx));
    }
};

}  // namespace

SymF::SymF(const QTRat& c) {
    if (!c.is_zero()) p_.emplace(Partition(), c);
}

void SymF::add_p(const Partition& mu, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = p_.find(mu);
    if (it == p_.end()) {
        p_.emplace(mu, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p_.erase(it);
}

SymF SymF::basis(Basis b, const Partition& mu) {
    SymF r;
    if (b == Basis::p) {
        r.p_.emplace(mu, QTRat(1L));
        return r;
    }
    const DegreeTables& T = tables(mu.size());
    std::size_t l = std::size_t(T.idx(mu));
    for (std::size_t c = 0; c < T.parts.size(); ++c) {
        BigRational v = entry(T, b, true, l, c);
        if (v != 0) r.p_.emplace(T.parts[c], QTRat(v));
    }
    return r;
}

SymF SymF::from_expansion(Basis b, const Expansion& c) {
    SymF r;
    for (auto& [mu, v] : convert(c, b, true)) r.add_p(mu, v);
    return r;
}

int SymF::degree() const {
    int d = -1;
    for (const auto& [mu, c] : p_) d = std::max(d, mu.size());
    return d;
}

bool SymF::homogeneous() const {
    if (p_.empty()) return true;
    int d = p_.begin()->first.size();
    for (const auto& [mu, c] : p_)
        if (mu.size() != d) return false;
    return true;
}

SymF SymF::component(int d) const {
    SymF r;
    for (const auto& [mu, c] : p_)
        if (mu.size() == d) r.p_.emplace(mu, c);
    return r;
}

Expansion SymF::to_basis(Basis b) const { return convert(p_, b, false); }

QTRat SymF::coeff(Basis b, const Partition& mu) const {
    if (b == Basis::p) {
        auto it = p_.find(mu);
        return it == p_.end() ? QTRat() : it->second;
    }
    const DegreeTables& T = tables(mu.size());
    std::size_t l = std::size_t(T.idx(mu));
    std::vector<std::pair<std::size_t, QTRat>> v;
    for (const auto& [rho, c] : p_)
        if (rho.size() == mu.size()) v.emplace_back(std::size_t(T.idx(rho)), c);
    if (v.empty()) return QTRat();
    return combine(v, 1, [&](std::size_t, std::size_t i) { return entry(T, b, false, l, i); })[0];
}

SymF SymF::operator-() const {
    SymF r = *this;
    for (auto& [mu, c] : r.p_) c = -c;
    return r;
}

SymF& SymF::operator+=(const SymF& o) {
    for (const auto& [mu, c] : o.p_) add_p(mu, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) {
    for (const auto& [mu, c] : o.p_) add_p(mu, -c);
    return *this;
}

SymF operator*(const SymF& a, const SymF& b) {
    SymF r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_constant()) return b.scaled(a.p_.begin()->second);
    if (b.is_constant()) return a.scaled(b.p_.begin()->second);
    // Products of numerators over the product of the two common denominators.
    auto clear = [](const Expansion& e, QTPoly& L) {
        L = QTPoly(1L);
        for (const auto& [mu, c] : e) L = lcm(L, c.den());
        std::vector<std::pair<Partition, QTPoly>> out;
        for (const auto& [mu, c] : e)
            out.emplace_back(mu, c.den().is_one() ? c.num() * L : c.num() * algebra::divide_exact(L, c.den()));
        return out;
    };
    QTPoly La, Lb;
    auto na = clear(a.p_, La), nb = clear(b.p_, Lb);
    std::map<Partition, QTPoly> acc;
    for (const auto& [ma, pa] : na)
        for (const auto& [mb, pb] : nb) acc[merge(ma, mb)] += pa * pb;
    QTPoly L = La * Lb;
    for (auto& [mu, v] : acc)
        if (!v.is_zero()) r.p_.emplace(mu, QTRat(v, L));
    return r;
}

SymF SymF::scaled(const QTRat& c) const {
    SymF r;
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : p_) r.p_.emplace(mu, v * c);
    return r;
}

SymF SymF::pow(int e) const {
    if (e < 0) throw DomainError("negative power of a symmetric function");
    SymF r(1L), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

SymF SymF::map_coeffs(const std::function<QTRat(const QTRat&)>& fn) const {
    SymF r;
    for (const auto& [mu, c] : p_) r.add_p(mu, fn(c));
    return r;
}

SymF SymF::swap_qt() const {
    return map_coeffs([](const QTRat& c) { return c.swap_qt(); });
}

SymF SymF::specialize_t(algebra::TSpec mode) const {
    return map_coeffs([mode](const QTRat& c) { return c.specialize_t(mode); });
}

std::string SymF::to_string(Basis b) const {
    if (p_.empty()) return "0";
    std::string out;
    std::string letter(1, basis_letter(b));
    for (const auto& [mu, c] : to_basis(b))
        append_term(out, term_string(c, mu.empty() ? "" : letter + mu.to_string()));
    return out;
}

SymF SymF::parse(std::string_view text) { return algebra::ExprParser<SymF, SymAtoms>(text, SymAtoms{}).parse(); }

QTRat hall(const SymF& f, const SymF& g) {
    QTRat s;
    const auto& a = f.pcoeffs();
    const auto& b = g.pcoeffs();
    for (const auto& [mu, c] : a) {
        auto it = b.find(mu);
        if (it != b.end()) s += (c * it->second).scaled(BigRational(zmu(mu)));
    }
    return s;
}

SymF omega(const SymF& f) {
    return pleth_scale(f, [](int r) { return QTRat(r % 2 ? 1L : -1L); });
}

SymF pleth_scale(const SymF& f, const std::function<QTRat(int)>& m) {
    std::map<int, QTRat> cache;
    auto mr = [&](int r) -> const QTRat& {
        auto it = cache.find(r);
        if (it == cache.end()) it = cache.emplace(r, m(r)).first;
        return it->second;
    };
    Expansion out;
    for (const auto& [mu, c] : f.pcoeffs()) {
        QTRat v = c;
        for (int part : mu.parts()) {
            v *= mr(part);
            if (v.is_zero()) break;
        }
        if (!v.is_zero()) out.emplace(mu, std::move(v));
    }
    return SymF::from_expansion(Basis::p, out);
}

QTRat principal(const SymF& f, int k) {
    std::map<int, QTPoly> pr;
    auto p_r = [&](int r) -> const QTPoly& {
        auto it = pr.find(r);
        if (it == pr.end()) {
            std::vector<QTPoly::Term> terms;
            for (int j = 0; j < k; ++j) terms.push_back({QTPoly::make_key(r * j, 0), BigRational(1)});
            it = pr.emplace(r, QTPoly::from_terms(std::move(terms))).first;
        }
        return it->second;
    };
    QTRat s;
    for (const auto& [mu, c] : f.pcoeffs()) {
        QTPoly v(1L);
        for (int part : mu.parts()) v *= p_r(part);
        if (!v.is_zero()) s += c * QTRat(v);
    }
    return s;
}

QTPoly rect_principal(int k, int r, int m) {
    if (k < 0 || r < 0 || m < 1) throw DomainError("rect_principal: bad arguments");
    if (k == 0 || r == 0) return QTPoly(1L);
    if (m < r) return QTPoly();
    QTPoly num(1L), den(1L);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) {
            int content = j - i;
            int hook = (k - j - 1) + (r - i - 1) + 1;
            num *= QTPoly(1L) - QTPoly::q(m + content);
            den *= QTPoly(1L) - QTPoly::q(hook);
        }
    if (num.is_zero()) return num;
    int nlam = k * r * (r - 1) / 2;
    return algebra::divide_exact(num, den).shift(nlam, 0);
}

std::function<QTRat(int)> alphabet_constant(const QTRat& c) {
    return [c](int) { return c; };
}

std::function<QTRat(int)> alphabet_one_minus_q() {
    return [](int r) { return QTRat(QTPoly(1L) - QTPoly::q(r)); };
}

std::function<QTRat(int)> alphabet_one_minus_t() {
    return [](int r) { return QTRat(QTPoly(1L) - QTPoly::t(r)); };
}

std::function<QTRat(int)> alphabet_inv_one_minus_q() {
    return [](int r) { return QTRat(QTPoly(1L), QTPoly(1L) - QTPoly::q(r)); };
}

std::function<QTRat(int)> alphabet_qint(int a) {
    return [a](int r) {
        std::vector<QTPoly::Term> terms;
        for (int j = 0; j < a; ++j) terms.push_back({QTPoly::make_key(r * j, 0), BigRational(1)});
        return QTRat(QTPoly::from_terms(std::move(terms)));
    };
}

// ---- BiSymF

void BiSymF::add_p(const Key& k, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = p_.find(k);
    if (it == p_.end()) {
        p_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p_.erase(it);
}

BiSymF BiSymF::tensor(const SymF& y, const SymF& z) {
    BiSymF r;
    for (const auto& [a, ca] : y.pcoeffs())
        for (const auto& [b, cb] : z.pcoeffs()) r.add_p({a, b}, ca * cb);
    return r;
}

BiSymF& BiSymF::operator+=(const BiSymF& o) {
    for (const auto& [k, c] : o.p_) add_p(k, c);
    return *this;
}

BiSymF& BiSymF::operator-=(const BiSymF& o) {
    for (const auto& [k, c] : o.p_) add_p(k, -c);
    return *this;
}

BiSymF BiSymF::scaled(const QTRat& c) const {
    BiSymF r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : p_) r.p_.emplace(k, v * c);
    return r;
}

BiSymF BiSymF::swap() const {
    BiSymF r;
    for (const auto& [k, v] : p_) r.p_.emplace(Key{k.second, k.first}, v);
    return r;
}

SymF BiSymF::pair_y(const SymF& g) const {
    Expansion out;
    for (const auto& [k, v] : p_) {
        auto it = g.pcoeffs().find(k.first);
        if (it == g.pcoeffs().end()) continue;
        QTRat c = (v * it->second).scaled(BigRational(zmu(k.first)));
        auto [pos, inserted] = out.emplace(k.second, c);
        if (!inserted) pos->second += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return SymF::from_expansion(Basis::p, out);
}

SymF BiSymF::coeff_y(Basis b, const Partition& lambda) const {
    // The coefficient of b_lambda(y) is the pairing with the dual basis element.
    SymF dual;
    switch (b) {
    case Basis::s: dual = SymF::s(lambda); break;
    case Basis::h: dual = SymF::m(lambda); break;
    case Basis::m: dual = SymF::h(lambda); break;
    case Basis::e: dual = SymF::f(lambda); break;
    case Basis::f: dual = SymF::e(lambda); break;
    case Basis::p: dual = SymF::p(lambda).scaled(QTRat(BigRational(1) / BigRational(zmu(lambda)))); break;
    }
    return pair_y(dual);
}

BiSymF::Map BiSymF::to_basis(Basis by, Basis bz) const {
    // Convert the y side for each fixed z partition, then the z side.
    std::map<Partition, Expansion> byz;
    for (const auto& [k, v] : p_) byz[k.second].emplace(k.first, v);
    std::map<Partition, Expansion> byy;
    for (const auto& [rho, ey] : byz)
        for (auto& [lam, c] : convert(ey, by, false)) byy[lam].emplace(rho, c);
    Map out;
    for (const auto& [lam, ez] : byy)
        for (auto& [mu, c] : convert(ez, bz, false)) out.emplace(Key{lam, mu}, c);
    return out;
}

BiSymF BiSymF::map_coeffs(const std::function<QTRat(const QTRat&)>& fn) const {
    BiSymF r;
    for (const auto& [k, v] : p_) r.add_p(k, fn(v));
    return r;
}

std::string BiSymF::to_string(Basis by, Basis bz) const {
    if (p_.empty()) return "0";
    std::string out;
    std::string ly(1, basis_letter(by)), lz(1, basis_letter(bz));
    for (const auto& [k, c] : to_basis(by, bz)) {
        std::string mono;
        if (!k.first.empty()) mono = ly + "Y" + k.first.to_string();
        if (!k.second.empty()) mono += (mono.empty() ? "" : "*") + lz + "Z" + k.second.to_string();
        append_term(out, term_string(c, mono));
    }
    return out;
}

}  // namespace polyolab::symfunc
