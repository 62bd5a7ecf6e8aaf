#include "polyolab/sl2/sl2.hpp"

#include "polyolab/error.hpp"
#include "polyolab/polyomino/path.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace polyolab::sl2 {

using algebra::BigRational;
using symfunc::Partition;
using symfunc::SymF;

namespace {

std::atomic<int> g_cap_d{3};
std::atomic<int> g_cap_n{6};

}  // namespace

MinorMonomial::MinorMonomial(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [i, j] : pairs_)
        if (i < 1 || j <= i)
            throw DomainError("minor index pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") needs 1 <= i < j");
    std::sort(pairs_.begin(), pairs_.end());
}

std::string MinorMonomial::to_string() const {
    if (pairs_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t a = 0; a < pairs_.size();) {
        std::size_t b = a;
        while (b < pairs_.size() && pairs_[b] == pairs_[a]) ++b;
        if (a) os << '*';
        os << "X[" << pairs_[a].first << ',' << pairs_[a].second << ']';
        if (b - a > 1) os << '^' << (b - a);
        a = b;
    }
    return os.str();
}

MinorMonomial MinorMonomial::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto number = [&] {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number", pos);
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip();
    if (text.substr(pos) == "1") return MinorMonomial();
    std::vector<std::pair<int, int>> pairs;
    while (true) {
        expect('X');
        expect('[');
        int i = number();
        expect(',');
        int j = number();
        expect(']');
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = number();
        }
        if (i < 1 || j <= i) throw ParseError("minor indices need 1 <= i < j", pos);
        pairs.insert(pairs.end(), std::size_t(e), {i, j});
        skip();
        if (pos == text.size()) break;
        expect('*');
    }
    return MinorMonomial(std::move(pairs));
}

BivarPoly BivarPoly::one(int n) {
    BivarPoly r(n);
    r.terms_[Exponents(std::size_t(2 * n), 0)] = 1;
    return r;
}

BivarPoly BivarPoly::minor(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw DomainError("minor index out of range");
    BivarPoly r(n);
    Exponents e(std::size_t(2 * n), 0);
    e[std::size_t(i - 1)] = 1;
    e[std::size_t(n + j - 1)] = 1;
    r.add(e, 1);
    Exponents f(std::size_t(2 * n), 0);
    f[std::size_t(j - 1)] = 1;
    f[std::size_t(n + i - 1)] = 1;
    r.add(f, -1);
    return r;
}

void BivarPoly::add(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.n_ != b.n_) throw DomainError("BivarPoly: variable count mismatch");
    BivarPoly r(a.n_);
    BivarPoly::Exponents e(std::size_t(2 * a.n_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            r.add(e, ca * cb);
        }
    return r;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool any = false;
        if (a != 1) {
            os << a.get_str();
            any = true;
        }
        for (int v = 0; v < 2 * n_; ++v) {
            int p = e[std::size_t(v)];
            if (!p) continue;
            if (any) os << '*';
            os << (v < n_ ? 'x' : 'y') << (v % n_ + 1);
            if (p > 1) os << '^' << p;
            any = true;
        }
        if (!any) os << '1';
    }
    return os.str();
}

MinorMonomial minor_monomial(const polyomino::Polyomino& pi) {
    auto a = pi.lower().heights();
    auto b = pi.upper().heights();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < a.size(); ++i) pairs.emplace_back(a[i] + 1, b[i - 1] + 1);
    return MinorMonomial(std::move(pairs));
}

std::vector<MinorMonomial> minor_basis(int d, int n) {
    if (d < 0 || n < 2) throw DomainError("minor_basis needs d >= 0, n >= 2");
    std::vector<MinorMonomial> out;
    polyomino::for_each_polyomino(d + 1, n - 1, [&](const polyomino::Polyomino& pi) {
        out.push_back(minor_monomial(pi));
    });
    return out;
}

bool is_standard(const MinorMonomial& m) {
    // Pairs are sorted lexicographically, so a chain means the second
    // coordinates never decrease.
    const auto& p = m.pairs();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i].second < p[i - 1].second) return false;
    return true;
}

std::vector<MinorMonomial> standard_monomials(int d, int n) {
    if (d < 0 || n < 2) throw DomainError("standard_monomials needs d >= 0, n >= 2");
    std::vector<MinorMonomial> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, int i0, int j0) -> void {
        if (int(cur.size()) == d) {
            out.emplace_back(cur);
            return;
        }
        for (int i = i0; i <= n; ++i)
            for (int j = std::max(j0, i + 1); j <= n; ++j) {
                cur.emplace_back(i, j);
                self(self, i, j);
                cur.pop_back();
            }
    };
    rec(rec, 1, 2);
    std::sort(out.begin(), out.end());
    return out;
}

BivarPoly expand(const MinorMonomial& m, int n) {
    if (n < 1) throw DomainError("expand needs n >= 1");
    BivarPoly r = BivarPoly::one(n);
    for (const auto& [i, j] : m.pairs()) {
        if (j > n)
            throw DomainError("minor index " + std::to_string(j) + " out of range for n = " + std::to_string(n));
        r = r * BivarPoly::minor(n, i, j);
    }
    return r;
}

BivarPoly plucker(int n, int i, int j, int k, int l) {
    auto Y = [n](int a, int b) { return BivarPoly::minor(n, a, b); };
    return Y(i, l) * Y(j, k) - Y(i, k) * Y(j, l) + Y(i, j) * Y(k, l);
}

int rank_cap_n() { return g_cap_n.load(); }
int rank_cap_d() { return g_cap_d.load(); }

void set_rank_caps(int max_d, int max_n) {
    g_cap_d = max_d;
    g_cap_n = max_n;
}

long integer_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const BigInt piv = m[r][c];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const BigInt f = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = piv * m[i][j] - f * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return long(r);
}

RankReport rank_check(int d, int n, Exec exec) {
    if (n > rank_cap_n()) throw CapExceeded("rank_check n", n, rank_cap_n());
    if (d > rank_cap_d()) throw CapExceeded("rank_check d", d, rank_cap_d());
    RankReport rep;
    rep.d = d;
    rep.n = n;
    auto basis = minor_basis(d, n);
    rep.expected = long(basis.size());

    // Expansions of monomials with different column contents share no
    // terms, so the matrix splits into independent blocks.
    std::map<std::vector<int>, std::vector<std::size_t>> blocks;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        std::vector<int> content(std::size_t(n), 0);
        for (const auto& [i, j] : basis[b].pairs()) {
            ++content[std::size_t(i - 1)];
            ++content[std::size_t(j - 1)];
        }
        blocks[content].push_back(b);
    }
    std::vector<const std::vector<std::size_t>*> work;
    for (const auto& kv : blocks) work.push_back(&kv.second);

    auto block_rank = [&](const std::vector<std::size_t>& rows) {
        std::vector<BivarPoly> polys;
        std::map<BivarPoly::Exponents, std::size_t> colidx;
        for (std::size_t b : rows) {
            polys.push_back(expand(basis[b], n));
            for (const auto& kv : polys.back().terms()) colidx.try_emplace(kv.first, 0);
        }
        std::size_t c = 0;
        for (auto& kv : colidx) kv.second = c++;
        std::vector<std::vector<BigInt>> mat(polys.size(), std::vector<BigInt>(colidx.size(), 0));
        for (std::size_t r = 0; r < polys.size(); ++r)
            for (const auto& [e, v] : polys[r].terms()) mat[r][colidx[e]] = v;
        return integer_rank(std::move(mat));
    };

    long total = 0;
    const long nw = long(work.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
        for (long w = 0; w < nw; ++w) total += block_rank(*work[std::size_t(w)]);
    } else {
        for (long w = 0; w < nw; ++w) total += block_rank(*work[std::size_t(w)]);
    }
    rep.rank = total;
    return rep;
}

BigInt slr_count(int k, int n, int r) {
    if (k < 0 || n < 0 || r < 0) throw DomainError("slr_count needs nonnegative arguments");
    BigRational v = symfunc::rect_principal(k, r, n + 1).eval(1, 0);
    return v.get_num();
}

HilbertReport hilbert(int n, int D) {
    if (n < 2 || D < 0) throw DomainError("hilbert needs n >= 2, D >= 0");
    HilbertReport rep;
    rep.n = n;
    rep.D = D;
    for (int d = 0; d <= D; ++d) rep.series_a.push_back(slr_count(d, n - 1, 2));

    std::vector<BigRational> num(std::size_t(n - 1));
    for (int k = 0; k <= n - 2; ++k)
        num[std::size_t(k)] = BigRational(algebra::binomial(n - 2, k) * algebra::binomial(n - 1, k), BigInt(k + 1));
    const int period = 2 * n - 1;
    for (int d = 0; d <= D; ++d) {
        BigRational c = 0;
        for (int s = d; s >= 0; s -= period)
            if (s < int(num.size())) c += num[std::size_t(s)];
        c.canonicalize();
        rep.series_b.push_back(c);
        if (BigRational(rep.series_a[std::size_t(d)]) != c) rep.mismatches.push_back(d);
    }
    return rep;
}

SymF littlewood_frob(int d, int n) {
    if (d < 0 || n < 1) throw DomainError("littlewood_frob needs d >= 0, n >= 1");
    if (d == 0) return SymF::h({n});
    const SymF s = SymF::s(Partition{d, d});
    const auto& sdd = s.pcoeffs();
    SymF out;
    for (const auto& mu : symfunc::partitions(n)) {
        auto phi = [&](int k) {
            long s = 0;
            for (int part : mu.parts())
                if (k % part == 0) s += part;
            return s;
        };
        BigRational val = 0;
        for (const auto& [rho, c] : sdd) {
            BigRational term = c.eval(1, 1);
            for (int part : rho.parts()) term *= phi(part);
            val += term;
        }
        val /= BigRational(symfunc::zmu(mu));
        if (val != 0) out += SymF::p(mu).scaled(algebra::QTRat(val));
    }
    return out;
}

}  // namespace polyolab::sl2
