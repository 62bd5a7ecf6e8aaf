#include "polyolab/algebra/qtpoly.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <stdexcept>

// Modular gcd for Z[q,t]: images modulo word-size primes, evaluation and
// interpolation in the minor variable, Chinese remaindering, and a final
// trial division over Q as the certificate.

namespace polyolab::algebra {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using UZ = std::vector<BigInt>;  // dense, index = degree
using BZ = std::vector<UZ>;      // index = main-variable degree
using UP = std::vector<u64>;     // dense mod p

// ---------- primes ----------

u64 prime_at(std::size_t i) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() <= i) {
        BigInt start = primes.empty() ? BigInt(u64(1) << 62) : BigInt(std::to_string(primes.back()));
        BigInt next;
        mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
        primes.push_back(std::stoull(next.get_str()));
    }
    return primes[i];
}

// ---------- arithmetic mod p ----------

inline u64 mulm(u64 a, u64 b, u64 p) { return u64((u128(a) * b) % p); }
inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

void trim(UP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(UZ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(BZ& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}
int deg(const UP& a) { return int(a.size()) - 1; }
int deg(const UZ& a) { return int(a.size()) - 1; }
int deg(const BZ& a) { return int(a.size()) - 1; }

u64 modp(const BigInt& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), (unsigned long)p); }

UP reduce(const UZ& a, u64 p) {
    UP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp(a[i], p);
    trim(r);
    return r;
}

u64 eval(const UP& a, u64 x, u64 p) {
    u64 s = 0;
    for (std::size_t i = a.size(); i-- > 0;) s = addm(mulm(s, x, p), a[i], p);
    return s;
}

void make_monic(UP& a, u64 p) {
    if (a.empty()) return;
    u64 inv = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, inv, p);
}

// a mod b, b nonzero
UP rem(UP a, const UP& b, u64 p) {
    int db = deg(b);
    u64 inv = invm(b.back(), p);
    while (!a.empty() && deg(a) >= db) {
        u64 f = mulm(a.back(), inv, p);
        int shift = deg(a) - db;
        for (int j = 0; j <= db; ++j) a[j + shift] = subm(a[j + shift], mulm(f, b[j], p), p);
        trim(a);
    }
    return a;
}

UP gcd_p(UP a, UP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UP r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a, p);
    return a;
}

// Newton interpolation: values v[i] at distinct nodes x[i]; returns coefficients.
UP interpolate(const std::vector<u64>& x, std::vector<u64> v, u64 p) {
    std::size_t n = x.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            v[i] = mulm(subm(v[i], v[i - 1], p), invm(subm(x[i], x[i - j], p), p), p);
    UP poly(1, v[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly * (y - x[i]) + v[i]
        UP next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = addm(next[k + 1], poly[k], p);
            next[k] = subm(next[k], mulm(poly[k], x[i], p), p);
        }
        next[0] = addm(next[0], v[i], p);
        poly = std::move(next);
    }
    trim(poly);
    return poly;
}

// ---------- integer polynomial helpers ----------

BigInt content(const UZ& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UZ primitive(UZ a) {
    trim(a);
    if (a.empty()) return a;
    BigInt g = content(a);
    if (a.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

// Exact division over Z; false if b does not divide a.
bool divide_z(UZ a, const UZ& b, UZ* quot) {
    trim(a);
    int db = deg(b);
    UZ qt(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, BigInt(0));
    BigInt c, r;
    while (!a.empty() && deg(a) >= db) {
        int d = deg(a) - db;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) return false;
        qt[std::size_t(d)] = c;
        for (int j = 0; j <= db; ++j) mpz_submul(a[j + d].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
    }
    if (!a.empty()) return false;
    trim(qt);
    if (quot) *quot = std::move(qt);
    return true;
}

void crt_combine(std::vector<BigInt>& h, BigInt& M, const std::vector<u64>& g, u64 p) {
    u64 mp = modp(M, p);
    u64 minv = invm(mp, p);
    for (std::size_t i = 0; i < h.size(); ++i) {
        u64 hp = modp(h[i], p);
        u64 k = mulm(subm(g[i], hp, p), minv, p);
        h[i] += M * BigInt(std::to_string(k));
    }
    M *= BigInt(std::to_string(p));
}

BigInt symmetric(const BigInt& x, const BigInt& M) {
    BigInt half = M / 2;
    return x > half ? BigInt(x - M) : x;
}

UZ ugcd(UZ a, UZ b);

// ---------- univariate modular gcd over Z ----------

UZ ugcd(UZ a, UZ b) {
    trim(a);
    trim(b);
    if (a.empty()) return primitive(b);
    if (b.empty()) return primitive(a);
    BigInt c;
    {
        BigInt ca = content(a), cb = content(b);
        mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    a = primitive(a);
    b = primitive(b);
    if (deg(a) == 0 || deg(b) == 0) return UZ{c};
    if (a == b) {
        for (auto& x : a) x *= c;
        return a;
    }
    BigInt lg;
    mpz_gcd(lg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    int d = std::min(deg(a), deg(b)) + 1;
    std::vector<BigInt> H;
    BigInt M = 1;
    for (std::size_t pi = 0; pi < 4096; ++pi) {
        u64 p = prime_at(pi);
        if (modp(a.back(), p) == 0 || modp(b.back(), p) == 0) continue;
        UP g = gcd_p(reduce(a, p), reduce(b, p), p);
        if (deg(g) == 0) return UZ{c};
        if (deg(g) > d) continue;
        if (deg(g) < d) {
            d = deg(g);
            H.clear();
            M = 1;
        }
        u64 s = modp(lg, p);
        for (auto& x : g) x = mulm(x, s, p);
        if (H.empty()) H.assign(g.size(), BigInt(0));
        crt_combine(H, M, g, p);
        UZ cand(H.size());
        for (std::size_t i = 0; i < H.size(); ++i) cand[i] = symmetric(H[i], M);
        cand = primitive(cand);
        if (!cand.empty() && divide_z(a, cand, nullptr) && divide_z(b, cand, nullptr)) {
            for (auto& x : cand) x *= c;
            return cand;
        }
    }
    throw std::logic_error("univariate modular gcd did not converge");
}

// ---------- bivariate ----------

BZ to_dense(const QTPoly& p, bool main_q) {
    BigInt l = 1;
    for (const auto& tm : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), tm.coeff.get_den_mpz_t());
    BZ r;
    for (const auto& tm : p.terms()) {
        int m = main_q ? tm.qexp() : tm.texp();
        int o = main_q ? tm.texp() : tm.qexp();
        if (int(r.size()) <= m) r.resize(std::size_t(m) + 1);
        UZ& c = r[std::size_t(m)];
        if (int(c.size()) <= o) c.resize(std::size_t(o) + 1, BigInt(0));
        c[std::size_t(o)] = tm.coeff.get_num() * (l / tm.coeff.get_den());
    }
    for (auto& c : r) trim(c);
    trim(r);
    return r;
}

QTPoly from_dense(const BZ& a, bool main_q) {
    std::vector<QTPoly::Term> v;
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t o = 0; o < a[m].size(); ++o) {
            if (a[m][o] == 0) continue;
            int qe = main_q ? int(m) : int(o);
            int te = main_q ? int(o) : int(m);
            v.push_back({QTPoly::make_key(qe, te), BigRational(a[m][o])});
        }
    return QTPoly::from_terms(std::move(v));
}

UZ content_x(const BZ& a) {
    UZ g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = g.empty() ? primitive(c) : ugcd(g, c);
        if (g.size() == 1) {
            g[0] = 1;
            break;
        }
    }
    return g;
}

BZ divide_content(BZ a, const UZ& c) {
    if (c.size() == 1 && c[0] == 1) return a;
    for (auto& x : a)
        if (!x.empty()) {
            UZ qt;
            if (!divide_z(x, c, &qt)) throw std::logic_error("content does not divide");
            x = std::move(qt);
        }
    return a;
}

int deg_minor(const BZ& a) {
    int d = 0;
    for (const auto& c : a) d = std::max(d, deg(c));
    return d;
}

QTPoly normalized(const QTPoly& p) {
    if (p.is_zero()) return p;
    return p * BigRational(1 / p.content());
}

// One modular image of gamma/lc(G) * G, or degree 0 meaning coprime.
// Returns false if the prime is unusable.
bool brown_image(const BZ& A, const BZ& B, const UZ& gamma, u64 p, std::vector<UP>& out, int& degx) {
    std::vector<UP> Ap(A.size()), Bp(B.size());
    for (std::size_t i = 0; i < A.size(); ++i) Ap[i] = reduce(A[i], p);
    for (std::size_t i = 0; i < B.size(); ++i) Bp[i] = reduce(B[i], p);
    UP gam = reduce(gamma, p);
    if (Ap.back().empty() || Bp.back().empty() || gam.empty()) return false;
    int need = std::min(deg_minor(A), deg_minor(B)) + deg(gamma) + 1;
    std::vector<u64> nodes;
    std::vector<UP> vals;
    int d = INT_MAX;
    int tries = 0;
    // Start at a prime-dependent point so a fixed unlucky node cannot recur.
    for (u64 alpha = 1 + p % 100003; int(nodes.size()) < need; ++alpha) {
        if (++tries > 4 * need + 64) return false;
        if (eval(Ap.back(), alpha, p) == 0 || eval(Bp.back(), alpha, p) == 0) continue;
        u64 ga = eval(gam, alpha, p);
        if (ga == 0) continue;
        UP a(Ap.size()), b(Bp.size());
        for (std::size_t i = 0; i < Ap.size(); ++i) a[i] = eval(Ap[i], alpha, p);
        for (std::size_t i = 0; i < Bp.size(); ++i) b[i] = eval(Bp[i], alpha, p);
        UP g = gcd_p(a, b, p);
        if (deg(g) == 0) {
            degx = 0;
            return true;
        }
        if (deg(g) > d) continue;
        if (deg(g) < d) {
            d = deg(g);
            nodes.clear();
            vals.clear();
        }
        for (auto& x : g) x = mulm(x, ga, p);
        nodes.push_back(alpha);
        vals.push_back(std::move(g));
    }
    degx = d;
    out.assign(std::size_t(d) + 1, UP());
    std::vector<u64> v(nodes.size());
    for (int i = 0; i <= d; ++i) {
        for (std::size_t k = 0; k < nodes.size(); ++k) v[k] = vals[k][std::size_t(i)];
        out[std::size_t(i)] = interpolate(nodes, v, p);
    }
    return true;
}

// gcd of bivariate integer polynomials that are primitive in the main variable.
BZ brown(const BZ& A, const BZ& B) {
    UZ gamma = ugcd(A.back(), B.back());
    int width = std::min(deg_minor(A), deg_minor(B)) + deg(gamma) + 1;
    int dmin = std::min(deg(A), deg(B)) + 1;
    std::vector<BigInt> H;
    BigInt M = 1;
    for (std::size_t pi = 0; pi < 4096; ++pi) {
        u64 p = prime_at(pi);
        std::vector<UP> img;
        int dx;
        if (!brown_image(A, B, gamma, p, img, dx)) continue;
        if (dx == 0) return BZ{UZ{BigInt(1)}};
        if (dx > dmin) continue;
        if (dx < dmin) {
            dmin = dx;
            H.clear();
            M = 1;
        }
        std::vector<u64> flat(std::size_t((dx + 1) * width), 0);
        for (int i = 0; i <= dx; ++i)
            for (std::size_t j = 0; j < img[i].size() && int(j) < width; ++j) flat[std::size_t(i * width) + j] = img[i][j];
        if (H.empty()) H.assign(flat.size(), BigInt(0));
        crt_combine(H, M, flat, p);
        BZ cand(std::size_t(dx) + 1);
        for (int i = 0; i <= dx; ++i) {
            UZ c(width);
            for (int j = 0; j < width; ++j) c[j] = symmetric(H[std::size_t(i * width + j)], M);
            trim(c);
            cand[i] = std::move(c);
        }
        trim(cand);
        if (cand.empty()) continue;
        cand = divide_content(cand, content_x(cand));
        QTPoly G = from_dense(cand, false);
        QTPoly Aq = from_dense(A, false), Bq = from_dense(B, false);
        if (try_divide(Aq, G) && try_divide(Bq, G)) return cand;
    }
    throw std::logic_error("bivariate modular gcd did not converge");
}

QTPoly bivariate_gcd(const QTPoly& a, const QTPoly& b) {
    bool main_q = std::max(a.deg_q(), b.deg_q()) > std::max(a.deg_t(), b.deg_t());
    if (a.deg_t() == 0 || b.deg_t() == 0) main_q = false;
    else if (a.deg_q() == 0 || b.deg_q() == 0) main_q = true;
    BZ A = to_dense(a, main_q), B = to_dense(b, main_q);
    UZ ca = content_x(A), cb = content_x(B);
    UZ cg = ugcd(ca, cb);
    BZ g;
    if (deg(A) == 0 || deg(B) == 0) {
        g = BZ{UZ{BigInt(1)}};
    } else {
        A = divide_content(std::move(A), ca);
        B = divide_content(std::move(B), cb);
        // brown() evaluates the non-main variable stored in the inner vectors.
        g = brown(A, B);
    }
    for (auto& c : g) {
        UZ prod(c.size() + cg.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < cg.size(); ++j) prod[i + j] += c[i] * cg[j];
        trim(prod);
        c = std::move(prod);
    }
    return normalized(from_dense(g, main_q));
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return QTPoly(1L);
    int mq = std::min(a.min_q(), b.min_q());
    int mt = std::min(a.min_t(), b.min_t());
    QTPoly mono = QTPoly::monomial(1, mq, mt);
    QTPoly a1 = a.unshift(a.min_q(), a.min_t());
    QTPoly b1 = b.unshift(b.min_q(), b.min_t());
    if (a1.is_constant() || b1.is_constant()) return mono;
    QTPoly g;
    if (a1 == b1 || a1 == -b1)
        g = normalized(a1);
    else
        g = bivariate_gcd(a1, b1);
    return g * mono;
}

}  // namespace polyolab::algebra
