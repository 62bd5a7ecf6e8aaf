#pragma once

#include "polyolab/algebra/qtrat.hpp"
#include "polyolab/symfunc/partition.hpp"
#include "polyolab/symfunc/tables.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace polyolab::symfunc {

using algebra::QTPoly;
using algebra::QTRat;

enum class Basis { m, e, h, p, s, f };

char basis_letter(Basis b);
Basis parse_basis(std::string_view name);

using Expansion = std::map<Partition, QTRat>;

// Symmetric function with QTRat coefficients, stored in power-sum
// coordinates. May be inhomogeneous.
class SymF {
public:
    SymF() = default;
    SymF(const QTRat& c);
    SymF(long c) : SymF(QTRat(c)) {}

    static SymF basis(Basis b, const Partition& mu);
    static SymF p(const Partition& mu) { return basis(Basis::p, mu); }
    static SymF h(const Partition& mu) { return basis(Basis::h, mu); }
    static SymF e(const Partition& mu) { return basis(Basis::e, mu); }
    static SymF s(const Partition& mu) { return basis(Basis::s, mu); }
    static SymF m(const Partition& mu) { return basis(Basis::m, mu); }
    static SymF f(const Partition& mu) { return basis(Basis::f, mu); }
    static SymF from_expansion(Basis b, const Expansion& c);

    const Expansion& pcoeffs() const { return p_; }
    bool is_zero() const { return p_.empty(); }
    bool is_constant() const { return p_.empty() || (p_.size() == 1 && p_.begin()->first.empty()); }
    // Highest degree present; -1 for zero.
    int degree() const;
    bool homogeneous() const;
    SymF component(int d) const;

    Expansion to_basis(Basis b) const;
    QTRat coeff(Basis b, const Partition& mu) const;

    SymF operator-() const;
    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
    friend SymF operator*(const SymF& a, const SymF& b);
    SymF scaled(const QTRat& c) const;
    SymF pow(int e) const;
    friend bool operator==(const SymF& a, const SymF& b) { return a.p_ == b.p_; }
    friend bool operator!=(const SymF& a, const SymF& b) { return !(a == b); }

    // Applies fn to every coefficient (specializations, q<->t swaps, ...).
    SymF map_coeffs(const std::function<QTRat(const QTRat&)>& fn) const;
    SymF swap_qt() const;
    SymF specialize_t(algebra::TSpec mode) const;

    // "3*h[1,1] + 3*h[2]", terms in increasing partition order.
    std::string to_string(Basis b = Basis::s) const;
    static SymF parse(std::string_view text);

private:
    void add_p(const Partition& mu, const QTRat& c);
    Expansion p_;
};

// Hall scalar product, <p_lambda, p_mu> = delta z_lambda.
QTRat hall(const SymF& f, const SymF& g);
// p_r -> (-1)^{r-1} p_r
SymF omega(const SymF& f);
// f[z A] where p_r[A] = m(r).
SymF pleth_scale(const SymF& f, const std::function<QTRat(int)>& m);
// f(1, q, ..., q^{k-1})
QTRat principal(const SymF& f, int k);
// s_{k^r}(1, q, ..., q^{m-1}) by the hook-content formula.
QTPoly rect_principal(int k, int r, int m);

// Common plethystic alphabets, as p_r multipliers.
std::function<QTRat(int)> alphabet_constant(const QTRat& c);               // c (c constant)
std::function<QTRat(int)> alphabet_one_minus_q();                          // 1 - q^r
std::function<QTRat(int)> alphabet_one_minus_t();                          // 1 - t^r
std::function<QTRat(int)> alphabet_inv_one_minus_q();                      // 1/(1 - q^r)
std::function<QTRat(int)> alphabet_qint(int a);                            // (1 - q^{ar})/(1 - q^r)

// Sum of c * p_lambda(y) p_rho(z).
class BiSymF {
public:
    using Key = std::pair<Partition, Partition>;
    using Map = std::map<Key, QTRat>;

    BiSymF() = default;
    static BiSymF tensor(const SymF& y, const SymF& z);

    const Map& pcoeffs() const { return p_; }
    bool is_zero() const { return p_.empty(); }

    BiSymF& operator+=(const BiSymF& o);
    BiSymF& operator-=(const BiSymF& o);
    friend BiSymF operator+(BiSymF a, const BiSymF& b) { return a += b; }
    friend BiSymF operator-(BiSymF a, const BiSymF& b) { return a -= b; }
    BiSymF scaled(const QTRat& c) const;
    friend bool operator==(const BiSymF& a, const BiSymF& b) { return a.p_ == b.p_; }

    // Exchanges the two alphabets.
    BiSymF swap() const;
    // <F, g(y)>_y as a function of z.
    SymF pair_y(const SymF& g) const;
    // Coefficient of b_lambda(y), as a function of z.
    SymF coeff_y(Basis b, const Partition& lambda) const;
    Map to_basis(Basis by, Basis bz) const;
    BiSymF map_coeffs(const std::function<QTRat(const QTRat&)>& fn) const;

    // "coeff * sY[parts] * sZ[parts]" terms.
    std::string to_string(Basis by = Basis::s, Basis bz = Basis::s) const;

private:
    void add_p(const Key& k, const QTRat& c);
    Map p_;
};

}  // namespace polyolab::symfunc
