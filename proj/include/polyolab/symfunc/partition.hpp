#pragma once

#include "polyolab/algebra/qtpoly.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace polyolab::symfunc {

using algebra::BigInt;

// Weakly decreasing list of positive parts. Ordered lexicographically on the
// part list, so [1,1] < [2].
class Partition {
public:
    Partition() = default;
    // Sorts and drops zero parts; negative parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return weight_; }  // |mu|
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[std::size_t(i)] : 0; }

    Partition conjugate() const;
    // n(mu) = sum (i-1) mu_i
    int n() const;
    // Multiplicity of part i.
    int multiplicity(int i) const;
    // Arm and leg of cell (row i, column j), 0-based.
    int arm(int i, int j) const { return parts_[std::size_t(i)] - j - 1; }
    int leg(int i, int j) const;
    int hook(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }

    std::string to_string() const;  // [3,1,1]
    static Partition parse(std::string_view text);

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Partitions of n in reverse lexicographic order: [n], [n-1,1], ..., [1^n].
const std::vector<Partition>& partitions(int n);
// Partitions of n with exactly r parts, same order.
std::vector<Partition> partitions(int n, int r);

// Dominance: a >= b iff all partial sums of a are >= those of b. Same weight required.
bool dominates(const Partition& a, const Partition& b);

BigInt zmu(const Partition& mu);
// (-1)^{|mu| - l(mu)}
int sign(const Partition& mu);

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    Composition tail() const;
    Partition sorted() const { return Partition(parts_); }

    std::string to_string() const;  // (1,2,1)
    static Composition parse(std::string_view text);

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// Compositions of n with r parts, lexicographic.
std::vector<Composition> compositions(int n, int r);
std::vector<Composition> compositions(int n);

// n! / prod parts!
BigInt multinomial(const std::vector<int>& parts);

}  // namespace polyolab::symfunc
