#pragma once

#include "polyolab/algebra/linear.hpp"
#include "polyolab/symfunc/partition.hpp"

#include <map>
#include <vector>

namespace polyolab::symfunc {

using algebra::BigRational;
using algebra::QMatrix;

// Largest degree for which basis-change tables are built (default 12).
int degree_cap();
void set_degree_cap(int cap);

// Per-degree data shared by every basis conversion. Rows and columns are
// indexed by partitions(n).
struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<BigInt> z;
    std::vector<int> eps;
    std::vector<std::vector<long>> chi;  // chi[lambda][rho]
    QMatrix hp;                          // h_lambda = sum_rho hp[lambda][rho] p_rho
    QMatrix mp;                          // m_lambda = sum_rho mp[lambda][rho] p_rho

    int idx(const Partition& p) const { return index.at(p); }
};

// Built once per degree; throws CapExceeded above degree_cap().
const DegreeTables& tables(int n);

// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long schur_char(const Partition& lambda, const Partition& mu);

}  // namespace polyolab::symfunc
