#pragma once

#include "polyolab/algebra/qtrat.hpp"

#include <vector>

namespace polyolab::algebra {

// Equality of a and b decided by evaluating a.num*b.den - b.num*a.den on a
// product grid with more points than its degree in each variable. The grid
// argument makes this a proof, not a probabilistic test.
struct EvalProof {
    bool equal = true;
    int deg_q_bound = 0;
    int deg_t_bound = 0;
    long points = 0;
};

EvalProof equal_by_evaluation(const QTRat& a, const QTRat& b);
// Grid nodes used for evaluation: 2, 3, 5, 7, 11, ...
const std::vector<long>& evaluation_nodes(int count);

}  // namespace polyolab::algebra
