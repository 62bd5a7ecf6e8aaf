#pragma once

#include "polyolab/algebra/qtrat.hpp"

#include <optional>
#include <vector>

namespace polyolab::algebra {

using QTMatrix = std::vector<std::vector<QTRat>>;
using QMatrix = std::vector<std::vector<BigRational>>;

// Fraction-free (Bareiss) elimination over Q[q,t]. Throws SingularSystem
// carrying the rank when A is singular. The result is checked against A.
std::vector<QTRat> solve_linear(const QTMatrix& A, const std::vector<QTRat>& b);
// Several right-hand sides: B has one row per equation, one column per system.
QTMatrix solve_linear_multi(const QTMatrix& A, const QTMatrix& B);
// Rank over Q(q,t) by fraction-free elimination.
int rank_qt(const QTMatrix& A);

// Plain Gaussian elimination over Q.
int rank_rational(QMatrix A);
// Indices of a maximal set of linearly independent rows, chosen greedily in order.
std::vector<int> independent_rows(const QMatrix& A);
// Square solve; nullopt when singular.
std::optional<std::vector<BigRational>> solve_rational(QMatrix A, std::vector<BigRational> b);
// Inverse of a square rational matrix; throws SingularSystem.
QMatrix invert_rational(const QMatrix& A);

QTPoly lcm(const QTPoly& a, const QTPoly& b);

}  // namespace polyolab::algebra
