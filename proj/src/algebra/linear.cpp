#include "polyolab/algebra/linear.hpp"

#include "polyolab/error.hpp"

#include <stdexcept>

namespace polyolab::algebra {

QTPoly lcm(const QTPoly& a, const QTPoly& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    QTPoly g = gcd(a, b);
    return divide_exact(a, g) * b;
}

namespace {

using PMatrix = std::vector<std::vector<QTPoly>>;

// Clears denominators row by row.
PMatrix to_poly_rows(const QTMatrix& A, const QTMatrix* B) {
    PMatrix M(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        QTPoly L(1L);
        for (const auto& x : A[i]) L = lcm(L, x.den());
        if (B)
            for (const auto& x : (*B)[i]) L = lcm(L, x.den());
        auto push = [&](const QTRat& x) {
            if (x.is_zero()) M[i].emplace_back();
            else M[i].push_back(x.num() * (x.den().is_one() ? L : divide_exact(L, x.den())));
        };
        for (const auto& x : A[i]) push(x);
        if (B)
            for (const auto& x : (*B)[i]) push(x);
    }
    return M;
}

// Fraction-free forward elimination on the first ncols columns.
// Returns the pivot column of each echelon row.
std::vector<int> bareiss(PMatrix& M, int ncols) {
    int nrows = int(M.size());
    int width = nrows ? int(M[0].size()) : 0;
    QTPoly prev(1L);
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int best = -1;
        for (int i = r; i < nrows; ++i) {
            if (M[i][col].is_zero()) continue;
            if (best < 0 || M[i][col].size() < M[best][col].size()) best = i;
        }
        if (best < 0) continue;
        std::swap(M[r], M[best]);
        const QTPoly piv = M[r][col];
        for (int i = r + 1; i < nrows; ++i) {
            const QTPoly f = M[i][col];
            for (int j = col + 1; j < width; ++j) {
                QTPoly v = piv * M[i][j];
                if (!f.is_zero() && !M[r][j].is_zero()) v -= f * M[r][j];
                M[i][j] = prev.is_one() ? std::move(v) : divide_exact(v, prev);
            }
            M[i][col] = QTPoly();
        }
        prev = piv;
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

QTRat dot_row(const std::vector<QTRat>& row, const std::vector<QTRat>& x) {
    QTRat s;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
    return s;
}

}  // namespace

QTMatrix solve_linear_multi(const QTMatrix& A, const QTMatrix& B) {
    int n = int(A.size());
    for (const auto& row : A)
        if (int(row.size()) != n) throw DomainError("solve_linear: matrix is not square");
    if (int(B.size()) != n) throw DomainError("solve_linear: right-hand side size mismatch");
    int m = n ? int(B[0].size()) : 0;
    PMatrix M = to_poly_rows(A, &B);
    auto pivots = bareiss(M, n);
    if (int(pivots.size()) < n) throw SingularSystem(int(pivots.size()), n, "solve_linear");
    // Fraction-free back substitution: D*x_i are polynomials (Cramer numerators)
    // where D is the last pivot; the only rational step is the final reduction.
    const QTPoly D = M[n - 1][n - 1];
    QTMatrix X(n, std::vector<QTRat>(m));
    for (int c = 0; c < m; ++c) {
        std::vector<QTPoly> N(n);
        for (int i = n - 1; i >= 0; --i) {
            QTPoly s = D * M[i][n + c];
            for (int j = i + 1; j < n; ++j)
                if (!M[i][j].is_zero() && !N[j].is_zero()) s -= M[i][j] * N[j];
            N[i] = divide_exact(s, M[i][i]);
        }
        for (int i = 0; i < n; ++i) X[i][c] = QTRat(N[i], D);
    }
    for (int c = 0; c < m; ++c) {
        std::vector<QTRat> x(n);
        for (int j = 0; j < n; ++j) x[j] = X[j][c];
        for (int i = 0; i < n; ++i)
            if (dot_row(A[i], x) != B[i][c]) throw std::logic_error("solve_linear: back-substitution check failed");
    }
    return X;
}

std::vector<QTRat> solve_linear(const QTMatrix& A, const std::vector<QTRat>& b) {
    QTMatrix B(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) B[i] = {b[i]};
    QTMatrix X = solve_linear_multi(A, B);
    std::vector<QTRat> x(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) x[i] = X[i][0];
    return x;
}

int rank_qt(const QTMatrix& A) {
    if (A.empty()) return 0;
    PMatrix M = to_poly_rows(A, nullptr);
    return int(bareiss(M, int(A[0].size())).size());
}

namespace {

// Row echelon over Q; returns pivot count, applies the same ops to b if given.
int gauss(QMatrix& A, std::vector<BigRational>* b, std::vector<int>* pivcols) {
    int nrows = int(A.size());
    int ncols = nrows ? int(A[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (A[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        if (b) std::swap((*b)[r], (*b)[p]);
        BigRational inv = 1 / A[r][col];
        for (int j = col; j < ncols; ++j) A[r][j] *= inv;
        if (b) (*b)[r] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || A[i][col] == 0) continue;
            BigRational f = A[i][col];
            for (int j = col; j < ncols; ++j)
                if (A[r][j] != 0) A[i][j] -= f * A[r][j];
            if (b) (*b)[i] -= f * (*b)[r];
        }
        if (pivcols) pivcols->push_back(col);
        ++r;
    }
    return r;
}

}  // namespace

int rank_rational(QMatrix A) { return gauss(A, nullptr, nullptr); }

std::vector<int> independent_rows(const QMatrix& A) {
    std::vector<int> chosen;
    QMatrix basis;  // reduced rows with leading ones
    std::vector<int> lead;
    for (int i = 0; i < int(A.size()); ++i) {
        std::vector<BigRational> v = A[i];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int c = lead[k];
            if (v[c] == 0) continue;
            BigRational f = v[c];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (basis[k][j] != 0) v[j] -= f * basis[k][j];
        }
        int c = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                c = int(j);
                break;
            }
        if (c < 0) continue;
        BigRational inv = 1 / v[c];
        for (auto& x : v) x *= inv;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            BigRational f = basis[k][c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) basis[k][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        lead.push_back(c);
        chosen.push_back(i);
    }
    return chosen;
}

std::optional<std::vector<BigRational>> solve_rational(QMatrix A, std::vector<BigRational> b) {
    int n = int(A.size());
    if (gauss(A, &b, nullptr) < n) return std::nullopt;
    return b;
}

QMatrix invert_rational(const QMatrix& A) {
    int n = int(A.size());
    QMatrix M(A);
    for (int i = 0; i < n; ++i) {
        M[i].resize(std::size_t(2 * n), BigRational(0));
        M[i][n + i] = 1;
    }
    std::vector<int> piv;
    int r = gauss(M, nullptr, &piv);
    if (r < n || (n > 0 && piv.back() >= n)) throw SingularSystem(r, n, "invert_rational");
    QMatrix inv(n, std::vector<BigRational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = M[i][n + j];
    return inv;
}

}  // namespace polyolab::algebra
