#pragma once

#include <Eigen/Dense>

namespace ttk {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative threshold substituted for eps = 0, so that floating-point noise
/// does not inflate ranks.
inline constexpr double kZeroFloor = 1e-14;

/// How a relative threshold eps selects the retained singular values.
enum class Truncation {
    /// keep sigma_i > eps * sigma_1
    relative_value,
    /// drop the longest tail with sqrt(sum sigma_i^2) <= eps * sigma_1
    relative_tail,
};

/// Thin SVD A = U diag(s) V^T with s descending. Every column of U has its
/// entry of largest magnitude made positive (V adjusted accordingly).
struct Svd {
    Matrix u;
    Vector s;
    Matrix v;
};

Svd thin_svd(const Matrix& a);

/// Number of singular values to keep. Always at least one (when s is
/// non-empty) and at most max_rank (0 = unbounded).
Index retained_rank(const Vector& s, double eps, Truncation rule, Index max_rank = 0);

/// Leading `rank` triplets of an SVD.
Svd truncate(const Svd& svd, Index rank);

/// Flips column signs so that each column's largest-magnitude entry is
/// positive; applies the same flips to `partner` when given.
void normalize_signs(Matrix& columns, Matrix* partner = nullptr);

/// max |A^T A - I|
double orthonormality_defect(const Matrix& a);

/// X with X * B = A (B square). Uses a pivoted LU; when B is numerically
/// singular a ridge-regularized least-squares solve with
/// lambda = 1e-12 * ||B||_F is used instead and `regularized` is set.
Matrix solve_right(const Matrix& a, const Matrix& b, bool* regularized = nullptr);

/// X with B * X = A (B square), same fallback as solve_right.
Matrix solve_left(const Matrix& b, const Matrix& a, bool* regularized = nullptr);

} // namespace ttk
