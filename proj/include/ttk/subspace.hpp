#pragma once

#include "ttk/linalg.hpp"

namespace ttk {

/// Matrix with orthonormal columns spanning a subspace of R^n.
/// Construction validates Q^T Q = I within `tolerance`.
class OrthonormalBasis {
public:
    static constexpr double kDefaultTolerance = 1e-8;

    explicit OrthonormalBasis(Matrix columns, double tolerance = kDefaultTolerance);

    /// Orthonormal basis of the column span of an arbitrary matrix
    /// (columns with singular value below rel_tol * sigma_max are dropped).
    static OrthonormalBasis span_of(const Matrix& a, double rel_tol = 1e-12);

    [[nodiscard]] const Matrix& columns() const { return columns_; }
    [[nodiscard]] Index ambient_dim() const { return columns_.rows(); }
    [[nodiscard]] Index dim() const { return columns_.cols(); }

private:
    Matrix columns_;
};

/// d(F, G) = ||(I - G G^T) F||_2, the largest residual of a unit vector of F
/// after projection onto G. Lies in [0, 1].
double subspace_distance(const OrthonormalBasis& f, const OrthonormalBasis& g);

/// Basis of F (x) R^n: the columns of kron(F, I_n).
OrthonormalBasis kron_identity(const OrthonormalBasis& f, Index n);

} // namespace ttk
