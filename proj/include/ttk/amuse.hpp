#pragma once

#include <vector>

#include "ttk/linalg.hpp"

namespace ttk {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

enum class SpectralKind { edmd, cca };

/// Eigenvalues (EDMD) or squared singular values (CCA) with the reduced
/// vectors W and eigenfunction time series Phi (q x m).
struct SpectralResult {
    SpectralKind kind = SpectralKind::edmd;
    ComplexVector values;
    /// CCA only: sigma_k with values = sigma_k^2.
    Vector singular_values;
    ComplexMatrix reduced_vectors;
    ComplexMatrix eigenfunctions;
    /// Diagnostic ranks (TT ranks r_0..r_p for tensor pipelines).
    std::vector<Index> ranks;
    /// Size of the reduced problem after the pseudo-inverse truncation.
    Index reduced_rank = 0;
    double truncation = 0.0;
    bool symmetrized = false;

    [[nodiscard]] Vector real_values() const { return values.real(); }
};

/// Sorts eigenpairs by descending real part, ties by descending magnitude,
/// conjugate pairs adjacent (positive imaginary part first). Vectors are
/// scaled so that their largest-magnitude entry is real positive.
void sort_spectrum(ComplexVector& values, ComplexMatrix& vectors);

/// Eigen-decomposition of a small reduced matrix, sorted by sort_spectrum.
/// Symmetric inputs (symmetric = true) use the self-adjoint solver.
void reduced_eigensystem(const Matrix& m, bool symmetric, ComplexVector& values, ComplexMatrix& vectors);

struct DenseEdmdResult {
    SpectralResult spectral;
    /// Eigenvectors xi_k = U Sigma^{-1} w_k as columns (N x q).
    ComplexMatrix eigenvectors;
};

/// Dense AMUSE for EDMD on transformed data matrices (N x m). Singular values
/// of psi_x at or below trunc * sigma_1 are dropped; q = 0 keeps all.
DenseEdmdResult amuse_dense(const Matrix& psi_x, const Matrix& psi_y, double trunc, bool symmetrize = false,
                            Index q = 0);

struct DenseCcaResult {
    SpectralResult spectral;
    /// max |T T^T - I| over both whitened data matrices T = Sigma^{-1} U^T Psi.
    double whitening_defect = 0.0;
};

/// Dense AMUSE for CCA.
DenseCcaResult cca_dense(const Matrix& psi_x, const Matrix& psi_y, double trunc, Index q = 0);

} // namespace ttk
