#include "ttk/amuse.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

void sort_spectrum(ComplexVector& values, ComplexMatrix& vectors) {
    const Index k = values.size();
    if (vectors.cols() != k) throw ArgumentError("sort_spectrum: vector count does not match value count");
    const double scale = std::max(1.0, values.size() > 0 ? values.cwiseAbs().maxCoeff() : 0.0);
    const double tol = 1e-12 * scale;
    std::vector<Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        const auto va = values(a);
        const auto vb = values(b);
        if (std::abs(va.real() - vb.real()) > tol) return va.real() > vb.real();
        if (std::abs(std::abs(va) - std::abs(vb)) > tol) return std::abs(va) > std::abs(vb);
        return va.imag() > vb.imag();
    });
    ComplexVector sorted_values(k);
    ComplexMatrix sorted_vectors(vectors.rows(), k);
    for (Index j = 0; j < k; ++j) {
        const Index src = order[static_cast<std::size_t>(j)];
        sorted_values(j) = values(src);
        auto col = sorted_vectors.col(j);
        col = vectors.col(src);
        Index big = 0;
        if (col.size() > 0 && col.cwiseAbs().maxCoeff(&big) > 0.0) {
            const auto pivot = col(big);
            col *= std::conj(pivot) / std::abs(pivot);
            if (values(src).imag() == 0.0) col = col.real().cast<std::complex<double>>();
        }
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

void reduced_eigensystem(const Matrix& m, bool symmetric, ComplexVector& values, ComplexMatrix& vectors) {
    if (m.rows() != m.cols()) throw ArgumentError("reduced matrix must be square");
    if (!m.allFinite()) throw DegenerateError("reduced matrix has non-finite entries");
    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        if (es.info() != Eigen::Success) throw DegenerateError("symmetric eigensolver failed");
        values = es.eigenvalues().cast<std::complex<double>>();
        vectors = es.eigenvectors().cast<std::complex<double>>();
    } else {
        Eigen::EigenSolver<Matrix> es(m);
        if (es.info() != Eigen::Success) throw DegenerateError("eigensolver failed");
        values = es.eigenvalues();
        vectors = es.eigenvectors();
    }
    sort_spectrum(values, vectors);
}

namespace {

Index requested_count(Index q, Index available, const char* what) {
    if (q < 0) throw ArgumentError(std::string(what) + ": q must be non-negative");
    if (q > available)
        throw ArgumentError(std::string(what) + ": q = " + std::to_string(q) + " exceeds the retained rank " +
                            std::to_string(available));
    return q == 0 ? available : q;
}

Svd reduced_svd(const Matrix& psi, double trunc, const char* what) {
    if (psi.size() == 0) throw DegenerateError(std::string(what) + ": empty data matrix");
    if (!psi.allFinite()) throw DataError(std::string(what) + ": non-finite data matrix");
    if (psi.squaredNorm() == 0.0) throw DegenerateError(std::string(what) + ": data matrix is zero");
    const Svd svd = thin_svd(psi);
    return truncate(svd, retained_rank(svd.s, trunc, Truncation::relative_value));
}

double whitening_defect(const Svd& svd, const Matrix& psi) {
    const Matrix t = svd.s.cwiseInverse().asDiagonal() * (svd.u.transpose() * psi);
    return (t * t.transpose() - Matrix::Identity(t.rows(), t.rows())).cwiseAbs().maxCoeff();
}

} // namespace

DenseEdmdResult amuse_dense(const Matrix& psi_x, const Matrix& psi_y, double trunc, bool symmetrize, Index q) {
    if (psi_x.rows() != psi_y.rows() || psi_x.cols() != psi_y.cols())
        throw ArgumentError("amuse_dense: psi_x and psi_y must have the same shape");
    if (trunc < 0.0) throw ArgumentError("amuse_dense: truncation must be non-negative");
    const Svd svd = reduced_svd(psi_x, trunc, "amuse_dense");
    const Index r = svd.s.size();
    const Index keep = requested_count(q, r, "amuse_dense");

    const Vector inv_s = svd.s.cwiseInverse();
    Matrix m = svd.v.transpose() * (psi_y.transpose() * svd.u) * inv_s.asDiagonal();
    if (symmetrize) m = 0.5 * (m + m.transpose()).eval();

    ComplexVector values;
    ComplexMatrix vectors;
    reduced_eigensystem(m, symmetrize, values, vectors);

    DenseEdmdResult out;
    SpectralResult& s = out.spectral;
    s.kind = SpectralKind::edmd;
    s.values = values.head(keep);
    s.reduced_vectors = vectors.leftCols(keep);
    s.ranks = {r};
    s.reduced_rank = r;
    s.truncation = trunc;
    s.symmetrized = symmetrize;
    const Matrix back = svd.u * inv_s.asDiagonal();
    out.eigenvectors = back.cast<std::complex<double>>() * s.reduced_vectors;
    s.eigenfunctions = out.eigenvectors.transpose() * psi_x.cast<std::complex<double>>();
    return out;
}

DenseCcaResult cca_dense(const Matrix& psi_x, const Matrix& psi_y, double trunc, Index q) {
    if (psi_x.cols() != psi_y.cols()) throw ArgumentError("cca_dense: psi_x and psi_y need the same snapshot count");
    if (trunc < 0.0) throw ArgumentError("cca_dense: truncation must be non-negative");
    const Svd sx = reduced_svd(psi_x, trunc, "cca_dense");
    const Svd sy = reduced_svd(psi_y, trunc, "cca_dense");

    const Svd inner = thin_svd(sy.v.transpose() * sx.v);
    const Index k = inner.s.size();
    const Index keep = requested_count(q, k, "cca_dense");

    DenseCcaResult out;
    SpectralResult& s = out.spectral;
    s.kind = SpectralKind::cca;
    s.singular_values = inner.s.head(keep);
    s.values = s.singular_values.cwiseAbs2().cast<std::complex<double>>();
    s.reduced_vectors = inner.v.leftCols(keep).cast<std::complex<double>>();
    s.eigenfunctions = (sx.v * inner.v.leftCols(keep)).transpose().cast<std::complex<double>>();
    s.ranks = {sx.s.size(), sy.s.size()};
    s.reduced_rank = k;
    s.truncation = trunc;
    out.whitening_defect = std::max(whitening_defect(sx, psi_x), whitening_defect(sy, psi_y));
    return out;
}

} // namespace ttk
