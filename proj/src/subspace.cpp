#include "ttk/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "ttk/error.hpp"

namespace ttk {

OrthonormalBasis::OrthonormalBasis(Matrix columns, double tolerance) : columns_(std::move(columns)) {
    const double defect = orthonormality_defect(columns_);
    if (defect > tolerance) {
        std::ostringstream msg;
        msg << "basis columns are not orthonormal (Gram deviation " << defect << " > " << tolerance << ")";
        throw ValidationError(msg.str());
    }
}

OrthonormalBasis OrthonormalBasis::span_of(const Matrix& a, double rel_tol) {
    const Svd svd = thin_svd(a);
    const Index r = retained_rank(svd.s, rel_tol, Truncation::relative_value);
    return OrthonormalBasis(svd.u.leftCols(r));
}

double subspace_distance(const OrthonormalBasis& f, const OrthonormalBasis& g) {
    if (f.ambient_dim() != g.ambient_dim())
        throw ArgumentError("subspace_distance: ambient dimensions differ");
    if (f.dim() == 0) return 0.0;
    const Matrix& fc = f.columns();
    const Matrix& gc = g.columns();
    const Matrix residual = fc - gc * (gc.transpose() * fc);
    Eigen::JacobiSVD<Matrix> svd(residual);
    return std::clamp(svd.singularValues()(0), 0.0, 1.0);
}

OrthonormalBasis kron_identity(const OrthonormalBasis& f, Index n) {
    const Matrix& fc = f.columns();
    Matrix k = Matrix::Zero(fc.rows() * n, fc.cols() * n);
    for (Index i = 0; i < fc.rows(); ++i)
        for (Index j = 0; j < fc.cols(); ++j)
            for (Index a = 0; a < n; ++a) k(i * n + a, j * n + a) = fc(i, j);
    return OrthonormalBasis(std::move(k));
}

} // namespace ttk
