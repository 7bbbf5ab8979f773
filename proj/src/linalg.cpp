#include "ttk/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ttk/error.hpp"

namespace ttk {

namespace {

Svd direct_svd(const Matrix& a) {
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return Svd{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

} // namespace

void normalize_signs(Matrix& columns, Matrix* partner) {
    for (Index j = 0; j < columns.cols(); ++j) {
        Index pivot = 0;
        columns.col(j).cwiseAbs().maxCoeff(&pivot);
        if (columns(pivot, j) < 0.0) {
            columns.col(j) *= -1.0;
            if (partner != nullptr) partner->col(j) *= -1.0;
        }
    }
}

Svd thin_svd(const Matrix& a) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    const Index k = std::min(rows, cols);
    if (k == 0) return Svd{Matrix(rows, 0), Vector(0), Matrix(cols, 0)};

    Svd out;
    if (cols > 2 * rows) {
        // a^T = Q R  =>  a = R^T Q^T; only the small R^T is decomposed.
        Eigen::HouseholderQR<Matrix> qr(a.transpose());
        const Matrix r = qr.matrixQR().topRows(rows).triangularView<Eigen::Upper>();
        Svd small = direct_svd(r.transpose());
        Matrix v = Matrix::Zero(cols, rows);
        v.topRows(rows) = small.v;
        v.applyOnTheLeft(qr.householderQ());
        out = Svd{std::move(small.u), std::move(small.s), std::move(v)};
    } else if (rows > 2 * cols) {
        Eigen::HouseholderQR<Matrix> qr(a);
        const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
        Svd small = direct_svd(r);
        Matrix u = Matrix::Zero(rows, cols);
        u.topRows(cols) = small.u;
        u.applyOnTheLeft(qr.householderQ());
        out = Svd{std::move(u), std::move(small.s), std::move(small.v)};
    } else {
        out = direct_svd(a);
    }
    normalize_signs(out.u, &out.v);
    return out;
}

Index retained_rank(const Vector& s, double eps, Truncation rule, Index max_rank) {
    const Index n = s.size();
    if (n == 0) return 0;
    const double threshold = std::max(eps, kZeroFloor) * s(0);
    Index keep = 1;
    if (s(0) > 0.0) {
        if (rule == Truncation::relative_value) {
            keep = 0;
            while (keep < n && s(keep) > threshold) ++keep;
        } else {
            double tail = 0.0;
            keep = n;
            for (Index i = n - 1; i >= 1; --i) {
                tail += s(i) * s(i);
                if (std::sqrt(tail) > threshold) break;
                keep = i;
            }
        }
        keep = std::max<Index>(keep, 1);
    }
    if (max_rank > 0) keep = std::min(keep, max_rank);
    return keep;
}

Svd truncate(const Svd& svd, Index rank) {
    return Svd{svd.u.leftCols(rank), svd.s.head(rank), svd.v.leftCols(rank)};
}

double orthonormality_defect(const Matrix& a) {
    if (a.cols() == 0) return 0.0;
    const Matrix gram = a.transpose() * a;
    return (gram - Matrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
}

namespace {

// Inverse-like application of B via its SVD with Tikhonov filter factors.
Matrix ridge_left(const Matrix& b, const Matrix& a) {
    const double lambda = 1e-12 * b.norm();
    Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector& s = svd.singularValues();
    Vector filter(s.size());
    for (Index i = 0; i < s.size(); ++i) {
        const double denom = s(i) * s(i) + lambda * lambda;
        filter(i) = denom > 0.0 ? s(i) / denom : 0.0;
    }
    return svd.matrixV() * filter.asDiagonal() * (svd.matrixU().transpose() * a);
}

bool numerically_singular(const Matrix& b) {
    if (b.size() == 0) return false;
    Eigen::JacobiSVD<Matrix> svd(b);
    const Vector& s = svd.singularValues();
    return !(s(s.size() - 1) > 1e-14 * s(0));
}

} // namespace

Matrix solve_left(const Matrix& b, const Matrix& a, bool* regularized) {
    if (b.rows() != b.cols() || b.rows() != a.rows())
        throw ArgumentError("solve_left: shape mismatch");
    const bool singular = numerically_singular(b);
    if (regularized != nullptr) *regularized = singular;
    if (singular) return ridge_left(b, a);
    return b.fullPivLu().solve(a);
}

Matrix solve_right(const Matrix& a, const Matrix& b, bool* regularized) {
    if (b.rows() != b.cols() || b.cols() != a.cols())
        throw ArgumentError("solve_right: shape mismatch");
    return solve_left(b.transpose(), a.transpose(), regularized).transpose();
}

} // namespace ttk
