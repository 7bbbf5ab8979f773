#include "ttk/maxvol.hpp"

#include <cmath>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
    Matrix out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1 || rows[i] > static_cast<std::size_t>(m.rows())) throw BoundsError("row index out of range");
        out.row(static_cast<Index>(i)) = m.row(static_cast<Index>(rows[i] - 1));
    }
    return out;
}

Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 1 || cols[j] > static_cast<std::size_t>(m.cols()))
            throw BoundsError("column index out of range");
        out.col(static_cast<Index>(j)) = m.col(static_cast<Index>(cols[j] - 1));
    }
    return out;
}

MaxvolResult maxvol(const Matrix& a, double tol, int max_iter) {
    const Index k = a.rows();
    const Index r = a.cols();
    if (r < 1 || k < r)
        throw ArgumentError("maxvol needs a tall matrix, got " + std::to_string(k) + "x" + std::to_string(r));
    if (tol < 0.0) throw ArgumentError("maxvol tolerance must be non-negative");

    Eigen::ColPivHouseholderQR<Matrix> qr(a.transpose());
    qr.setThreshold(1e-10);
    if (qr.rank() < r)
        throw SingularMatrixError("maxvol: matrix has numerical rank " + std::to_string(qr.rank()) + " < " +
                                  std::to_string(r));

    MaxvolResult out;
    std::vector<std::size_t> rows(static_cast<std::size_t>(r));
    const auto& perm = qr.colsPermutation().indices();
    for (Index j = 0; j < r; ++j) rows[static_cast<std::size_t>(j)] = static_cast<std::size_t>(perm(j)) + 1;

    Matrix coeff = solve_right(a, select_rows(a, rows));
    while (true) {
        Index i = 0;
        Index j = 0;
        const double big = coeff.cwiseAbs().maxCoeff(&i, &j);
        out.max_coefficient = big;
        if (big <= 1.0 + tol) break;
        if (out.iterations >= max_iter) {
            out.converged = false;
            break;
        }
        // Replacing row j of the submatrix by row i scales its volume by |coeff(i, j)|.
        rows[static_cast<std::size_t>(j)] = static_cast<std::size_t>(i) + 1;
        const Vector col_j = coeff.col(j);
        Eigen::RowVectorXd row_i = coeff.row(i);
        row_i(j) -= 1.0;
        coeff.noalias() -= (col_j / col_j(i)) * row_i;
        ++out.iterations;
    }
    if (out.iterations > 0) {
        coeff = solve_right(a, select_rows(a, rows));
        out.max_coefficient = coeff.cwiseAbs().maxCoeff();
    }
    out.rows = std::move(rows);
    return out;
}

std::vector<std::size_t> independent_columns(const Matrix& m, double tol, std::size_t rmax) {
    if (m.size() == 0) throw ArgumentError("independent_columns: empty matrix");
    Eigen::ColPivHouseholderQR<Matrix> qr(m);
    const Index diag = std::min(m.rows(), m.cols());
    const auto& r = qr.matrixQR();
    const double lead = std::abs(r(0, 0));
    if (!(lead > 0.0)) throw DegenerateError("independent_columns: matrix is zero");
    std::vector<std::size_t> cols;
    const auto& perm = qr.colsPermutation().indices();
    for (Index j = 0; j < diag; ++j) {
        if (!(std::abs(r(j, j)) > tol * lead)) break;
        if (rmax > 0 && cols.size() >= rmax) break;
        cols.push_back(static_cast<std::size_t>(perm(j)) + 1);
    }
    return cols;
}

} // namespace ttk
