#pragma once

#include <cstddef>
#include <vector>

#include "ttk/linalg.hpp"

namespace ttk {

struct MaxvolResult {
    /// 1-based row indices, one per column of A.
    std::vector<std::size_t> rows;
    /// max |A A_I^{-1}| at exit.
    double max_coefficient = 0.0;
    int iterations = 0;
    /// False when max_iter was reached before the certificate held.
    bool converged = true;
};

inline constexpr double kDefaultMaxvolTol = 5e-2;
inline constexpr int kDefaultMaxvolMaxIter = 100;

/// Greedy maximum-volume row selection for a tall k x r matrix (k >= r).
/// Starts from pivoted-QR rows and swaps the (row, column) of largest
/// |A A_I^{-1}| while it exceeds 1 + tol. On convergence every entry of
/// A A_I^{-1} is bounded by 1 + tol in magnitude.
/// Throws SingularMatrixError when A is rank deficient (relative 1e-10).
MaxvolResult maxvol(const Matrix& a, double tol = kDefaultMaxvolTol, int max_iter = kDefaultMaxvolMaxIter);

/// Pivoted-QR column selection: pivots whose |R_kk| exceeds tol |R_11|, at
/// most rmax of them (rmax = 0: no cap). 1-based column indices.
/// Throws DegenerateError for an all-zero matrix.
std::vector<std::size_t> independent_columns(const Matrix& m, double tol = 1e-10, std::size_t rmax = 0);

/// Rows (1-based) of a matrix gathered into a new matrix.
Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& rows);
Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& cols);

} // namespace ttk
