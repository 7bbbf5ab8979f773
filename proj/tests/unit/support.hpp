#pragma once

#include <random>
#include <vector>

#include "ttk/basis.hpp"
#include "ttk/tensor_train.hpp"

namespace ttk::testing {

inline Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = g(rng);
    return m;
}

inline Matrix random_uniform(std::mt19937_64& rng, Index rows, Index cols, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = u(rng);
    return m;
}

inline Matrix random_orthonormal(std::mt19937_64& rng, Index n, Index r) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, r));
    return qr.householderQ() * Matrix::Identity(n, r);
}

inline TensorTrain random_tt(std::mt19937_64& rng, const ModeSizes& dims, const std::vector<Index>& inner_ranks) {
    std::vector<Core> cores;
    Index left = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const Index right = k + 1 < dims.size() ? inner_ranks[k] : 1;
        const auto n = static_cast<Index>(dims[k]);
        cores.push_back(Core::from_left_unfolding(random_matrix(rng, left * n, right), left, n));
        left = right;
    }
    return TensorTrain(std::move(cores));
}

inline DenseTensor random_dense(std::mt19937_64& rng, const ModeSizes& dims) {
    const auto n = static_cast<Index>(element_count(dims));
    return DenseTensor(dims, random_matrix(rng, n, 1).col(0));
}

/// Gaussians with centers spread over [lo, hi] plus a constant, reading
/// coordinate `coord`.
inline BasisDimension gaussian_dimension(std::size_t coord, std::size_t n, double lo, double hi, double s) {
    BasisDimension dim{coord, {BasisFunction::constant()}};
    for (std::size_t i = 1; i < n; ++i) {
        const double t = n == 2 ? 0.5 : static_cast<double>(i - 1) / static_cast<double>(n - 2);
        dim.functions.push_back(BasisFunction::gaussian(lo + (hi - lo) * t, s));
    }
    return dim;
}

/// Random mix of basis kinds for p dimensions over d coordinates.
inline BasisSpec random_spec(std::mt19937_64& rng, std::size_t p, std::size_t d, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
    std::uniform_int_distribution<std::size_t> pick_coord(1, d);
    std::uniform_int_distribution<int> pick_kind(0, 4);
    std::uniform_real_distribution<double> center(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.2, 1.0);
    BasisSpec spec;
    for (std::size_t k = 0; k < p; ++k) {
        BasisDimension dim{pick_coord(rng), {}};
        const std::size_t n = pick_n(rng);
        for (std::size_t i = 0; i < n; ++i) {
            switch (pick_kind(rng)) {
            case 0: dim.functions.push_back(BasisFunction::constant()); break;
            case 1: dim.functions.push_back(BasisFunction::gaussian(center(rng), scale(rng))); break;
            case 2: dim.functions.push_back(BasisFunction::periodic_gaussian(center(rng), scale(rng))); break;
            case 3: dim.functions.push_back(BasisFunction::identity()); break;
            default: dim.functions.push_back(BasisFunction::monomial(static_cast<int>(i % 3) + 1)); break;
            }
        }
        spec.dimensions.push_back(std::move(dim));
    }
    return spec;
}

/// Entry of the transformed data tensor computed straight from the basis
/// functions, independent of the library's transforms.
inline double product_entry(const BasisSpec& spec, const Matrix& data, const MultiIndex& mi) {
    const auto t = static_cast<Index>(mi[spec.order()] - 1);
    double v = 1.0;
    for (std::size_t k = 0; k < spec.order(); ++k) {
        const auto& dim = spec.dimensions[k];
        v *= dim.functions[mi[k] - 1](data(static_cast<Index>(dim.coordinate - 1), t));
    }
    return v;
}

} // namespace ttk::testing
