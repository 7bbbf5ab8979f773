#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ttk/linalg.hpp"

namespace ttk {

/// Mode sizes n_1..n_p of a tensor.
using ModeSizes = std::vector<std::size_t>;

/// 1-based multi-index (i_1, ..., i_p).
///
/// Throughout the library every grouped index is linearized with the first
/// index varying fastest: (i_1, ..., i_p) -> 1 + sum_k (i_k - 1) prod_{l<k} n_l.
/// Tensor unfoldings, TT core unfoldings and data-tensor unfoldings all use
/// this convention, which keeps them mutually consistent.
struct MultiIndex {
    std::vector<std::size_t> indices;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::size_t> idx) : indices(std::move(idx)) {}
    MultiIndex(std::initializer_list<std::size_t> idx) : indices(idx) {}

    [[nodiscard]] std::size_t size() const { return indices.size(); }
    [[nodiscard]] bool empty() const { return indices.empty(); }
    std::size_t operator[](std::size_t k) const { return indices[k]; }

    /// (this, other) concatenated.
    [[nodiscard]] MultiIndex joined(const MultiIndex& other) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

std::size_t element_count(std::span<const std::size_t> dims);

/// 1-based single index of a multi-index.
std::size_t multi_to_single(const MultiIndex& mi, std::span<const std::size_t> dims);

/// Inverse of multi_to_single.
MultiIndex single_to_multi(std::size_t index, std::span<const std::size_t> dims);

/// Real dense tensor, column-major with the first mode fastest.
class DenseTensor {
public:
    DenseTensor() = default;
    explicit DenseTensor(ModeSizes dims);
    DenseTensor(ModeSizes dims, Vector data);

    static DenseTensor zeros(ModeSizes dims) { return DenseTensor(std::move(dims)); }

    [[nodiscard]] const ModeSizes& dims() const { return dims_; }
    [[nodiscard]] std::size_t order() const { return dims_.size(); }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(data_.size()); }
    [[nodiscard]] const Vector& data() const { return data_; }
    Vector& data() { return data_; }

    [[nodiscard]] double at(const MultiIndex& mi) const;
    double& at(const MultiIndex& mi);

    [[nodiscard]] double frobenius_norm() const { return data_.norm(); }

private:
    ModeSizes dims_;
    Vector data_;
};

/// Mode-k unfolding: rows linearize (i_1..i_k), columns (i_{k+1}..i_p).
Matrix unfold(const DenseTensor& t, std::size_t k);

/// Inverse of unfold; k = p folds a single column.
DenseTensor fold(const Matrix& m, const ModeSizes& dims, std::size_t k);

} // namespace ttk
