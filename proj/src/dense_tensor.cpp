#include "ttk/dense_tensor.hpp"

#include <string>

#include "ttk/error.hpp"

namespace ttk {

MultiIndex MultiIndex::joined(const MultiIndex& other) const {
    std::vector<std::size_t> all = indices;
    all.insert(all.end(), other.indices.begin(), other.indices.end());
    return MultiIndex(std::move(all));
}

std::size_t element_count(std::span<const std::size_t> dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) n *= d;
    return n;
}

std::size_t multi_to_single(const MultiIndex& mi, std::span<const std::size_t> dims) {
    if (mi.size() != dims.size())
        throw BoundsError("multi-index has " + std::to_string(mi.size()) + " entries, tensor order is " +
                          std::to_string(dims.size()));
    std::size_t flat = 0;
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (mi[k] < 1 || mi[k] > dims[k])
            throw BoundsError("index " + std::to_string(mi[k]) + " out of range 1.." + std::to_string(dims[k]) +
                              " in mode " + std::to_string(k + 1));
        flat += (mi[k] - 1) * stride;
        stride *= dims[k];
    }
    return flat + 1;
}

MultiIndex single_to_multi(std::size_t index, std::span<const std::size_t> dims) {
    const std::size_t total = element_count(dims);
    if (index < 1 || index > total)
        throw BoundsError("flat index " + std::to_string(index) + " out of range 1.." + std::to_string(total));
    std::vector<std::size_t> out(dims.size());
    std::size_t rest = index - 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        out[k] = rest % dims[k] + 1;
        rest /= dims[k];
    }
    return MultiIndex(std::move(out));
}

DenseTensor::DenseTensor(ModeSizes dims) : dims_(std::move(dims)) {
    for (std::size_t d : dims_)
        if (d == 0) throw ArgumentError("tensor mode sizes must be positive");
    data_ = Vector::Zero(static_cast<Index>(element_count(dims_)));
}

DenseTensor::DenseTensor(ModeSizes dims, Vector data) : dims_(std::move(dims)), data_(std::move(data)) {
    for (std::size_t d : dims_)
        if (d == 0) throw ArgumentError("tensor mode sizes must be positive");
    if (static_cast<std::size_t>(data_.size()) != element_count(dims_))
        throw ArgumentError("tensor data length does not match the product of its mode sizes");
}

double DenseTensor::at(const MultiIndex& mi) const {
    return data_(static_cast<Index>(multi_to_single(mi, dims_) - 1));
}

double& DenseTensor::at(const MultiIndex& mi) {
    return data_(static_cast<Index>(multi_to_single(mi, dims_) - 1));
}

Matrix unfold(const DenseTensor& t, std::size_t k) {
    const auto& dims = t.dims();
    if (dims.size() < 2 || k < 1 || k > dims.size() - 1)
        throw ArgumentError("unfold: split position " + std::to_string(k) + " outside 1.." +
                            std::to_string(dims.size() > 0 ? dims.size() - 1 : 0));
    const auto rows = static_cast<Index>(element_count(std::span(dims).first(k)));
    const auto cols = static_cast<Index>(t.size()) / rows;
    // First-index-fastest storage makes the unfolding a plain reshape.
    return Eigen::Map<const Matrix>(t.data().data(), rows, cols);
}

DenseTensor fold(const Matrix& m, const ModeSizes& dims, std::size_t k) {
    if (dims.empty() || k < 1 || k > dims.size()) throw ArgumentError("fold: split position out of range");
    const auto rows = static_cast<Index>(element_count(std::span(dims).first(k)));
    const auto cols = static_cast<Index>(element_count(std::span(dims).subspan(k)));
    if (m.rows() != rows || m.cols() != cols)
        throw ArgumentError("fold: matrix shape does not match mode sizes");
    return DenseTensor(dims, Eigen::Map<const Vector>(m.data(), m.size()));
}

} // namespace ttk
