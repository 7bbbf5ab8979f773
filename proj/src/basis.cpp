#include "ttk/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

BasisFunction BasisFunction::gaussian(double center, double scale) {
    if (!(scale > 0.0)) throw ValidationError("gaussian scale must be positive");
    return {BasisKind::gaussian, center, scale, 0};
}

BasisFunction BasisFunction::periodic_gaussian(double center, double scale) {
    if (!(scale > 0.0)) throw ValidationError("periodic_gaussian scale must be positive");
    return {BasisKind::periodic_gaussian, center, scale, 0};
}

BasisFunction BasisFunction::monomial(int degree) {
    if (degree < 0) throw ValidationError("monomial degree must be non-negative");
    return {BasisKind::monomial, 0.0, 1.0, degree};
}

double BasisFunction::operator()(double x) const {
    switch (kind) {
    case BasisKind::constant:
        return 1.0;
    case BasisKind::gaussian: {
        const double d = x - c;
        return std::exp(-d * d / (2.0 * s));
    }
    case BasisKind::periodic_gaussian: {
        const double sn = std::sin(0.5 * (x - c));
        return std::exp(-sn * sn / (2.0 * s));
    }
    case BasisKind::identity:
        return x;
    case BasisKind::monomial:
        return std::pow(x, degree);
    }
    return 0.0;
}

ModeSizes BasisSpec::mode_sizes() const {
    ModeSizes n;
    n.reserve(dimensions.size());
    for (const auto& dim : dimensions) n.push_back(dim.functions.size());
    return n;
}

std::size_t BasisSpec::max_coordinate() const {
    std::size_t c = 0;
    for (const auto& dim : dimensions) c = std::max(c, dim.coordinate);
    return c;
}

void BasisSpec::validate(std::size_t data_dim) const {
    if (dimensions.empty()) throw ValidationError("basis spec has no dimensions");
    for (std::size_t k = 0; k < dimensions.size(); ++k) {
        const auto& dim = dimensions[k];
        const std::string where = "basis dimension " + std::to_string(k + 1);
        if (dim.functions.empty()) throw ValidationError(where + " has no functions");
        if (dim.coordinate < 1) throw ValidationError(where + ": coordinate indices are 1-based");
        if (data_dim > 0 && dim.coordinate > data_dim)
            throw ValidationError(where + " reads coordinate " + std::to_string(dim.coordinate) +
                                  " but snapshots have " + std::to_string(data_dim));
        for (const auto& f : dim.functions) {
            if ((f.kind == BasisKind::gaussian || f.kind == BasisKind::periodic_gaussian) && !(f.s > 0.0))
                throw ValidationError(where + ": gaussian scale must be positive");
            if (f.kind == BasisKind::monomial && f.degree < 0)
                throw ValidationError(where + ": monomial degree must be non-negative");
        }
    }
}

BasisSpec BasisSpec::gaussian_grid(std::size_t coordinates, std::size_t n_per_dim, double lo, double hi, double s) {
    if (n_per_dim < 1) throw ArgumentError("gaussian_grid needs at least one function per dimension");
    BasisSpec spec;
    for (std::size_t c = 1; c <= coordinates; ++c) {
        BasisDimension dim{c, {}};
        for (std::size_t i = 0; i < n_per_dim; ++i) {
            const double t = n_per_dim == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(n_per_dim - 1);
            dim.functions.push_back(BasisFunction::gaussian(lo + (hi - lo) * t, s));
        }
        spec.dimensions.push_back(std::move(dim));
    }
    return spec;
}

namespace {

const BasisDimension& dimension_at(const BasisSpec& spec, std::size_t k) {
    if (k < 1 || k > spec.order())
        throw BoundsError("basis dimension " + std::to_string(k) + " outside 1.." + std::to_string(spec.order()));
    return spec.dimensions[k - 1];
}

double read_coordinate(const BasisDimension& dim, const double* snapshot, Index d) {
    if (static_cast<Index>(dim.coordinate) > d || dim.coordinate < 1)
        throw BoundsError("snapshot has " + std::to_string(d) + " coordinates, basis reads coordinate " +
                          std::to_string(dim.coordinate));
    const double x = snapshot[dim.coordinate - 1];
    if (!std::isfinite(x)) throw DataError("non-finite snapshot entry in coordinate " + std::to_string(dim.coordinate));
    return x;
}

} // namespace

Vector eval_basis_dim(const BasisSpec& spec, std::size_t k, const Eigen::Ref<const Vector>& x) {
    const BasisDimension& dim = dimension_at(spec, k);
    const Vector snapshot = x;
    const double v = read_coordinate(dim, snapshot.data(), snapshot.size());
    Vector out(static_cast<Index>(dim.functions.size()));
    for (std::size_t i = 0; i < dim.functions.size(); ++i) out(static_cast<Index>(i)) = dim.functions[i](v);
    return out;
}

Matrix eval_basis_dim_all(const BasisSpec& spec, std::size_t k, const Matrix& data) {
    const BasisDimension& dim = dimension_at(spec, k);
    const auto n = static_cast<Index>(dim.functions.size());
    Matrix out(n, data.cols());
    for (Index t = 0; t < data.cols(); ++t) {
        const double v = read_coordinate(dim, data.col(t).data(), data.rows());
        for (Index i = 0; i < n; ++i) out(i, t) = dim.functions[static_cast<std::size_t>(i)](v);
    }
    return out;
}

Matrix dense_transform(const Matrix& data, const BasisSpec& spec) {
    spec.validate();
    const std::size_t total = element_count(spec.mode_sizes());
    if (total * static_cast<std::size_t>(data.cols()) > kDenseTransformGuard)
        throw CapacityError("dense transform would hold " + std::to_string(total * data.cols()) + " entries");
    std::vector<Matrix> evals;
    for (std::size_t k = 1; k <= spec.order(); ++k) evals.push_back(eval_basis_dim_all(spec, k, data));

    Matrix out(static_cast<Index>(total), data.cols());
    Vector column;
    for (Index t = 0; t < data.cols(); ++t) {
        column = evals[0].col(t);
        for (std::size_t k = 1; k < evals.size(); ++k) {
            const Index inner = column.size();
            const Index n = evals[k].rows();
            Vector next(inner * n);
            for (Index i = 0; i < n; ++i) next.segment(i * inner, inner) = evals[k](i, t) * column;
            column = std::move(next);
        }
        out.col(t) = column;
    }
    return out;
}

TransformedDataTT::TransformedDataTT(std::vector<Matrix> evaluations) : evaluations_(std::move(evaluations)) {
    if (evaluations_.empty()) throw ArgumentError("transformed data tensor needs at least one basis dimension");
    const Index m = evaluations_.front().cols();
    if (m < 1) throw ArgumentError("transformed data tensor needs at least one snapshot");
    for (const auto& e : evaluations_)
        if (e.cols() != m || e.rows() < 1) throw ArgumentError("evaluation matrices must share the snapshot count");
}

ModeSizes TransformedDataTT::mode_sizes() const {
    ModeSizes dims;
    for (const auto& e : evaluations_) dims.push_back(static_cast<std::size_t>(e.rows()));
    dims.push_back(static_cast<std::size_t>(snapshots()));
    return dims;
}

std::vector<Index> TransformedDataTT::ranks() const {
    std::vector<Index> r(order() + 1, snapshots());
    r.front() = 1;
    r.back() = 1;
    return r;
}

double TransformedDataTT::entry(const MultiIndex& mi) const {
    multi_to_single(mi, mode_sizes()); // bounds check
    const auto t = static_cast<Index>(mi[evaluations_.size()] - 1);
    double v = 1.0;
    for (std::size_t k = 0; k < evaluations_.size(); ++k) v *= evaluations_[k](static_cast<Index>(mi[k] - 1), t);
    return v;
}

TensorTrain TransformedDataTT::to_tensor_train() const {
    const Index m = snapshots();
    for (const auto& e : evaluations_)
        if (static_cast<std::size_t>(m * m * e.rows()) > kExactCoreGuard)
            throw CapacityError("dense interior core of size " + std::to_string(m) + "x" + std::to_string(e.rows()) +
                                "x" + std::to_string(m) + " exceeds the guard; use the streamed build");
    std::vector<Core> cores;
    const Matrix& first = evaluations_.front();
    Core c1(1, first.rows(), m);
    for (Index i = 0; i < first.rows(); ++i)
        for (Index t = 0; t < m; ++t) c1(0, i, t) = first(i, t);
    cores.push_back(std::move(c1));
    for (std::size_t k = 1; k < evaluations_.size(); ++k) {
        const Matrix& e = evaluations_[k];
        Core c(m, e.rows(), m);
        for (Index i = 0; i < e.rows(); ++i)
            for (Index t = 0; t < m; ++t) c(t, i, t) = e(i, t);
        cores.push_back(std::move(c));
    }
    Core last(m, m, 1);
    for (Index t = 0; t < m; ++t) last(t, t, 0) = 1.0;
    cores.push_back(std::move(last));
    return TensorTrain(std::move(cores));
}

TransformedDataTT transform_exact(const Matrix& data, const BasisSpec& spec) {
    spec.validate(static_cast<std::size_t>(data.rows()));
    std::vector<Matrix> evals;
    evals.reserve(spec.order());
    for (std::size_t k = 1; k <= spec.order(); ++k) evals.push_back(eval_basis_dim_all(spec, k, data));
    return TransformedDataTT(std::move(evals));
}

std::vector<Index> StreamedBuild::ranks() const {
    std::vector<Index> r{1};
    for (const auto& c : u_cores) r.push_back(c.r_right());
    return r;
}

StreamedBuild transform_streamed(const Matrix& data, const BasisSpec& spec, const StreamedOptions& options) {
    if (options.eps < 0.0) throw ArgumentError("truncation threshold must be non-negative");
    spec.validate(static_cast<std::size_t>(data.rows()));
    const Index m = data.cols();
    if (m < 1) throw ArgumentError("transform_streamed needs at least one snapshot");

    StreamedBuild out;
    Matrix carry = Matrix::Ones(1, m);
    for (std::size_t k = 1; k <= spec.order(); ++k) {
        const Matrix e = eval_basis_dim_all(spec, k, data);
        const Index r = carry.rows();
        const Index n = e.rows();
        Matrix b(r * n, m);
        for (Index i = 0; i < n; ++i) b.middleRows(i * r, r) = carry.array().rowwise() * e.row(i).array();

        const Svd svd = thin_svd(b);
        const Index cap = k <= options.max_ranks.size() ? options.max_ranks[k - 1] : 0;
        const Index keep = retained_rank(svd.s, options.eps, Truncation::relative_tail, cap);
        out.u_cores.push_back(Core::from_left_unfolding(svd.u.leftCols(keep), r, n));
        carry = svd.s.head(keep).asDiagonal() * svd.v.leftCols(keep).transpose();
    }
    out.interface = std::move(carry);
    return out;
}

StreamedBuild transform_streamed(const Matrix& data, const BasisSpec& spec, double eps) {
    return transform_streamed(data, spec, StreamedOptions{.eps = eps, .max_ranks = {}});
}

} // namespace ttk
