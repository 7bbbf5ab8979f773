#include "ttk/tensor_train.hpp"

#include <algorithm>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

Core::Core(Index r_left, Index n, Index r_right)
    : r_left_(r_left), n_(n), left_(Matrix::Zero(r_left * n, r_right)) {
    if (r_left < 1 || n < 1 || r_right < 1) throw ArgumentError("core dimensions must be positive");
}

Core Core::from_left_unfolding(Matrix m, Index r_left, Index n) {
    if (r_left < 1 || n < 1 || m.rows() != r_left * n || m.cols() < 1)
        throw ArgumentError("left unfolding shape does not match core dimensions");
    Core c;
    c.r_left_ = r_left;
    c.n_ = n;
    c.left_ = std::move(m);
    return c;
}

Core Core::from_right_unfolding(const Matrix& m, Index n, Index r_right) {
    if (n < 1 || r_right < 1 || m.cols() != n * r_right || m.rows() < 1)
        throw ArgumentError("right unfolding shape does not match core dimensions");
    return from_left_unfolding(Eigen::Map<const Matrix>(m.data(), m.rows() * n, r_right), m.rows(), n);
}

Matrix Core::right_unfolding() const {
    return Eigen::Map<const Matrix>(left_.data(), r_left_, n_ * left_.cols());
}

Matrix Core::slice(Index i) const {
    using Strided = Eigen::Map<const Matrix, 0, Eigen::OuterStride<>>;
    return Strided(left_.data() + r_left_ * i, r_left_, left_.cols(), Eigen::OuterStride<>(r_left_ * n_));
}

TensorTrain::TensorTrain(std::vector<Core> cores) : cores_(std::move(cores)) {
    if (cores_.empty()) throw ArgumentError("tensor train needs at least one core");
    if (cores_.front().r_left() != 1 || cores_.back().r_right() != 1)
        throw ArgumentError("tensor train boundary ranks must be 1");
    for (std::size_t k = 0; k + 1 < cores_.size(); ++k)
        if (cores_[k].r_right() != cores_[k + 1].r_left())
            throw ArgumentError("rank mismatch between cores " + std::to_string(k + 1) + " and " +
                                std::to_string(k + 2));
}

ModeSizes TensorTrain::mode_sizes() const {
    ModeSizes dims;
    dims.reserve(cores_.size());
    for (const auto& c : cores_) dims.push_back(static_cast<std::size_t>(c.n()));
    return dims;
}

std::vector<Index> TensorTrain::ranks() const {
    std::vector<Index> r{1};
    for (const auto& c : cores_) r.push_back(c.r_right());
    return r;
}

double tt_entry(const TensorTrain& tt, const MultiIndex& mi) {
    const ModeSizes dims = tt.mode_sizes();
    multi_to_single(mi, dims); // bounds check
    Eigen::RowVectorXd chain = Eigen::RowVectorXd::Ones(1);
    for (std::size_t k = 0; k < tt.order(); ++k)
        chain = chain * tt.core(k).slice(static_cast<Index>(mi[k] - 1));
    return chain(0);
}

Matrix segment_matrix(const std::vector<Core>& cores) {
    std::size_t rows = 1;
    for (const auto& c : cores) rows *= static_cast<std::size_t>(c.n());
    const std::size_t width = cores.empty() ? 1 : static_cast<std::size_t>(cores.back().r_right());
    if (rows * width > kDenseGuard)
        throw CapacityError("segment has " + std::to_string(rows * width) + " entries, above the dense guard");

    Matrix left = Matrix::Ones(1, 1);
    for (const auto& c : cores) {
        if (c.r_left() != left.cols()) throw ArgumentError("segment cores do not chain");
        const Index prev = left.rows();
        Matrix next(prev * c.n(), c.r_right());
        for (Index i = 0; i < c.n(); ++i) next.middleRows(i * prev, prev) = left * c.slice(i);
        left = std::move(next);
    }
    return left;
}

Matrix segment_gram(const std::vector<Core>& cores) {
    Matrix gram = Matrix::Ones(1, 1);
    for (const auto& c : cores) {
        Matrix next = Matrix::Zero(c.r_right(), c.r_right());
        for (Index i = 0; i < c.n(); ++i) {
            const Matrix s = c.slice(i);
            next.noalias() += s.transpose() * gram * s;
        }
        gram = std::move(next);
    }
    return gram;
}

DenseTensor tt_to_dense(const TensorTrain& tt) {
    const ModeSizes dims = tt.mode_sizes();
    if (element_count(dims) > kDenseGuard)
        throw CapacityError("tensor has " + std::to_string(element_count(dims)) + " entries, above the dense guard");
    const Matrix flat = segment_matrix(tt.cores());
    return DenseTensor(dims, Eigen::Map<const Vector>(flat.data(), flat.size()));
}

TensorTrain tt_from_dense(const DenseTensor& t, double eps) {
    if (t.size() == 0) throw ArgumentError("tt_from_dense: empty tensor");
    const ModeSizes& dims = t.dims();
    const std::size_t p = dims.size();
    std::vector<Core> cores;
    cores.reserve(p);
    Matrix rest = Eigen::Map<const Matrix>(t.data().data(), 1, t.data().size());
    Index r_prev = 1;
    for (std::size_t k = 0; k + 1 < p; ++k) {
        const auto n = static_cast<Index>(dims[k]);
        const Matrix unfolded = Eigen::Map<const Matrix>(rest.data(), r_prev * n, rest.size() / (r_prev * n));
        const Svd svd = thin_svd(unfolded);
        const Index r = retained_rank(svd.s, eps, Truncation::relative_tail);
        cores.push_back(Core::from_left_unfolding(svd.u.leftCols(r), r_prev, n));
        rest = svd.s.head(r).asDiagonal() * svd.v.leftCols(r).transpose();
        r_prev = r;
    }
    cores.push_back(Core::from_right_unfolding(rest, static_cast<Index>(dims.back()), 1));
    return TensorTrain(std::move(cores));
}

TensorTrain right_orthonormalize(const TensorTrain& tt) {
    std::vector<Core> cores = tt.cores();
    for (std::size_t k = cores.size() - 1; k >= 1; --k) {
        const Core& c = cores[k];
        const Matrix right = c.right_unfolding();
        // right = R^T Q^T with Q^T having orthonormal rows
        Eigen::HouseholderQR<Matrix> qr(right.transpose());
        const Index r = std::min(right.rows(), right.cols());
        const Matrix q = qr.householderQ() * Matrix::Identity(right.cols(), r);
        const Matrix rt = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>().toDenseMatrix().transpose();
        cores[k] = Core::from_right_unfolding(q.transpose(), c.n(), c.r_right());
        const Core& prev = cores[k - 1];
        cores[k - 1] = Core::from_left_unfolding(prev.left_unfolding() * rt, prev.r_left(), prev.n());
    }
    return TensorTrain(std::move(cores));
}

namespace {

Index bond_cap(const TruncationOptions& options, std::size_t bond) {
    if (bond == 0 || bond > options.max_ranks.size()) return 0;
    return options.max_ranks[bond - 1];
}

} // namespace

TensorTrain left_orthonormalize(const TensorTrain& tt, const TruncationOptions& options) {
    if (options.eps < 0.0) throw ArgumentError("truncation threshold must be non-negative");
    std::vector<Core> cores = right_orthonormalize(tt).cores();
    const double eps = options.truncate_sweep ? options.eps : 0.0;
    for (std::size_t k = 0; k + 1 < cores.size(); ++k) {
        const Core& c = cores[k];
        const Svd svd = thin_svd(c.left_unfolding());
        const Index r = retained_rank(svd.s, eps, Truncation::relative_tail, bond_cap(options, k + 1));
        cores[k] = Core::from_left_unfolding(svd.u.leftCols(r), c.r_left(), c.n());
        const Matrix carry = svd.s.head(r).asDiagonal() * svd.v.leftCols(r).transpose();
        const Core& next = cores[k + 1];
        cores[k + 1] = Core::from_right_unfolding(carry * next.right_unfolding(), next.n(), next.r_right());
    }
    return TensorTrain(std::move(cores));
}

TensorTrain left_orthonormalize(const TensorTrain& tt, double eps) {
    TruncationOptions options;
    options.eps = eps;
    return left_orthonormalize(tt, options);
}

Matrix last_core_matrix(const TensorTrain& tt) {
    return tt.cores().back().right_unfolding();
}

Matrix GlobalSVD::u_matrix() const { return segment_matrix(u_cores); }

Matrix GlobalSVD::u_gram() const { return segment_gram(u_cores); }

GlobalSVD global_svd(const TensorTrain& tt, const TruncationOptions& options) {
    if (tt.order() < 2) throw ArgumentError("global_svd needs a tensor train of order >= 2");
    const TensorTrain ortho = left_orthonormalize(tt, options);
    const Svd svd = thin_svd(last_core_matrix(ortho));
    if (svd.s.size() == 0 || !(svd.s(0) > 0.0)) throw DegenerateError("global_svd: tensor is zero");
    const Index r = retained_rank(svd.s, options.eps, Truncation::relative_tail,
                                  bond_cap(options, tt.order() - 1));

    std::vector<Core> u(ortho.cores().begin(), ortho.cores().end() - 1);
    const Core& last = u.back();
    u.back() = Core::from_left_unfolding(last.left_unfolding() * svd.u.leftCols(r), last.r_left(), last.n());
    return GlobalSVD{std::move(u), svd.s.head(r), svd.v.leftCols(r)};
}

GlobalSVD global_svd(const TensorTrain& tt, double eps) {
    TruncationOptions options;
    options.eps = eps;
    return global_svd(tt, options);
}

} // namespace ttk
