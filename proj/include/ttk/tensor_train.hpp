#pragma once

#include <cstddef>
#include <vector>

#include "ttk/dense_tensor.hpp"
#include "ttk/linalg.hpp"

namespace ttk {

/// Order-3 TT core of shape r_left x n x r_right.
///
/// Entries are stored so that both standard unfoldings are plain reshapes:
/// the left unfolding is (r_left*n) x r_right with row l + r_left*i, the
/// right unfolding is r_left x (n*r_right) with column i + n*j.
/// Core element access is 0-based.
class Core {
public:
    Core() = default;
    Core(Index r_left, Index n, Index r_right);

    static Core from_left_unfolding(Matrix m, Index r_left, Index n);
    static Core from_right_unfolding(const Matrix& m, Index n, Index r_right);

    [[nodiscard]] Index r_left() const { return r_left_; }
    [[nodiscard]] Index n() const { return n_; }
    [[nodiscard]] Index r_right() const { return left_.cols(); }

    double operator()(Index l, Index i, Index j) const { return left_(l + r_left_ * i, j); }
    double& operator()(Index l, Index i, Index j) { return left_(l + r_left_ * i, j); }

    [[nodiscard]] const Matrix& left_unfolding() const { return left_; }
    [[nodiscard]] Matrix right_unfolding() const;
    /// The r_left x r_right matrix T(:, i, :).
    [[nodiscard]] Matrix slice(Index i) const;

private:
    Index r_left_ = 0;
    Index n_ = 0;
    Matrix left_;
};

/// Tensor train T = [[T^(1)]] (x) ... (x) [[T^(p)]] with r_0 = r_p = 1.
class TensorTrain {
public:
    TensorTrain() = default;
    explicit TensorTrain(std::vector<Core> cores);

    [[nodiscard]] std::size_t order() const { return cores_.size(); }
    [[nodiscard]] ModeSizes mode_sizes() const;
    /// (r_0, ..., r_p)
    [[nodiscard]] std::vector<Index> ranks() const;
    /// 0-based position k = 0..order()-1.
    [[nodiscard]] const Core& core(std::size_t k) const { return cores_.at(k); }
    [[nodiscard]] const std::vector<Core>& cores() const { return cores_; }

private:
    std::vector<Core> cores_;
};

/// Guard on dense materialization (entries).
inline constexpr std::size_t kDenseGuard = 10'000'000;

double tt_entry(const TensorTrain& tt, const MultiIndex& mi);
DenseTensor tt_to_dense(const TensorTrain& tt);

/// Sequential TT-SVD with relative threshold eps per split.
TensorTrain tt_from_dense(const DenseTensor& t, double eps);

struct TruncationOptions {
    /// Relative threshold at every split (0 = drop only numerical zeros).
    double eps = 0.0;
    /// When false, eps is applied only by global_svd's final SVD; the
    /// orthonormalization sweep then drops numerical zeros only.
    bool truncate_sweep = true;
    /// Optional per-bond rank caps (bond k between cores k and k+1,
    /// 1-based; entry k-1). Empty = uncapped, 0 = uncapped for that bond.
    std::vector<Index> max_ranks;
};

/// Exact right-to-left QR sweep: cores 2..p become right-orthonormal.
TensorTrain right_orthonormalize(const TensorTrain& tt);

/// Makes cores 1..p-1 left-orthonormal by an SVD sweep. A right-orthonormal
/// QR sweep runs first so that the singular values seen at each split are
/// those of the tensor's unfolding; the discarded tails then bound the
/// relative Frobenius error by eps * sqrt(p - 1).
TensorTrain left_orthonormalize(const TensorTrain& tt, const TruncationOptions& options);
TensorTrain left_orthonormalize(const TensorTrain& tt, double eps);

/// Last core r_{p-1} x n_p as a matrix.
Matrix last_core_matrix(const TensorTrain& tt);

/// SVD of the mode-p unfolding of an order-(p+1) tensor train:
/// unfold(T, p) = U diag(sigma) V^T, U given as left-orthonormal cores.
struct GlobalSVD {
    std::vector<Core> u_cores;
    Vector sigma;
    Matrix v;

    [[nodiscard]] Index rank() const { return sigma.size(); }
    /// U as a dense (n_1...n_p) x r matrix (guarded).
    [[nodiscard]] Matrix u_matrix() const;
    /// U^T U by contracting the segment with itself.
    [[nodiscard]] Matrix u_gram() const;
};

GlobalSVD global_svd(const TensorTrain& tt, const TruncationOptions& options);
GlobalSVD global_svd(const TensorTrain& tt, double eps);

/// Dense (n_1...n_k) x r_k matrix represented by a chain of cores with an
/// open last rank (guarded).
Matrix segment_matrix(const std::vector<Core>& cores);

/// S^T S for the segment matrix S, computed core by core.
Matrix segment_gram(const std::vector<Core>& cores);

} // namespace ttk
