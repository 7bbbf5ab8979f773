#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttk/dense_tensor.hpp"
#include "ttk/linalg.hpp"
#include "ttk/tensor_train.hpp"

namespace ttk {

enum class BasisKind { constant, gaussian, periodic_gaussian, identity, monomial };

/// Univariate basis function acting on one scalar coordinate.
///
///   gaussian:          exp(-(x - c)^2 / (2 s))
///   periodic_gaussian: exp(-sin^2(0.5 (x - c)) / (2 s))
struct BasisFunction {
    BasisKind kind = BasisKind::constant;
    double c = 0.0;
    double s = 1.0;
    int degree = 0;

    static BasisFunction constant() { return {}; }
    static BasisFunction gaussian(double center, double scale);
    static BasisFunction periodic_gaussian(double center, double scale);
    static BasisFunction identity() { return {BasisKind::identity, 0.0, 1.0, 0}; }
    static BasisFunction monomial(int degree);

    [[nodiscard]] double operator()(double x) const;

    friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

/// One TT dimension: the functions psi_{k,1..n_k}, all reading one
/// coordinate (1-based) of the snapshot.
struct BasisDimension {
    std::size_t coordinate = 1;
    std::vector<BasisFunction> functions;

    friend bool operator==(const BasisDimension&, const BasisDimension&) = default;
};

/// Product basis psi_1 (x) ... (x) psi_p.
struct BasisSpec {
    std::vector<BasisDimension> dimensions;

    [[nodiscard]] std::size_t order() const { return dimensions.size(); }
    [[nodiscard]] ModeSizes mode_sizes() const;
    [[nodiscard]] std::size_t max_coordinate() const;
    /// Throws ValidationError if the spec is malformed or reads coordinates
    /// beyond `data_dim` (pass 0 to skip the coordinate check).
    void validate(std::size_t data_dim = 0) const;

    /// n_per_dim Gaussians of scale s per coordinate, centers equidistant on
    /// [lo, hi] (endpoints included), one TT dimension per coordinate.
    static BasisSpec gaussian_grid(std::size_t coordinates, std::size_t n_per_dim, double lo, double hi, double s);

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// [psi_{k,1}(x), ..., psi_{k,n_k}(x)] for 1-based dimension k.
Vector eval_basis_dim(const BasisSpec& spec, std::size_t k, const Eigen::Ref<const Vector>& x);

/// n_k x m matrix of the k-th dimension's functions evaluated at every
/// snapshot column of `data` (d x m).
Matrix eval_basis_dim_all(const BasisSpec& spec, std::size_t k, const Matrix& data);

/// Guard on N*m for dense transformed data matrices.
inline constexpr std::size_t kDenseTransformGuard = 50'000'000;

/// Psi(X) as an N x m matrix, column t = vec(psi_1(x_t) (x) ... (x) psi_p(x_t)).
Matrix dense_transform(const Matrix& data, const BasisSpec& spec);

/// Transformed data tensor in the rank-m TT form built from per-snapshot
/// rank-one terms: first core holds psi_1(x_t) for all t, interior cores are
/// block diagonal with psi_k(x_t) on the diagonal, the last core stacks unit
/// vectors e_t. Interior cores are kept as their diagonals only.
class TransformedDataTT {
public:
    TransformedDataTT(std::vector<Matrix> evaluations);

    /// p + 1
    [[nodiscard]] std::size_t order() const { return evaluations_.size() + 1; }
    [[nodiscard]] Index snapshots() const { return evaluations_.front().cols(); }
    /// (n_1, ..., n_p, m)
    [[nodiscard]] ModeSizes mode_sizes() const;
    /// Interior ranks all equal m.
    [[nodiscard]] std::vector<Index> ranks() const;
    /// n_k x m evaluation matrix of dimension k (1-based).
    [[nodiscard]] const Matrix& evaluations(std::size_t k) const { return evaluations_.at(k - 1); }

    /// Entry at a 1-based (i_1, ..., i_p, t).
    [[nodiscard]] double entry(const MultiIndex& mi) const;

    /// Dense-core tensor train. Interior cores cost m^2 n_k storage, so the
    /// conversion is guarded.
    [[nodiscard]] TensorTrain to_tensor_train() const;

private:
    std::vector<Matrix> evaluations_;
};

/// Guard on the entries of one dense interior core in to_tensor_train.
inline constexpr std::size_t kExactCoreGuard = 20'000'000;

TransformedDataTT transform_exact(const Matrix& data, const BasisSpec& spec);

/// Left-orthonormal cores of the transformed data tensor built one core at a
/// time, plus the r_p x m interface matrix R_p = S_p V_p^T whose rows are time
/// series of the retained functions.
struct StreamedBuild {
    std::vector<Core> u_cores;
    Matrix interface;

    [[nodiscard]] std::vector<Index> ranks() const;
};

struct StreamedOptions {
    double eps = 0.0;
    /// Optional per-bond caps (entry k-1 caps r_k); 0 = uncapped.
    std::vector<Index> max_ranks;
};

/// Sweep R_0 = ones(1, m); for k = 1..p, B_k[(l,i),t] = R_{k-1}[l,t] psi_{k,i}(x_t),
/// B_k = U_k S_k V_k^T truncated, store U_k, R_k = S_k V_k^T. Only the current
/// B_k is ever held, so peak memory is O(max_k r_{k-1} n_k m).
StreamedBuild transform_streamed(const Matrix& data, const BasisSpec& spec, const StreamedOptions& options);
StreamedBuild transform_streamed(const Matrix& data, const BasisSpec& spec, double eps);

// JSON serialization of BasisSpec (schema documented in docs/basis_spec.md).
std::string basis_spec_to_json(const BasisSpec& spec, int indent = 2);
BasisSpec basis_spec_from_json(const std::string& text);
BasisSpec load_basis_spec(const std::string& path);
void save_basis_spec(const BasisSpec& spec, const std::string& path);

} // namespace ttk
