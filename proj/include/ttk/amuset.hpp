#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ttk/amuse.hpp"
#include "ttk/basis.hpp"
#include "ttk/hocur.hpp"
#include "ttk/subspace.hpp"
#include "ttk/tensor_train.hpp"

namespace ttk {

/// Trajectory matrix Z (d x m~) with 1-based snapshot index lists so that
/// X = Z[:, I_X] and Y = Z[:, I_Y].
struct TrajectoryPair {
    Matrix z;
    std::vector<std::size_t> ix;
    std::vector<std::size_t> iy;

    /// Z = [X, Y], I_X = 1..m, I_Y = m+1..2m.
    static TrajectoryPair from_pair(const Matrix& x, const Matrix& y);
    /// I_X = 1..m~-lag, I_Y = 1+lag..m~.
    static TrajectoryPair sliding(Matrix z, std::size_t lag);

    void validate() const;
    [[nodiscard]] Index snapshots() const { return static_cast<Index>(ix.size()); }
    [[nodiscard]] Matrix x() const;
    [[nodiscard]] Matrix y() const;
};

enum class TransformMethod { exact, streamed, hocur };

TransformMethod parse_method(const std::string& name);
const char* method_name(TransformMethod method);

struct AmusetOptions {
    /// Relative truncation of the tensor-train ranks.
    double eps = 0.0;
    TransformMethod method = TransformMethod::exact;
    HocurConfig hocur;
    /// Number of eigenpairs reported (0 = all retained).
    Index q = 0;
    bool symmetrize = false;
    /// Relative threshold of the pseudo-inverse of Sigma_X (0 = numerical zeros only).
    double pinv_tol = 0.0;
    /// See TruncationOptions::truncate_sweep.
    bool truncate_sweep = true;
    /// Optional per-bond caps r_1..r_p.
    std::vector<Index> max_ranks;
    /// Keep the factors of the eigentensors.
    bool keep_eigentensors = false;
};

/// Left-orthonormal cores U_1..U_p of Psi(Z) and the r_p x m~ interface
/// matrix R with Psi(Z) = U R.
struct DataTensorFactors {
    std::vector<Core> u_cores;
    Matrix interface;
    std::optional<HocurReport> hocur_report;

    [[nodiscard]] std::vector<Index> ranks() const;
};

DataTensorFactors build_data_tensor(const Matrix& z, const BasisSpec& spec, const AmusetOptions& options);

/// Eigentensors as U (segment) times coefficients (r_p x q).
struct Eigentensors {
    std::vector<Core> segment;
    ComplexMatrix coefficients;

    /// Dense N x q matrix of eigenvectors (guarded).
    [[nodiscard]] ComplexMatrix dense() const;
};

struct AmusetResult {
    SpectralResult spectral;
    std::optional<Eigentensors> eigentensors;
    std::optional<HocurReport> hocur_report;
};

AmusetResult amuset_edmd(const TrajectoryPair& data, const BasisSpec& spec, const AmusetOptions& options);

AmusetResult amuset_cca(const Matrix& x, const Matrix& y, const BasisSpec& spec_x, const BasisSpec& spec_y,
                        const AmusetOptions& options);

/// t_k = -tau / ln(Re lambda_k). +inf for lambda >= 1 - 1e-12, NaN for
/// Re lambda <= 0 or |Im lambda| / |lambda| > 1e-6.
std::vector<double> implied_timescales(const ComplexVector& values, double tau);
std::vector<double> implied_timescales(const Vector& values, double tau);

enum class TwoState : char { A = 'A', B = 'B' };

/// A where phi2 - median(phi2) >= 0, B otherwise.
std::vector<TwoState> assign_two_state(const Vector& phi2);

/// Draws a d x m data matrix.
using Sampler = std::function<Matrix(Index m)>;

/// For each m: streamed build at the given fixed ranks on sampler(m), the
/// U segment as an orthonormal basis of R^N, and its distance to
/// `reference` (default: the subspace at the largest m).
std::vector<double> empirical_subspace_convergence(const Sampler& sampler, const BasisSpec& spec,
                                                   const std::vector<Index>& ranks, const std::vector<Index>& m_list,
                                                   const std::optional<OrthonormalBasis>& reference = std::nullopt);

} // namespace ttk
