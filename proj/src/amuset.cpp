#include "ttk/amuset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

TrajectoryPair TrajectoryPair::from_pair(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ArgumentError("trajectory pair: X and Y must have the same shape");
    TrajectoryPair out;
    out.z.resize(x.rows(), x.cols() + y.cols());
    out.z << x, y;
    const auto m = static_cast<std::size_t>(x.cols());
    for (std::size_t t = 1; t <= m; ++t) {
        out.ix.push_back(t);
        out.iy.push_back(m + t);
    }
    return out;
}

TrajectoryPair TrajectoryPair::sliding(Matrix z, std::size_t lag) {
    const auto total = static_cast<std::size_t>(z.cols());
    if (lag >= total)
        throw ArgumentError("lag " + std::to_string(lag) + " must be smaller than the trajectory length " +
                            std::to_string(total));
    TrajectoryPair out;
    out.z = std::move(z);
    for (std::size_t t = 1; t + lag <= total; ++t) {
        out.ix.push_back(t);
        out.iy.push_back(t + lag);
    }
    return out;
}

void TrajectoryPair::validate() const {
    if (ix.size() != iy.size()) throw ValidationError("trajectory pair: I_X and I_Y differ in length");
    if (ix.empty()) throw ValidationError("trajectory pair: no snapshot pairs");
    const auto total = static_cast<std::size_t>(z.cols());
    for (const auto* set : {&ix, &iy})
        for (std::size_t t : *set)
            if (t < 1 || t > total)
                throw ValidationError("trajectory pair: snapshot index " + std::to_string(t) + " outside 1.." +
                                      std::to_string(total));
}

Matrix TrajectoryPair::x() const {
    Matrix out(z.rows(), snapshots());
    for (Index t = 0; t < snapshots(); ++t) out.col(t) = z.col(static_cast<Index>(ix[static_cast<std::size_t>(t)] - 1));
    return out;
}

Matrix TrajectoryPair::y() const {
    Matrix out(z.rows(), snapshots());
    for (Index t = 0; t < snapshots(); ++t) out.col(t) = z.col(static_cast<Index>(iy[static_cast<std::size_t>(t)] - 1));
    return out;
}

TransformMethod parse_method(const std::string& name) {
    if (name == "exact") return TransformMethod::exact;
    if (name == "streamed") return TransformMethod::streamed;
    if (name == "hocur") return TransformMethod::hocur;
    throw ValidationError("unknown method '" + name + "' (expected exact, streamed or hocur)");
}

const char* method_name(TransformMethod method) {
    switch (method) {
    case TransformMethod::exact: return "exact";
    case TransformMethod::streamed: return "streamed";
    case TransformMethod::hocur: return "hocur";
    }
    return "?";
}

std::vector<Index> DataTensorFactors::ranks() const {
    std::vector<Index> r{1};
    for (const auto& c : u_cores) r.push_back(c.r_right());
    r.push_back(1);
    return r;
}

DataTensorFactors build_data_tensor(const Matrix& z, const BasisSpec& spec, const AmusetOptions& options) {
    if (options.eps < 0.0) throw ArgumentError("eps must be non-negative");
    DataTensorFactors out;
    if (options.method == TransformMethod::streamed) {
        StreamedBuild build = transform_streamed(z, spec, StreamedOptions{options.eps, options.max_ranks});
        out.u_cores = std::move(build.u_cores);
        out.interface = std::move(build.interface);
        return out;
    }
    TensorTrain tt;
    if (options.method == TransformMethod::exact) {
        tt = transform_exact(z, spec).to_tensor_train();
    } else {
        HocurResult h = hocur(z, spec, options.hocur);
        tt = std::move(h.tt);
        out.hocur_report = std::move(h.report);
    }
    TruncationOptions trunc{options.eps, options.truncate_sweep, options.max_ranks};
    const TensorTrain lo = left_orthonormalize(tt, trunc);
    out.u_cores.assign(lo.cores().begin(), lo.cores().end() - 1);
    out.interface = last_core_matrix(lo);
    return out;
}

ComplexMatrix Eigentensors::dense() const {
    return segment_matrix(segment).cast<std::complex<double>>() * coefficients;
}

namespace {

Matrix select_snapshots(const Matrix& r, const std::vector<std::size_t>& idx) {
    Matrix out(r.rows(), static_cast<Index>(idx.size()));
    for (std::size_t t = 0; t < idx.size(); ++t) out.col(static_cast<Index>(t)) = r.col(static_cast<Index>(idx[t] - 1));
    return out;
}

Svd interface_svd(const Matrix& r, double pinv_tol, const char* what) {
    if (r.size() == 0 || r.squaredNorm() == 0.0) throw DegenerateError(std::string(what) + ": rank collapsed to zero");
    const Svd svd = thin_svd(r);
    return truncate(svd, retained_rank(svd.s, pinv_tol, Truncation::relative_value));
}

Index requested(Index q, Index available) {
    if (q < 0) throw ArgumentError("q must be non-negative");
    if (q > available)
        throw ArgumentError("q = " + std::to_string(q) + " exceeds the retained rank " + std::to_string(available));
    return q == 0 ? available : q;
}

} // namespace

AmusetResult amuset_edmd(const TrajectoryPair& data, const BasisSpec& spec, const AmusetOptions& options) {
    data.validate();
    DataTensorFactors factors = build_data_tensor(data.z, spec, options);
    const Matrix mx = select_snapshots(factors.interface, data.ix);
    const Matrix my = select_snapshots(factors.interface, data.iy);

    const Svd svd = interface_svd(mx, options.pinv_tol, "amuset_edmd");
    const Index r = svd.s.size();
    const Index keep = requested(options.q, r);
    const Vector inv_s = svd.s.cwiseInverse();
    Matrix m = svd.v.transpose() * (my.transpose() * svd.u) * inv_s.asDiagonal();
    if (options.symmetrize) m = 0.5 * (m + m.transpose()).eval();

    ComplexVector values;
    ComplexMatrix vectors;
    reduced_eigensystem(m, options.symmetrize, values, vectors);

    AmusetResult out;
    SpectralResult& s = out.spectral;
    s.kind = SpectralKind::edmd;
    s.values = values.head(keep);
    s.reduced_vectors = vectors.leftCols(keep);
    s.eigenfunctions = s.reduced_vectors.transpose() * svd.v.transpose().cast<std::complex<double>>();
    s.ranks = factors.ranks();
    s.reduced_rank = r;
    s.truncation = options.eps;
    s.symmetrized = options.symmetrize;
    if (options.keep_eigentensors) {
        const Matrix back = svd.u * inv_s.asDiagonal();
        out.eigentensors = Eigentensors{factors.u_cores, back.cast<std::complex<double>>() * s.reduced_vectors};
    }
    out.hocur_report = std::move(factors.hocur_report);
    return out;
}

AmusetResult amuset_cca(const Matrix& x, const Matrix& y, const BasisSpec& spec_x, const BasisSpec& spec_y,
                        const AmusetOptions& options) {
    if (x.cols() != y.cols()) throw ArgumentError("amuset_cca: X and Y need the same snapshot count");
    if (x.cols() < 1) throw ArgumentError("amuset_cca: no snapshots");
    DataTensorFactors fx = build_data_tensor(x, spec_x, options);
    DataTensorFactors fy = build_data_tensor(y, spec_y, options);
    const Svd sx = interface_svd(fx.interface, options.pinv_tol, "amuset_cca");
    const Svd sy = interface_svd(fy.interface, options.pinv_tol, "amuset_cca");

    const Svd inner = thin_svd(sy.v.transpose() * sx.v);
    const Index keep = requested(options.q, inner.s.size());

    AmusetResult out;
    SpectralResult& s = out.spectral;
    s.kind = SpectralKind::cca;
    s.singular_values = inner.s.head(keep);
    s.values = s.singular_values.cwiseAbs2().cast<std::complex<double>>();
    const Matrix w = inner.v.leftCols(keep);
    s.reduced_vectors = w.cast<std::complex<double>>();
    s.eigenfunctions = (sx.v * w).transpose().cast<std::complex<double>>();
    s.ranks = fx.ranks();
    const auto ry = fy.ranks();
    s.ranks.insert(s.ranks.end(), ry.begin(), ry.end());
    s.reduced_rank = inner.s.size();
    s.truncation = options.eps;
    if (options.keep_eigentensors) {
        const Matrix back = sx.u * sx.s.cwiseInverse().asDiagonal() * w;
        out.eigentensors = Eigentensors{fx.u_cores, back.cast<std::complex<double>>()};
    }
    out.hocur_report = std::move(fx.hocur_report);
    return out;
}

std::vector<double> implied_timescales(const ComplexVector& values, double tau) {
    // Eigenvalues this close to 1 are the stationary one up to rounding.
    constexpr double kStationaryTol = 1e-12;
    if (!(tau > 0.0)) throw ArgumentError("implied_timescales: tau must be positive");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(values.size()));
    for (Index k = 0; k < values.size(); ++k) {
        const auto v = values(k);
        const double mag = std::abs(v);
        if (v.real() <= 0.0 || (mag > 0.0 && std::abs(v.imag()) / mag > 1e-6)) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
        } else if (v.real() >= 1.0 - kStationaryTol) {
            out.push_back(std::numeric_limits<double>::infinity());
        } else {
            out.push_back(-tau / std::log(v.real()));
        }
    }
    return out;
}

std::vector<double> implied_timescales(const Vector& values, double tau) {
    return implied_timescales(ComplexVector(values.cast<std::complex<double>>()), tau);
}

std::vector<TwoState> assign_two_state(const Vector& phi2) {
    if (phi2.size() == 0) throw DegenerateError("assign_two_state: empty input");
    if (!phi2.allFinite()) throw DataError("assign_two_state: non-finite input");
    if (phi2.maxCoeff() == phi2.minCoeff()) throw DegenerateError("assign_two_state: constant input");
    std::vector<double> sorted(phi2.data(), phi2.data() + phi2.size());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    std::vector<TwoState> out;
    out.reserve(n);
    for (Index t = 0; t < phi2.size(); ++t) out.push_back(phi2(t) - median >= 0.0 ? TwoState::A : TwoState::B);
    return out;
}

std::vector<double> empirical_subspace_convergence(const Sampler& sampler, const BasisSpec& spec,
                                                   const std::vector<Index>& ranks, const std::vector<Index>& m_list,
                                                   const std::optional<OrthonormalBasis>& reference) {
    if (m_list.size() < 2) throw ArgumentError("empirical_subspace_convergence needs at least two sample sizes");
    if (!std::is_sorted(m_list.begin(), m_list.end()) || m_list.front() < 1)
        throw ArgumentError("sample sizes must be positive and ascending");
    if (ranks.size() != spec.order()) throw ArgumentError("one fixed rank per basis dimension is required");
    if (element_count(spec.mode_sizes()) > kDenseGuard / 100)
        throw CapacityError("subspace comparison needs a small product basis");

    std::vector<OrthonormalBasis> bases;
    for (Index m : m_list) {
        const Matrix data = sampler(m);
        const StreamedBuild build = transform_streamed(data, spec, StreamedOptions{0.0, ranks});
        bases.emplace_back(segment_matrix(build.u_cores));
    }
    const OrthonormalBasis& target = reference ? *reference : bases.back();
    if (target.ambient_dim() != bases.front().ambient_dim())
        throw ArgumentError("reference basis lives in a different space");
    std::vector<double> out;
    for (const auto& b : bases) out.push_back(subspace_distance(b, target));
    return out;
}

} // namespace ttk
