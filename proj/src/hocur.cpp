#include "ttk/hocur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

IndexSet IndexSet::subset(const std::vector<std::size_t>& positions) const {
    IndexSet out;
    out.entries.reserve(positions.size());
    for (std::size_t p : positions) {
        if (p < 1 || p > entries.size()) throw BoundsError("index set position out of range");
        out.entries.push_back(entries[p - 1]);
    }
    return out;
}

void HocurConfig::validate(const ModeSizes& dims) const {
    if (dims.size() < 2) throw ValidationError("hocur needs at least one basis dimension");
    const std::size_t p = dims.size() - 1;
    if (max_ranks.size() != p)
        throw ValidationError("hocur max_ranks needs " + std::to_string(p) + " entries, got " +
                              std::to_string(max_ranks.size()));
    if (n_iter < 1) throw ValidationError("hocur n_iter must be at least 1");
    if (!(alpha > 1.0)) throw ValidationError("hocur alpha must exceed 1");
    if (maxvol_tol < 0.0) throw ValidationError("hocur maxvol_tol must be non-negative");
    if (maxvol_max_iter < 0) throw ValidationError("hocur maxvol_max_iter must be non-negative");
    if (!(column_tol >= 0.0)) throw ValidationError("hocur column_tol must be non-negative");
    for (std::size_t q = 1; q <= p; ++q) {
        const Index r = max_ranks[q - 1];
        if (r < 1) throw ValidationError("hocur max_ranks entries must be positive");
        const Index bound = q < p ? static_cast<Index>(dims[q]) * max_ranks[q] : static_cast<Index>(dims[p]);
        if (r > bound)
            throw ValidationError("hocur max rank r_" + std::to_string(q) + " = " + std::to_string(r) +
                                  " exceeds n_" + std::to_string(q + 1) + " * r_" + std::to_string(q + 1) + " = " +
                                  std::to_string(bound));
    }
}

namespace {

double basis_value(const BasisSpec& spec, std::size_t k, std::size_t i, const Matrix& data, Index t) {
    const BasisDimension& dim = spec.dimensions[k - 1];
    const double x = data(static_cast<Index>(dim.coordinate - 1), t);
    if (!std::isfinite(x)) throw DataError("non-finite snapshot entry in coordinate " + std::to_string(dim.coordinate));
    return dim.functions[i - 1](x);
}

void check_entries(const IndexSet& set, std::size_t first_mode, std::size_t length, const ModeSizes& dims,
                   const char* what) {
    for (const auto& mi : set.entries) {
        if (mi.size() != length)
            throw BoundsError(std::string(what) + " entry has " + std::to_string(mi.size()) + " components, expected " +
                              std::to_string(length));
        for (std::size_t a = 0; a < length; ++a)
            if (mi[a] < 1 || mi[a] > dims[first_mode + a])
                throw BoundsError(std::string(what) + " entry component " + std::to_string(mi[a]) + " outside 1.." +
                                  std::to_string(dims[first_mode + a]));
    }
}

double prefix_product(const BasisSpec& spec, const MultiIndex& mi, const Matrix& data, Index t) {
    double v = 1.0;
    for (std::size_t a = 0; a < mi.size(); ++a) v *= basis_value(spec, a + 1, mi[a], data, t);
    return v;
}

// Rows of a tall matrix spanning a maximum-volume submatrix. When the
// matrix is rank deficient or wide, columns are pruned to an independent
// subset first; `kept` receives the surviving 1-based columns.
MaxvolResult dominant_rows(Matrix& a, std::vector<std::size_t>& kept, const HocurConfig& config, HocurReport& report,
                           const std::string& where) {
    kept.resize(static_cast<std::size_t>(a.cols()));
    for (std::size_t j = 0; j < kept.size(); ++j) kept[j] = j + 1;
    std::size_t cap = static_cast<std::size_t>(std::min(a.rows(), a.cols()));
    while (true) {
        if (a.cols() <= a.rows()) {
            try {
                return maxvol(a, config.maxvol_tol, config.maxvol_max_iter);
            } catch (const SingularMatrixError&) {
                cap = std::min(cap, static_cast<std::size_t>(a.cols()) - 1);
            }
        }
        if (cap == 0) throw DegenerateError(where + ": submatrix has rank zero");
        const auto cols = independent_columns(a, config.column_tol, cap);
        a = select_cols(a, cols);
        std::vector<std::size_t> next;
        for (std::size_t c : cols) next.push_back(kept[c - 1]);
        kept = std::move(next);
        ++report.rank_reductions;
        report.warnings.push_back(where + ": rank reduced to " + std::to_string(kept.size()));
    }
}

} // namespace

Matrix eval_subtensor(const Matrix& data, const BasisSpec& spec, const IndexSet& rows, const IndexSet& cols,
                      std::size_t q) {
    spec.validate(static_cast<std::size_t>(data.rows()));
    const std::size_t p = spec.order();
    if (q > p) throw BoundsError("eval_subtensor: q = " + std::to_string(q) + " exceeds p = " + std::to_string(p));
    ModeSizes dims = spec.mode_sizes();
    dims.push_back(static_cast<std::size_t>(data.cols()));
    check_entries(rows, 0, q, dims, "row set");
    check_entries(cols, q + 1, p - q, dims, "column set");

    const auto nr = static_cast<Index>(rows.size());
    const auto n = static_cast<Index>(dims[q]);
    Matrix out(nr * n, static_cast<Index>(cols.size()));
    for (Index j = 0; j < out.cols(); ++j) {
        const MultiIndex& cj = cols[static_cast<std::size_t>(j)];
        if (q == p) {
            for (Index t = 0; t < n; ++t)
                for (Index a = 0; a < nr; ++a)
                    out(a + nr * t, j) = prefix_product(spec, rows[static_cast<std::size_t>(a)], data, t);
            continue;
        }
        const auto t = static_cast<Index>(cj.indices.back() - 1);
        double suffix = 1.0;
        for (std::size_t b = 0; b + 1 < cj.size(); ++b) suffix *= basis_value(spec, q + 2 + b, cj[b], data, t);
        for (Index a = 0; a < nr; ++a) {
            const double pre = suffix * prefix_product(spec, rows[static_cast<std::size_t>(a)], data, t);
            for (Index i = 0; i < n; ++i)
                out(a + nr * i, j) = pre * basis_value(spec, q + 1, static_cast<std::size_t>(i) + 1, data, t);
        }
    }
    return out;
}

IndexSet extend_row_set(const IndexSet& rows, const std::vector<std::size_t>& picks, std::size_t n) {
    const std::size_t r = rows.size();
    IndexSet out;
    out.entries.reserve(picks.size());
    for (std::size_t f : picks) {
        if (f < 1 || f > r * n)
            throw BoundsError("row pick " + std::to_string(f) + " outside 1.." + std::to_string(r * n));
        const std::size_t l = (f - 1) % r;
        const std::size_t i = (f - 1) / r + 1;
        out.entries.push_back(rows[l].joined(MultiIndex{i}));
    }
    return out;
}

IndexSet extend_column_set(const IndexSet& cols, const std::vector<std::size_t>& picks, std::size_t n) {
    const std::size_t r = cols.size();
    IndexSet out;
    out.entries.reserve(picks.size());
    for (std::size_t f : picks) {
        if (f < 1 || f > r * n)
            throw BoundsError("column pick " + std::to_string(f) + " outside 1.." + std::to_string(r * n));
        const std::size_t i = (f - 1) % n + 1;
        const std::size_t b = (f - 1) / n;
        out.entries.push_back(MultiIndex{i}.joined(cols[b]));
    }
    return out;
}

HocurResult hocur(const Matrix& data, const BasisSpec& spec, const HocurConfig& config) {
    spec.validate(static_cast<std::size_t>(data.rows()));
    if (data.cols() < 1) throw ArgumentError("hocur needs at least one snapshot");
    const std::size_t p = spec.order();
    ModeSizes dims = spec.mode_sizes();
    dims.push_back(static_cast<std::size_t>(data.cols()));
    config.validate(dims);
    auto n = [&](std::size_t l) { return dims[l - 1]; };

    // I[q] for q = 0..p, J[q] for q = 2..p+2.
    std::vector<IndexSet> I(p + 1);
    std::vector<IndexSet> J(p + 3);
    I[0] = IndexSet::unit();
    J[p + 2] = IndexSet::unit();
    for (std::size_t l = p + 1; l >= 2; --l) {
        const auto wanted = static_cast<std::size_t>(std::ceil(config.alpha * static_cast<double>(config.max_ranks[l - 2])));
        const std::size_t count = std::min(wanted, n(l) * J[l + 1].size());
        std::vector<std::size_t> picks(count);
        const std::size_t total = n(l) * J[l + 1].size();
        for (std::size_t k = 0; k < count; ++k)
            picks[k] = config.initial_columns == InitialColumns::prefix ? k + 1 : k * total / count + 1;
        J[l] = extend_column_set(J[l + 1], picks, n(l));
    }

    HocurResult result;
    HocurReport& report = result.report;
    std::vector<Core> cores(p + 1);
    std::vector<std::size_t> kept;
    for (int iter = 1; iter <= config.n_iter; ++iter) {
        const auto prev_rows = I;
        const auto prev_cols = J;
        report.forward_certificates.clear();

        for (std::size_t l = 1; l <= p; ++l) {
            Matrix m = eval_subtensor(data, spec, I[l - 1], J[l + 1], l - 1);
            if (iter == 1) {
                const std::size_t cap = std::min(static_cast<std::size_t>(config.max_ranks[l - 1]),
                                                 static_cast<std::size_t>(m.rows()));
                const auto cols = independent_columns(m, config.column_tol, cap);
                m = select_cols(m, cols);
                J[l + 1] = J[l + 1].subset(cols);
            }
            const auto mv = dominant_rows(m, kept, config, report, "forward step " + std::to_string(l));
            if (kept.size() != J[l + 1].size()) J[l + 1] = J[l + 1].subset(kept);
            if (!mv.converged) {
                ++report.unconverged_maxvol;
                report.warnings.push_back("forward step " + std::to_string(l) + ": maxvol hit max_iter");
            }
            report.forward_certificates.push_back(mv.max_coefficient);
            I[l] = extend_row_set(I[l - 1], mv.rows, n(l));
        }

        for (std::size_t l = p + 1; l >= 2; --l) {
            const Matrix m = eval_subtensor(data, spec, I[l - 1], J[l + 1], l - 1);
            const Index r_left = static_cast<Index>(I[l - 1].size());
            const Index width = static_cast<Index>(n(l)) * m.cols();
            Matrix reshaped = Eigen::Map<const Matrix>(m.data(), r_left, width);
            Matrix a = reshaped.transpose();
            const auto mv = dominant_rows(a, kept, config, report, "backward step " + std::to_string(l));
            if (kept.size() != I[l - 1].size()) {
                I[l - 1] = I[l - 1].subset(kept);
                reshaped = select_rows(reshaped, kept);
            }
            if (!mv.converged) {
                ++report.unconverged_maxvol;
                report.warnings.push_back("backward step " + std::to_string(l) + ": maxvol hit max_iter");
            }
            J[l] = extend_column_set(J[l + 1], mv.rows, n(l));
            bool regularized = false;
            const Matrix core = solve_left(select_cols(reshaped, mv.rows), reshaped, &regularized);
            if (regularized) {
                ++report.regularized_solves;
                report.warnings.push_back("backward step " + std::to_string(l) + ": intersection matrix regularized");
            }
            cores[l - 1] = Core::from_right_unfolding(core, static_cast<Index>(n(l)), m.cols());
        }

        report.sweeps = iter;
        if (I == prev_rows && J == prev_cols) {
            report.stopped_early = iter < config.n_iter;
            break;
        }
    }

    const Matrix first = eval_subtensor(data, spec, I[0], J[2], 0);
    cores[0] = Core::from_left_unfolding(first, 1, static_cast<Index>(n(1)));
    result.tt = TensorTrain(std::move(cores));
    report.row_sets = std::move(I);
    report.column_sets.assign(J.begin() + 2, J.end());
    return result;
}

TensorTrain hocur_transform(const Matrix& data, const BasisSpec& spec, const HocurConfig& config) {
    return hocur(data, spec, config).tt;
}

} // namespace ttk
