#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttk/amuset.hpp"
#include "ttk/basis.hpp"
#include "ttk/dynamics.hpp"
#include "ttk/error.hpp"
#include "ttk/trajectory_io.hpp"

namespace ttk::cli {

namespace {

using nlohmann::json;

struct GenerateOptions {
    std::string system;
    std::string out;
    std::size_t n_per_dim = 25;
    double tau = 5.0;
    double a = std::sqrt(3.0);
    double b = std::sqrt(2.0);
    double c = 1.0;
    double atol = 1e-8;
    double rtol = 1e-8;
    std::string sampling = "grid";
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double beta = 3.0;
    double dt = 1e-3;
    std::size_t steps = 100'000;
    std::size_t stride = 1;
    double x0 = 1.0;
};

struct SpectralOptions {
    std::string trajectory;
    std::string x_path;
    std::string y_path;
    std::string ix_path;
    std::string iy_path;
    std::size_t lag = 1;
    std::string basis;
    std::string basis_y;
    double eps = 0.0;
    std::string method = "exact";
    std::string hocur_ranks;
    int hocur_sweeps = 2;
    double hocur_alpha = 2.0;
    double maxvol_tol = kDefaultMaxvolTol;
    std::string hocur_init = "prefix";
    Index q = 0;
    double tau = 0.0;
    bool symmetrize = false;
    double pinv_tol = 0.0;
    std::string out;
    std::string phi_csv;
    std::string grid_csv;
    std::string config;
};

struct TimescaleOptions {
    std::string results;
    double tau = 0.0;
    std::string out;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<std::size_t> read_index_file(const std::string& path) {
    std::string text = read_text(path);
    std::replace(text.begin(), text.end(), ',', ' ');
    std::stringstream ss(text);
    std::vector<std::size_t> out;
    long long v = 0;
    while (ss >> v) {
        if (v < 1) throw ValidationError("index file '" + path + "' holds a non-positive index");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (!ss.eof()) throw ValidationError("index file '" + path + "' holds a non-integer entry");
    return out;
}

std::vector<Index> parse_rank_list(const std::string& text, std::size_t p) {
    std::vector<Index> ranks;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(cell, &used);
            if (used != cell.size() || v < 1) throw std::invalid_argument(cell);
            ranks.push_back(static_cast<Index>(v));
        } catch (const std::exception&) {
            throw ValidationError("key 'hocur-ranks' must be a comma-separated list of positive integers");
        }
    }
    if (ranks.size() == 1) ranks.assign(p, ranks.front());
    if (ranks.size() != p)
        throw ValidationError("key 'hocur-ranks' needs 1 or " + std::to_string(p) + " entries");
    return ranks;
}

// Splices the key/value pairs of a JSON config file in front of the
// explicit arguments so that flags given on the command line win.
std::vector<std::string> expand_config(const std::vector<std::string>& args, CLI::App* sub) {
    std::string config_path;
    for (std::size_t k = 1; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) config_path = args[k + 1];
        if (args[k].rfind("--config=", 0) == 0) config_path = args[k].substr(9);
    }
    if (config_path.empty()) return args;
    json doc;
    try {
        doc = json::parse(read_text(config_path));
    } catch (const json::parse_error& e) {
        throw ValidationError("config '" + config_path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config '" + config_path + "' must hold a JSON object");
    std::vector<std::string> out{args.front()};
    for (const auto& [raw_key, value] : doc.items()) {
        std::string key = raw_key;
        std::replace(key.begin(), key.end(), '_', '-');
        if (key == "config") throw ValidationError("config key 'config' cannot be nested");
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) throw ValidationError("unknown config key '" + raw_key + "'");
        if (value.is_boolean()) {
            if (opt->get_expected_max() != 0) throw ValidationError("config key '" + raw_key + "' expects a value");
            if (value.get<bool>()) out.push_back("--" + key);
            continue;
        }
        if (opt->get_expected_max() == 0) throw ValidationError("config key '" + raw_key + "' must be true or false");
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number()) {
            text = value.dump();
        } else if (value.is_array()) {
            for (std::size_t k = 0; k < value.size(); ++k) {
                if (!value[k].is_number_integer())
                    throw ValidationError("config key '" + raw_key + "' must list integers");
                text += (k ? "," : "") + value[k].dump();
            }
        } else {
            throw ValidationError("config key '" + raw_key + "' has an unsupported type");
        }
        out.push_back("--" + key);
        out.push_back(text);
    }
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

json complex_list(const ComplexVector& v) {
    json re = json::array();
    json im = json::array();
    for (Index k = 0; k < v.size(); ++k) {
        re.push_back(v(k).real());
        im.push_back(v(k).imag());
    }
    return json{{"re", re}, {"im", im}};
}

json timescale_block(const ComplexVector& values, double tau) {
    const auto ts = implied_timescales(values, tau);
    json t = json::array();
    json markers = json::array();
    for (double v : ts) {
        if (std::isnan(v)) {
            t.push_back(nullptr);
            markers.push_back("undefined");
        } else if (std::isinf(v)) {
            t.push_back(nullptr);
            markers.push_back("infinite");
        } else {
            t.push_back(v);
            markers.push_back("finite");
        }
    }
    return json{{"tau", tau}, {"values", t}, {"markers", markers}};
}

// Eigenfunction rows as real series: a conjugate pair contributes the real
// and the imaginary part of its first member.
Matrix real_eigenfunctions(const SpectralResult& s) {
    Matrix out = s.eigenfunctions.real();
    for (Index k = 0; k + 1 < s.values.size(); ++k) {
        if (s.values(k).imag() > 0.0 && std::abs(s.values(k + 1) - std::conj(s.values(k))) <=
                                            1e-10 * std::max(1.0, std::abs(s.values(k)))) {
            out.row(k + 1) = s.eigenfunctions.row(k).imag();
            ++k;
        }
    }
    return out;
}

json hocur_summary(const HocurReport& r) {
    return json{{"sweeps", r.sweeps},
                {"stopped_early", r.stopped_early},
                {"unconverged_maxvol", r.unconverged_maxvol},
                {"regularized_solves", r.regularized_solves},
                {"rank_reductions", r.rank_reductions},
                {"warnings", r.warnings}};
}

json spectral_config(const std::string& command, const SpectralOptions& o) {
    json c{{"command", command},     {"basis", o.basis},         {"eps", o.eps},
           {"method", o.method},     {"q", o.q},                 {"tau", o.tau},
           {"symmetrize", o.symmetrize}, {"pinv_tol", o.pinv_tol}, {"out", o.out}};
    if (!o.trajectory.empty()) {
        c["trajectory"] = o.trajectory;
        if (o.ix_path.empty()) c["lag"] = o.lag;
    }
    if (!o.x_path.empty()) c["x"] = o.x_path;
    if (!o.y_path.empty()) c["y"] = o.y_path;
    if (!o.ix_path.empty()) c["ix"] = o.ix_path;
    if (!o.iy_path.empty()) c["iy"] = o.iy_path;
    if (!o.basis_y.empty()) c["basis_y"] = o.basis_y;
    if (o.method == "hocur") {
        c["hocur_ranks"] = o.hocur_ranks;
        c["hocur_sweeps"] = o.hocur_sweeps;
        c["hocur_alpha"] = o.hocur_alpha;
        c["maxvol_tol"] = o.maxvol_tol;
        c["hocur_init"] = o.hocur_init;
    }
    if (!o.phi_csv.empty()) c["phi_csv"] = o.phi_csv;
    if (!o.grid_csv.empty()) c["grid_csv"] = o.grid_csv;
    return c;
}

AmusetOptions amuset_options(const SpectralOptions& o, std::size_t p) {
    if (o.eps < 0.0) throw ValidationError("key 'eps' must be non-negative");
    if (o.q < 0) throw ValidationError("key 'q' must be non-negative");
    AmusetOptions a;
    a.eps = o.eps;
    a.method = parse_method(o.method);
    a.q = o.q;
    a.symmetrize = o.symmetrize;
    a.pinv_tol = o.pinv_tol;
    if (a.method == TransformMethod::hocur) {
        if (o.hocur_ranks.empty()) throw ValidationError("method 'hocur' needs key 'hocur-ranks'");
        a.hocur.max_ranks = parse_rank_list(o.hocur_ranks, p);
        a.hocur.n_iter = o.hocur_sweeps;
        a.hocur.alpha = o.hocur_alpha;
        a.hocur.maxvol_tol = o.maxvol_tol;
        if (o.hocur_init != "prefix" && o.hocur_init != "spread")
            throw ValidationError("key 'hocur-init' must be 'prefix' or 'spread'");
        a.hocur.initial_columns = o.hocur_init == "prefix" ? InitialColumns::prefix : InitialColumns::spread;
    }
    return a;
}

TrajectoryPair load_pair(const SpectralOptions& o) {
    const bool paired = !o.x_path.empty() || !o.y_path.empty();
    if (paired == !o.trajectory.empty())
        throw ValidationError("give either key 'trajectory' or both keys 'x' and 'y'");
    if (paired) {
        if (o.x_path.empty() || o.y_path.empty()) throw ValidationError("keys 'x' and 'y' must be given together");
        const Matrix x = read_trajectory(o.x_path);
        const Matrix y = read_trajectory(o.y_path);
        if (x.rows() != y.rows() || x.cols() != y.cols())
            throw ValidationError("trajectories 'x' and 'y' differ in shape");
        return TrajectoryPair::from_pair(x, y);
    }
    Matrix z = read_trajectory(o.trajectory);
    if (!o.ix_path.empty() || !o.iy_path.empty()) {
        if (o.ix_path.empty() || o.iy_path.empty()) throw ValidationError("keys 'ix' and 'iy' must be given together");
        TrajectoryPair pair{std::move(z), read_index_file(o.ix_path), read_index_file(o.iy_path)};
        pair.validate();
        return pair;
    }
    if (o.lag >= static_cast<std::size_t>(z.cols()))
        throw ValidationError("key 'lag' must be smaller than the trajectory length " + std::to_string(z.cols()));
    return TrajectoryPair::sliding(std::move(z), o.lag);
}

void write_results(const std::string& path, const json& doc, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-")
        out << text;
    else
        write_text(path, text);
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
    json meta;
    meta["format"] = "ttk-trajectory-meta";
    meta["version"] = 1;
    meta["system"] = o.system;
    if (o.system == "abc") {
        FlowConfig cfg;
        cfg.a = o.a;
        cfg.b = o.b;
        cfg.c = o.c;
        cfg.tau = o.tau;
        cfg.atol = o.atol;
        cfg.rtol = o.rtol;
        if (o.sampling != "grid" && o.sampling != "random")
            throw ValidationError("key 'sampling' must be 'grid' or 'random'");
        if (!(o.tau > 0.0)) throw ValidationError("key 'tau' must be positive");
        const Sampling sampling = o.sampling == "grid" ? Sampling::grid : Sampling::random;
        const AbcDataset ds = generate_abc_dataset(o.n_per_dim, cfg, sampling, o.seed, o.threads);
        const std::string y_path = paired_path(o.out);
        write_trajectory(o.out, ds.x);
        write_trajectory(y_path, ds.y);
        meta["parameters"] = {{"a", o.a},         {"b", o.b},       {"c", o.c},       {"tau", o.tau},
                              {"atol", o.atol},   {"rtol", o.rtol}, {"n_per_dim", o.n_per_dim},
                              {"sampling", o.sampling}, {"seed", o.seed}};
        meta["x"] = o.out;
        meta["y"] = y_path;
        meta["d"] = 3;
        meta["m"] = ds.x.cols();
        out << "wrote " << ds.x.cols() << " snapshot pairs to " << o.out << " and " << y_path << "\n";
    } else {
        SdeConfig cfg;
        cfg.beta = o.beta;
        cfg.dt = o.dt;
        cfg.steps = o.steps;
        cfg.seed = o.seed;
        cfg.x0 = o.x0;
        cfg.stride = o.stride;
        const Matrix z = simulate_double_well(cfg);
        write_trajectory(o.out, z);
        meta["parameters"] = {{"beta", o.beta}, {"dt", o.dt},     {"steps", o.steps},
                              {"seed", o.seed}, {"x0", o.x0},     {"stride", o.stride},
                              {"frame_time", o.dt * static_cast<double>(o.stride)}};
        meta["trajectory"] = o.out;
        meta["d"] = 1;
        meta["m"] = z.cols();
        out << "wrote " << z.cols() << " frames to " << o.out << "\n";
    }
    write_text(o.out + ".json", meta.dump(2) + "\n");
    return ok;
}

int cmd_edmd(const SpectralOptions& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const BasisSpec spec = load_basis_spec(o.basis);
    const TrajectoryPair pair = load_pair(o);
    const AmusetOptions options = amuset_options(o, spec.order());
    const AmusetResult res = amuset_edmd(pair, spec, options);
    const double tau = o.tau > 0.0 ? o.tau : static_cast<double>(o.lag);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json doc{{"format", "ttk-results"}, {"version", 1}, {"command", "edmd"}, {"config", spectral_config("edmd", o)}};
    doc["method"] = o.method;
    doc["eps"] = o.eps;
    doc["snapshots"] = pair.snapshots();
    doc["ranks"] = res.spectral.ranks;
    doc["reduced_rank"] = res.spectral.reduced_rank;
    doc["symmetrized"] = res.spectral.symmetrized;
    doc["eigenvalues"] = complex_list(res.spectral.values);
    doc["timescales"] = timescale_block(res.spectral.values, tau);
    if (res.hocur_report) doc["hocur"] = hocur_summary(*res.hocur_report);
    if (!o.phi_csv.empty()) {
        write_matrix_csv(o.phi_csv, real_eigenfunctions(res.spectral));
        doc["phi_csv"] = o.phi_csv;
    }
    doc["wall_time_s"] = wall;
    write_results(o.out, doc, out);
    return ok;
}

int cmd_cca(const SpectralOptions& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const BasisSpec spec_x = load_basis_spec(o.basis);
    const BasisSpec spec_y = o.basis_y.empty() ? spec_x : load_basis_spec(o.basis_y);
    const TrajectoryPair pair = load_pair(o);
    const Matrix x = pair.x();
    const Matrix y = pair.y();
    const AmusetOptions options = amuset_options(o, spec_x.order());
    if (options.method == TransformMethod::hocur && spec_y.order() != spec_x.order())
        throw ValidationError("method 'hocur' for CCA needs bases of equal order");
    const AmusetResult res = amuset_cca(x, y, spec_x, spec_y, options);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json doc{{"format", "ttk-results"}, {"version", 1}, {"command", "cca"}, {"config", spectral_config("cca", o)}};
    doc["method"] = o.method;
    doc["eps"] = o.eps;
    doc["snapshots"] = pair.snapshots();
    doc["ranks"] = res.spectral.ranks;
    doc["reduced_rank"] = res.spectral.reduced_rank;
    doc["eigenvalues"] = complex_list(res.spectral.values);
    doc["singular_values"] = std::vector<double>(res.spectral.singular_values.data(),
                                                 res.spectral.singular_values.data() +
                                                     res.spectral.singular_values.size());
    if (o.tau > 0.0) doc["timescales"] = timescale_block(res.spectral.values, o.tau);
    const Matrix phi = res.spectral.eigenfunctions.real();
    if (!o.phi_csv.empty()) {
        write_matrix_csv(o.phi_csv, phi);
        doc["phi_csv"] = o.phi_csv;
    }
    if (!o.grid_csv.empty()) {
        std::ofstream g(o.grid_csv, std::ios::trunc);
        if (!g) throw IoError("cannot write '" + o.grid_csv + "'");
        for (Index i = 0; i < x.rows(); ++i) g << (i ? "," : "") << "x" << i + 1;
        for (Index k = 0; k < phi.rows(); ++k) g << ",phi_" << k + 1;
        g << '\n' << std::setprecision(17);
        for (Index t = 0; t < x.cols(); ++t) {
            for (Index i = 0; i < x.rows(); ++i) g << (i ? "," : "") << x(i, t);
            for (Index k = 0; k < phi.rows(); ++k) g << ',' << phi(k, t);
            g << '\n';
        }
        if (!g) throw IoError("failed writing '" + o.grid_csv + "'");
        doc["grid_csv"] = o.grid_csv;
    }
    doc["wall_time_s"] = wall;
    write_results(o.out, doc, out);
    return ok;
}

int cmd_timescales(const TimescaleOptions& o, std::ostream& out) {
    if (!(o.tau > 0.0)) throw ValidationError("key 'tau' must be positive");
    json doc;
    try {
        doc = json::parse(read_text(o.results));
    } catch (const json::parse_error& e) {
        throw ValidationError("results '" + o.results + "' are not valid JSON: " + e.what());
    }
    if (!doc.contains("eigenvalues") || !doc["eigenvalues"].contains("re") || !doc["eigenvalues"].contains("im"))
        throw ValidationError("results '" + o.results + "' lack key 'eigenvalues'");
    const auto re = doc["eigenvalues"]["re"].get<std::vector<double>>();
    const auto im = doc["eigenvalues"]["im"].get<std::vector<double>>();
    if (re.size() != im.size()) throw ValidationError("results: eigenvalue re/im lists differ in length");
    ComplexVector values(static_cast<Index>(re.size()));
    for (std::size_t k = 0; k < re.size(); ++k) values(static_cast<Index>(k)) = {re[k], im[k]};
    doc["timescales"] = timescale_block(values, o.tau);
    write_results(o.out.empty() ? o.results : o.out, doc, out);
    return ok;
}

void add_spectral_flags(CLI::App* cmd, SpectralOptions& o) {
    cmd->add_option("--trajectory", o.trajectory, "Trajectory Z (time-lagged pairs by --lag)");
    cmd->add_option("--x", o.x_path, "Snapshot matrix X");
    cmd->add_option("--y", o.y_path, "Snapshot matrix Y");
    cmd->add_option("--ix", o.ix_path, "File of 1-based indices I_X into the trajectory");
    cmd->add_option("--iy", o.iy_path, "File of 1-based indices I_Y into the trajectory");
    cmd->add_option("--lag", o.lag, "Integer frame lag")->check(CLI::PositiveNumber);
    cmd->add_option("--basis", o.basis, "Basis spec JSON")->required();
    cmd->add_option("--eps", o.eps, "Relative truncation threshold");
    cmd->add_option("--method", o.method, "exact | streamed | hocur");
    cmd->add_option("--hocur-ranks", o.hocur_ranks, "Max ranks r_1..r_p (one value = all)");
    cmd->add_option("--hocur-sweeps", o.hocur_sweeps, "Number of HOCUR sweeps");
    cmd->add_option("--hocur-alpha", o.hocur_alpha, "Initial column multiplier (> 1)");
    cmd->add_option("--maxvol-tol", o.maxvol_tol, "Maxvol dominance tolerance");
    cmd->add_option("--hocur-init", o.hocur_init, "Initial column sets: prefix | spread");
    cmd->add_option("--q", o.q, "Number of eigenpairs (0 = all)");
    cmd->add_option("--tau", o.tau, "Physical lag time for implied timescales");
    cmd->add_flag("--symmetrize", o.symmetrize, "Symmetrize the reduced matrix");
    cmd->add_option("--pinv-tol", o.pinv_tol, "Relative pseudo-inverse threshold");
    cmd->add_option("--out", o.out, "Results JSON (default stdout)");
    cmd->add_option("--phi-csv", o.phi_csv, "Eigenfunction time series CSV");
    cmd->add_option("--config", o.config, "JSON file of option values");
}

} // namespace

std::string paired_path(const std::string& path) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == slash + 1)
        return path + ".y";
    return path.substr(0, dot) + ".y" + path.substr(dot);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tensor-train EDMD and CCA spectra from trajectory data", "ttk"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Generate a synthetic dataset");
    generate->add_option("system", gen.system, "abc | double-well")
        ->required()
        ->check(CLI::IsMember({"abc", "double-well"}));
    generate->add_option("--out", gen.out, "Output trajectory path")->required();
    generate->add_option("--n-per-dim", gen.n_per_dim, "ABC grid points per dimension");
    generate->add_option("--tau", gen.tau, "ABC lag time");
    generate->add_option("--a", gen.a, "ABC amplitude A");
    generate->add_option("--b", gen.b, "ABC amplitude B");
    generate->add_option("--c", gen.c, "ABC amplitude C");
    generate->add_option("--atol", gen.atol, "Integrator absolute tolerance");
    generate->add_option("--rtol", gen.rtol, "Integrator relative tolerance");
    generate->add_option("--sampling", gen.sampling, "grid | random");
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--threads", gen.threads, "Worker threads (0 = TTK_THREADS or all cores)");
    generate->add_option("--beta", gen.beta, "Double-well inverse temperature");
    generate->add_option("--dt", gen.dt, "Double-well time step");
    generate->add_option("--steps", gen.steps, "Double-well step count");
    generate->add_option("--stride", gen.stride, "Record every stride-th state");
    generate->add_option("--x0", gen.x0, "Double-well initial state");
    std::string gen_config;
    generate->add_option("--config", gen_config, "JSON file of option values");

    SpectralOptions edmd_opts;
    auto* edmd = app.add_subcommand("edmd", "EDMD eigenvalues via AMUSEt");
    add_spectral_flags(edmd, edmd_opts);

    SpectralOptions cca_opts;
    auto* cca = app.add_subcommand("cca", "CCA (forward-backward) spectrum via AMUSEt");
    add_spectral_flags(cca, cca_opts);
    cca->add_option("--basis-y", cca_opts.basis_y, "Basis spec for Y (default: --basis)");
    cca->add_option("--grid-csv", cca_opts.grid_csv, "Eigenfunctions at every X column");

    TimescaleOptions ts;
    auto* timescales = app.add_subcommand("timescales", "Recompute implied timescales with a new tau");
    timescales->add_option("--results", ts.results, "Results JSON")->required();
    timescales->add_option("--tau", ts.tau, "Physical lag time")->required();
    timescales->add_option("--out", ts.out, "Output JSON (default: overwrite --results)");

    try {
        std::vector<std::string> expanded = args;
        if (!args.empty()) {
            if (CLI::App* sub = app.get_subcommand_no_throw(args.front()); sub != nullptr)
                expanded = expand_config(args, sub);
        }
        std::reverse(expanded.begin(), expanded.end());
        app.parse(expanded);

        if (generate->parsed()) return cmd_generate(gen, out);
        if (edmd->parsed()) return cmd_edmd(edmd_opts, out);
        if (cca->parsed()) return cmd_cca(cca_opts, out);
        return cmd_timescales(ts, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return io;
    } catch (const DegenerateError& e) {
        err << "numeric degeneracy: " << e.what() << "\n";
        return degenerate;
    } catch (const SingularMatrixError& e) {
        err << "numeric degeneracy: " << e.what() << "\n";
        return degenerate;
    } catch (const IntegrationError& e) {
        err << "numeric degeneracy: " << e.what() << "\n";
        return degenerate;
    } catch (const Error& e) {
        err << "validation error: " << e.what() << "\n";
        return validation;
    } catch (const nlohmann::json::exception& e) {
        err << "validation error: " << e.what() << "\n";
        return validation;
    }
}

} // namespace ttk::cli
