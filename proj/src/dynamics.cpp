#include "ttk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ttk/error.hpp"

namespace ttk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th and embedded 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

using Field = std::function<Point3(const Point3&)>;

Point3 axpy(const Point3& y, double h, std::initializer_list<std::pair<double, const Point3*>> terms) {
    Point3 out = y;
    for (const auto& [w, k] : terms)
        for (int i = 0; i < 3; ++i) out[i] += h * w * (*k)[i];
    return out;
}

struct Step {
    Point3 y;
    Point3 err;
    Point3 k7;
};

// One Dormand-Prince step from (y, k1 = f(y)); returns the 5th-order state.
Step dp_step(const Point3& y, const Point3& k1, double h, const Field& f) {
    const Point3 k2 = f(axpy(y, h, {{a21, &k1}}));
    const Point3 k3 = f(axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const Point3 k4 = f(axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const Point3 k5 = f(axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const Point3 k6 = f(axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    Step s;
    s.y = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    s.k7 = f(s.y);
    for (int i = 0; i < 3; ++i)
        s.err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * s.k7[i]);
    return s;
}

} // namespace

void FlowConfig::validate() const {
    if (!(tau >= 0.0)) throw ValidationError("flow tau must be non-negative");
    if (!(atol > 0.0) || !(rtol > 0.0)) throw ValidationError("integrator tolerances must be positive");
    if (!(dt_initial > 0.0)) throw ValidationError("initial step must be positive");
    if (!(dt_min > 0.0)) throw ValidationError("minimum step must be positive");
    if (fixed_step < 0.0) throw ValidationError("fixed step must be non-negative");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) throw ValidationError("flow amplitudes must be finite");
}

Point3 abc_rhs(const Point3& z, const FlowConfig& cfg) {
    return {cfg.a * std::sin(z[2]) + cfg.c * std::cos(z[1]), cfg.b * std::sin(z[0]) + cfg.a * std::cos(z[2]),
            cfg.c * std::sin(z[1]) + cfg.b * std::cos(z[0])};
}

double wrap_angle(double x) {
    double w = x - kTwoPi * std::floor(x / kTwoPi);
    if (w >= kTwoPi || w < 0.0) w = 0.0;
    return w;
}

Point3 integrate_field(const Point3& z0, double t_end, const FlowConfig& cfg, const Field& field) {
    cfg.validate();
    for (double v : z0)
        if (!std::isfinite(v)) throw ArgumentError("initial point must be finite");
    Point3 y = z0;
    if (t_end <= 0.0) return y;

    if (cfg.fixed_step > 0.0) {
        const auto steps = static_cast<long>(std::ceil(t_end / cfg.fixed_step - 1e-12));
        const double h = t_end / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) y = dp_step(y, field(y), h, field).y;
        return y;
    }

    double t = 0.0;
    double h = std::min(cfg.dt_initial, t_end);
    Point3 k1 = field(y);
    while (t < t_end) {
        const bool last = t + h >= t_end;
        if (last) h = t_end - t;
        const Step s = dp_step(y, k1, h, field);
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double scale = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(s.y[i]));
            acc += (s.err[i] / scale) * (s.err[i] / scale);
        }
        // Error per unit step keeps the global error near the tolerance.
        const double err = std::sqrt(acc / 3.0) / h;
        if (!std::isfinite(err)) throw IntegrationError("non-finite error estimate at t = " + std::to_string(t));
        if (err <= 1.0) {
            t = last ? t_end : t + h;
            y = s.y;
            k1 = s.k7;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.25), 0.2, 5.0);
        if (err <= 1.0 && last) break;
        h *= factor;
        if (h < cfg.dt_min)
            throw IntegrationError("step size underflow (" + std::to_string(h) + ") at t = " + std::to_string(t));
    }
    return y;
}

Point3 integrate(const Point3& z0, const FlowConfig& cfg) {
    const Point3 end = integrate_field(z0, cfg.tau, cfg, [&cfg](const Point3& z) { return abc_rhs(z, cfg); });
    return {wrap_angle(end[0]), wrap_angle(end[1]), wrap_angle(end[2])};
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("TTK_THREADS")) {
        char* endp = nullptr;
        const long v = std::strtol(env, &endp, 10);
        if (endp != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

AbcDataset generate_abc_dataset(std::size_t n_per_dim, const FlowConfig& cfg, Sampling sampling, std::uint64_t seed,
                                unsigned threads) {
    if (n_per_dim < 2) throw ArgumentError("n_per_dim must be at least 2");
    cfg.validate();
    const auto n = static_cast<Index>(n_per_dim);
    const Index m = n * n * n;
    AbcDataset out{Matrix(3, m), Matrix(3, m)};
    if (sampling == Sampling::grid) {
        const double h = kTwoPi / static_cast<double>(n);
        for (Index k3 = 0; k3 < n; ++k3)
            for (Index k2 = 0; k2 < n; ++k2)
                for (Index k1 = 0; k1 < n; ++k1) {
                    const Index col = k1 + n * (k2 + n * k3);
                    out.x(0, col) = h * static_cast<double>(k1);
                    out.x(1, col) = h * static_cast<double>(k2);
                    out.x(2, col) = h * static_cast<double>(k3);
                }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, kTwoPi);
        for (Index t = 0; t < m; ++t)
            for (Index i = 0; i < 3; ++i) out.x(i, t) = wrap_angle(u(rng));
    }

    const unsigned workers = std::max<unsigned>(1, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                                                      static_cast<unsigned>(m)));
    auto run = [&](Index begin, Index end) {
        for (Index t = begin; t < end; ++t) {
            const Point3 z = integrate({out.x(0, t), out.x(1, t), out.x(2, t)}, cfg);
            for (Index i = 0; i < 3; ++i) out.y(i, t) = z[static_cast<std::size_t>(i)];
        }
    };
    if (workers == 1) {
        run(0, m);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const Index chunk = (m + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const Index begin = std::min<Index>(m, chunk * w);
        const Index end = std::min<Index>(m, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                run(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

void SdeConfig::validate() const {
    if (!(dt > 0.0)) throw ValidationError("sde dt must be positive");
    if (!(beta > 0.0)) throw ValidationError("sde beta must be positive");
    if (stride < 1) throw ValidationError("sde stride must be at least 1");
    if (!std::isfinite(x0)) throw ValidationError("sde x0 must be finite");
}

double double_well_potential(double x) {
    const double u = x * x - 1.0;
    return u * u;
}

double double_well_force(double x) { return -4.0 * x * (x * x - 1.0); }

Matrix simulate_double_well(const SdeConfig& cfg) {
    cfg.validate();
    const std::size_t recorded = cfg.steps / cfg.stride + 1;
    Matrix out(1, static_cast<Index>(recorded));
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double noise = std::isinf(cfg.beta) ? 0.0 : std::sqrt(2.0 * cfg.dt / cfg.beta);
    double x = cfg.x0;
    out(0, 0) = x;
    Index slot = 1;
    for (std::size_t step = 1; step <= cfg.steps; ++step) {
        x += double_well_force(x) * cfg.dt + (noise > 0.0 ? noise * normal(rng) : 0.0);
        if (!std::isfinite(x)) throw IntegrationError("double-well trajectory diverged; reduce dt");
        if (step % cfg.stride == 0) out(0, slot++) = x;
    }
    return out;
}

} // namespace ttk
