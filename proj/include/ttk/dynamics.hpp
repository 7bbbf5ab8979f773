#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>

#include "ttk/linalg.hpp"

namespace ttk {

using Point3 = std::array<double, 3>;

struct FlowConfig {
    double a = 1.7320508075688772;
    double b = 1.4142135623730951;
    double c = 1.0;
    double tau = 5.0;
    double dt_initial = 1e-2;
    double atol = 1e-8;
    double rtol = 1e-8;
    /// Smallest step before IntegrationError is raised.
    double dt_min = 1e-12;
    /// Nonzero: take fixed steps of this size instead of adapting.
    double fixed_step = 0.0;

    void validate() const;
};

/// Velocity of the ABC flow at z.
Point3 abc_rhs(const Point3& z, const FlowConfig& cfg);

/// Flow map over cfg.tau with an embedded Dormand-Prince 5(4) pair under
/// error-per-unit-step control (RMS norm). The endpoint is wrapped into
/// [0, 2 pi)^3.
Point3 integrate(const Point3& z0, const FlowConfig& cfg);

/// Unwrapped integration of an arbitrary autonomous field.
Point3 integrate_field(const Point3& z0, double t_end, const FlowConfig& cfg,
                       const std::function<Point3(const Point3&)>& field);

double wrap_angle(double x);

enum class Sampling { grid, random };

struct AbcDataset {
    Matrix x;
    Matrix y;
};

/// X on the grid {2 pi k / n}^3 (first coordinate fastest) or uniform random
/// points from `seed`; Y = flow map of X. Columns are integrated in parallel
/// on up to `threads` threads (0 = TTK_THREADS or hardware concurrency).
AbcDataset generate_abc_dataset(std::size_t n_per_dim, const FlowConfig& cfg, Sampling sampling = Sampling::grid,
                                std::uint64_t seed = 0, unsigned threads = 0);

/// Thread count from TTK_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

struct SdeConfig {
    double beta = 3.0;
    double dt = 1e-3;
    std::size_t steps = 100'000;
    std::uint64_t seed = 0;
    double x0 = 1.0;
    /// Record every stride-th state.
    std::size_t stride = 1;

    static constexpr double zero_noise = std::numeric_limits<double>::infinity();

    void validate() const;
};

/// V(x) = (x^2 - 1)^2
double double_well_potential(double x);
double double_well_force(double x);

/// Euler-Maruyama for dx = -V'(x) dt + sqrt(2 / beta) dW; returns the 1 x k
/// matrix of recorded states, starting with x0.
Matrix simulate_double_well(const SdeConfig& cfg);

} // namespace ttk
