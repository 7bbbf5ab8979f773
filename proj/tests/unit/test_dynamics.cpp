#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ttk/dynamics.hpp"
#include "ttk/error.hpp"

using namespace ttk;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance(const Point3& a, const Point3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

Point3 random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    return {u(rng), u(rng), u(rng)};
}

SdeConfig sde(double beta, std::size_t steps, std::uint64_t seed) {
    SdeConfig cfg;
    cfg.beta = beta;
    cfg.steps = steps;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST(AbcRhs, Examples) {
    const FlowConfig cfg;
    const Point3 v = abc_rhs({0.0, 0.0, 0.0}, cfg);
    EXPECT_NEAR(v[0], 1.0, 1e-15);
    EXPECT_NEAR(v[1], std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(v[2], std::sqrt(2.0), 1e-15);
    const double h = std::numbers::pi / 2.0;
    const Point3 w = abc_rhs({h, h, h}, cfg);
    EXPECT_NEAR(w[0], cfg.a, 1e-15);
    EXPECT_NEAR(w[1], cfg.b, 1e-15);
    EXPECT_NEAR(w[2], cfg.c, 1e-15);
}

TEST(AbcRhs, DivergenceFree) {
    const FlowConfig cfg;
    std::mt19937_64 rng(1);
    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        const Point3 z = random_point(rng);
        double div = 0.0;
        for (int i = 0; i < 3; ++i) {
            Point3 zp = z, zm = z;
            zp[i] += h;
            zm[i] -= h;
            div += (abc_rhs(zp, cfg)[i] - abc_rhs(zm, cfg)[i]) / (2.0 * h);
        }
        EXPECT_LE(std::abs(div), 1e-6);
    }
}

TEST(Integrate, TrivialCases) {
    FlowConfig cfg;
    cfg.tau = 0.0;
    const Point3 z0{1.0, 2.0, 3.0};
    EXPECT_EQ(integrate(z0, cfg), z0);
    FlowConfig still;
    still.a = still.b = still.c = 0.0;
    EXPECT_EQ(integrate(z0, still), z0);
}

TEST(Integrate, SelfConvergenceUnderTighterTolerance) {
    std::mt19937_64 rng(2);
    FlowConfig loose;
    FlowConfig tight = loose;
    tight.atol = loose.atol / 2.0;
    tight.rtol = loose.rtol / 2.0;
    auto field = [&loose](const Point3& z) { return abc_rhs(z, loose); };
    for (int trial = 0; trial < 20; ++trial) {
        const Point3 z0 = random_point(rng);
        const Point3 a = integrate_field(z0, loose.tau, loose, field);
        const Point3 b = integrate_field(z0, loose.tau, tight, field);
        EXPECT_LE(distance(a, b), 10.0 * loose.atol);
    }
}

TEST(Integrate, LinearFieldIsExact) {
    FlowConfig cfg;
    const Point3 end = integrate_field({0.5, -1.0, 2.0}, 3.0, cfg, [](const Point3&) { return Point3{1.0, -2.0, 0.5}; });
    EXPECT_NEAR(end[0], 3.5, 1e-12);
    EXPECT_NEAR(end[1], -7.0, 1e-12);
    EXPECT_NEAR(end[2], 3.5, 1e-12);
}

TEST(Integrate, FixedStepOrder) {
    // z' = -z has the exact solution z0 exp(-t).
    auto decay = [](const Point3& z) { return Point3{-z[0], -z[1], -z[2]}; };
    const Point3 z0{1.0, 2.0, -0.5};
    auto error = [&](double h) {
        FlowConfig cfg;
        cfg.fixed_step = h;
        const Point3 end = integrate_field(z0, 2.0, cfg, decay);
        const double f = std::exp(-2.0);
        return distance(end, {z0[0] * f, z0[1] * f, z0[2] * f});
    };
    const double coarse = error(0.2);
    const double fine = error(0.1);
    EXPECT_GE(coarse / fine, 4.0);

    FlowConfig abc;
    auto field = [&abc](const Point3& z) { return abc_rhs(z, abc); };
    const Point3 start{0.3, 1.7, 4.0};
    const Point3 ref = integrate_field(start, 1.0, [] {
        FlowConfig c;
        c.atol = c.rtol = 1e-13;
        return c;
    }(), field);
    FlowConfig h1 = abc, h2 = abc;
    h1.fixed_step = 0.1;
    h2.fixed_step = 0.05;
    const double e1 = distance(integrate_field(start, 1.0, h1, field), ref);
    const double e2 = distance(integrate_field(start, 1.0, h2, field), ref);
    EXPECT_GE(e1 / e2, 4.0);
}

TEST(Integrate, StepUnderflowRaises) {
    FlowConfig cfg;
    cfg.dt_min = 1e-2;
    cfg.dt_initial = 1e-2;
    cfg.atol = cfg.rtol = 1e-14;
    auto stiff = [](const Point3& z) { return Point3{-1e4 * z[0], 0.0, 0.0}; };
    EXPECT_THROW(integrate_field({1.0, 0.0, 0.0}, 1.0, cfg, stiff), IntegrationError);
}

TEST(Integrate, InvalidConfig) {
    FlowConfig cfg;
    cfg.tau = -1.0;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg.tau = 1.0;
    cfg.atol = 0.0;
    EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(WrapAngle, IntoHalfOpenInterval) {
    EXPECT_EQ(wrap_angle(0.0), 0.0);
    EXPECT_NEAR(wrap_angle(-0.5), kTwoPi - 0.5, 1e-15);
    EXPECT_NEAR(wrap_angle(kTwoPi + 1.0), 1.0, 1e-14);
    EXPECT_EQ(wrap_angle(kTwoPi), 0.0);
    EXPECT_LT(wrap_angle(-1e-18), kTwoPi);
}

TEST(AbcDataset, CornerGrid) {
    FlowConfig cfg;
    cfg.tau = 1.0;
    const AbcDataset ds = generate_abc_dataset(2, cfg, Sampling::grid, 0, 2);
    ASSERT_EQ(ds.x.cols(), 8);
    ASSERT_EQ(ds.x.rows(), 3);
    for (Index t = 0; t < 8; ++t)
        for (Index i = 0; i < 3; ++i) {
            const double expect = ((t >> i) & 1) ? std::numbers::pi : 0.0;
            EXPECT_NEAR(ds.x(i, t), expect, 1e-15);
        }
    EXPECT_THROW(generate_abc_dataset(1, cfg), ArgumentError);
}

TEST(AbcDataset, WrappedDeterministicAndThreadIndependent) {
    FlowConfig cfg;
    const AbcDataset a = generate_abc_dataset(4, cfg, Sampling::grid, 0, 1);
    const AbcDataset b = generate_abc_dataset(4, cfg, Sampling::grid, 0, 3);
    EXPECT_EQ(a.x.cols(), 64);
    EXPECT_EQ(a.y, b.y);
    EXPECT_GE(a.y.minCoeff(), 0.0);
    EXPECT_LT(a.y.maxCoeff(), kTwoPi);
    for (Index t = 0; t < 64; ++t) {
        const Point3 z{a.x(0, t), a.x(1, t), a.x(2, t)};
        const Point3 y = integrate(z, cfg);
        EXPECT_EQ(a.y(0, t), y[0]);
    }

    const AbcDataset r1 = generate_abc_dataset(3, cfg, Sampling::random, 7, 2);
    const AbcDataset r2 = generate_abc_dataset(3, cfg, Sampling::random, 7, 1);
    EXPECT_EQ(r1.x, r2.x);
    EXPECT_EQ(r1.y, r2.y);
    EXPECT_NE(r1.x, generate_abc_dataset(3, cfg, Sampling::random, 8, 1).x);
}

TEST(DoubleWell, PotentialAndForce) {
    EXPECT_EQ(double_well_potential(1.0), 0.0);
    EXPECT_EQ(double_well_potential(0.0), 1.0);
    const double h = 1e-6;
    for (double x : {-1.3, -0.2, 0.7, 1.9}) {
        const double fd = -(double_well_potential(x + h) - double_well_potential(x - h)) / (2.0 * h);
        EXPECT_NEAR(double_well_force(x), fd, 1e-6);
    }
}

TEST(DoubleWell, StaysInWellAtLowTemperature) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Matrix x = simulate_double_well(sde(100.0, 10000, seed));
        ASSERT_EQ(x.cols(), 10001);
        EXPECT_EQ(x(0, 0), 1.0);
        EXPECT_GE(x.minCoeff(), 0.5);
        EXPECT_LE(x.maxCoeff(), 1.5);
    }
}

TEST(DoubleWell, ZeroNoiseFlowsToMinimum) {
    SdeConfig cfg = sde(SdeConfig::zero_noise, 20000, 0);
    cfg.x0 = 0.3;
    const Matrix x = simulate_double_well(cfg);
    EXPECT_NEAR(x(0, x.cols() - 1), 1.0, 1e-8);
    cfg.x0 = 1.0;
    EXPECT_EQ(simulate_double_well(cfg).maxCoeff(), 1.0);
}

TEST(DoubleWell, SymmetricOccupation) {
    const Matrix x = simulate_double_well(sde(1.0, 1000000, 3));
    const double right = static_cast<double>((x.array() > 0.0).count()) / static_cast<double>(x.cols());
    EXPECT_NEAR(right, 0.5, 0.05);
}

TEST(DoubleWell, DeterministicPerSeedAndStride) {
    SdeConfig cfg = sde(3.0, 5000, 42);
    const Matrix a = simulate_double_well(cfg);
    EXPECT_EQ(a, simulate_double_well(cfg));
    cfg.stride = 10;
    const Matrix b = simulate_double_well(cfg);
    ASSERT_EQ(b.cols(), 501);
    for (Index k = 0; k < b.cols(); ++k) EXPECT_EQ(b(0, k), a(0, 10 * k));
    cfg.beta = 0.0;
    EXPECT_THROW(cfg.validate(), ValidationError);
}
