#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "syl/mobius.hpp"
#include "syl/sampling.hpp"
#include "syl/schouten.hpp"

using namespace syl;

namespace {

MobiusMap random_word(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<> U(0.5, 2.0);
    return MobiusMap::translation(random_vector(rng, n))
        .then(Orthogonal{random_orthogonal(rng, n)})
        .then(Inversion{random_vector(rng, n, 3.0, 4.0), U(rng)})
        .then(Dilation{U(rng)});
}

}  // namespace

TEST(Mobius, InversionIsInvolutionAndConformal) {
    Rng rng(31);
    const auto psi = MobiusMap::inversion({0.2, -0.1, 0.4, 0.0}, 1.3);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec z = random_vector(rng, 4, -2.0, 2.0);
        const Vec back = psi(psi(z));
        for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(back[i], z[i], 1e-12);
        EXPECT_LE(conformality_defect(psi, z), 1e-12);
        EXPECT_GT(psi.jacobian(z), 0.0);
    }
}

TEST(Mobius, JetMatchesFiniteDifferences) {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = random_word(rng, 3);
        const Vec z = random_vector(rng, 3);
        const auto j = psi.jet(z);
        for (std::size_t c = 0; c < 3; ++c) {
            const Vec g = fd_gradient([&](std::span<const double> x) { return psi(x)[c]; }, z);
            for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(j.d(c, i), g[i], 1e-7 * std::max(1.0, std::abs(g[i])));
        }
        const Vec gl = fd_gradient([&](std::span<const double> x) { return std::log(psi.jacobian(x)); }, z);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(j.grad_log_jac[i], gl[i], 1e-6 * std::max(1.0, std::abs(gl[i])));
        EXPECT_LE(conformality_defect(psi, z), 1e-10);
    }
}

TEST(Mobius, Errors) {
    EXPECT_THROW(MobiusMap::dilation(3, 0.0), std::domain_error);
    EXPECT_THROW(MobiusMap::translation({1, 2}).then(Translation{{1, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(MobiusMap::inversion({0, 0, 0}, 1.0)(Vec{0, 0, 0}), pole_error);
}

TEST(Kelvin, ConstantBecomesInvertedPower) {
    const ScalarFn one = [](std::span<const double>) { return 1.0; };
    const auto k = kelvin(one, {0, 0, 0, 0, 0}, 1.0);
    const Vec y{0.3, 1.1, -0.4, 0.2, 0.9};
    EXPECT_NEAR(k(y), std::pow(norm(y), -3.0), 1e-14);
    EXPECT_THROW(k(Vec(5, 0.0)), pole_error);
}

TEST(Kelvin, BubbleIsFixedAtUnitRadius) {
    Rng rng(33);
    const auto b = ReferenceSolution::bubble(4);
    const auto k = kelvin(b.as_function(), Vec(4, 0.0), 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec y = random_vector(rng, 4, -3.0, 3.0);
        EXPECT_NEAR(k(y), b.value(y), 1e-13 * b.value(y));
    }
}

TEST(Kelvin, DoubleTransformIsIdentity) {
    Rng rng(34);
    const auto b = ReferenceSolution::bubble(3, 0.7, 1.4, {0.3, 0.0, -0.2});
    const Vec x{0.5, 0.1, 0.2};
    const auto kk = kelvin(kelvin(b.as_function(), x, 0.8), x, 0.8);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec y = random_vector(rng, 3, -2.0, 2.0);
        EXPECT_NEAR(kk(y), b.value(y), 1e-12 * b.value(y));
    }
}

TEST(Kelvin, SchoutenSpectrumIsCovariant) {
    const auto b = ReferenceSolution::bubble(4, 1.3, 0.9, {0.2, -0.1, 0.0, 0.3});
    EXPECT_LE(kelvin_covariance_defect(b.as_function(), {0.5, 0.5, 0.0, 0.0}, 0.7, Vec{1.2, -0.4, 0.3, 0.8}), 1e-6);
}

TEST(MovingSpheres, BubbleRadiusIsOne) {
    std::vector<Vec> grid;
    for (double a = -4.5; a <= 4.5; a += 0.5)
        for (double b = -4.5; b <= 4.5; b += 0.5)
            for (double c = -4.5; c <= 4.5; c += 0.5)
                if (a * a + b * b + c * c < 25.0) grid.push_back({a, b, c});
    const auto bub = ReferenceSolution::bubble(3);
    MovingSphereOptions opt;
    opt.lambda_max = 4.0;
    const auto res = moving_sphere_radius(bub.as_function(), grid, Vec{0, 0, 0}, opt);
    EXPECT_FALSE(res.limited_by_domain);
    EXPECT_NEAR(res.lambda_bar, 1.0, opt.lambda_max / static_cast<double>(opt.coarse_points));
}

TEST(MovingSpheres, ConstantLimitedByDomain) {
    const ScalarFn one = [](std::span<const double>) { return 1.0; };
    std::vector<Vec> grid;
    for (double a = -0.9; a <= 0.9; a += 0.1)
        for (double b = -0.9; b <= 0.9; b += 0.1) grid.push_back({a, b, 0.0});
    MovingSphereOptions opt;
    opt.lambda_max = 0.5;
    const auto res = moving_sphere_radius(one, grid, Vec{0, 0, 0}, opt);
    EXPECT_TRUE(res.limited_by_domain);
    EXPECT_EQ(res.lambda_bar, 0.5);
}

TEST(GradientBound, HoldsInsideBubbleRadius) {
    Rng rng(35);
    const int n = 5;
    const auto b = ReferenceSolution::bubble(n);
    const VectorFn grad_log = [&](std::span<const double> y) { return scaled(b.gradient(y), 1.0 / b.value(y)); };
    std::vector<Vec> pts;
    for (int i = 0; i < 500; ++i) pts.push_back(scaled(random_unit_vector(rng, n), std::uniform_real_distribution<>(0, 0.999)(rng)));
    const auto c = gradient_bound_check(grad_log, pts, 1.0);
    EXPECT_EQ(c.tested, 500u);
    EXPECT_EQ(c.violations, 0u);
    EXPECT_LE(c.max_ratio, 1.0);
}

TEST(SizeBound, BubbleFamily) {
    const Vec as{0.1, 0.5, 1.0, 3.0, 20.0}, rhos{0.05, 0.3, 1.0, 2.0, 10.0};
    const auto c = bubble_size_bound_check(5, 1.0, as, rhos);
    EXPECT_TRUE(c.passed);
    EXPECT_EQ(c.cases, 25u);
    EXPECT_NEAR(c.max_scaled_radius, c.bound, 1e-12);
}

TEST(SphereIdentity, ReferenceCases) {
    const Vec o{0, 0, 0};
    const auto a = sphere_identity_check(o, 1.0, Vec{2, 0, 0}, Vec{1, 0, 0});
    EXPECT_EQ(a.which, 'a');
    EXPECT_NEAR(a.lhs, 1.5, 1e-15);
    EXPECT_NEAR(a.rhs, 1.0, 1e-15);
    EXPECT_FALSE(a.equality_expected);

    const auto s = sphere_identity_check(o, 1.0, Vec{1, 0, 0}, Vec{0, 1, 0});
    EXPECT_NEAR(s.lhs, 0.0, 1e-15);
    EXPECT_NEAR(s.rhs, 0.0, 1e-15);
    EXPECT_TRUE(s.equality_expected);

    const auto c = sphere_identity_check(o, 1.0, o, Vec{0, 0, 1});
    EXPECT_EQ(c.which, 'b');
    EXPECT_NEAR(c.lhs, 0.5, 1e-15);
    EXPECT_NEAR(c.rhs, 0.5, 1e-15);

    EXPECT_THROW(sphere_identity_check(o, 1.0, o, Vec{0, 0, 2}), std::invalid_argument);
}

TEST(SphereIdentity, InequalityOnRandomPoints) {
    Rng rng(36);
    for (int trial = 0; trial < 2000; ++trial) {
        const Vec x = random_vector(rng, 3);
        const double r = std::uniform_real_distribution<>(0.2, 2.0)(rng);
        const Vec y = axpy(r, random_unit_vector(rng, 3), x);
        const Vec z = random_vector(rng, 3, -3.0, 3.0);
        const auto res = sphere_identity_check(x, r, z, y);
        EXPECT_GE(res.lhs, res.rhs - 1e-12);
    }
}

TEST(BoundaryData, CanonicalMatrixReferenceCases) {
    const Matrix H{{1, 0.2, 0}, {0.2, -0.5, 0.1}, {0, 0.1, 2}};
    const BoundaryData d1{{0, 0, 0}, 1.0, {0, 0, 0}, {0, 0, 1}, H};
    EXPECT_LE((canonical_boundary_matrix(d1) - H).max_abs(), 1e-15);
    const BoundaryData d2{{0, 0, 0}, std::pow(2.0, 0.5), {0, 0, 0}, {0, 0, 1}, H};
    const BoundaryData d3{{0, 0, 0}, 1.0, {0, 0, 0}, {0, 0, 1}, H * 0.5};
    EXPECT_LE((canonical_boundary_matrix(d2) - H * 0.5).max_abs(), 1e-15);
    EXPECT_LE(canonical_distance(d2, d3), 1e-15);
    BoundaryData bad = d1;
    bad.s = 0.0;
    EXPECT_THROW(canonical_boundary_matrix(bad), std::domain_error);
}

TEST(BoundaryData, IdentityAndDilation) {
    const Vec z0{0.1, 0.2, 0.3}, p{0.4, -0.2, 0.1}, nu{0, 0, 1};
    const auto u = exponential_field(z0, 1.5, p);
    const Matrix H = Matrix::diagonal(Vec{1, 2, 3});
    const auto id = transform_boundary_data(MobiusMap(3), u, nu, H, z0);
    EXPECT_NEAR(id.pulled.s, id.pushed.s, 1e-15);
    EXPECT_LE((id.pushed.H - H).max_abs(), 1e-15);

    const double R = 2.5;
    const auto dil = transform_boundary_data(MobiusMap::dilation(3, R), u, nu, H, z0);
    EXPECT_NEAR(dil.pulled.s, std::pow(R, 0.5) * u.value(scaled(z0, R)), 1e-14);
    EXPECT_LE((dil.pushed.H - H * (1.0 / R)).max_abs(), 1e-14);
    EXPECT_LE(canonical_distance(dil.pulled, dil.pushed), 1e-12);
}

TEST(BoundaryData, InversionThroughBoundaryPoint) {
    const double lambda = 0.8;
    const Vec nu{0, 1, 0, 0};
    const Vec x = scaled(nu, lambda);
    const Matrix H = Matrix::diagonal(Vec{0.3, -1.0, 2.0, 0.5});
    const auto u = exponential_field(x, 1.0, {0, 0, 0, 0});
    const auto t = transform_boundary_data(MobiusMap::inversion({0, 0, 0, 0}, lambda), u, nu, H, x);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(t.pushed.nu[i], -nu[i], 1e-15);
    EXPECT_LE((t.pushed.H - (H - Matrix::identity(4) * (2.0 / lambda))).max_abs(), 1e-14);
}

TEST(BoundaryData, CanonicalSpectrumInvariantUnderRandomWords) {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + trial % 4;
        const Vec x = random_vector(rng, n);
        const auto u = exponential_field(random_vector(rng, n), 1.2, random_vector(rng, n));
        const auto t = transform_boundary_data(random_word(rng, n), u, random_unit_vector(rng, n),
                                               random_symmetric(rng, n), x);
        EXPECT_LE(canonical_distance(t.pulled, t.pushed), 1e-10);
    }
}

TEST(BoundaryData, ReductionReport) {
    Rng rng(38);
    std::vector<BoundaryData> samples;
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 3 + i % 3;
        samples.push_back({random_vector(rng, n), std::uniform_real_distribution<>(0.3, 3.0)(rng), random_vector(rng, n),
                           random_unit_vector(rng, n), random_symmetric(rng, n)});
    }
    const auto rep = verify_reduction_identities(samples);
    EXPECT_TRUE(rep.all_passed());
    for (const char* id : {"translation", "normal_inversion", "gradient_removal", "dilation", "rotation"})
        EXPECT_LE(rep.at(id).max_violation, 1e-9) << id;
}
