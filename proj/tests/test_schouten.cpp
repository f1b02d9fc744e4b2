#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "syl/radial.hpp"
#include "syl/sampling.hpp"
#include "syl/schouten.hpp"

using namespace syl;

namespace {

Vec eigen_spectrum(const Matrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    Vec out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void expect_spectrum(const Vec& got, const Vec& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "entry " << i;
}

}  // namespace

TEST(Eigenvalues, SimpleMatrices) {
    expect_spectrum(eigenvalues(Matrix::identity(3)), {1, 1, 1}, 1e-15);
    expect_spectrum(eigenvalues(Matrix{{3, 0}, {0, -1}}), {3, -1}, 1e-15);
    const Vec x{0, 0, 2};
    expect_spectrum(eigenvalues(Matrix::outer(x, x) + Matrix::identity(3) * 3.0), {7, 3, 3}, 1e-14);
}

TEST(Eigenvalues, RejectsAsymmetric) { EXPECT_THROW(eigenvalues(Matrix{{1, 2}, {0, 1}}), std::invalid_argument); }

TEST(Eigenvalues, AgreeWithEigenOnRandomMatrices) {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix a = random_symmetric(rng, 3 + trial % 6, 3.0);
        expect_spectrum(eigenvalues(a), eigen_spectrum(a), 1e-11);
    }
}

TEST(RankOne, ClosedForm) {
    expect_spectrum(rank_one_spectrum(0.0, Vec{1, 2, 3}, 2.5), {2.5, 2.5, 2.5}, 0.0);
    expect_spectrum(rank_one_spectrum(1.0, Vec{0, 0, 2}, 3.0), {7, 3, 3}, 1e-15);
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec x = random_vector(rng, 5);
        const double mu = std::uniform_real_distribution<>(-3, 3)(rng), nu = std::uniform_real_distribution<>(-3, 3)(rng);
        const Matrix m = Matrix::outer(x, x) * mu + Matrix::identity(5) * nu;
        expect_spectrum(rank_one_spectrum(mu, x, nu), eigen_spectrum(m), 1e-12);
    }
}

TEST(Schouten, FlatMetricVanishes) {
    const ConformalFactorSample s{{0.3, -0.2, 1.0}, 1.0, {0, 0, 0}, Matrix(3)};
    EXPECT_EQ(schouten_matrix(s).a.max_abs(), 0.0);
}

TEST(Schouten, Errors) {
    ConformalFactorSample s{{0.3, -0.2, 1.0}, 0.0, {0, 0, 0}, Matrix(3)};
    EXPECT_THROW(schouten_matrix(s), std::domain_error);
    s.u = 1.0;
    s.grad = {0, 0};
    EXPECT_THROW(schouten_matrix(s), std::invalid_argument);
}

TEST(Schouten, CylinderSpectrum) {
    for (int n : {3, 5, 7}) {
        const auto cyl = ReferenceSolution::cylinder(n);
        Vec y(static_cast<std::size_t>(n), 0.0);
        y[0] = 0.7;
        y[n - 1] = -1.1;
        Vec want(static_cast<std::size_t>(n), 0.5);
        want.back() = -0.5;
        expect_spectrum(schouten_spectrum(cyl, y), want, 1e-12);
    }
}

TEST(Schouten, BubbleSpectrum) {
    const auto b = ReferenceSolution::bubble(5);
    expect_spectrum(schouten_spectrum(b, Vec{0.2, -1.3, 0.4, 2.0, 0.1}), Vec(5, 2.0), 1e-12);
}

TEST(Schouten, FiniteDifferencesMatchClosedForm) {
    Rng rng(23);
    const auto b = ReferenceSolution::bubble(4, 1.7, 0.8, {0.1, 0.2, -0.3, 0.0});
    for (int trial = 0; trial < 20; ++trial) {
        const Vec y = random_vector(rng, 4);
        expect_spectrum(schouten_spectrum_fd(b.as_function(), y), schouten_spectrum(b, y), 1e-7);
    }
}

TEST(Schouten, ReferenceGradientMatchesFiniteDifferences) {
    Rng rng(24);
    const auto b = ReferenceSolution::bubble(5, 0.6, 1.3);
    const auto p = ReferenceSolution::inverted_constant(5, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        Vec y = random_vector(rng, 5);
        y[0] += 2.0;
        for (const auto* u : {&b, &p}) {
            const Vec g = u->gradient(y), fd = fd_gradient(u->as_function(), y);
            for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], fd[i], 1e-8);
        }
    }
}

TEST(MeanCurvature, IdentityFactor) { EXPECT_DOUBLE_EQ(mean_curvature_conformal(1.0, 0.0, 0.37, 5), 0.37); }

TEST(MeanCurvature, CylinderBoundaryIsMinimal) {
    const int n = 5;
    const double R = 3.0, m = 0.5 * (n - 2.0);
    // Outer sphere: normal points outward, background curvature 1/R.
    const double uR = std::pow(R, -m);
    EXPECT_NEAR(mean_curvature_conformal(uR, -m * std::pow(R, -m - 1.0), 1.0 / R, n), 0.0, 1e-15);
    // Inner sphere seen from the annulus: normal points to the origin, curvature -1.
    EXPECT_NEAR(mean_curvature_conformal(1.0, m, -1.0, n), 0.0, 1e-15);
    EXPECT_THROW(mean_curvature_conformal(0.0, 0.0, 1.0, n), std::domain_error);
}

TEST(MeanCurvature, InnerRobinDataIsTheMeanCurvature) {
    const int n = 6;
    const double m = 0.5 * (n - 2.0), u = 0.7, c1 = 0.3;
    // u_r + m u = -c1 m u^{n/(n-2)} on the unit sphere; the annulus normal is -d/dr.
    const double u_r = -m * u - c1 * m * std::pow(u, n / (n - 2.0));
    EXPECT_NEAR(mean_curvature_conformal(u, -u_r, -1.0, n), c1, 1e-14);
}

TEST(RadialEigenvalues, ReferencePoints) {
    const auto cyl = radial_eigenvalues(0.0, 0.0, 0.0);
    EXPECT_DOUBLE_EQ(cyl.radial, -0.5);
    EXPECT_DOUBLE_EQ(cyl.tangential, 0.5);
    const auto bub = radial_eigenvalues(std::log(2.0), 0.0, 1.0);
    EXPECT_NEAR(bub.radial, 2.0, 1e-14);
    EXPECT_NEAR(bub.tangential, 2.0, 1e-14);
}

TEST(RadialEigenvalues, CylinderClosedForm) {
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            EXPECT_NEAR(sigma_k(radial_eigenvalues(0, 0, 0).expand(n), k), cylinder_sigma_k_closed_form(n, k), 1e-12);
}

TEST(RadialEigenvalues, AgreeWithDensePipeline) {
    // xi(t) = a + b t + c t^2, evaluated through u and a dense finite-difference Hessian.
    Rng rng(25);
    std::uniform_real_distribution<> coef(-0.3, 0.3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 5;
        const double a = coef(rng), b = coef(rng), c = coef(rng);
        const ScalarFn u = [=](std::span<const double> y) {
            const double t = std::log(norm(y));
            return u_from_xi(a + b * t + c * t * t, t, n);
        };
        Vec y = random_unit_vector(rng, static_cast<std::size_t>(n));
        const double t = std::uniform_real_distribution<>(-0.5, 0.5)(rng);
        for (auto& v : y) v *= std::exp(t);
        const auto lam = radial_eigenvalues(a + b * t + c * t * t, b + 2 * c * t, 2 * c);
        Vec want = lam.expand(n);
        std::sort(want.begin(), want.end(), std::greater<>());
        expect_spectrum(schouten_spectrum_fd(u, y), want, 1e-6);
    }
}

TEST(FiniteDifferences, HessianOfQuadratic) {
    const Matrix q{{2, 1, 0}, {1, 3, -1}, {0, -1, 4}};
    const ScalarFn f = [&](std::span<const double> x) { return 0.5 * dot(x, q.apply(x)) + x[0]; };
    const Matrix h = fd_hessian(f, Vec{0.4, -0.3, 1.2});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(h(i, j), q(i, j), 1e-8);
}
