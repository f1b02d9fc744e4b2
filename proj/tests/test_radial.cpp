#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "syl/radial.hpp"
#include "syl/shooting.hpp"

using namespace syl;

namespace {
const double kXiCyl52 = 0.25 * std::log(2.0);
// Bubble scaled to sigma_2 = 1 in n = 5: xi = ln(2 cosh t) - ln(40)/4.
const double kBubbleShift = -0.25 * std::log(40.0);
double bubble_xi(double t) { return std::log(2.0 * std::cosh(t)) + kBubbleShift; }
}  // namespace

TEST(ChangeOfVariables, CylinderIsZeroLine) {
    for (double r : {0.5, 1.0, 2.0, 7.0}) {
        EXPECT_NEAR(xi_from_u(std::pow(r, -1.5), r, 5), 0.0, 1e-15);
        EXPECT_NEAR(u_from_xi(0.0, std::log(r), 5), std::pow(r, -1.5), 1e-15);
    }
}

TEST(ChangeOfVariables, BubbleProfile) {
    const int n = 4;
    std::vector<RadialSample> prof;
    for (double r : {0.3, 1.0, 2.5}) prof.push_back({r, std::pow(1.0 / (1.0 + r * r), 0.5 * (n - 2.0))});
    const auto xi = xi_from_u(prof, n);
    for (const auto& s : xi) EXPECT_NEAR(s.value, std::log(2.0 * std::cosh(std::log(s.r))), 1e-14);
    const auto back = u_from_xi(xi, n);
    for (std::size_t i = 0; i < prof.size(); ++i) EXPECT_NEAR(back[i].value, prof[i].value, 1e-15);
    EXPECT_THROW(xi_from_u(0.0, 1.0, n), std::domain_error);
}

TEST(OdeRhs, ReferenceValues) {
    const RadialEquation eq(5, 2);
    EXPECT_DOUBLE_EQ(eq.theta(), 0.5);
    EXPECT_NEAR(*ode_rhs(kXiCyl52, 0.0, eq), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(*ode_rhs(0.0, 0.0, eq), 0.25);
    // Blow-up seed with c = -1, eps = 0.01.
    const double eps = 0.01;
    const double w = 1.0 - std::exp(-2 * eps);
    EXPECT_NEAR(*ode_rhs(eps, -std::exp(-eps), eq), 0.5 * std::exp(-4 * eps) / w - 0.25 * w, 1e-12);
    EXPECT_NEAR(*ode_rhs(eps, -std::exp(-eps), eq), 24.2558, 1e-4);
    EXPECT_FALSE(ode_rhs(0.0, 1.0, eq).has_value());
}

TEST(BoundaryResiduals, RobinData) {
    const double eps = 0.2, c = -0.7;
    const RadialState s{0.0, eps + std::log(std::abs(c)), -std::exp(-eps)};
    EXPECT_NEAR(inner_bc_residual(s, c), 0.0, 1e-15);
    EXPECT_NEAR(inner_slope(0.01, -1.0), -0.990050, 1e-6);
    const RadialState flat{1.0, 0.3, 0.0};
    EXPECT_EQ(inner_bc_residual(flat, 0.0), 0.0);
    EXPECT_EQ(outer_bc_residual(flat, 0.0, std::exp(1.0)), 0.0);
}

TEST(Integrate, CylinderFixedPoint) {
    const RadialEquation eq(5, 2);
    const auto tr = integrate({0, kXiCyl52, 0}, 10, eq);
    EXPECT_TRUE(tr.completed());
    for (const auto& p : tr.points()) EXPECT_NEAR(p.xi, kXiCyl52, 1e-12);
}

TEST(Integrate, BubbleAgreesWithClosedForm) {
    const RadialEquation eq(5, 2);
    const auto tr = integrate({0, bubble_xi(0.0), 0}, 3, eq);
    ASSERT_TRUE(tr.completed());
    for (double t : {0.1, 1.2345, 2.9}) EXPECT_NEAR(tr.at(t).xi, bubble_xi(t), 1e-8);
    EXPECT_LE(max_sigma_residual(reconstruct(tr, 50)), 1e-8);
}

TEST(Integrate, BlowUpSeedLosesEllipticity) {
    const RadialEquation eq(5, 2);
    const auto tr = integrate({0, 0.01, -std::exp(-0.01)}, 10, eq);
    EXPECT_EQ(tr.termination(), Termination::ellipticity_breakdown);
    EXPECT_GT(tr.t_end(), 0.0);
    EXPECT_LT(tr.t_end(), 10.0);
    EXPECT_LE(max_sigma_residual(reconstruct(tr)), 1e-8);
}

TEST(Integrate, BackwardDirection) {
    const RadialEquation eq(5, 2);
    const auto tr = integrate({0, bubble_xi(0.0), 0}, -1.5, eq);
    ASSERT_TRUE(tr.completed());
    EXPECT_NEAR(tr.back().xi, bubble_xi(-1.5), 1e-8);
    EXPECT_THROW(tr.at(0.5), std::out_of_range);
}

TEST(Cylinder, ValuesAndErrors) {
    EXPECT_NEAR(cylinder_xi(5, 2), 0.173287, 1e-6);
    EXPECT_NEAR(cylinder_xi(3, 1), 0.5 * std::log(2.0), 1e-15);
    const auto c = cylinder_solution(5, 2);
    EXPECT_NEAR(std::exp(4 * c.xi) * 0.5, 1.0, 1e-14);
    EXPECT_NEAR(c.sigma_residual, 0.0, 1e-14);
    EXPECT_THROW(cylinder_solution(4, 2), std::domain_error);
}

TEST(Cylinder, BifurcationThreshold) {
    EXPECT_NEAR(bifurcation_threshold(5, 2), std::exp(std::numbers::pi), 1e-12);
    EXPECT_NEAR(bifurcation_threshold(7, 2), 6.1337, 1e-4);
    EXPECT_NEAR(bifurcation_threshold(7, 3), 23.1407, 1e-4);
    EXPECT_THROW(bifurcation_threshold(6, 3), std::domain_error);
}

TEST(Shooting, NeumannDataBelowThresholdGivesCylinder) {
    const auto res = solve_annulus(AnnulusProblem(5, 2, 2.0));
    ASSERT_TRUE(res.solved());
    ASSERT_EQ(res.solutions.size(), 1u);
    EXPECT_NEAR(res.solutions[0].xi0, kXiCyl52, 1e-8);
    EXPECT_LE(std::abs(res.solutions[0].outer_residual), 1e-10);
}

TEST(Shooting, SecondSolutionAboveThreshold) {
    const auto res = solve_annulus(AnnulusProblem(5, 2, 30.0));
    ASSERT_TRUE(res.solved());
    EXPECT_GE(res.solutions.size(), 2u);
    for (const auto& s : res.solutions) {
        EXPECT_LE(std::abs(s.inner_residual), 1e-10);
        EXPECT_LE(std::abs(s.outer_residual), 1e-10);
        EXPECT_LE(s.max_sigma_residual, 1e-8);
        EXPECT_TRUE(s.trajectory.completed());
    }
}

TEST(Shooting, NonnegativeDataSolvable) {
    for (double R : {1.5, 10.0})
        for (auto [c1, c2] : {std::pair{0.4, 0.1}, std::pair{-0.2, 0.5}}) {
            const auto res = solve_annulus(AnnulusProblem(7, 2, R, c1, c2));
            EXPECT_TRUE(res.solved()) << "R=" << R << " c1=" << c1 << " c2=" << c2 << " " << res.note;
        }
}

TEST(Shooting, ProblemValidation) {
    EXPECT_THROW(AnnulusProblem(5, 2, 1.0), std::domain_error);
    EXPECT_THROW(AnnulusProblem(2, 1, 2.0), std::domain_error);
    EXPECT_THROW(AnnulusProblem(5, 6, 2.0), std::domain_error);
}

TEST(Threshold, Preconditions) {
    EXPECT_THROW(find_r_star(5, 2, 0.3, 0.0), std::domain_error);
    EXPECT_THROW(find_r_star(5, 1, -0.3, 0.0), std::domain_error);
    EXPECT_THROW(find_r_star(4, 2, -0.3, 0.0), std::domain_error);
}

TEST(Threshold, BracketsAndOrdering) {
    const auto a = find_r_star(5, 2, -0.3, 0.0);
    ASSERT_EQ(a.status, ThresholdStatus::resolved) << a.note;
    EXPECT_GT(a.R_star, 1.0);
    EXPECT_LE((a.hi - a.lo) / a.lo, 1e-4);
    // Frozen from a converged run.
    EXPECT_NEAR(a.R_star, 1.01078, 2e-4);
    EXPECT_FALSE(solve_annulus(AnnulusProblem(5, 2, a.lo * 0.999, -0.3, 0.0)).solved());
    EXPECT_TRUE(solve_annulus(AnnulusProblem(5, 2, a.hi * 1.001, -0.3, 0.0)).solved());
    const auto b = find_r_star(5, 2, -0.5, 0.0);
    ASSERT_EQ(b.status, ThresholdStatus::resolved);
    EXPECT_GE(b.R_star, a.R_star);
}

TEST(BlowUpFamily, ScalingAndBoundedWindow) {
    const auto tab = counterexample_sweep(5, 2, -1.0, log_spaced(1e-4, 1e-2, 5));
    ASSERT_EQ(tab.rows.size(), 5u);
    EXPECT_NEAR(tab.slope_xi_tt, -1.0, 0.05);
    EXPECT_NEAR(tab.slope_hessian, -1.0, 0.05);
    EXPECT_GT(tab.T_min, 0.0);
    EXPECT_LT(tab.T_max, 100.0);
    EXPECT_LT(tab.c1_norm_ratio, 1.1);
    EXPECT_THROW(counterexample_sweep(5, 2, 1.0, {0.01}), std::domain_error);
}

TEST(Helpers, LogSpaced) {
    const auto v = log_spaced(1e-4, 1e-2, 3);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_NEAR(v[1], 1e-3, 1e-18);
}
