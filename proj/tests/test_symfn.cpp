#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "syl/axioms.hpp"
#include "syl/sampling.hpp"
#include "syl/suites.hpp"
#include "syl/symfn.hpp"

using namespace syl;

TEST(SigmaK, IdenticalEntries) { EXPECT_DOUBLE_EQ(sigma_k(EigenvalueVector{1, 1, 1, 1}, 2), 6.0); }

TEST(SigmaK, CylinderSpectrum) {
    const EigenvalueVector lam{-0.5, 0.5, 0.5, 0.5, 0.5};
    EXPECT_NEAR(sigma_k(lam, 2), 0.5, 1e-15);
    EXPECT_NEAR(sigma_k(lam, 2), std::pow(0.5, 2) * binomial(4, 1) * (5 - 4) / 2.0, 1e-15);
}

TEST(SigmaK, MixedSigns) { EXPECT_DOUBLE_EQ(sigma_k(EigenvalueVector{3, 1, -1}, 2), -1.0); }

TEST(SigmaK, RejectsOutOfRangeK) {
    const EigenvalueVector lam{1, 2, 3};
    EXPECT_THROW(sigma_k(lam, 4), std::domain_error);
    EXPECT_THROW(sigma_k(lam, -1), std::domain_error);
}

TEST(SigmaK, MatchesSubsetEnumeration) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 6;
        const Vec lam = random_vector(rng, static_cast<std::size_t>(n), -2.0, 2.0);
        for (int k = 0; k <= n; ++k) {
            const double ref = sigma_k_bruteforce(lam, k);
            EXPECT_NEAR(sigma_k(lam, k), ref, 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(SigmaKGradient, SmallCases) {
    const Vec a{1, 1, 1}, b{2, 3}, c{1, 2, 3};
    EXPECT_EQ(sigma_k_gradient(a, 1), (Vec{1, 1, 1}));
    EXPECT_EQ(sigma_k_gradient(b, 2), (Vec{3, 2}));
    EXPECT_EQ(sigma_k_gradient(c, 2), (Vec{5, 4, 3}));
}

TEST(SigmaKGradient, MatchesFiniteDifferences) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec lam = random_vector(rng, 6, -1.0, 2.0);
        for (int k = 1; k <= 6; ++k) {
            const Vec g = sigma_k_gradient(lam, k);
            const Vec fd = fd_gradient([k](std::span<const double> l) { return sigma_k(l, k); }, lam);
            for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], fd[i], 1e-7);
        }
    }
}

TEST(Cone, Membership) {
    EXPECT_TRUE(in_gamma_k(EigenvalueVector{1, 1, 1}, ConeSpec(3, 3)));
    EXPECT_FALSE(in_gamma_k(EigenvalueVector{3, 1, -1}, ConeSpec(3, 2)));
    EXPECT_TRUE(in_gamma_k(EigenvalueVector{-0.5, 0.5, 0.5, 0.5, 0.5}, ConeSpec(5, 2)));
}

TEST(Cone, Errors) {
    EXPECT_THROW(ConeSpec(3, 0), std::domain_error);
    EXPECT_THROW(ConeSpec(3, 4), std::domain_error);
    EXPECT_THROW(in_gamma_k(EigenvalueVector{1, 1, 1}, ConeSpec(4, 2)), std::invalid_argument);
    EXPECT_THROW(EigenvalueVector({1.0, 2.0}), std::invalid_argument);
}

TEST(Cone, NestedAndSampled) {
    Rng rng(3);
    for (const auto& l : sample_gamma_k(rng, 5, 2, 300)) {
        EXPECT_TRUE(in_gamma_k(l, 2));
        EXPECT_TRUE(in_gamma_k(l, 1));
    }
}

TEST(BuildConcaveF, LinearDefiningFunction) {
    const auto h = builtin_defining_function(2, 1);
    const auto f = build_concave_f(h, 0.3);
    EXPECT_NEAR(f(Vec{2, 1}), 3.0, 1e-14);
}

TEST(BuildConcaveF, Errors) {
    const auto h = builtin_defining_function(3, 2);
    EXPECT_THROW(build_concave_f(h, 0.0), std::domain_error);
    EXPECT_THROW(build_concave_f(h, 1.0), std::domain_error);
    auto bad = h;
    bad.value = [](std::span<const double>) { return 0.0; };
    EXPECT_THROW(build_concave_f(bad, 0.5), std::invalid_argument);
}

TEST(BuildConcaveF, NonSymmetricInputIsAveraged) {
    DefiningFunction h;
    h.n = 3;
    h.name = "skewed";
    // Concave and positive on the positive orthant, but not symmetric.
    h.value = [](std::span<const double> l) { return std::sqrt(l[0] * l[1]) + 0.5 * l[2]; };
    h.cone = [](std::span<const double> l) { return l[0] > 0 && l[1] > 0 && l[2] > 0; };
    const auto f = build_concave_f(h, 0.5);
    const Vec a{0.3, 1.2, 2.0}, b{2.0, 0.3, 1.2};
    EXPECT_NEAR(f.value(a), f.value(b), 1e-13);
}

TEST(Homotopy, Endpoints) {
    const Vec lam{5, -1, -1};
    EXPECT_TRUE(homotopy_membership(lam, 0.0, gamma_k_predicate(1)));
    EXPECT_FALSE(homotopy_membership(lam, 1.0, gamma_k_predicate(2)));
    EXPECT_DOUBLE_EQ(sigma_k(lam, 2), -9.0);
    EXPECT_THROW(homotopy_f(lam, 1.0, sigma_root(3, 2)), cone_violation);
    EXPECT_THROW(homotopy_point(lam, 1.5), std::domain_error);
}

TEST(Axioms, SigmaOneIsLinear) {
    Rng rng(5);
    const auto f = sigma_root(4, 1);
    const auto samples = sample_gamma_k(rng, 4, 1, 300);
    const auto rep = verify_axioms(f, samples);
    EXPECT_TRUE(rep.all_passed());
    EXPECT_NEAR(rep.at("delta_bound").observed, 4.0, 1e-9);
}

TEST(Axioms, RootedSigmaTwoIsConcave) {
    Rng rng(6);
    const auto f = sigma_root(4, 2);
    const auto samples = sample_gamma_k(rng, 4, 2, 1000);
    const auto rep = verify_axioms(f, samples);
    EXPECT_TRUE(rep.all_passed());
    EXPECT_LE(rep.at("concavity").max_violation, 1e-8);
}

TEST(Axioms, UnrootedSigmaTwoFailsHomogeneity) {
    Rng rng(8);
    const auto f = sigma_power(4, 2);
    const auto samples = sample_gamma_k(rng, 4, 2, 100);
    const auto rep = verify_axioms(f, samples);
    EXPECT_FALSE(rep.at("homogeneity").passed);
    EXPECT_FALSE(rep.all_passed());
}

TEST(Axioms, ConstructedFunctionPasses) {
    Rng rng(9);
    const auto h = builtin_defining_function(5, 2);
    const auto f = build_concave_f(h, 0.5);
    const auto samples = sample_gamma_k(rng, 5, 2, 400);
    EXPECT_TRUE(verify_axioms(f, samples).all_passed());
    ASSERT_TRUE(f.delta.has_value());
    EXPECT_GE(*f.delta, quoted_delta(h, 0.5));
    EXPECT_GE(min_relative_monotonicity(f, samples), 0.5 - 1e-8);
}
