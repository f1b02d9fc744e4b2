#pragma once

// Property suites shared by the acceptance runner and `syl verify`. Each
// suite exercises library APIs only and returns named metrics with the
// limits they were judged against.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "syl/axioms.hpp"
#include "syl/mobius.hpp"
#include "syl/radial.hpp"
#include "syl/sampling.hpp"
#include "syl/schouten.hpp"
#include "syl/shooting.hpp"
#include "syl/symfn.hpp"

namespace syl {

struct Metric {
    std::string name{};
    double value;
    /// Human-readable bound, e.g. "<= 1e-10".
    std::string limit{};
    bool ok;
};

struct SuiteResult {
    std::string id{};
    std::string title{};
    bool passed = true;
    double seconds = 0.0;
    std::vector<Metric> metrics{};
    std::string note{};

    void check(std::string name, double value, std::string limit, bool ok) {
        metrics.push_back({std::move(name), value, std::move(limit), ok});
        passed = passed && ok;
    }
    void at_most(std::string name, double value, double bound) {
        check(std::move(name), value, "<= " + fmt(bound), value <= bound);
    }
    void at_least(std::string name, double value, double bound) {
        check(std::move(name), value, ">= " + fmt(bound), value >= bound);
    }
    void is_true(std::string name, bool value) { check(std::move(name), value ? 1.0 : 0.0, "== 1", value); }

    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }
};

/// Sum over all k-subsets; exponential, used as an oracle for small n.
inline double sigma_k_bruteforce(std::span<const double> l, int k) {
    const auto n = static_cast<int>(l.size());
    if (k == 0) return 1.0;
    if (k < 0 || k > n || n > 24) throw std::domain_error("sigma_k_bruteforce: k out of range or n too large");
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        double p = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p *= l[static_cast<std::size_t>(i)];
        total += p;
    }
    return total;
}

namespace suites {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Vec random_point_in_ball(Rng& rng, std::size_t n, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return scaled(random_unit_vector(rng, n), radius * std::pow(u(rng), 1.0 / static_cast<double>(n)));
}

// 1 ---------------------------------------------------------------------------
inline SuiteResult cylinder(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"cylinder", "cylinder fixed point (n,k) = (5,2)"};
    const auto cyl = cylinder_solution(5, 2);
    r.at_most("|xi_cyl - ln2/4|", std::abs(cyl.xi - 0.25 * std::log(2.0)), 1e-10);
    r.at_most("|sigma_2 - 1| closed form", std::abs(cyl.sigma_residual), 1e-10);

    const RadialEquation eq(5, 2);
    const auto tr = integrate({0.0, cyl.xi, 0.0}, 10.0, eq);
    r.is_true("trajectory reaches t = 10", tr.completed());
    double drift = 0.0;
    for (const auto& p : tr.points()) drift = std::max(drift, std::abs(p.xi - cyl.xi));
    r.at_most("max |xi(t) - xi_cyl| on [0,10]", drift, 1e-10);
    r.at_most("|sigma_2 - 1| along trajectory", max_sigma_residual(reconstruct(tr, 101)), 1e-10);

    const auto sol = solve_annulus(AnnulusProblem(5, 2, 2.0));
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& s : sol.solutions) nearest = std::min(nearest, std::abs(s.xi0 - cyl.xi));
    r.at_most("solver root vs xi_cyl (R = 2)", nearest, 1e-10);
    return r;
}

// 2 ---------------------------------------------------------------------------
inline SuiteResult bifurcation(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"bifurcation", "second solution appears at exp(pi/sqrt(n-2k))"};
    for (auto [n, k] : {std::pair{5, 2}, {7, 2}, {7, 3}}) {
        const auto b = locate_bifurcation(n, k);
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        r.is_true(tag + " count 1 below, >= 2 above", b.transition_found && b.count_above >= 2);
        r.at_most(tag + " |R_located/R_formula - 1|", std::abs(b.located / b.predicted - 1.0), 1e-3);
    }
    return r;
}

// 3 ---------------------------------------------------------------------------
inline SuiteResult existence(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"existence", "c1 + c2 >= 0: a radial solution for every R"};
    std::size_t cells = 0, solved = 0;
    double worst_res = 0.0;
    for (auto [n, k] : {std::pair{5, 2}, {7, 3}})
        for (auto [c1, c2] : {std::pair{0.0, 0.0}, {0.3, 0.0}, {0.5, -0.2}})
            for (double R : {1.5, 2.0, 5.0, 10.0, 50.0}) {
                const auto s = solve_annulus(AnnulusProblem(n, k, R, c1, c2));
                ++cells;
                if (!s.solutions.empty()) ++solved;
                for (const auto& sol : s.solutions)
                    worst_res = std::max({worst_res, std::abs(sol.outer_residual), std::abs(sol.inner_residual)});
            }
    r.check("cells with a solution", static_cast<double>(solved), "== " + std::to_string(cells), solved == cells);
    r.at_most("max boundary residual", worst_res, 1e-10);
    return r;
}

// 4 ---------------------------------------------------------------------------
inline SuiteResult threshold(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"threshold", "R_* for (n,k) = (5,2), (c1,c2) = (-0.3,0)"};
    const auto t = find_r_star(5, 2, -0.3, 0.0);
    r.is_true(std::string("status resolved (") + to_string(t.status) + ")", t.status == ThresholdStatus::resolved);
    r.check("R_*", t.R_star, "> 1", t.R_star > 1.0);
    if (t.status == ThresholdStatus::resolved) {
        const auto below = solve_annulus(AnnulusProblem(5, 2, t.R_star * (1.0 - 1e-3), -0.3, 0.0));
        const auto above = solve_annulus(AnnulusProblem(5, 2, t.R_star * (1.0 + 1e-3), -0.3, 0.0));
        r.is_true("no solution at R_*(1 - 1e-3)", below.status == ShootingStatus::no_solution);
        r.is_true("solution at R_*(1 + 1e-3)", above.status == ShootingStatus::solved);
    }
    return r;
}

// 5 ---------------------------------------------------------------------------
/// xi_tt at the seed xi(0) = eps + ln|c|, xi_t(0) = -e^{-eps}, evaluated
/// directly from the equation.
inline double blowup_seed_curvature(int n, int k, double c, double eps) {
    const double theta = std::pow(2.0, k - 1) / binomial(n - 1, k - 1);
    const double xi = eps + std::log(-c);
    const double w = 1.0 - std::exp(-2.0 * eps);
    return theta * std::exp(-2.0 * k * xi) * std::pow(w, 1.0 - k) - (n - 2.0 * k) / (2.0 * k) * w;
}

inline SuiteResult blowup(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"blowup", "C^2 blow-up family, (n,k) = (5,2), c = -1, delta = 0.05"};
    const auto tab = counterexample_sweep(5, 2, -1.0, log_spaced(1e-4, 1e-2, 9), 0.05);
    r.at_most("|slope log xi_tt(0) vs log eps + 1| / 1", std::abs(tab.slope_xi_tt + 1.0), 0.05);
    r.at_most("max/min of sup(u + 1/u + |grad u|)", tab.c1_norm_ratio, 2.0);
    r.check("T_min", tab.T_min, "> 0", tab.T_min > 0.0);
    bool all_closed = true;
    for (const auto& row : tab.rows) all_closed = all_closed && row.stopped_by != "t_cap";
    r.is_true("every window closes at finite T", all_closed);
    r.check("T_max", tab.T_max, "< 100", tab.T_max < 100.0);

    const auto& spot = *std::find_if(tab.rows.begin(), tab.rows.end(),
                                     [](const CounterexampleRow& row) { return std::abs(row.eps - 1e-2) < 1e-12; });
    const double direct = blowup_seed_curvature(5, 2, -1.0, 1e-2);
    r.at_most("|xi_tt(0; 0.01) - direct evaluation|", std::abs(spot.xi_tt0 - direct), 1e-6);
    r.at_most("|round(xi_tt(0; 0.01), 2) - 24.26|", std::abs(std::round(spot.xi_tt0 * 100.0) / 100.0 - 24.26), 1e-9);
    r.note = "xi_tt(0; 0.01) = " + SuiteResult::fmt(spot.xi_tt0);
    return r;
}

// 6 ---------------------------------------------------------------------------
inline SuiteResult schouten(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"schouten", "Schouten spectra of reference and radial solutions"};
    Rng rng(seed);
    const int n = 5;
    const auto bubble = ReferenceSolution::bubble(n);
    const auto bubble_fn = bubble.as_function();
    const Vec two(n, 2.0);
    double closed = 0.0, fd = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec y = random_point_in_ball(rng, n, 2.0);
        closed = std::max(closed, max_abs_diff(schouten_spectrum(bubble, y), two));
        fd = std::max(fd, max_abs_diff(schouten_spectrum_fd(bubble_fn, y), two));
    }
    r.at_most("bubble, closed-form derivatives", closed, 1e-8);
    r.at_most("bubble, finite differences", fd, 1e-5);

    const auto cyl = ReferenceSolution::cylinder(n);
    Vec expect(n, 0.5);
    expect.back() = -0.5;
    double cyl_err = 0.0;
    for (int i = 0; i < 200; ++i) {
        Vec y = random_point_in_ball(rng, n, 3.0);
        if (norm(y) < 0.1) continue;
        cyl_err = std::max(cyl_err, max_abs_diff(schouten_spectrum(cyl, y), expect));
    }
    r.at_most("cylinder (-1/2, 1/2, ...)", cyl_err, 1e-10);

    // Random profiles xi(t) = a + b t + c t^2 through the dense pipeline.
    std::uniform_real_distribution<double> coef(-0.5, 0.5), rad(0.5, 3.0);
    std::uniform_int_distribution<int> dim(3, 8);
    double radial = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int m = dim(rng);
        const double a = coef(rng), b = coef(rng), c = coef(rng);
        const ScalarFn u = [=](std::span<const double> y) {
            const double t = std::log(norm(y));
            return u_from_xi(a + b * t + c * t * t, t, m);
        };
        const Vec y = scaled(random_unit_vector(rng, static_cast<std::size_t>(m)), rad(rng));
        const double t = std::log(norm(y));
        Vec formula = radial_eigenvalues(a + b * t + c * t * t, b + 2.0 * c * t, 2.0 * c).expand(m);
        std::sort(formula.begin(), formula.end(), std::greater<>());
        const Vec dense = schouten_spectrum_fd(u, y);
        double scale = 1.0;
        for (double v : formula) scale = std::max(scale, std::abs(v));
        radial = std::max(radial, max_abs_diff(formula, dense) / scale);
    }
    r.at_most("radial formula vs dense pipeline", radial, 1e-6);

    double along = 0.0;
    std::size_t trajectories = 0;
    for (const auto& p : {AnnulusProblem(5, 2, 2.0), AnnulusProblem(5, 2, 30.0), AnnulusProblem(5, 2, 1.5, -0.3, 0.0),
                          AnnulusProblem(7, 3, 10.0, 0.3, 0.0), AnnulusProblem(7, 2, 8.0)}) {
        for (const auto& s : solve_annulus(p).solutions) {
            ++trajectories;
            along = std::max(along, s.max_sigma_residual);
            along = std::max(along, max_sigma_residual(reconstruct(s.trajectory, 200)));
        }
    }
    r.check("solution trajectories checked", static_cast<double>(trajectories), ">= 5", trajectories >= 5);
    r.at_most("|sigma_k - 1| along solutions", along, 1e-8);
    return r;
}

// 7 ---------------------------------------------------------------------------
inline SuiteResult kelvin(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"kelvin", "Kelvin transform and moving spheres on the bubble"};
    Rng rng(seed);
    const int n = 5;
    const Vec origin(n, 0.0);
    double self = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        const auto w = ReferenceSolution::bubble(n, a).as_function();
        const auto wk = syl::kelvin(w, origin, 1.0 / a);
        for (int i = 0; i < 500; ++i) {
            const Vec y = random_point_in_ball(rng, n, 5.0);
            if (norm(y) < 1e-3) continue;
            self = std::max(self, std::abs(wk(y) - w(y)) / w(y));
        }
    }
    r.at_most("bubble self-Kelvin at lambda = 1/a", self, 1e-10);

    const auto bubble = ReferenceSolution::bubble(n);
    const auto w = bubble.as_function();
    std::vector<Vec> cloud{};
    for (int i = 0; i < 20000; ++i) cloud.push_back(random_point_in_ball(rng, n, 5.0));
    MovingSphereOptions opt;
    opt.lambda_max = 5.0;
    const auto ms = moving_sphere_radius(w, cloud, origin, opt);
    r.at_most("|lambda_bar - 1|", std::abs(ms.lambda_bar - 1.0), 1e-4);

    const VectorFn grad_log = [&](std::span<const double> y) { return scaled(bubble.gradient(y), 1.0 / bubble.value(y)); };
    std::vector<Vec> interior;
    for (int i = 0; i < 2000; ++i) interior.push_back(random_point_in_ball(rng, n, ms.lambda_bar));
    const auto gb = gradient_bound_check(grad_log, interior, ms.lambda_bar);
    r.check("interior samples tested", static_cast<double>(gb.tested), ">= 100", gb.tested >= 100);
    r.check("gradient bound violations", static_cast<double>(gb.violations), "== 0", gb.violations == 0);
    r.note = "max |grad ln w| (lambda - |y|)/(n-2) = " + SuiteResult::fmt(gb.max_ratio);
    return r;
}

// 8 ---------------------------------------------------------------------------
inline SuiteResult sphere(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"sphere", "sphere inequalities (a), (b) with equality cases"};
    Rng rng(seed);
    std::uniform_real_distribution<double> rr(0.2, 3.0), scale(0.0, 3.0);
    std::uniform_int_distribution<int> dim(2, 6);
    double worst = 0.0, eq_worst = 0.0;
    std::size_t strict_hits = 0, generic = 0, equality_cases = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto n = static_cast<std::size_t>(dim(rng));
        const Vec x = random_vector(rng, n, -2.0, 2.0);
        const double rad = rr(rng);
        const Vec y = axpy(rad, random_unit_vector(rng, n), x);
        Vec z;
        switch (i % 4) {
            case 0: z = axpy(rad, random_unit_vector(rng, n), x); break;  // on the sphere
            case 1: z = x; break;                                         // center
            default: z = axpy(scale(rng) * rad, random_unit_vector(rng, n), x); break;
        }
        const auto res = sphere_identity_check(x, rad, z, y);
        const double gap = res.lhs - res.rhs;
        worst = std::max(worst, -gap);
        if (res.equality_expected) {
            ++equality_cases;
            eq_worst = std::max(eq_worst, std::abs(gap));
        } else {
            ++generic;
            if (gap > 1e-12) ++strict_hits;
        }
    }
    r.at_most("max violation (rhs - lhs)", worst, 1e-12);
    r.check("equality cases", static_cast<double>(equality_cases), ">= 5000", equality_cases >= 5000);
    r.at_most("max |lhs - rhs| in equality cases", eq_worst, 1e-12);
    r.note = std::to_string(strict_hits) + "/" + std::to_string(generic) + " generic samples strictly above 1e-12";
    return r;
}

// 9 ---------------------------------------------------------------------------
inline std::vector<BoundaryData> random_boundary_data(Rng& rng, std::size_t count) {
    std::uniform_int_distribution<int> dim(3, 7);
    std::uniform_real_distribution<double> s(0.2, 4.0);
    std::vector<BoundaryData> out{};
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(dim(rng));
        out.push_back({random_vector(rng, n, -3.0, 3.0), s(rng), random_vector(rng, n, -2.0, 2.0),
                       random_unit_vector(rng, n), random_symmetric(rng, n, 2.0)});
    }
    return out;
}

inline std::vector<MobiusMap> random_mobius_maps(Rng& rng, std::size_t per_dimension) {
    std::vector<MobiusMap> maps{};
    std::uniform_real_distribution<double> pos(0.3, 3.0);
    for (std::size_t n = 3; n <= 7; ++n)
        for (std::size_t i = 0; i < per_dimension; ++i) {
            maps.push_back(MobiusMap(n)
                               .then(Translation{random_vector(rng, n)})
                               .then(Inversion{random_vector(rng, n, -3.0, 3.0), pos(rng)})
                               .then(Orthogonal{random_orthogonal(rng, n)})
                               .then(Dilation{pos(rng)}));
        }
    return maps;
}

inline SuiteResult boundary_identities(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"boundary", "boundary-operator reduction identities"};
    Rng rng(seed);
    const auto samples = random_boundary_data(rng, 1000);
    const auto maps = random_mobius_maps(rng, 2);
    const auto rep = verify_reduction_identities(samples, maps, 1e-9);
    for (const auto& c : rep.checks) r.at_most(c.id + " max violation", c.max_violation, 1e-9);
    return r;
}

// 10 --------------------------------------------------------------------------
inline SuiteResult concave_f(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"concave_f", "concave f from the defining function sigma_2^(1/2), n = 4"};
    Rng rng(seed);
    const int n = 4;
    const auto h = builtin_defining_function(n, 2);
    const auto f = build_concave_f(h, 0.5);
    const auto samples = sample_gamma_k(rng, n, 2, 1000);
    const auto rep = verify_axioms(f, samples);

    double min_grad = std::numeric_limits<double>::infinity(), min_trace = min_grad;
    for (const auto& l : samples) {
        const Vec g = f.gradient(l);
        min_grad = std::min(min_grad, *std::min_element(g.begin(), g.end()));
        min_trace = std::min(min_trace, std::accumulate(g.begin(), g.end(), 0.0));
    }
    r.check("min df/dlambda_i", min_grad, "> 0", min_grad > 0.0);
    r.at_most("max Hessian eigenvalue", rep.at("concavity").observed, 1e-8);
    const double quoted = quoted_delta(h, 0.5);
    r.at_least("min trace of gradient - quoted delta", min_trace - quoted, -1e-8);
    r.at_least("min trace of gradient - n f(e/n)", min_trace - *f.delta, -1e-8);
    r.at_most("Euler identity", rep.at("euler").max_violation, 1e-8);
    r.at_least("min df_i [lambda]/f - (1 - alpha)", min_relative_monotonicity(f, samples) - 0.5, -1e-8);

    const auto h1 = builtin_defining_function(n, 1);
    const auto f1 = build_concave_f(h1, 0.5);
    double lin = 0.0;
    for (const auto& l : samples) lin = std::max(lin, rel_err(f1.value(l), sigma_k(l, 1)));
    r.at_most("h = sigma_1 reproduces sigma_1", lin, 1e-14);
    r.at_most("h = sigma_1: |delta - n|", std::abs(*f1.delta - n), 0.0);
    r.at_most("h = sigma_1: |quoted delta - n|", std::abs(quoted_delta(h1, 0.5) - n), 0.0);
    return r;
}

// 11 --------------------------------------------------------------------------
inline SuiteResult cylinder_sigma(std::uint64_t = kDefaultSeed) {
    SuiteResult r{"cylinder_sigma", "sigma_k of the cylinder spectrum"};
    double worst = 0.0;
    bool sign_ok = true;
    for (int n = 3; n <= 8; ++n) {
        Vec l(static_cast<std::size_t>(n), 0.5);
        l[0] = -0.5;
        for (int k = 1; k <= n; ++k) {
            const double brute = sigma_k_bruteforce(l, k);
            const double closed = std::pow(0.5, k) * binomial(n - 1, k - 1) * (n - 2.0 * k) / k;
            worst = std::max(worst, std::abs(brute - closed));
            sign_ok = sign_ok && ((brute > 0.0) == (n > 2 * k));
            worst = std::max(worst, std::abs(sigma_k(l, k) - closed));
        }
    }
    r.at_most("max |brute force - closed form|", worst, 1e-12);
    r.is_true("positive iff n > 2k", sign_ok);
    return r;
}

// 12 --------------------------------------------------------------------------
inline SuiteResult homotopy(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"homotopy", "deformation t lambda + (1-t) sigma_1 e"};
    Rng rng(seed);
    const int n = 5;
    const auto cone = gamma_k_predicate(2);
    std::size_t mism0 = 0, mism1 = 0;
    for (int i = 0; i < 10000; ++i) {
        const Vec l = random_vector(rng, n, -1.0, 1.0);
        if (homotopy_membership(l, 0.0, cone) != (sigma_k(l, 1) > 0.0)) ++mism0;
        if (homotopy_membership(l, 1.0, cone) != cone(l)) ++mism1;
    }
    r.check("t = 0 mismatches with sigma_1 > 0", static_cast<double>(mism0), "== 0", mism0 == 0);
    r.check("t = 1 mismatches with Gamma", static_cast<double>(mism1), "== 0", mism1 == 0);

    // Mean-value bound |f_{t+dt} - f_t| <= dt sup |grad f . (lambda - sigma_1 e)|.
    const auto f = sigma_root(n, 2);
    double worst_ratio = 0.0, f1_err = 0.0;
    const int steps = 200;
    for (int i = 0; i < 200; ++i) {
        const Vec l = random_vector(rng, n, 0.05, 2.0);
        const double s1 = sigma_k(l, 1);
        Vec dir(l.size());
        for (std::size_t j = 0; j < l.size(); ++j) dir[j] = l[j] - s1;
        double lip = 0.0, jump = 0.0;
        double prev = homotopy_f(l, 0.0, f);
        for (int s = 1; s <= steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            const double cur = homotopy_f(l, t, f);
            jump = std::max(jump, std::abs(cur - prev));
            lip = std::max(lip, std::abs(dot(f.gradient(homotopy_point(l, t)), dir)));
            lip = std::max(lip, std::abs(dot(f.gradient(homotopy_point(l, t - 1.0 / steps)), dir)));
            prev = cur;
        }
        worst_ratio = std::max(worst_ratio, jump / (lip / steps + 1e-300));
        f1_err = std::max(f1_err, rel_err(homotopy_f(l, 1.0, f), f.value(l)));
    }
    r.at_most("max jump / (dt * Lipschitz bound)", worst_ratio, 1.0 + 1e-9);
    r.at_most("f_1 = f", f1_err, 1e-15);
    return r;
}

struct SuiteEntry {
    int criterion;
    std::string id{};
    std::function<SuiteResult(std::uint64_t)> run;
    /// Second accepted selector, kept for existing configs.
    std::string alias{};

    /// Accepts the id, the alias, the criterion number or "all".
    bool matches(const std::string& selector) const {
        return selector == "all" || selector == id || (!alias.empty() && selector == alias) ||
               selector == std::to_string(criterion);
    }
};

inline const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> all{
        {1, "cylinder", cylinder},
        {2, "bifurcation", bifurcation},
        {3, "existence", existence},
        {4, "threshold", threshold},
        {5, "blowup", blowup},
        {6, "schouten", schouten},
        {7, "kelvin", kelvin},
        {8, "sphere", sphere},
        {9, "boundary", boundary_identities, "appendixA"},
        {10, "concave_f", concave_f},
        {11, "cylinder_sigma", cylinder_sigma},
        {12, "homotopy", homotopy},
    };
    return all;
}

inline SuiteResult run_timed(const SuiteEntry& e, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
        r = e.run(seed);
    } catch (const std::exception& ex) {
        r.id = e.id;
        r.passed = false;
        r.note = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace suites
}  // namespace syl
