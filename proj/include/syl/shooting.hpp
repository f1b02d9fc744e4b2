#pragma once

// Shooting on xi(0) for the radial annulus problem. The inner Robin
// condition fixes xi_t(0) = c1 e^{-xi(0)}, so the outer residual is a
// function of one real parameter. Roots are bracketed on a grid, refined by
// bisection, and reported together with the scan diagnostics.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syl/parallel.hpp"
#include "syl/radial.hpp"

namespace syl {

inline double cylinder_xi(int n, int k) {
    if (n <= 2 * k) throw std::domain_error("cylinder solution requires n > 2k");
    const RadialEquation eq(n, k);
    return std::log(2.0 * k * eq.theta() / (n - 2.0 * k)) / (2.0 * k);
}

struct CylinderSolution {
    int n, k;
    double xi;
    /// u = scale * r^{-(n-2)/2}.
    double scale;
    double sigma_residual;
};

inline CylinderSolution cylinder_solution(int n, int k) {
    const double xi = cylinder_xi(n, k);
    const auto lam = radial_eigenvalues(xi, 0.0, 0.0);
    const double res = sigma_k(lam.expand(n), k) - 1.0;
    return {n, k, xi, std::exp(-0.5 * (n - 2.0) * xi), res};
}

/// Radius beyond which a second radial solution bifurcates from the cylinder
/// (linearization phi_tt + (n-2k) phi = 0 about the fixed point).
inline double bifurcation_threshold(int n, int k) {
    if (n <= 2 * k) throw std::domain_error("bifurcation_threshold requires n > 2k");
    return std::exp(std::numbers::pi / std::sqrt(n - 2.0 * k));
}

struct ScanSpec {
    double lo;
    double hi;
    std::size_t points = 2000;

    static ScanSpec around(double center, double half_width = 5.0, std::size_t points = 2000) {
        return {center - half_width, center + half_width, points};
    }
    /// [xi_cyl - 5, xi_cyl + 5] when the cylinder exists, else [-5, 5].
    static ScanSpec default_for(int n, int k) { return around(n > 2 * k ? cylinder_xi(n, k) : 0.0); }
};

struct ShootingOptions {
    IntegratorOptions integrator{};
    /// Required |outer residual| of a reported root.
    double root_tol = 1e-10;
    double merge_tol = 1e-6;
    /// A run of failed seeds longer than this many cells makes "no solution"
    /// unsound.
    std::size_t max_gap_cells = 10;
    /// Extra seeds approaching xi(0) = ln|c1|, where |xi_t(0)| reaches 1.
    bool edge_refinement = true;
    /// Golden-section search at interior minima of |residual| to catch root
    /// pairs closer than the grid spacing.
    bool tangency_refinement = true;
    unsigned threads = 0;
};

enum class ShootingStatus { solved, no_solution, inconclusive };

inline const char* to_string(ShootingStatus s) {
    switch (s) {
        case ShootingStatus::solved: return "solved";
        case ShootingStatus::no_solution: return "no_solution";
        case ShootingStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct ScanPoint {
    double xi0;
    Termination termination;
    /// Outer residual; NaN when the trajectory stopped before t = ln R.
    double residual;

    bool candidate() const { return std::isfinite(residual); }
};

struct ShootingSolution {
    double xi0;
    double xi_t0;
    double inner_residual;
    double outer_residual;
    double max_sigma_residual;
    Trajectory trajectory;
};

struct ShootingResult {
    AnnulusProblem problem;
    ScanSpec scan;
    ShootingStatus status = ShootingStatus::no_solution;
    std::vector<ShootingSolution> solutions{};
    /// Every evaluated seed, sorted by xi0 (grid plus refinement points).
    std::vector<ScanPoint> grid{};
    /// Seeds skipped because |c1 e^{-xi0}| >= 1.
    std::size_t inadmissible_seeds = 0;
    std::size_t sign_changes = 0;
    /// Longest run of consecutive non-candidates between two candidates.
    std::size_t widest_gap = 0;
    /// Brackets whose bisection hit a failed trajectory or stalled.
    std::size_t abandoned_brackets = 0;
    std::string note{};

    bool solved() const { return status == ShootingStatus::solved; }
};

namespace detail {

inline bool seed_admissible(double xi0, double c1, double guard) {
    const double s = inner_slope(xi0, c1);
    return 1.0 - s * s > guard;
}

inline Trajectory shoot(const AnnulusProblem& p, double xi0, const IntegratorOptions& opt) {
    return integrate({0.0, xi0, inner_slope(xi0, p.c1)}, p.length(), p.equation(), opt);
}

inline ScanPoint evaluate_seed(const AnnulusProblem& p, double xi0, const IntegratorOptions& opt) {
    const Trajectory tr = shoot(p, xi0, opt);
    double g = std::numeric_limits<double>::quiet_NaN();
    if (tr.completed()) {
        const auto& b = tr.back();
        g = outer_bc_residual({b.t, b.xi, b.xi_t}, p.c2, p.R);
    }
    return {xi0, tr.termination(), g};
}

inline std::vector<double> scan_seeds(const AnnulusProblem& p, const ScanSpec& scan, const ShootingOptions& opt,
                                      std::size_t& skipped) {
    if (scan.points < 2 || !(scan.hi > scan.lo)) throw std::invalid_argument("ScanSpec: need lo < hi and >= 2 points");
    const double h = (scan.hi - scan.lo) / static_cast<double>(scan.points - 1);
    std::vector<double> seeds{};
    skipped = 0;
    for (std::size_t i = 0; i < scan.points; ++i) {
        const double x = scan.lo + h * static_cast<double>(i);
        if (seed_admissible(x, p.c1, opt.integrator.guard))
            seeds.push_back(x);
        else
            ++skipped;
    }
    if (opt.edge_refinement && p.c1 != 0.0) {
        const double edge = std::log(std::abs(p.c1));
        if (edge >= scan.lo && edge < scan.hi) {
            for (int j = 0; j <= 20; ++j) {
                const double x = edge + h * std::ldexp(1.0, -j);
                if (x <= scan.hi && seed_admissible(x, p.c1, opt.integrator.guard)) seeds.push_back(x);
            }
        }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

}  // namespace detail

/// All radial solutions found on the scan. Trajectories stopping before
/// t = ln R carry no residual and count as gaps, never as sign information.
inline ShootingResult solve_annulus(const AnnulusProblem& problem, const ScanSpec& scan,
                                    const ShootingOptions& opt = {}) {
    ShootingResult res{problem, scan};
    const auto seeds = detail::scan_seeds(problem, scan, opt, res.inadmissible_seeds);

    res.grid.resize(seeds.size(), ScanPoint{0.0, Termination::step_failure, 0.0});
    parallel_for(
        seeds.size(), [&](std::size_t i) { res.grid[i] = detail::evaluate_seed(problem, seeds[i], opt.integrator); },
        opt.threads);

    auto residual_at = [&](double x) { return detail::evaluate_seed(problem, x, opt.integrator).residual; };

    struct Bracket {
        double a, ga, b, gb;
    };
    std::vector<Bracket> brackets{};
    std::vector<double> exact_roots{};
    const auto& g = res.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].candidate() && g[i].residual == 0.0) exact_roots.push_back(g[i].xi0);
        if (i + 1 < g.size() && g[i].candidate() && g[i + 1].candidate() &&
            g[i].residual * g[i + 1].residual < 0.0) {
            brackets.push_back({g[i].xi0, g[i].residual, g[i + 1].xi0, g[i + 1].residual});
        }
    }
    res.sign_changes = brackets.size();

    if (opt.tangency_refinement) {
        // A parabola through three consecutive same-sign residuals whose
        // vertex dips to zero signals a close root pair inside the cells.
        std::vector<std::size_t> minima;
        for (std::size_t i = 1; i + 1 < g.size(); ++i) {
            const auto &l = g[i - 1], &m = g[i], &r = g[i + 1];
            if (!l.candidate() || !m.candidate() || !r.candidate()) continue;
            if (!(l.residual * m.residual > 0.0 && m.residual * r.residual > 0.0)) continue;
            const double al = std::abs(l.residual), am = std::abs(m.residual), ar = std::abs(r.residual);
            if (!(am < al && am <= ar)) continue;
            const double h1 = m.xi0 - l.xi0, h2 = r.xi0 - m.xi0;
            const double d1 = (am - al) / h1, d2 = (ar - am) / h2;
            const double curv = (d2 - d1) / (0.5 * (h1 + h2));
            if (!(curv > 0.0)) continue;
            const double slope = 0.5 * (d1 + d2);
            const double vertex = am - slope * slope / (2.0 * curv);
            if (vertex < 0.25 * am) minima.push_back(i);
        }
        struct Dip {
            bool found = false;
            double x = 0.0, g = 0.0;
        };
        std::vector<Dip> dips(minima.size());
        parallel_for(
            minima.size(),
            [&](std::size_t j) {
                const std::size_t i = minima[j];
                const double sgn = g[i].residual > 0.0 ? 1.0 : -1.0;
                double a = g[i - 1].xi0, b = g[i + 1].xi0;
                const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
                double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
                auto obj = [&](double x) {
                    const double r = residual_at(x);
                    return std::isfinite(r) ? sgn * r : std::numeric_limits<double>::infinity();
                };
                double f1 = obj(x1), f2 = obj(x2);
                for (int it = 0; it < 60 && b - a > 1e-13 * std::max(1.0, std::abs(a)); ++it) {
                    if (f1 < 0.0 || f2 < 0.0) break;
                    if (f1 < f2) {
                        b = x2; x2 = x1; f2 = f1;
                        x1 = b - phi * (b - a); f1 = obj(x1);
                    } else {
                        a = x1; x1 = x2; f1 = f2;
                        x2 = a + phi * (b - a); f2 = obj(x2);
                    }
                }
                const double xm = f1 < f2 ? x1 : x2, fm = std::min(f1, f2);
                if (fm < 0.0) dips[j] = {true, xm, sgn * fm};
            },
            opt.threads);
        std::vector<Bracket> pairs;
        for (std::size_t j = 0; j < minima.size(); ++j) {
            if (!dips[j].found) continue;
            const std::size_t i = minima[j];
            pairs.push_back({g[i - 1].xi0, g[i - 1].residual, dips[j].x, dips[j].g});
            pairs.push_back({dips[j].x, dips[j].g, g[i + 1].xi0, g[i + 1].residual});
        }
        res.sign_changes += pairs.size();
        brackets.insert(brackets.end(), pairs.begin(), pairs.end());
    }

    // Bisection of each bracket.
    std::vector<std::optional<double>> roots(brackets.size());
    parallel_for(
        brackets.size(),
        [&](std::size_t j) {
            auto [a, ga, b, gb] = brackets[j];
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double gm = residual_at(m);
                if (!std::isfinite(gm)) return;
                if (std::abs(gm) <= opt.root_tol) {
                    roots[j] = m;
                    return;
                }
                if (m <= a || m >= b) break;
                if ((gm < 0.0) == (ga < 0.0)) {
                    a = m; ga = gm;
                } else {
                    b = m; gb = gm;
                }
            }
            // Bracket collapsed to adjacent doubles: accept the better end if it
            // meets the tolerance.
            const double best = std::abs(ga) <= std::abs(gb) ? a : b;
            if (std::min(std::abs(ga), std::abs(gb)) <= opt.root_tol) roots[j] = best;
        },
        opt.threads);

    std::vector<double> xs = exact_roots;
    for (const auto& r : roots) {
        if (r)
            xs.push_back(*r);
        else
            ++res.abandoned_brackets;
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> merged{};
    for (double x : xs)
        if (merged.empty() || x - merged.back() >= opt.merge_tol) merged.push_back(x);

    for (double x : merged) {
        Trajectory tr = detail::shoot(problem, x, opt.integrator);
        if (!tr.completed()) {
            ++res.abandoned_brackets;
            continue;
        }
        const auto& f = tr.front();
        const auto& b = tr.back();
        const double inner = inner_bc_residual({f.t, f.xi, f.xi_t}, problem.c1);
        const double outer = outer_bc_residual({b.t, b.xi, b.xi_t}, problem.c2, problem.R);
        const auto samples = reconstruct(tr);
        res.solutions.push_back({x, f.xi_t, inner, outer, max_sigma_residual(samples), std::move(tr)});
    }

    // Widest run of non-candidates strictly between two candidates.
    std::size_t run = 0;
    bool seen_candidate = false;
    std::size_t candidates = 0;
    for (const auto& p : res.grid) {
        if (p.candidate()) {
            ++candidates;
            if (seen_candidate) res.widest_gap = std::max(res.widest_gap, run);
            seen_candidate = true;
            run = 0;
        } else {
            ++run;
        }
    }

    if (!res.solutions.empty()) {
        res.status = ShootingStatus::solved;
    } else if (candidates == 0) {
        res.status = ShootingStatus::inconclusive;
        res.note = "no seed integrated to t = ln R";
    } else if (res.widest_gap > opt.max_gap_cells) {
        res.status = ShootingStatus::inconclusive;
        res.note = "admissibility gap of " + std::to_string(res.widest_gap) + " cells";
    } else if (res.abandoned_brackets > 0) {
        res.status = ShootingStatus::inconclusive;
        res.note = "sign change found but bisection did not converge";
    } else {
        res.status = ShootingStatus::no_solution;
    }
    return res;
}

inline ShootingResult solve_annulus(const AnnulusProblem& problem, const ShootingOptions& opt = {}) {
    return solve_annulus(problem, ScanSpec::default_for(problem.n, problem.k), opt);
}

// ---------------------------------------------------------------------------
// Threshold radius for c1 + c2 < 0

struct ThresholdProbe {
    double R;
    ShootingStatus status;
    std::size_t solutions;
};

enum class ThresholdStatus { resolved, anomaly, unresolved, inconclusive };

inline const char* to_string(ThresholdStatus s) {
    switch (s) {
        case ThresholdStatus::resolved: return "resolved";
        case ThresholdStatus::anomaly: return "anomaly";
        case ThresholdStatus::unresolved: return "unresolved";
        case ThresholdStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct ThresholdOptions {
    ShootingOptions shooting{};
    std::optional<ScanSpec> scan;
    double R_min = 1.0 + 1e-4;
    double R_max = 1e3;
    double first_step = 1e-3;
    double rel_tol = 1e-4;
};

struct ThresholdResult {
    int n, k;
    double c1, c2;
    ThresholdStatus status = ThresholdStatus::unresolved;
    double R_star = std::numeric_limits<double>::quiet_NaN();
    /// Largest radius known unsolvable and smallest known solvable.
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    std::vector<ThresholdProbe> history{};
    std::string note{};
};

inline ThresholdResult find_r_star(int n, int k, double c1, double c2, const ThresholdOptions& opt = {}) {
    if (!(c1 + c2 < 0.0)) throw std::domain_error("find_r_star requires c1 + c2 < 0");
    if (k < 2 || 2 * k >= n) throw std::domain_error("find_r_star requires 2 <= k < n/2");
    ThresholdResult out{n, k, c1, c2};
    const ScanSpec scan = opt.scan.value_or(ScanSpec::default_for(n, k));

    auto probe = [&](double R) {
        const auto r = solve_annulus(AnnulusProblem(n, k, R, c1, c2), scan, opt.shooting);
        out.history.push_back({R, r.status, r.solutions.size()});
        return r.status;
    };
    auto fail = [&](ThresholdStatus s, std::string note) {
        out.status = s;
        out.note = std::move(note);
        return out;
    };

    double lo = opt.R_min;
    ShootingStatus s = probe(lo);
    if (s == ShootingStatus::solved) return fail(ThresholdStatus::anomaly, "solvable already at R_min");
    if (s == ShootingStatus::inconclusive) return fail(ThresholdStatus::inconclusive, "inconclusive at R_min");

    double hi = std::numeric_limits<double>::quiet_NaN();
    for (double step = opt.first_step;; step *= 2.0) {
        const double R = std::min(1.0 + step, opt.R_max);
        s = probe(R);
        if (s == ShootingStatus::inconclusive) return fail(ThresholdStatus::inconclusive, "inconclusive while growing bracket");
        if (s == ShootingStatus::solved) {
            hi = R;
            break;
        }
        lo = R;
        if (R >= opt.R_max) return fail(ThresholdStatus::unresolved, "no solution up to R_max");
    }

    while ((hi - lo) / lo > opt.rel_tol) {
        const double mid = 0.5 * (lo + hi);
        s = probe(mid);
        if (s == ShootingStatus::inconclusive) {
            out.lo = lo;
            out.hi = hi;
            return fail(ThresholdStatus::inconclusive, "inconclusive during bisection");
        }
        (s == ShootingStatus::solved ? hi : lo) = mid;
    }
    out.status = ThresholdStatus::resolved;
    out.lo = lo;
    out.hi = hi;
    out.R_star = 0.5 * (lo + hi);
    return out;
}

// ---------------------------------------------------------------------------
// Locating the bifurcation from the cylinder

struct BifurcationScan {
    int n, k;
    double predicted;
    /// Midpoint of the final bracket [below, above].
    double located;
    double below;
    double above;
    std::size_t count_below;
    std::size_t count_above;
    bool transition_found = false;
};

/// Bisects on R for the predicate "at least two solutions" with c1 = c2 = 0
/// inside predicted * [1 - window, 1 + window].
inline BifurcationScan locate_bifurcation(int n, int k, const ShootingOptions& opt = {}, double window = 0.02,
                                          double rel_tol = 1e-4) {
    const double pred = bifurcation_threshold(n, k);
    BifurcationScan out{n, k, pred, std::numeric_limits<double>::quiet_NaN(), pred * (1.0 - window),
                        pred * (1.0 + window), 0, 0};
    const ScanSpec scan = ScanSpec::default_for(n, k);
    auto count = [&](double R) { return solve_annulus(AnnulusProblem(n, k, R), scan, opt).solutions.size(); };
    out.count_below = count(out.below);
    out.count_above = count(out.above);
    if (!(out.count_below == 1 && out.count_above >= 2)) return out;
    while ((out.above - out.below) / out.below > rel_tol) {
        const double mid = 0.5 * (out.below + out.above);
        const std::size_t c = count(mid);
        if (c >= 2) {
            out.above = mid;
            out.count_above = c;
        } else {
            out.below = mid;
            out.count_below = c;
        }
    }
    out.located = 0.5 * (out.below + out.above);
    out.transition_found = out.count_below == 1;
    return out;
}

// ---------------------------------------------------------------------------
// Gradient blow-up family

struct CounterexampleRow {
    double eps;
    double xi0;
    double xi_t0;
    double xi_tt0;
    /// Length of the admissible window in t.
    double T;
    std::string stopped_by{};
    /// sup over the window of u + 1/u + |u_r|.
    double c1_norm = 0.0;
    /// Operator norm of the Hessian of u at r = 1.
    double hessian_at_1 = 0.0;
};

struct CounterexampleTable {
    int n, k;
    double c, delta;
    std::vector<CounterexampleRow> rows{};
    double R0 = std::numeric_limits<double>::quiet_NaN();
    double T_min = std::numeric_limits<double>::quiet_NaN();
    double T_max = std::numeric_limits<double>::quiet_NaN();
    /// Least-squares slopes against log eps.
    double slope_xi_tt = std::numeric_limits<double>::quiet_NaN();
    double slope_hessian = std::numeric_limits<double>::quiet_NaN();
    /// max / min of c1_norm over the sweep.
    double c1_norm_ratio = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

/// Seeds xi(0) = eps + ln|c|, xi_t(0) = -e^{-eps} and follows the trajectory
/// while -e^{-eps} < xi_t < -1 + delta and xi_tt > 0. Since xi_tt > 0 keeps
/// xi_t increasing, only the upper slope bound and convexity need events.
inline CounterexampleTable counterexample_sweep(int n, int k, double c, const std::vector<double>& eps_list,
                                                double delta = 0.05, double t_cap = 100.0,
                                                std::size_t window_samples = 400) {
    if (k < 2 || k > n) throw std::domain_error("counterexample_sweep requires 2 <= k <= n");
    if (!(c < 0.0)) throw std::domain_error("counterexample_sweep requires c < 0");
    if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("counterexample_sweep requires 0 < delta < 1/2");
    if (eps_list.empty()) throw std::domain_error("counterexample_sweep: empty eps list");
    for (double e : eps_list) {
        if (!(e > 0.0 && e < delta)) throw std::domain_error("counterexample_sweep requires 0 < eps < delta");
        if (!(-std::exp(-e) < -1.0 + 0.5 * delta))
            throw std::domain_error("counterexample_sweep requires -e^{-eps} < -1 + delta/2");
    }

    const RadialEquation eq(n, k);
    CounterexampleTable tab{n, k, c, delta};
    tab.rows.resize(eps_list.size());

    IntegratorOptions opt;
    opt.events.push_back({"slope_bound", [delta](const TrajectoryPoint& p) { return (-1.0 + delta) - p.xi_t; }});
    opt.events.push_back({"convexity", [](const TrajectoryPoint& p) { return p.xi_tt; }});

    parallel_for(eps_list.size(), [&](std::size_t i) {
        const double eps = eps_list[i];
        const double xi0 = eps + std::log(-c);
        const double xt0 = c * std::exp(-xi0);
        const Trajectory tr = integrate({0.0, xi0, xt0}, t_cap, eq, opt);
        CounterexampleRow row{eps, xi0, xt0, tr.front().xi_tt, tr.t_end(),
                              tr.completed() ? std::string("t_cap") : tr.event_name()};
        double sup = 0.0;
        auto account = [&](const ReconstructedSample& s) { sup = std::max(sup, s.u + 1.0 / s.u + std::abs(s.du)); };
        for (const auto& s : reconstruct(tr)) account(s);
        for (const auto& s : reconstruct(tr, window_samples)) account(s);
        row.c1_norm = sup;
        // Radial Hessian: u_rr along x/|x|, u_r / r on the tangent space.
        const auto s0 = reconstruct_point(tr.front(), eq);
        row.hessian_at_1 = std::max(std::abs(s0.d2u), std::abs(s0.du) / s0.r);
        tab.rows[i] = row;
    });

    std::vector<double> le, lx, lh;
    double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
    for (const auto& r : tab.rows) {
        le.push_back(std::log(r.eps));
        lx.push_back(std::log(std::abs(r.xi_tt0)));
        lh.push_back(std::log(r.hessian_at_1));
        tmin = std::min(tmin, r.T);
        tmax = std::max(tmax, r.T);
        cmin = std::min(cmin, r.c1_norm);
        cmax = std::max(cmax, r.c1_norm);
    }
    tab.T_min = tmin;
    tab.T_max = tmax;
    tab.R0 = std::exp(tmin);
    tab.c1_norm_ratio = cmax / cmin;
    if (tab.rows.size() >= 2) {
        tab.slope_xi_tt = detail::ls_slope(le, lx);
        tab.slope_hessian = detail::ls_slope(le, lh);
    }
    return tab;
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced: need 0 < lo < hi, count >= 2");
    std::vector<double> v(count);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) v[i] = std::exp(a + (b - a) * static_cast<double>(i) / (count - 1.0));
    return v;
}

}  // namespace syl
