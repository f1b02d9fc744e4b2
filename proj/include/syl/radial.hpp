#pragma once

// Radial reduction of sigma_k(lambda(A^u)) = 1 on annuli. With t = ln r and
// xi = -(2/(n-2)) ln u - t the equation becomes the autonomous ODE
//
//   e^{2k xi} (1 - xi_t^2)^{k-1} [xi_tt + (n-2k)/(2k) (1 - xi_t^2)] = Theta,
//   Theta = 2^{k-1} / C(n-1, k-1),
//
// elliptic while |xi_t| < 1. This header holds the right-hand side, an
// adaptive Dormand-Prince 5(4) integrator with dense output and event
// location, the Robin boundary residuals and the reconstruction of u.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "syl/schouten.hpp"
#include "syl/symfn.hpp"

namespace syl {

/// The ODE for given (n, k). n = 2k is allowed here; only cylinder-related
/// operations reject it.
struct RadialEquation {
    int n = 5;
    int k = 2;

    RadialEquation(int n_, int k_) : n(n_), k(k_) {
        if (n < 3) throw std::domain_error("RadialEquation: n must be >= 3");
        if (k < 1 || k > n) throw std::domain_error("RadialEquation: k must satisfy 1 <= k <= n");
    }

    double theta() const { return std::pow(2.0, k - 1) / binomial(n - 1, k - 1); }
};

/// Annulus B_R \ B_1 with Robin data c1 on r = 1 and c2 on r = R.
struct AnnulusProblem {
    int n = 5;
    int k = 2;
    double R = 2.0;
    double c1 = 0.0;
    double c2 = 0.0;

    AnnulusProblem(int n_, int k_, double R_, double c1_ = 0.0, double c2_ = 0.0)
        : n(n_), k(k_), R(R_), c1(c1_), c2(c2_) {
        (void)equation();
        if (!(R > 1.0)) throw std::domain_error("AnnulusProblem: R must exceed 1");
    }

    RadialEquation equation() const { return {n, k}; }
    double theta() const { return equation().theta(); }
    double length() const { return std::log(R); }
};

struct RadialState {
    double t = 0.0;
    double xi = 0.0;
    double xi_t = 0.0;
};

/// 1 - xi_t^2 at or below this is treated as loss of ellipticity.
inline constexpr double kEllipticityGuard = 1e-12;

/// xi_tt from the ODE; empty when |xi_t| is at or past the guard.
inline std::optional<double> ode_rhs(double xi, double xi_t, const RadialEquation& eq,
                                     double guard = kEllipticityGuard) {
    const double w = 1.0 - xi_t * xi_t;
    if (!(w > guard)) return std::nullopt;
    const double k = eq.k;
    return eq.theta() * std::exp(-2.0 * k * xi) * std::pow(w, 1.0 - k) - (eq.n - 2.0 * k) / (2.0 * k) * w;
}

inline std::optional<double> ode_rhs(const RadialState& s, const RadialEquation& eq, double guard = kEllipticityGuard) {
    return ode_rhs(s.xi, s.xi_t, eq, guard);
}

// ---------------------------------------------------------------------------
// Change of variables

inline double xi_from_u(double u, double r, int n) {
    if (!(u > 0.0)) throw std::domain_error("xi_from_u: u must be positive");
    if (!(r > 0.0)) throw std::domain_error("xi_from_u: r must be positive");
    return -2.0 / (n - 2.0) * std::log(u) - std::log(r);
}

inline double u_from_xi(double xi, double t, int n) { return std::exp(-0.5 * (n - 2.0) * (xi + t)); }

struct RadialSample {
    double r;
    double value;
};

inline std::vector<RadialSample> xi_from_u(std::span<const RadialSample> u_profile, int n) {
    std::vector<RadialSample> out;
    out.reserve(u_profile.size());
    for (const auto& s : u_profile) out.push_back({s.r, xi_from_u(s.value, s.r, n)});
    return out;
}

inline std::vector<RadialSample> u_from_xi(std::span<const RadialSample> xi_profile, int n) {
    std::vector<RadialSample> out;
    out.reserve(xi_profile.size());
    for (const auto& s : xi_profile) out.push_back({s.r, u_from_xi(s.value, std::log(s.r), n)});
    return out;
}

// ---------------------------------------------------------------------------
// Boundary conditions in xi variables

/// dxi/dt(0) - c1 e^{-xi(0)}; zero iff the inner Robin condition holds.
inline double inner_bc_residual(const RadialState& s, double c1) { return s.xi_t - c1 * std::exp(-s.xi); }

/// dxi/dt(T) + c2 e^{-xi(T)} / R with R = e^T.
inline double outer_bc_residual(const RadialState& s, double c2, double R) {
    return s.xi_t + c2 * std::exp(-s.xi) / R;
}

/// xi_t(0) fixed by the inner condition for a given xi(0).
inline double inner_slope(double xi0, double c1) { return c1 * std::exp(-xi0); }

// ---------------------------------------------------------------------------
// Integrator

enum class Termination { reached_end, ellipticity_breakdown, cone_exit, window_exit, step_failure };

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::reached_end: return "reached_T";
        case Termination::ellipticity_breakdown: return "ellipticity_breakdown";
        case Termination::cone_exit: return "cone_exit";
        case Termination::window_exit: return "window_exit";
        case Termination::step_failure: return "step_failure";
    }
    return "unknown";
}

struct TrajectoryPoint {
    double t;
    double xi;
    double xi_t;
    double xi_tt;
};

/// Terminal event: fires when `g` changes from positive to non-positive.
struct RadialEvent {
    std::string name;
    std::function<double(const TrajectoryPoint&)> g;
};

struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 1e-3;
    double max_step = 0.1;
    std::size_t max_steps = 2'000'000;
    double guard = kEllipticityGuard;
    bool detect_cone_exit = true;
    /// Extra terminal events (termination cause window_exit).
    std::vector<RadialEvent> events;
};

/// Accepted-step samples plus the Dormand-Prince continuous extension on
/// each step.
class Trajectory {
public:
    struct Segment {
        double t0;
        double h;
        // rcont[c][component]
        std::array<std::array<double, 2>, 5> rcont;
    };

    explicit Trajectory(RadialEquation eq) : eq_(eq) {}

    const RadialEquation& equation() const { return eq_; }
    const std::vector<TrajectoryPoint>& points() const { return points_; }
    Termination termination() const { return termination_; }
    const std::string& event_name() const { return event_name_; }
    std::size_t rejected_steps() const { return rejected_; }
    double t_begin() const { return points_.front().t; }
    double t_end() const { return points_.back().t; }
    const TrajectoryPoint& front() const { return points_.front(); }
    const TrajectoryPoint& back() const { return points_.back(); }
    bool completed() const { return termination_ == Termination::reached_end; }

    /// Dense-output state at t inside the integrated range.
    TrajectoryPoint at(double t) const {
        const bool forward = t_end() >= t_begin();
        const double lo = std::min(t_begin(), t_end()), hi = std::max(t_begin(), t_end());
        if (t < lo - 1e-12 || t > hi + 1e-12) throw std::out_of_range("Trajectory::at: t outside integrated range");
        if (segments_.empty()) return points_.front();
        auto it = std::lower_bound(segments_.begin(), segments_.end(), t, [forward](const Segment& s, double v) {
            return forward ? s.t0 + s.h < v : s.t0 + s.h > v;
        });
        if (it == segments_.end()) it = std::prev(segments_.end());
        return interpolate(*it, (t - it->t0) / it->h);
    }

    TrajectoryPoint interpolate(const Segment& s, double theta) const {
        const double th1 = 1.0 - theta;
        std::array<double, 2> y{};
        for (std::size_t c = 0; c < 2; ++c) {
            const auto& r = s.rcont;
            y[c] = r[0][c] + theta * (r[1][c] + th1 * (r[2][c] + theta * (r[3][c] + th1 * r[4][c])));
        }
        const auto acc = ode_rhs(y[0], y[1], eq_, 0.0);
        return {s.t0 + theta * s.h, y[0], y[1], acc.value_or(std::numeric_limits<double>::quiet_NaN())};
    }

private:
    friend Trajectory integrate(const RadialState&, double, const RadialEquation&, const IntegratorOptions&);

    RadialEquation eq_;
    std::vector<TrajectoryPoint> points_;
    std::vector<Segment> segments_;
    Termination termination_ = Termination::reached_end;
    std::string event_name_;
    std::size_t rejected_ = 0;
};

namespace dopri {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                        a76 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;
inline constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                        d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                        d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
}  // namespace dopri

/// Integrates from `initial` towards t_end (either direction). Stops at
/// t_end, when |xi_t| reaches the ellipticity guard, when the spectrum leaves
/// Gamma_k, at any user event, or when the step size underflows.
inline Trajectory integrate(const RadialState& initial, double t_end, const RadialEquation& eq,
                            const IntegratorOptions& opt = {}) {
    using State = std::array<double, 2>;
    Trajectory traj(eq);

    auto deriv = [&](const State& y) -> std::optional<State> {
        const auto acc = ode_rhs(y[0], y[1], eq, opt.guard);
        if (!acc) return std::nullopt;
        return State{y[1], *acc};
    };

    State y{initial.xi, initial.xi_t};
    auto k1 = deriv(y);
    if (!k1) {
        traj.points_.push_back({initial.t, initial.xi, initial.xi_t, std::numeric_limits<double>::quiet_NaN()});
        traj.termination_ = Termination::ellipticity_breakdown;
        return traj;
    }
    traj.points_.push_back({initial.t, y[0], y[1], (*k1)[1]});

    auto cone_g = [&](const TrajectoryPoint& p) {
        const auto ev = radial_eigenvalues(p.xi, p.xi_t, p.xi_tt).expand(eq.n);
        return in_gamma_k(ev, eq.k) ? 1.0 : -1.0;
    };
    auto ellip_g = [&](const TrajectoryPoint& p) { return 1.0 - p.xi_t * p.xi_t - opt.guard; };

    struct ActiveEvent {
        Termination cause;
        std::string name;
        std::function<double(const TrajectoryPoint&)> g;
    };
    std::vector<ActiveEvent> events;
    events.push_back({Termination::ellipticity_breakdown, "ellipticity", ellip_g});
    if (opt.detect_cone_exit) events.push_back({Termination::cone_exit, "cone_exit", cone_g});
    for (const auto& e : opt.events) events.push_back({Termination::window_exit, e.name, e.g});

    for (const auto& e : events) {
        if (!(e.g(traj.points_.front()) > 0.0)) {
            traj.termination_ = e.cause;
            traj.event_name_ = e.name;
            return traj;
        }
    }

    const double span_total = t_end - initial.t;
    if (span_total == 0.0) return traj;
    const double dir = span_total > 0.0 ? 1.0 : -1.0;
    double t = initial.t;
    double h = dir * std::min(opt.initial_step, std::abs(span_total));
    bool last_reject_guard = false;

    using namespace dopri;
    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        const double remaining = t_end - t;
        if (dir * remaining <= 0.0) return traj;
        if (dir * (t + h - t_end) > 0.0) h = remaining;
        const double hmin = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
        if (std::abs(h) < hmin) {
            const double w = 1.0 - y[1] * y[1];
            traj.termination_ = (last_reject_guard || w < 1e-6) ? Termination::ellipticity_breakdown
                                                                 : Termination::step_failure;
            traj.event_name_ = "step_underflow";
            return traj;
        }

        auto stage = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State s = y;
            for (const auto& [coef, kk] : terms)
                for (std::size_t c = 0; c < 2; ++c) s[c] += h * coef * (*kk)[c];
            return s;
        };

        std::optional<State> k2, k3, k4, k5, k6, k7;
        State y1{};
        const State& K1 = *k1;
        bool guard_fail = false;
        do {
            k2 = deriv(stage({{a21, &K1}}));
            if (!k2) { guard_fail = true; break; }
            k3 = deriv(stage({{a31, &K1}, {a32, &*k2}}));
            if (!k3) { guard_fail = true; break; }
            k4 = deriv(stage({{a41, &K1}, {a42, &*k2}, {a43, &*k3}}));
            if (!k4) { guard_fail = true; break; }
            k5 = deriv(stage({{a51, &K1}, {a52, &*k2}, {a53, &*k3}, {a54, &*k4}}));
            if (!k5) { guard_fail = true; break; }
            k6 = deriv(stage({{a61, &K1}, {a62, &*k2}, {a63, &*k3}, {a64, &*k4}, {a65, &*k5}}));
            if (!k6) { guard_fail = true; break; }
            y1 = stage({{a71, &K1}, {a73, &*k3}, {a74, &*k4}, {a75, &*k5}, {a76, &*k6}});
            k7 = deriv(y1);
            if (!k7) { guard_fail = true; break; }
        } while (false);

        if (guard_fail) {
            ++traj.rejected_;
            last_reject_guard = true;
            h *= 0.25;
            continue;
        }

        double err = 0.0;
        for (std::size_t c = 0; c < 2; ++c) {
            const double ec = h * (e1 * K1[c] + e3 * (*k3)[c] + e4 * (*k4)[c] + e5 * (*k5)[c] + e6 * (*k6)[c] +
                                   e7 * (*k7)[c]);
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[c]), std::abs(y1[c]));
            err += (ec / sc) * (ec / sc);
        }
        err = std::sqrt(err / 2.0);
        if (!std::isfinite(err)) err = 1e10;

        if (err > 1.0) {
            ++traj.rejected_;
            last_reject_guard = false;
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            continue;
        }

        Trajectory::Segment seg{t, h, {}};
        for (std::size_t c = 0; c < 2; ++c) {
            const double ydiff = y1[c] - y[c];
            const double bspl = h * K1[c] - ydiff;
            seg.rcont[0][c] = y[c];
            seg.rcont[1][c] = ydiff;
            seg.rcont[2][c] = bspl;
            seg.rcont[3][c] = ydiff - h * (*k7)[c] - bspl;
            seg.rcont[4][c] = h * (d1 * K1[c] + d3 * (*k3)[c] + d4 * (*k4)[c] + d5 * (*k5)[c] + d6 * (*k6)[c] +
                                   d7 * (*k7)[c]);
        }

        const double t1 = (h == remaining) ? t_end : t + h;
        const TrajectoryPoint p1{t1, y1[0], y1[1], (*k7)[1]};

        // First event crossing inside the step, located by bisection on the
        // continuous extension.
        double best_theta = 2.0;
        const ActiveEvent* fired = nullptr;
        for (const auto& e : events) {
            if (e.g(p1) > 0.0) continue;
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 200 && (hi - lo) * std::abs(h) > 4.0 * std::numeric_limits<double>::epsilon() *
                                                                       std::max(1.0, std::abs(t));
                 ++it) {
                const double mid = 0.5 * (lo + hi);
                (e.g(traj.interpolate(seg, mid)) > 0.0 ? lo : hi) = mid;
            }
            if (hi < best_theta) {
                best_theta = hi;
                fired = &e;
            }
        }
        if (fired) {
            // The segment keeps its full step; at() never queries past the event.
            traj.segments_.push_back(seg);
            traj.points_.push_back(traj.interpolate(seg, best_theta));
            traj.termination_ = fired->cause;
            traj.event_name_ = fired->name;
            return traj;
        }

        traj.segments_.push_back(seg);
        traj.points_.push_back(p1);
        t = t1;
        y = y1;
        k1 = k7;
        last_reject_guard = false;

        double fac = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h = dir * std::min(std::abs(h) * fac, opt.max_step);
    }
    traj.termination_ = Termination::step_failure;
    traj.event_name_ = "max_steps";
    return traj;
}

// ---------------------------------------------------------------------------
// Reconstruction of u on the annulus

struct ReconstructedSample {
    double t, xi, xi_t, xi_tt;
    double r, u, du, d2u;
    double lam_rad, lam_tan;
    double sigma_k_residual;
};

inline ReconstructedSample reconstruct_point(const TrajectoryPoint& p, const RadialEquation& eq) {
    const double m = 0.5 * (eq.n - 2.0);
    const double u = u_from_xi(p.xi, p.t, eq.n);
    const double r = std::exp(p.t);
    const double u_t = -m * (p.xi_t + 1.0) * u;
    const double u_tt = -m * p.xi_tt * u + m * m * (p.xi_t + 1.0) * (p.xi_t + 1.0) * u;
    const auto lam = radial_eigenvalues(p.xi, p.xi_t, p.xi_tt);
    const double residual = sigma_k(lam.expand(eq.n), eq.k) - 1.0;
    return {p.t, p.xi, p.xi_t, p.xi_tt, r, u, u_t / r, (u_tt - u_t) / (r * r), lam.radial, lam.tangential, residual};
}

/// Samples of (r, u, u', u'', eigenvalues, sigma_k - 1) at the accepted
/// steps, or at `uniform` equally spaced t values when nonzero.
inline std::vector<ReconstructedSample> reconstruct(const Trajectory& traj, std::size_t uniform = 0) {
    std::vector<ReconstructedSample> out;
    if (uniform == 0) {
        out.reserve(traj.points().size());
        for (const auto& p : traj.points()) out.push_back(reconstruct_point(p, traj.equation()));
        return out;
    }
    out.reserve(uniform);
    const double a = traj.t_begin(), b = traj.t_end();
    for (std::size_t i = 0; i < uniform; ++i) {
        const double t = uniform == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(uniform - 1);
        out.push_back(reconstruct_point(traj.at(t), traj.equation()));
    }
    return out;
}

inline double max_sigma_residual(std::span<const ReconstructedSample> samples) {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, std::abs(s.sigma_k_residual));
    return m;
}

inline void write_trajectory_csv(std::ostream& os, std::span<const ReconstructedSample> samples) {
    os << "t,xi,xi_t,xi_tt,r,u,du,d2u,lam_rad,lam_tan,sigma_k_residual\n";
    const auto old_precision = os.precision(17);
    for (const auto& s : samples) {
        os << s.t << ',' << s.xi << ',' << s.xi_t << ',' << s.xi_tt << ',' << s.r << ',' << s.u << ',' << s.du << ','
           << s.d2u << ',' << s.lam_rad << ',' << s.lam_tan << ',' << s.sigma_k_residual << '\n';
    }
    os.precision(old_precision);
}

}  // namespace syl
