#pragma once

// Schouten tensor of a conformally flat metric u^{4/(n-2)} g_flat, the
// conformal law for boundary mean curvature, and closed-form reference
// conformal factors (bubble, cylinder, radial powers).

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "syl/linalg.hpp"
#include "syl/symfn.hpp"

namespace syl {

/// Value, gradient and Hessian of a positive conformal factor at a point
/// of flat R^n.
struct ConformalFactorSample {
    Vec x;
    double u = 1.0;
    Vec grad;
    Matrix hess;

    int dimension() const { return static_cast<int>(x.size()); }
};

/// Matrix A^u whose eigenvalues are those of the Schouten tensor of
/// u^{4/(n-2)} g_flat with respect to that metric.
struct SchoutenMatrix {
    Matrix a;
};

inline SchoutenMatrix schouten_matrix(const ConformalFactorSample& s) {
    const int n = s.dimension();
    if (n < 3) throw std::domain_error("schouten_matrix: dimension must be >= 3");
    if (!(s.u > 0.0)) throw std::domain_error("schouten_matrix: u must be positive");
    if (s.grad.size() != s.x.size() || s.hess.size() != s.x.size())
        throw std::invalid_argument("schouten_matrix: inconsistent sample dimensions");
    const double nm2 = n - 2.0;
    const double hess_coef = -2.0 / nm2 * std::pow(s.u, -(n + 2.0) / nm2);
    const double first_order = std::pow(s.u, -2.0 * n / nm2) / (nm2 * nm2);
    const double g2 = dot(s.grad, s.grad);

    Matrix a = s.hess.symmetrized() * hess_coef;
    a += Matrix::outer(s.grad, s.grad) * (2.0 * n * first_order);
    a -= Matrix::identity(s.x.size()) * (2.0 * g2 * first_order);
    return SchoutenMatrix{std::move(a)};
}

/// Sorted real spectrum of a symmetric matrix.
inline Vec eigenvalues(const Matrix& a, double symmetry_tol = 1e-10) {
    if (a.asymmetry() > symmetry_tol * std::max(1.0, a.max_abs()))
        throw std::invalid_argument("eigenvalues: matrix is not symmetric");
    return jacobi_eigenvalues(a);
}

inline Vec eigenvalues(const SchoutenMatrix& a) { return eigenvalues(a.a); }

/// Spectrum of mu x (x) x + nu I without a dense solve: mu|x|^2 + nu once and
/// nu with multiplicity n - 1, sorted non-increasing.
inline Vec rank_one_spectrum(double mu, std::span<const double> x, double nu) {
    Vec ev(x.size(), nu);
    if (ev.empty()) return ev;
    ev[0] = mu * dot(x, x) + nu;
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Mean curvature of the boundary for u^{4/(n-2)} g, given the background
/// mean curvature h_g (inner-normal convention, balls positive) and the
/// outer normal derivative of u. Normalized so that u = 1 returns h_g; the
/// annulus Robin data c1, c2 are then exactly the boundary mean curvatures.
inline double mean_curvature_conformal(double u, double du_dnu, double h_g, int n) {
    if (!(u > 0.0)) throw std::domain_error("mean_curvature_conformal: u must be positive");
    if (n < 3) throw std::domain_error("mean_curvature_conformal: dimension must be >= 3");
    return std::pow(u, -static_cast<double>(n) / (n - 2.0)) * (2.0 / (n - 2.0) * du_dnu + h_g * u);
}

/// Eigenvalues of A^u for a radial u written in the coordinates
/// t = ln r, xi = -(2/(n-2)) ln u - t. The tangential value has
/// multiplicity n - 1. Neither depends on n.
struct RadialEigenvalues {
    double radial = 0.0;
    double tangential = 0.0;

    Vec expand(int n) const {
        Vec v(static_cast<std::size_t>(n), tangential);
        v[0] = radial;
        return v;
    }
};

inline RadialEigenvalues radial_eigenvalues(double xi, double xi_t, double xi_tt) {
    const double e2 = std::exp(2.0 * xi);
    const double w = 1.0 - xi_t * xi_t;
    return {e2 * (xi_tt - 0.5 * w), 0.5 * e2 * w};
}

/// sigma_k of (-1/2, 1/2, ..., 1/2): the cylinder's Schouten spectrum.
inline double cylinder_sigma_k_closed_form(int n, int k) {
    return std::pow(0.5, k) * binomial(n - 1, k - 1) * (n - 2.0 * k) / k;
}

// ---------------------------------------------------------------------------
// Finite differences

struct FiniteDifferenceSteps {
    double gradient = 1e-5;
    /// Second differences lose eps/h^2 to rounding; with Richardson
    /// extrapolation a larger base step is both safe and more accurate.
    double hessian = 2e-3;
};

namespace detail {

inline Matrix fd_hessian_plain(const ScalarFn& f, std::span<const double> x, std::span<const double> steps) {
    const std::size_t n = x.size();
    Matrix h(n);
    Vec p(x.begin(), x.end());
    const double f0 = f(p);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = steps[i];
        p[i] = x[i] + hi;
        const double fp = f(p);
        p[i] = x[i] - hi;
        const double fm = f(p);
        p[i] = x[i];
        h(i, i) = (fp - 2.0 * f0 + fm) / (hi * hi);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double hj = steps[j];
            auto eval = [&](double si, double sj) {
                p[i] = x[i] + si * hi;
                p[j] = x[j] + sj * hj;
                const double v = f(p);
                p[i] = x[i];
                p[j] = x[j];
                return v;
            };
            const double v = (eval(1, 1) - eval(1, -1) - eval(-1, 1) + eval(-1, -1)) / (4.0 * hi * hj);
            h(i, j) = h(j, i) = v;
        }
    }
    return h;
}

}  // namespace detail

/// Central second differences with steps rel_step * max(1, |x_i|) and h/2,
/// Richardson-combined to O(h^4).
inline Matrix fd_hessian(const ScalarFn& f, std::span<const double> x, double rel_step = 2e-3) {
    const std::size_t n = x.size();
    Vec steps(n), half(n);
    for (std::size_t i = 0; i < n; ++i) {
        steps[i] = rel_step * std::max(1.0, std::abs(x[i]));
        half[i] = 0.5 * steps[i];
    }
    return (detail::fd_hessian_plain(f, x, half) * 4.0 - detail::fd_hessian_plain(f, x, steps)) * (1.0 / 3.0);
}

inline ConformalFactorSample fd_sample(const ScalarFn& u, std::span<const double> x,
                                       const FiniteDifferenceSteps& steps = {}) {
    ConformalFactorSample s;
    s.x.assign(x.begin(), x.end());
    s.u = u(x);
    s.grad = fd_gradient(u, x, steps.gradient);
    s.hess = fd_hessian(u, x, steps.hessian);
    return s;
}

// ---------------------------------------------------------------------------
// Reference conformal factors

/// s * (a / (1 + a^2 |y - p|^2))^{(n-2)/2}: the round sphere pulled back by
/// stereographic projection.
struct Bubble {
    double a = 1.0;
    Vec center;
    double amplitude = 1.0;
};

/// scale * |y|^power. power = -(n-2)/2 is the cylinder, power = 2 - n the
/// Kelvin transform of a constant.
struct RadialPower {
    double power = 0.0;
    double scale = 1.0;
};

class ReferenceSolution {
public:
    using Kind = std::variant<Bubble, RadialPower>;

    ReferenceSolution(int n, Kind kind) : n_(n), kind_(std::move(kind)) {
        if (n < 3) throw std::domain_error("ReferenceSolution: dimension must be >= 3");
        if (const auto* b = std::get_if<Bubble>(&kind_)) {
            if (!(b->a > 0.0)) throw std::domain_error("Bubble: a must be positive");
            if (!(b->amplitude > 0.0)) throw std::domain_error("Bubble: amplitude must be positive");
            if (b->center.empty()) std::get<Bubble>(kind_).center.assign(static_cast<std::size_t>(n), 0.0);
            if (std::get<Bubble>(kind_).center.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("Bubble: center dimension mismatch");
        } else if (!(std::get<RadialPower>(kind_).scale > 0.0)) {
            throw std::domain_error("RadialPower: scale must be positive");
        }
    }

    static ReferenceSolution bubble(int n, double a = 1.0, double amplitude = 1.0, Vec center = {}) {
        return {n, Bubble{a, std::move(center), amplitude}};
    }
    static ReferenceSolution cylinder(int n, double scale = 1.0) {
        return {n, RadialPower{-(n - 2.0) / 2.0, scale}};
    }
    static ReferenceSolution inverted_constant(int n, double scale = 1.0) {
        return {n, RadialPower{2.0 - n, scale}};
    }

    int dimension() const { return n_; }
    const Kind& kind() const { return kind_; }
    std::string name() const { return std::holds_alternative<Bubble>(kind_) ? "bubble" : "radial_power"; }

    double value(std::span<const double> y) const {
        if (const auto* b = std::get_if<Bubble>(&kind_)) {
            const Vec z = sub(y, b->center);
            const double q = 1.0 + b->a * b->a * dot(z, z);
            return b->amplitude * std::pow(b->a / q, half_weight());
        }
        const auto& p = std::get<RadialPower>(kind_);
        return p.scale * std::pow(radius_checked(y), p.power);
    }

    Vec gradient(std::span<const double> y) const {
        if (const auto* b = std::get_if<Bubble>(&kind_)) {
            const Vec z = sub(y, b->center);
            const double a2 = b->a * b->a;
            const double q = 1.0 + a2 * dot(z, z);
            const double m = half_weight();
            const double c = b->amplitude * std::pow(b->a, m) * (-m) * std::pow(q, -m - 1.0) * 2.0 * a2;
            return scaled(z, c);
        }
        const auto& p = std::get<RadialPower>(kind_);
        const double r = radius_checked(y);
        return scaled(y, p.scale * p.power * std::pow(r, p.power - 2.0));
    }

    Matrix hessian(std::span<const double> y) const {
        const auto n = static_cast<std::size_t>(n_);
        if (const auto* b = std::get_if<Bubble>(&kind_)) {
            const Vec z = sub(y, b->center);
            const double a2 = b->a * b->a;
            const double q = 1.0 + a2 * dot(z, z);
            const double m = half_weight();
            const double base = b->amplitude * std::pow(b->a, m);
            Matrix h = Matrix::outer(z, z) * (base * m * (m + 1.0) * std::pow(q, -m - 2.0) * 4.0 * a2 * a2);
            h -= Matrix::identity(n) * (base * m * std::pow(q, -m - 1.0) * 2.0 * a2);
            return h;
        }
        const auto& p = std::get<RadialPower>(kind_);
        const double r = radius_checked(y);
        Matrix h = Matrix::outer(y, y) * (p.scale * p.power * (p.power - 2.0) * std::pow(r, p.power - 4.0));
        h += Matrix::identity(n) * (p.scale * p.power * std::pow(r, p.power - 2.0));
        return h;
    }

    ConformalFactorSample sample(std::span<const double> y) const {
        return {Vec(y.begin(), y.end()), value(y), gradient(y), hessian(y)};
    }

    ScalarFn as_function() const {
        return [self = *this](std::span<const double> y) { return self.value(y); };
    }

private:
    double half_weight() const { return 0.5 * (n_ - 2.0); }

    static double radius_checked(std::span<const double> y) {
        const double r = norm(y);
        if (r == 0.0) throw std::domain_error("RadialPower: undefined at the origin");
        return r;
    }

    int n_;
    Kind kind_;
};

/// Schouten spectrum of a reference solution from closed-form derivatives.
inline Vec schouten_spectrum(const ReferenceSolution& u, std::span<const double> y) {
    return eigenvalues(schouten_matrix(u.sample(y)));
}

/// Schouten spectrum of an arbitrary positive function via finite differences.
inline Vec schouten_spectrum_fd(const ScalarFn& u, std::span<const double> y, const FiniteDifferenceSteps& steps = {}) {
    return eigenvalues(schouten_matrix(fd_sample(u, y, steps)));
}

/// Bubble amplitude s with f(lambda(A^u)) = 1, where the bubble spectrum is
/// 2 s^{-4/(n-2)} (1, ..., 1).
inline double bubble_amplitude_for(const SymmetricCurvatureFunction& f) {
    const auto n = static_cast<std::size_t>(f.n);
    const Vec e(n, 1.0);
    if (!f.cone(e)) throw std::invalid_argument("bubble_amplitude_for: e outside the cone");
    double mu = 1.0;
    if (f.homogeneous_degree_one) {
        mu = 1.0 / f.value(e);
    } else {
        // f(mu e) is increasing in mu; bracket and bisect f(mu e) = 1.
        auto phi = [&](double m) { return f.value(scaled(e, m)) - 1.0; };
        double lo = 1.0, hi = 1.0;
        while (phi(lo) > 0.0) lo *= 0.5;
        while (phi(hi) < 0.0) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (phi(mid) < 0.0 ? lo : hi) = mid;
        }
        mu = 0.5 * (lo + hi);
    }
    // mu = 2 s^{-4/(n-2)}
    return std::pow(mu / 2.0, -(f.n - 2.0) / 4.0);
}

}  // namespace syl
