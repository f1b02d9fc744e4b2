#pragma once

// Numerical audit of the structural conditions on (f, Gamma): symmetry,
// positivity, monotonicity, concavity, degree-one homogeneity, the Euler
// identity and the lower bound on the trace of the gradient.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "syl/linalg.hpp"
#include "syl/symfn.hpp"

namespace syl {

struct AxiomCheck {
    std::string name;
    bool passed = true;
    double max_violation = 0.0;
    /// Index into the sample set where the violation peaked, or -1.
    long worst_sample = -1;
    /// Extreme observed value (min or max, depending on the check).
    double observed = 0.0;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
    }
    const AxiomCheck& at(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("AxiomReport: no check named " + name);
    }
};

struct AxiomTolerances {
    double symmetry = 1e-12;
    double concavity = 1e-8;
    double homogeneity = 1e-10;
    double euler = 1e-8;
    double delta = 1e-8;
    /// Hessian step, relative to |lambda|.
    double hessian_step = 1e-5;
};

/// Hessian by central differences of the gradient, Richardson-extrapolated
/// over steps h and h/2 (error O(h^4)) and symmetrized. Plain central
/// differences lose too much near the cone boundary, where the third
/// derivatives of f grow.
inline Matrix fd_hessian_from_gradient(const VectorFn& grad, std::span<const double> x, double step) {
    const std::size_t n = x.size();
    Vec p(x.begin(), x.end());
    auto central = [&](std::size_t j, double h) {
        const double xj = p[j];
        p[j] = xj + h;
        const Vec gp = grad(p);
        p[j] = xj - h;
        const Vec gm = grad(p);
        p[j] = xj;
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = (gp[i] - gm[i]) / (2.0 * h);
        return col;
    };
    Matrix hess(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec coarse = central(j, step);
        const Vec fine = central(j, 0.5 * step);
        for (std::size_t i = 0; i < n; ++i) hess(i, j) = (4.0 * fine[i] - coarse[i]) / 3.0;
    }
    return hess.symmetrized();
}

namespace detail {

inline void record(AxiomCheck& c, double violation, long index) {
    if (violation > c.max_violation) {
        c.max_violation = violation;
        c.worst_sample = index;
    }
}

}  // namespace detail

inline AxiomReport verify_axioms(const SymmetricCurvatureFunction& f, std::span<const Vec> samples,
                                 const AxiomTolerances& tol = {}) {
    AxiomCheck symmetry{"symmetry"}, positivity{"positivity"}, monotonicity{"monotonicity"};
    AxiomCheck concavity{"concavity"}, homogeneity{"homogeneity"}, euler{"euler"}, delta{"delta_bound"};
    positivity.observed = monotonicity.observed = delta.observed = std::numeric_limits<double>::infinity();
    concavity.observed = -std::numeric_limits<double>::infinity();

    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Vec& l = samples[s];
        const auto idx = static_cast<long>(s);
        const double fl = f.value(l);
        const double scale = std::max(1.0, std::abs(fl));

        // Three fixed permutations: reversal, cyclic shift, first transposition.
        Vec rev(l.rbegin(), l.rend());
        Vec rot(l.begin() + 1, l.end());
        rot.push_back(l.front());
        Vec swp = l;
        std::swap(swp[0], swp[1]);
        for (const Vec* p : {&rev, &rot, &swp}) detail::record(symmetry, std::abs(f.value(*p) - fl) / scale, idx);

        positivity.observed = std::min(positivity.observed, fl);
        detail::record(positivity, fl > 0.0 ? 0.0 : std::abs(fl) + std::numeric_limits<double>::min(), idx);

        const Vec g = f.gradient(l);
        const double gmin = *std::min_element(g.begin(), g.end());
        monotonicity.observed = std::min(monotonicity.observed, gmin);
        detail::record(monotonicity, gmin > 0.0 ? 0.0 : std::abs(gmin) + std::numeric_limits<double>::min(), idx);

        const double step = tol.hessian_step * std::max(1e-300, norm(l));
        const Vec hev = jacobi_eigenvalues(fd_hessian_from_gradient(f.gradient, l, step));
        concavity.observed = std::max(concavity.observed, hev.front());
        detail::record(concavity, std::max(0.0, hev.front()), idx);

        for (double t : {0.5, 2.0, 3.0}) {
            const Vec tl = scaled(l, t);
            detail::record(homogeneity, std::abs(f.value(tl) - t * fl) / (t * scale), idx);
        }

        detail::record(euler, std::abs(dot(l, g) - fl) / scale, idx);

        const double trace = std::accumulate(g.begin(), g.end(), 0.0);
        delta.observed = std::min(delta.observed, trace);
        if (f.delta) detail::record(delta, std::max(0.0, *f.delta - trace), idx);
    }

    symmetry.passed = symmetry.max_violation <= tol.symmetry;
    positivity.passed = positivity.max_violation == 0.0;
    monotonicity.passed = monotonicity.max_violation == 0.0;
    concavity.passed = concavity.max_violation <= tol.concavity;
    homogeneity.passed = homogeneity.max_violation <= tol.homogeneity;
    euler.passed = euler.max_violation <= tol.euler;
    delta.passed = delta.max_violation <= tol.delta;
    return AxiomReport{{symmetry, positivity, monotonicity, concavity, homogeneity, euler, delta}};
}

/// min over samples and i of  (df/dlambda_i) * [lambda] / f, which the
/// defining-function construction bounds below by 1 - alpha.
inline double min_relative_monotonicity(const SymmetricCurvatureFunction& f, std::span<const Vec> samples) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& l : samples) {
        const double s = std::accumulate(l.begin(), l.end(), 0.0);
        const double fl = f.value(l);
        for (double gi : f.gradient(l)) m = std::min(m, gi * s / fl);
    }
    return m;
}

}  // namespace syl
