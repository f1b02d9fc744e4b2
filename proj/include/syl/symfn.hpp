#pragma once

// Elementary symmetric functions, Garding cones, admissible curvature
// functions (f, Gamma) and the sigma_1 deformation homotopy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "syl/linalg.hpp"

namespace syl {

/// Thrown when a function of lambda is evaluated outside its cone.
class cone_violation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sorted (non-increasing) eigenvalue vector, n >= 3.
class EigenvalueVector {
public:
    explicit EigenvalueVector(Vec values) : v_(std::move(values)) {
        if (v_.size() < 3) throw std::invalid_argument("EigenvalueVector: dimension must be >= 3");
        std::sort(v_.begin(), v_.end(), std::greater<>());
    }
    EigenvalueVector(std::initializer_list<double> values) : EigenvalueVector(Vec(values)) {}

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    const Vec& values() const { return v_; }
    operator std::span<const double>() const { return v_; }

private:
    Vec v_;
};

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

/// All elementary symmetric functions sigma_0..sigma_n, via the product
/// recurrence prod_i (1 + lambda_i x).
inline Vec sigma_all(std::span<const double> lambda) {
    Vec e(lambda.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        for (std::size_t k = j + 1; k >= 1; --k) e[k] += lambda[j] * e[k - 1];
    return e;
}

inline double sigma_k(std::span<const double> lambda, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > lambda.size())
        throw std::domain_error("sigma_k: k out of range [0, n]");
    if (k == 0) return 1.0;
    Vec e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        const std::size_t top = std::min<std::size_t>(j + 1, static_cast<std::size_t>(k));
        for (std::size_t m = top; m >= 1; --m) e[m] += lambda[j] * e[m - 1];
    }
    return e[static_cast<std::size_t>(k)];
}

/// d sigma_k / d lambda_i = sigma_{k-1}(lambda with entry i removed).
inline Vec sigma_k_gradient(std::span<const double> lambda, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > lambda.size())
        throw std::domain_error("sigma_k_gradient: k out of range [1, n]");
    const std::size_t n = lambda.size();
    Vec grad(n);
    Vec rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        rest.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(lambda[j]);
        grad[i] = sigma_k(rest, k - 1);
    }
    return grad;
}

/// Open Garding cone {sigma_l > 0, 1 <= l <= k}.
struct ConeSpec {
    int n = 3;
    int k = 1;

    ConeSpec(int n_, int k_) : n(n_), k(k_) {
        if (k < 1 || k > n) throw std::domain_error("ConeSpec: k must satisfy 1 <= k <= n");
    }
};

inline bool in_gamma_k(std::span<const double> lambda, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > lambda.size())
        throw std::domain_error("in_gamma_k: k out of range [1, n]");
    const Vec e = sigma_all(lambda);
    for (int l = 1; l <= k; ++l)
        if (!(e[static_cast<std::size_t>(l)] > 0.0)) return false;
    return true;
}

inline bool in_gamma_k(std::span<const double> lambda, const ConeSpec& cone) {
    if (lambda.size() != static_cast<std::size_t>(cone.n))
        throw std::invalid_argument("in_gamma_k: dimension mismatch");
    return in_gamma_k(lambda, cone.k);
}

using ScalarFn = std::function<double(std::span<const double>)>;
using VectorFn = std::function<Vec(std::span<const double>)>;
using ConePredicate = std::function<bool(std::span<const double>)>;

inline ConePredicate gamma_k_predicate(int k) {
    return [k](std::span<const double> l) { return in_gamma_k(l, k); };
}

/// Central-difference gradient, step 1e-5 * max(1, |x_i|).
inline Vec fd_gradient(const ScalarFn& f, std::span<const double> x, double rel_step = 1e-5) {
    Vec p(x.begin(), x.end()), g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = rel_step * std::max(1.0, std::abs(x[i]));
        const double xi = p[i];
        p[i] = xi + h;
        const double fp = f(p);
        p[i] = xi - h;
        const double fm = f(p);
        p[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

// Provenance tags for SymmetricCurvatureFunction.
struct BuiltinSigmaRoot {
    int k;
};
struct BuiltinSigmaPower {
    int k;
};
struct ConcaveFromDefiningFunction {
    std::string defining_function;
    double alpha;
};
using CurvatureProvenance = std::variant<BuiltinSigmaRoot, BuiltinSigmaPower, ConcaveFromDefiningFunction>;

/// An (f, Gamma) pair with gradient and cone membership.
struct SymmetricCurvatureFunction {
    int n = 3;
    ScalarFn value;
    VectorFn gradient;
    ConePredicate cone;
    bool homogeneous_degree_one = false;
    CurvatureProvenance provenance;
    /// Known lower bound for sum_i df/dlambda_i on the cone, if any.
    std::optional<double> delta;

    double operator()(std::span<const double> lambda) const {
        if (!cone(lambda)) throw cone_violation("SymmetricCurvatureFunction: lambda outside cone");
        return value(lambda);
    }
};

/// f = sigma_k^{1/k} on Gamma_k. delta = n f(e/n) = C(n,k)^{1/k}.
inline SymmetricCurvatureFunction sigma_root(int n, int k) {
    ConeSpec spec(n, k);
    SymmetricCurvatureFunction f;
    f.n = n;
    f.value = [k](std::span<const double> l) { return std::pow(sigma_k(l, k), 1.0 / k); };
    f.gradient = [k](std::span<const double> l) {
        const double s = sigma_k(l, k);
        Vec g = sigma_k_gradient(l, k);
        const double scale = std::pow(s, 1.0 / k - 1.0) / k;
        for (auto& v : g) v *= scale;
        return g;
    };
    f.cone = gamma_k_predicate(spec.k);
    f.homogeneous_degree_one = true;
    f.provenance = BuiltinSigmaRoot{k};
    f.delta = std::pow(binomial(n, k), 1.0 / k);
    return f;
}

/// Un-rooted sigma_k on Gamma_k (homogeneous of degree k, not 1).
inline SymmetricCurvatureFunction sigma_power(int n, int k) {
    ConeSpec spec(n, k);
    SymmetricCurvatureFunction f;
    f.n = n;
    f.value = [k](std::span<const double> l) { return sigma_k(l, k); };
    f.gradient = [k](std::span<const double> l) { return sigma_k_gradient(l, k); };
    f.cone = gamma_k_predicate(spec.k);
    f.homogeneous_degree_one = (k == 1);
    f.provenance = BuiltinSigmaPower{k};
    return f;
}

/// Positive concave function on a cone, vanishing on its boundary.
struct DefiningFunction {
    int n = 3;
    std::string name;
    ScalarFn value;
    /// Optional; central differences are used when empty.
    VectorFn gradient;
    ConePredicate cone;
    /// Skip permutation averaging when the caller knows h is symmetric.
    bool symmetric = false;
};

/// h = sigma_k^{1/k} on Gamma_k.
inline DefiningFunction builtin_defining_function(int n, int k) {
    const auto f = sigma_root(n, k);
    return DefiningFunction{n, "sigma_" + std::to_string(k) + "^(1/" + std::to_string(k) + ")", f.value, f.gradient,
                            f.cone, true};
}

namespace detail {

inline std::size_t factorial(int n) {
    std::size_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
    return r;
}

/// Average of h over all permutations of its argument.
inline DefiningFunction symmetrize(DefiningFunction h) {
    if (h.symmetric) return h;
    if (h.n > 8) throw std::domain_error("symmetrize: permutation average limited to n <= 8");
    const auto base_value = h.value;
    const VectorFn base_grad = h.gradient ? h.gradient : VectorFn([base_value](std::span<const double> x) {
        return fd_gradient(base_value, x);
    });
    const auto n = static_cast<std::size_t>(h.n);
    const double count = static_cast<double>(factorial(h.n));

    h.value = [base_value, n, count](std::span<const double> l) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Vec x(n);
        double sum = 0.0;
        do {
            for (std::size_t i = 0; i < n; ++i) x[i] = l[perm[i]];
            sum += base_value(x);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return sum / count;
    };
    h.gradient = [base_grad, n, count](std::span<const double> l) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Vec x(n), g(n, 0.0);
        do {
            for (std::size_t i = 0; i < n; ++i) x[i] = l[perm[i]];
            const Vec gx = base_grad(x);
            // d/dl_{perm[i]} of h(x) picks up dh/dx_i.
            for (std::size_t i = 0; i < n; ++i) g[perm[i]] += gx[i];
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (auto& v : g) v /= count;
        return g;
    };
    h.symmetric = true;
    return h;
}

}  // namespace detail

/// Builds f(lambda) = [lambda] * h(lambda / [lambda])^alpha, [lambda] = sum of
/// entries. The result is homogeneous of degree one, concave, and strictly
/// increasing in each entry, with sum_i df/dlambda_i >= n f(e/n).
inline SymmetricCurvatureFunction build_concave_f(DefiningFunction h_in, double alpha = 0.5) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("build_concave_f: alpha must lie in (0, 1)");
    if (h_in.n < 1 || !h_in.value || !h_in.cone) throw std::invalid_argument("build_concave_f: incomplete defining function");
    DefiningFunction h = detail::symmetrize(std::move(h_in));
    if (!h.gradient) {
        const auto hv = h.value;
        h.gradient = [hv](std::span<const double> x) { return fd_gradient(hv, x); };
    }
    const auto n = static_cast<std::size_t>(h.n);
    const Vec center(n, 1.0 / static_cast<double>(n));
    if (!h.cone(center)) throw std::invalid_argument("build_concave_f: e/n is not inside the cone");
    const double h_center = h.value(center);
    if (!(h_center > 0.0)) throw std::invalid_argument("build_concave_f: h(1/n,...,1/n) must be positive");

    const auto hv = h.value;
    const auto hg = h.gradient;
    const auto hc = h.cone;

    SymmetricCurvatureFunction f;
    f.n = h.n;
    f.value = [hv, alpha](std::span<const double> l) {
        const double s = std::accumulate(l.begin(), l.end(), 0.0);
        const Vec lp = scaled(l, 1.0 / s);
        return s * std::pow(hv(lp), alpha);
    };
    f.gradient = [hv, hg, alpha](std::span<const double> l) {
        const double s = std::accumulate(l.begin(), l.end(), 0.0);
        const Vec lp = scaled(l, 1.0 / s);
        const double hx = hv(lp);
        const double g = std::pow(hx, alpha);
        Vec dg = hg(lp);
        for (auto& v : dg) v *= alpha * std::pow(hx, alpha - 1.0);
        const double tangential = dot(dg, lp);
        Vec out(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) out[i] = g + dg[i] - tangential;
        return out;
    };
    f.cone = [hc](std::span<const double> l) {
        const double s = std::accumulate(l.begin(), l.end(), 0.0);
        return s > 0.0 && hc(l);
    };
    f.homogeneous_degree_one = true;
    f.provenance = ConcaveFromDefiningFunction{h.name, alpha};
    f.delta = static_cast<double>(n) * std::pow(h_center, alpha);
    return f;
}

/// The lower bound n * h(e/n)^{1/alpha} in the form it is usually quoted.
/// For h(e/n) <= 1 it is weaker than SymmetricCurvatureFunction::delta.
inline double quoted_delta(const DefiningFunction& h, double alpha) {
    const auto n = static_cast<std::size_t>(h.n);
    const Vec center(n, 1.0 / static_cast<double>(n));
    return static_cast<double>(n) * std::pow(h.value(center), 1.0 / alpha);
}

// ---------------------------------------------------------------------------
// Deformation to the sigma_1 half-space.

/// t * lambda + (1 - t) * sigma_1(lambda) * e.
inline Vec homotopy_point(std::span<const double> lambda, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("homotopy: t must lie in [0, 1]");
    const double s1 = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    Vec p(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) p[i] = t * lambda[i] + (1.0 - t) * s1;
    return p;
}

inline bool homotopy_membership(std::span<const double> lambda, double t, const ConePredicate& cone) {
    return cone(homotopy_point(lambda, t));
}

inline double homotopy_f(std::span<const double> lambda, double t, const SymmetricCurvatureFunction& f) {
    const Vec p = homotopy_point(lambda, t);
    if (!f.cone(p)) throw cone_violation("homotopy_f: deformed point outside the cone");
    return f.value(p);
}

/// Deformed pair (f_t, Gamma_t) as a SymmetricCurvatureFunction.
inline SymmetricCurvatureFunction homotopy_function(const SymmetricCurvatureFunction& f, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("homotopy: t must lie in [0, 1]");
    SymmetricCurvatureFunction ft = f;
    const auto fv = f.value;
    const auto fg = f.gradient;
    const auto fc = f.cone;
    ft.value = [fv, t](std::span<const double> l) { return fv(homotopy_point(l, t)); };
    ft.gradient = [fg, t](std::span<const double> l) {
        // Chain rule through the linear map J = t I + (1 - t) e e^T.
        const Vec g = fg(homotopy_point(l, t));
        const double sum = std::accumulate(g.begin(), g.end(), 0.0);
        Vec out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = t * g[i] + (1.0 - t) * sum;
        return out;
    };
    ft.cone = [fc, t](std::span<const double> l) { return fc(homotopy_point(l, t)); };
    ft.delta.reset();
    return ft;
}

}  // namespace syl
