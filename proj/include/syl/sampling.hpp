#pragma once

// Seeded random inputs for the property sweeps.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "syl/linalg.hpp"
#include "syl/symfn.hpp"

namespace syl {

using Rng = std::mt19937_64;

inline Vec random_vector(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

inline Vec random_unit_vector(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(n);
    double len = 0.0;
    do {
        for (auto& x : v) x = g(rng);
        len = norm(v);
    } while (len < 1e-8);
    for (auto& x : v) x /= len;
    return v;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

inline Matrix random_orthogonal(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
    return orthonormalize(m);
}

/// Rejection samples from Gamma_k, normalized to |lambda| = 1 and kept away
/// from the cone boundary: sigma_k(lambda)^{1/k} >= margin.
inline std::vector<Vec> sample_gamma_k(Rng& rng, int n, int k, std::size_t count, double margin = 0.05) {
    if (k < 1 || k > n) throw std::domain_error("sample_gamma_k: k out of range");
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Vec> out;
    out.reserve(count);
    Vec v(static_cast<std::size_t>(n));
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * count + 100000) throw std::runtime_error("sample_gamma_k: rejection rate too high");
        // A positive drift keeps the acceptance rate reasonable for large k.
        for (auto& x : v) x = g(rng) + 0.5;
        const double len = norm(v);
        for (auto& x : v) x /= len;
        if (!in_gamma_k(v, k)) continue;
        if (std::pow(sigma_k(v, k), 1.0 / k) < margin) continue;
        out.push_back(v);
    }
    return out;
}

}  // namespace syl
