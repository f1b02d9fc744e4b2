#pragma once

// Small dense vectors and symmetric matrices (n <= 16) with a cyclic Jacobi
// eigensolver. Nothing here is tuned for large n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace syl {

using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline Vec axpy(double alpha, std::span<const double> x, std::span<const double> y) {
    Vec r(y.begin(), y.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += alpha * x[i];
    return r;
}

inline Vec scaled(std::span<const double> x, double alpha) {
    Vec r(x.begin(), x.end());
    for (auto& v : r) v *= alpha;
    return r;
}

inline Vec sub(std::span<const double> a, std::span<const double> b) { return axpy(-1.0, b, a); }

inline Vec add(std::span<const double> a, std::span<const double> b) { return axpy(1.0, b, a); }

inline Vec unit_vector(std::size_t n, std::size_t i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    return e;
}

/// Square dense matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()), a_() {
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("Matrix: rows must be square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(std::span<const double> d) {
        Matrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix outer(std::span<const double> x, std::span<const double> y) {
        Matrix m(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
        return m;
    }

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (auto& v : a_) v *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const double aik = a(i, k);
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Vec apply(std::span<const double> x) const {
        Vec y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Vec apply_transpose(std::span<const double> x) const {
        Vec y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[j] += (*this)(i, j) * x[i];
        return y;
    }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest |A_ij - A_ji|.
    double asymmetry() const {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    Matrix symmetrized() const { return 0.5 * (*this + transpose()); }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// non-increasing. Only the upper triangle is read.
inline Vec jacobi_eigenvalues(Matrix a, int max_sweeps = 100) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += a(i, i) * a(i, i);
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        }
        if (off == 0.0 || off <= 1e-34 * diag) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }

    Vec ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Orthonormal columns from Gram-Schmidt (two passes) on the columns of m.
inline Matrix orthonormalize(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix q(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = m(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                double proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += q(i, k) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, k);
            }
        }
        const double len = norm(v);
        if (len == 0.0) throw std::invalid_argument("orthonormalize: rank-deficient input");
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / len;
    }
    return q;
}

/// Orthogonal matrix O with O * from = to, for unit vectors. Built as the
/// product of two Householder reflections so that det O = +1.
inline Matrix rotation_taking(std::span<const double> from, std::span<const double> to) {
    const std::size_t n = from.size();
    auto reflector = [n](const Vec& w) {
        Matrix h = Matrix::identity(n);
        const double ww = dot(w, w);
        if (ww == 0.0) return h;
        h -= Matrix::outer(w, w) * (2.0 / ww);
        return h;
    };
    Vec w1 = add(from, to);
    if (norm(w1) < 1e-8) {
        // from ~ -to: reflect across from, then across a vector orthogonal to to.
        std::size_t axis = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(to[i]) < std::abs(to[axis])) axis = i;
        Vec e = unit_vector(n, axis);
        Vec w2 = axpy(-dot(e, to), to, e);
        return reflector(w2) * reflector(Vec(from.begin(), from.end()));
    }
    // H(from+to) maps from -> -to; H(to) maps -to -> to.
    return reflector(Vec(to.begin(), to.end())) * reflector(w1);
}

}  // namespace syl
