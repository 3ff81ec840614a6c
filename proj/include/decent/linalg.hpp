#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace decent {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    void fill(double v) { std::fill(a.begin(), a.end(), v); }
    size_t size() const { return a.size(); }

    bool operator==(const Matrix&) const = default;
};

inline double dot(const double* x, const double* y, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

/// y = W x + b
inline void affine(const Matrix& w, const Vec& x, const Vec& b, Vec& y) {
    assert(static_cast<int>(x.size()) == w.cols && static_cast<int>(b.size()) == w.rows);
    y.resize(w.rows);
    for (int i = 0; i < w.rows; ++i) y[i] = dot(w.row(i), x.data(), w.cols) + b[i];
}

/// W += g ⊗ x (outer product accumulate)
inline void add_outer(Matrix& w, const Vec& g, const Vec& x) {
    assert(static_cast<int>(g.size()) == w.rows && static_cast<int>(x.size()) == w.cols);
    for (int i = 0; i < w.rows; ++i) {
        double* wi = w.row(i);
        const double gi = g[i];
        for (int j = 0; j < w.cols; ++j) wi[j] += gi * x[j];
    }
}

/// out += Wᵀ g
inline void add_mat_t_vec(const Matrix& w, const Vec& g, Vec& out) {
    assert(static_cast<int>(g.size()) == w.rows && static_cast<int>(out.size()) == w.cols);
    for (int i = 0; i < w.rows; ++i) {
        const double* wi = w.row(i);
        const double gi = g[i];
        for (int j = 0; j < w.cols; ++j) out[j] += gi * wi[j];
    }
}

inline void axpy(double alpha, const Vec& x, Vec& y) {
    assert(x.size() == y.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double sq_norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

inline double sq_dist(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

inline double sq_dist(const double* x, const double* y, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const Matrix& m) {
    for (double x : m.a)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace decent
