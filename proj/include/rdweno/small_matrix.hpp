// Dense m x m matrices and m-vectors for the characteristic decompositions.
// m is the number of conserved components, at most 4 in this suite.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

#include "rdweno/common.hpp"

namespace rdweno {

constexpr int kMaxComponents = 4;

// Fixed-capacity vector; size is the runtime component count.
struct Vec {
    std::array<double, kMaxComponents> a{};
    int n = 0;

    Vec() = default;
    explicit Vec(int size) : n(size) {}
    Vec(std::initializer_list<double> init) : n(static_cast<int>(init.size())) {
        int i = 0;
        for (double v : init) a[i++] = v;
    }

    double& operator[](int i) { return a[i]; }
    double operator[](int i) const { return a[i]; }
    int size() const { return n; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) a[i] += o.a[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) a[i] -= o.a[i];
        return *this;
    }
    Vec& operator*=(double c) {
        for (int i = 0; i < n; ++i) a[i] *= c;
        return *this;
    }
};

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(double c, Vec a) { return a *= c; }

inline double max_abs(const Vec& v) {
    double m = 0;
    for (int i = 0; i < v.n; ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

struct Mat {
    std::array<double, kMaxComponents * kMaxComponents> a{};
    int n = 0;

    Mat() = default;
    explicit Mat(int size) : n(size) {}

    double& operator()(int i, int j) { return a[i * n + j]; }
    double operator()(int i, int j) const { return a[i * n + j]; }
    int size() const { return n; }

    static Mat identity(int size) {
        Mat m(size);
        for (int i = 0; i < size; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat& operator+=(const Mat& o) {
        for (int i = 0; i < n * n; ++i) a[i] += o.a[i];
        return *this;
    }
    Mat& operator*=(double c) {
        for (int i = 0; i < n * n; ++i) a[i] *= c;
        return *this;
    }
};

inline Mat operator+(Mat a, const Mat& b) { return a += b; }
inline Mat operator*(double c, Mat a) { return a *= c; }

inline Vec operator*(const Mat& m, const Vec& v) {
    Vec r(m.n);
    for (int i = 0; i < m.n; ++i) {
        double s = 0;
        for (int j = 0; j < m.n; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const double xv = x(i, k);
            for (int j = 0; j < x.n; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

// R * diag(d) * L without forming the diagonal matrix.
inline Mat sandwich(const Mat& r, const Vec& d, const Mat& l) {
    Mat out(r.n);
    for (int i = 0; i < r.n; ++i)
        for (int k = 0; k < r.n; ++k) {
            const double rv = r(i, k) * d[k];
            for (int j = 0; j < r.n; ++j) out(i, j) += rv * l(k, j);
        }
    return out;
}

// Gauss-Jordan with partial pivoting.
inline Mat inverse(const Mat& m) {
    const int n = m.n;
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        require(std::abs(a(piv, col)) > 0.0, "inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const double d = 1.0 / a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace rdweno
