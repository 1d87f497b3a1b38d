// WENO-ZQ integration of point samples over one cell.
//
// The quadrature blends the exact integral of the 4-node cubic interpolant
// with the 2-node trapezoid value, using nonlinear weights built around the
// linear pair (0.99, 0.01). Works in the scaled variable xi = (x - x_first)/dx,
// so the stencil nodes sit at xi = 0,1,2,3 and the target cell is
// [target, target+1]. Samples must come from uniformly spaced nodes.
#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "rdweno/common.hpp"

namespace rdweno {

struct WenoParameters {
    double gamma1 = 0.99;     // linear weight of the cubic branch
    double gamma2 = 0.01;     // linear weight of the trapezoid branch
    double eps_weights = 1e-6;
};

struct StencilSample1D {
    std::array<double, 4> values{}; // samples at 4 consecutive nodes
    double dx = 0;                  // node spacing
    int target = 1;                 // left node of the target cell, in {0,1,2}
};

// Stencil node indices first..first+3; the interpolant is integrated over
// the cell [nodes[first+target], nodes[first+target+1]].
struct Stencil {
    int first;
    int target;
};

// Central stencil {i-1..i+2} for cell i, one-sided at the ends of the
// available node index range [lo, hi].
inline Stencil select_stencil_in(int i, int lo, int hi) {
    require(hi - lo >= 3, "select_stencil: need at least 4 nodes");
    require(i >= lo && i < hi, "select_stencil: cell index out of range");
    int first = i - 1;
    if (first < lo) first = lo;
    if (first + 3 > hi) first = hi - 3;
    return Stencil{first, i - first};
}

inline Stencil select_stencil(int i, int n_cells) {
    return select_stencil_in(i, 0, n_cells);
}

// Monomial coefficients in the scaled variable xi.
struct Poly3 {
    std::array<double, 4> a{};
};

// Degree <= 3 interpolant of samples at xi = 0,1,2,3 (Newton form expanded).
inline Poly3 cubic_interpolant(const std::array<double, 4>& s) {
    const double c0 = s[0];
    const double c1 = s[1] - s[0];
    const double c2 = (s[2] - 2 * s[1] + s[0]) / 2;
    const double c3 = (s[3] - 3 * s[2] + 3 * s[1] - s[0]) / 6;
    // c0 + c1 x + c2 x(x-1) + c3 x(x-1)(x-2)
    return Poly3{{c0, c1 - c2 + 2 * c3, c2 - 3 * c3, c3}};
}

namespace detail {

// Integral over [t, t+1] of a polynomial given by monomial coefficients.
template <std::size_t D>
double poly_cell_integral(const std::array<double, D>& c, int t) {
    double lo = t, hi = t + 1;
    double lo_pow = lo, hi_pow = hi;
    double sum = 0;
    for (std::size_t k = 0; k < D; ++k) {
        sum += c[k] * (hi_pow - lo_pow) / static_cast<double>(k + 1);
        lo_pow *= lo;
        hi_pow *= hi;
    }
    return sum;
}

// Coefficients of p^2 for a degree <= 2 polynomial p.
inline std::array<double, 5> square_quadratic(double b0, double b1, double b2) {
    return {b0 * b0, 2 * b0 * b1, b1 * b1 + 2 * b0 * b2, 2 * b1 * b2, b2 * b2};
}

}  // namespace detail

// Exact cell integral of the cubic interpolant. On the central stencil this
// reduces to dx * (-s0 + 13 s1 + 13 s2 - s3) / 24.
inline double integral_cubic_interpolant(const StencilSample1D& st) {
    const Poly3 p = cubic_interpolant(st.values);
    return st.dx * detail::poly_cell_integral(p.a, st.target);
}

inline double integral_linear_interpolant(double s0, double s1, double dx) {
    require(dx > 0, "integral_linear_interpolant: dx must be positive");
    return 0.5 * dx * (s0 + s1);
}

// Jiang-Shu style indicator for the cubic interpolant over the target cell:
// sum over derivative orders of the cell integral of dx^(2m-1) (d^m p/dx^m)^2.
// In the scaled variable all dx factors cancel.
inline double smoothness_cubic(const Poly3& p, int target) {
    const double a1 = p.a[1], a2 = p.a[2], a3 = p.a[3];
    double beta = detail::poly_cell_integral(
        detail::square_quadratic(a1, 2 * a2, 3 * a3), target);
    beta += detail::poly_cell_integral(
        detail::square_quadratic(2 * a2, 6 * a3, 0.0), target);
    beta += 36 * a3 * a3;
    return beta;
}

// For the linear interpolant the indicator collapses to the squared node gap.
inline double smoothness_linear(double ds) { return ds * ds; }

inline std::pair<double, double> nonlinear_weights(double beta1, double beta2,
                                                   const WenoParameters& p) {
    const double tau0 = (beta1 - beta2) * (beta1 - beta2);
    const double w1 = p.gamma1 * (1 + tau0 / (p.eps_weights + beta1));
    const double w2 = p.gamma2 * (1 + tau0 / (p.eps_weights + beta2));
    const double s = w1 + w2;
    return {w1 / s, w2 / s};
}

inline double weno_zq_cell_integral(const StencilSample1D& st,
                                    const WenoParameters& p = {}) {
    const Poly3 cubic = cubic_interpolant(st.values);
    const double q1 = st.dx * detail::poly_cell_integral(cubic.a, st.target);
    const double sl = st.values[st.target];
    const double sr = st.values[st.target + 1];
    const double q2 = integral_linear_interpolant(sl, sr, st.dx);
    const double beta1 = smoothness_cubic(cubic, st.target);
    const double beta2 = smoothness_linear(sr - sl);
    const auto [w1, w2] = nonlinear_weights(beta1, beta2, p);
    return w1 * (q1 / p.gamma1 - (p.gamma2 / p.gamma1) * q2) + w2 * q2;
}

// Dimension-by-dimension double integral of a source over one 2D cell.
// sample(kx, ky) returns s at the stencil node pair (local indices 0..3);
// tx, ty are the target offsets of the x and y stencils.
template <class F>
double source_cell_integral_2d(F&& sample, int tx, int ty, double dx, double dy,
                               const WenoParameters& p = {}) {
    std::array<double, 4> inner{};
    for (int kx = 0; kx < 4; ++kx) {
        StencilSample1D col;
        col.dx = dy;
        col.target = ty;
        for (int ky = 0; ky < 4; ++ky) col.values[ky] = sample(kx, ky);
        inner[kx] = weno_zq_cell_integral(col, p);
    }
    StencilSample1D row;
    row.values = inner;
    row.dx = dx;
    row.target = tx;
    return weno_zq_cell_integral(row, p);
}

}  // namespace rdweno
