// Cell residual evaluation and its distribution to vertices: Lax-Friedrichs
// split, Struijs limiter, streamline dissipation with the entropy fix, and
// the characteristic projection for systems.
#pragma once

#include <array>
#include <cmath>

#include "rdweno/grid.hpp"
#include "rdweno/law.hpp"
#include "rdweno/small_matrix.hpp"
#include "rdweno/weno.hpp"

namespace rdweno {

struct RoeFix {
    double eps = 1e-2;
};

// Smooth positive surrogate for |a| when |a| <= eps.
inline double roe_correct(double a, const RoeFix& fix = {}) {
    const double aa = std::abs(a);
    if (aa > fix.eps) return aa;
    return (a * a + fix.eps * fix.eps) / (2 * fix.eps);
}

struct DistributionConfig {
    WenoParameters weno;
    RoeFix roe;
    AverageKind average = AverageKind::Arithmetic;
    bool fixed_direction = false;  // override limiter_direction with (1, 0)
};

template <int K>
struct CellDistribution {
    Vec total;
    std::array<Vec, K> parts;
};

using CellDistribution1D = CellDistribution<2>;
using CellDistribution2D = CellDistribution<4>;

// Phi/K + alpha (u_k - ubar); the alpha terms telescope, so the parts sum
// to Phi exactly.
template <int K>
std::array<Vec, K> lxf_split(const Vec& total, const std::array<Vec, K>& states,
                             const Vec& ubar, double alpha) {
    std::array<Vec, K> parts;
    for (int k = 0; k < K; ++k) {
        parts[k] = (1.0 / K) * total + alpha * (states[k] - ubar);
    }
    return parts;
}

// Struijs weights per component: clip negative sub-residual ratios to zero
// and normalize. Degenerate totals get equal weights so that conservation
// and symmetry survive at convergence.
template <int K>
std::array<Vec, K> struijs_limiter(const std::array<Vec, K>& parts, const Vec& total) {
    const int m = total.size();
    std::array<Vec, K> beta;
    for (int k = 0; k < K; ++k) beta[k] = Vec(m);
    for (int c = 0; c < m; ++c) {
        double peak = 0;
        for (int k = 0; k < K; ++k) peak = std::max(peak, std::abs(parts[k][c]));
        if (std::abs(total[c]) <= 1e-14 * (1 + peak)) {
            for (int k = 0; k < K; ++k) beta[k][c] = 1.0 / K;
            continue;
        }
        double sum = 0;
        std::array<double, K> pos{};
        for (int k = 0; k < K; ++k) {
            pos[k] = std::max(parts[k][c] / total[c], 0.0);
            sum += pos[k];
        }
        for (int k = 0; k < K; ++k) beta[k][c] = pos[k] / sum;
    }
    return beta;
}

// Gradients of the four bilinear basis functions, each evaluated at its own
// vertex. Vertex order: M1 = (i+1, j+1), M2 = (i+1, j), M3 = (i, j+1),
// M4 = (i, j). They sum to zero on a rectangle.
inline std::array<std::array<double, 2>, 4> basis_gradients_2d(double dx, double dy) {
    require(dx > 0 && dy > 0, "basis_gradients_2d: cell extents must be positive");
    return {{{1 / dx, 1 / dy},
             {1 / dx, -1 / dy},
             {-1 / dx, 1 / dy},
             {-1 / dx, -1 / dy}}};
}

// alpha = dx * max over the cell's nodes of the spectral radius.
inline double alpha_1d(const ConservationLaw1D& law, const Vec& ul, const Vec& ur,
                       double xl, double xr, double dx) {
    return dx * std::max(law.max_wave_speed(ul, xl), law.max_wave_speed(ur, xr));
}

// Upwind split of Phi through the sign of the wave speeds at ubar. Returns
// (part to the left node, part to the right node); the two are exact
// negatives.
inline std::pair<Vec, Vec> dissipation_1d(const Vec& total, const Vec& ubar,
                                          const ConservationLaw1D& law, double x,
                                          const RoeFix& fix = {}) {
    const EigenSystem e = law.eigen(ubar, x);
    const int m = total.size();
    Vec ratio(m);
    for (int c = 0; c < m; ++c) ratio[c] = e.lambda[c] / roe_correct(e.lambda[c], fix);
    const Vec upwind = sandwich(e.right, ratio, e.left) * total;
    return {-0.5 * upwind, 0.5 * upwind};
}

// Full 1D cell distribution: limit in characteristic space, add dissipation,
// project back.
inline CellDistribution1D distribute_cell_1d(const ConservationLaw1D& law,
                                             const Vec& total, const Vec& ul,
                                             const Vec& ur, double xl, double xr,
                                             const DistributionConfig& cfg = {}) {
    const int m = total.size();
    const double dx = xr - xl;
    const double xmid = 0.5 * (xl + xr);
    const Vec states[2] = {ul, ur};
    const Vec ubar = law.average_state(states, 2, cfg.average);
    const double alpha = alpha_1d(law, ul, ur, xl, xr, dx);
    const auto lxf = lxf_split<2>(total, {ul, ur}, ubar, alpha);

    const EigenSystem e = law.eigen(ubar, xmid);
    std::array<Vec, 2> psi = {e.left * lxf[0], e.left * lxf[1]};
    const Vec psi_total = psi[0] + psi[1];
    const auto beta = struijs_limiter<2>(psi, psi_total);

    Vec ratio(m);
    for (int c = 0; c < m; ++c)
        ratio[c] = 0.5 * e.lambda[c] / roe_correct(e.lambda[c], cfg.roe);

    CellDistribution1D out{total, {Vec(m), Vec(m)}};
    Vec charge(m);
    for (int c = 0; c < m; ++c) charge[c] = beta[0][c] * psi_total[c] - ratio[c] * psi_total[c];
    out.parts[0] = e.right * charge;
    for (int c = 0; c < m; ++c) charge[c] = beta[1][c] * psi_total[c] + ratio[c] * psi_total[c];
    out.parts[1] = e.right * charge;
    return out;
}

// Streamline dissipation parts for one 2D cell. The K_k are the directional
// Jacobians along the vertex basis gradients; opposite vertices carry
// opposite K, so the four parts sum to zero.
inline std::array<Vec, 4> dissipation_2d(const Vec& total, const Vec& ubar,
                                         const ConservationLaw2D& law, double dx,
                                         double dy, double x, double y,
                                         const RoeFix& fix = {}) {
    const int m = total.size();
    const auto grads = basis_gradients_2d(dx, dy);
    // M4 = -M1 and M3 = -M2 in gradient, so two decompositions suffice.
    std::array<Mat, 2> kmat;
    Mat tau_inv(m);
    for (int d = 0; d < 2; ++d) {
        const double gx = grads[d][0], gy = grads[d][1];
        const double norm = std::sqrt(gx * gx + gy * gy);
        const EigenSystem e = law.eigen_in_direction(ubar, gx / norm, gy / norm, x, y);
        Vec scaled(m), absval(m);
        for (int c = 0; c < m; ++c) {
            scaled[c] = e.lambda[c] * norm;
            absval[c] = roe_correct(scaled[c], fix);
        }
        kmat[d] = sandwich(e.right, scaled, e.left);
        tau_inv += 2.0 * sandwich(e.right, absval, e.left);
    }
    std::array<Vec, 4> parts;
    Mat tau;
    try {
        tau = inverse(tau_inv);
    } catch (const std::invalid_argument&) {
        for (auto& p : parts) p = Vec(m);
        return parts;
    }
    const Vec scaled_total = tau * total;
    parts[0] = kmat[0] * scaled_total;
    parts[1] = kmat[1] * scaled_total;
    parts[2] = -1.0 * parts[1];
    parts[3] = -1.0 * parts[0];
    return parts;
}

// Full 2D cell distribution. Vertex states ordered M1..M4.
inline CellDistribution2D distribute_cell_2d(const ConservationLaw2D& law,
                                             const Vec& total,
                                             const std::array<Vec, 4>& vertices,
                                             double xl, double xr, double yl,
                                             double yr,
                                             const DistributionConfig& cfg = {}) {
    const int m = total.size();
    const double dx = xr - xl;
    const double dy = yr - yl;
    const double xc = 0.5 * (xl + xr);
    const double yc = 0.5 * (yl + yr);
    const Vec ubar = law.average_state(vertices.data(), 4, cfg.average);

    double alpha = 0;
    const double xs[4] = {xr, xr, xl, xl};
    const double ys[4] = {yr, yl, yr, yl};
    for (int k = 0; k < 4; ++k)
        alpha = std::max(alpha, law.max_wave_speed(vertices[k], xs[k], ys[k]));
    alpha *= std::max(dx, dy);

    const auto lxf = lxf_split<4>(total, vertices, ubar, alpha);

    double nx = 1, ny = 0;
    if (!cfg.fixed_direction) law.limiter_direction(ubar, nx, ny);
    const EigenSystem e = law.eigen_in_direction(ubar, nx, ny, xc, yc);
    std::array<Vec, 4> psi;
    Vec psi_total(m);
    for (int k = 0; k < 4; ++k) {
        psi[k] = e.left * lxf[k];
        psi_total += psi[k];
    }
    const auto beta = struijs_limiter<4>(psi, psi_total);
    const auto diss = dissipation_2d(total, ubar, law, dx, dy, xc, yc, cfg.roe);

    CellDistribution2D out{total, {}};
    Vec limited(m);
    for (int k = 0; k < 4; ++k) {
        for (int c = 0; c < m; ++c) limited[c] = beta[k][c] * psi_total[c];
        out.parts[k] = e.right * limited + diss[k];
    }
    return out;
}

// Phi = f(u_{i+1}) - f(u_i) - weno integral of the source samples.
// u(i) returns the state at node i; cells use one-sided stencils at the ends
// of the node range [lo, hi].
template <class U>
Vec total_residual_1d(const ConservationLaw1D& law, const Grid1D& grid, U&& u,
                      int cell, const WenoParameters& wp = {}, int lo = 0,
                      int hi = -1) {
    if (hi < 0) hi = grid.num_cells();
    const int m = law.components();
    Vec phi = law.flux(u(cell + 1), grid.nodes[cell + 1]) -
              law.flux(u(cell), grid.nodes[cell]);
    const Stencil st = select_stencil_in(cell, lo, hi);
    std::array<Vec, 4> src;
    for (int k = 0; k < 4; ++k) {
        const int node = st.first + k;
        src[k] = law.source(u(node), grid.nodes[node]);
    }
    StencilSample1D samples;
    samples.dx = grid.cell_widths[cell];
    samples.target = st.target;
    for (int c = 0; c < m; ++c) {
        for (int k = 0; k < 4; ++k) samples.values[k] = src[k][c];
        phi[c] -= weno_zq_cell_integral(samples, wp);
    }
    return phi;
}

// 2D cell residual: WENO edge integrals of the fluxes minus the
// dimension-by-dimension source integral. u(i, j) returns the state at node
// (i, j); index ranges [ilo, nx] x [jlo, ny] may extend past the physical
// grid into mirrored ghost nodes.
template <class U>
Vec total_residual_2d(const ConservationLaw2D& law, const Grid2D& grid, U&& u,
                      int ci, int cj, const WenoParameters& wp = {}, int ilo = 0,
                      int jlo = 0) {
    const int m = law.components();
    const double dx = grid.x.cell_widths[std::max(ci, 0)];
    const double dy = grid.y.cell_widths[std::max(cj, 0)];
    auto xc = [&](int i) { return grid.x.nodes.front() + i * dx; };
    auto yc = [&](int j) { return grid.y.nodes.front() + j * dy; };

    const Stencil sx = select_stencil_in(ci, ilo, grid.nx());
    const Stencil sy = select_stencil_in(cj, jlo, grid.ny());

    Vec phi(m);
    // f-flux across the vertical edges x = x_i and x = x_{i+1}, integrated in y.
    for (int side = 0; side < 2; ++side) {
        const int i = ci + side;
        const double sgn = side ? 1.0 : -1.0;
        std::array<Vec, 4> fvals;
        for (int k = 0; k < 4; ++k) {
            const int j = sy.first + k;
            fvals[k] = law.flux_x(u(i, j), xc(i), yc(j));
        }
        StencilSample1D samples;
        samples.dx = dy;
        samples.target = sy.target;
        for (int c = 0; c < m; ++c) {
            for (int k = 0; k < 4; ++k) samples.values[k] = fvals[k][c];
            phi[c] += sgn * weno_zq_cell_integral(samples, wp);
        }
    }
    // g-flux across the horizontal edges, integrated in x.
    for (int side = 0; side < 2; ++side) {
        const int j = cj + side;
        const double sgn = side ? 1.0 : -1.0;
        std::array<Vec, 4> gvals;
        for (int k = 0; k < 4; ++k) {
            const int i = sx.first + k;
            gvals[k] = law.flux_y(u(i, j), xc(i), yc(j));
        }
        StencilSample1D samples;
        samples.dx = dx;
        samples.target = sx.target;
        for (int c = 0; c < m; ++c) {
            for (int k = 0; k < 4; ++k) samples.values[k] = gvals[k][c];
            phi[c] += sgn * weno_zq_cell_integral(samples, wp);
        }
    }
    // Source double integral, dimension by dimension.
    std::array<std::array<Vec, 4>, 4> src;
    for (int kx = 0; kx < 4; ++kx)
        for (int ky = 0; ky < 4; ++ky) {
            const int i = sx.first + kx;
            const int j = sy.first + ky;
            src[kx][ky] = law.source(u(i, j), xc(i), yc(j));
        }
    for (int c = 0; c < m; ++c) {
        phi[c] -= source_cell_integral_2d(
            [&](int kx, int ky) { return src[kx][ky][c]; }, sx.target, sy.target,
            dx, dy, wp);
    }
    return phi;
}

}  // namespace rdweno
