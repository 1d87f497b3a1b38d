// Nodal assembly of cell distributions and pseudo-time marching to steady
// state with TVD-RK3 under a CFL constraint.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdweno/grid.hpp"
#include "rdweno/law.hpp"
#include "rdweno/rdcore.hpp"

namespace rdweno {

struct SolverDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    double cfl = 0.3;
    long max_iters = 200000;
    double residue_tol = 1e-12;
    DistributionConfig dist;
};

struct ResidueSample {
    long iter;
    double pseudo_time;
    double l1_residue;
};
using ResidueHistory = std::vector<ResidueSample>;

// Dual-measure-weighted mean of nodal rate magnitudes (component-averaged).
inline double l1_residue(const std::vector<Vec>& rates,
                         const std::vector<double>& weights) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        double a = 0;
        for (int c = 0; c < rates[i].size(); ++c) a += std::abs(rates[i][c]);
        num += weights[i] * a / rates[i].size();
        den += weights[i];
    }
    return num / den;
}

// One Shu-Osher TVD-RK3 step with the first-stage rates supplied by the
// caller (the marching loop already evaluated them for the residue log);
// post_stage runs after every stage update (used to re-impose Dirichlet
// data).
template <class RateFn, class PostStage>
std::vector<Vec> rk3_step_from(const std::vector<Vec>& u,
                               const std::vector<Vec>& rate0, RateFn&& rate,
                               double dt, PostStage&& post_stage) {
    const std::size_t n = u.size();
    std::vector<Vec> u1 = u;
    {
        for (std::size_t i = 0; i < n; ++i) u1[i] += dt * rate0[i];
        post_stage(u1);
    }
    std::vector<Vec> u2 = u1;
    {
        const auto r = rate(u1);
        for (std::size_t i = 0; i < n; ++i)
            u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * r[i]);
        post_stage(u2);
    }
    std::vector<Vec> out = u2;
    {
        const auto r = rate(u2);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = (1.0 / 3.0) * u[i] + (2.0 / 3.0) * (u2[i] + dt * r[i]);
        post_stage(out);
    }
    return out;
}

template <class RateFn, class PostStage>
std::vector<Vec> rk3_step(const std::vector<Vec>& u, RateFn&& rate, double dt,
                          PostStage&& post_stage) {
    return rk3_step_from(u, rate(u), rate, dt, post_stage);
}

template <class RateFn>
std::vector<Vec> rk3_step(const std::vector<Vec>& u, RateFn&& rate, double dt) {
    return rk3_step(u, rate, dt, [](std::vector<Vec>&) {});
}

// ---------------------------------------------------------------------------
// 1D
// ---------------------------------------------------------------------------

struct BoundaryPolicy1D {
    enum class Kind { Dirichlet, Outflow };
    Kind kind = Kind::Outflow;
    Vec value;

    static BoundaryPolicy1D dirichlet(Vec v) {
        return {Kind::Dirichlet, std::move(v)};
    }
    static BoundaryPolicy1D outflow() { return {}; }
};

struct Problem1D {
    std::string name;
    std::shared_ptr<const ConservationLaw1D> law;
    double a = 0, b = 1;
    int default_n = 80;
    std::function<Vec(double)> initial;
    BoundaryPolicy1D left, right;
    std::function<Vec(double)> exact;       // null when unavailable
    double shock_x = std::nan("");          // reference shock abscissa
};

struct Result1D {
    Grid1D grid;
    std::vector<Vec> state;
    ResidueHistory history;
    bool converged = false;
};

inline std::vector<Vec> assemble_rates_1d(const Problem1D& prob, const Grid1D& grid,
                                          const std::vector<Vec>& u,
                                          const SolverConfig& cfg) {
    const int n = grid.num_cells();
    const int m = prob.law->components();
    std::vector<Vec> rates(n + 1, Vec(m));
    auto at = [&](int i) -> const Vec& { return u[i]; };
    for (int i = 0; i < n; ++i) {
        const Vec phi = total_residual_1d(*prob.law, grid, at, i, cfg.dist.weno);
        const auto dist = distribute_cell_1d(*prob.law, phi, u[i], u[i + 1],
                                             grid.nodes[i], grid.nodes[i + 1],
                                             cfg.dist);
        rates[i] -= dist.parts[0];
        rates[i + 1] -= dist.parts[1];
    }
    for (int i = 0; i <= n; ++i) rates[i] *= 1.0 / grid.dual_measures[i];
    if (prob.left.kind == BoundaryPolicy1D::Kind::Dirichlet) rates[0] = Vec(m);
    if (prob.right.kind == BoundaryPolicy1D::Kind::Dirichlet) rates[n] = Vec(m);
    return rates;
}

inline double compute_dt_1d(const SolverConfig& cfg, const Grid1D& grid,
                            const std::vector<Vec>& u, const ConservationLaw1D& law) {
    double dt = std::numeric_limits<double>::infinity();
    std::vector<double> speed(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        speed[i] = law.max_wave_speed(u[i], grid.nodes[i]);
    for (int i = 0; i < grid.num_cells(); ++i) {
        const double s = std::max(speed[i], speed[i + 1]) + 1e-14;
        dt = std::min(dt, grid.cell_widths[i] / s);
    }
    return cfg.cfl * dt;
}

inline Result1D march_to_steady_1d(const Problem1D& prob, int n_cells,
                                   const SolverConfig& cfg = {}) {
    Result1D res;
    res.grid = build_grid_1d(prob.a, prob.b, n_cells);
    require(res.grid.is_uniform(), "march_to_steady_1d: grid must be uniform");
    const int n = res.grid.num_cells();
    res.state.resize(n + 1);
    for (int i = 0; i <= n; ++i) res.state[i] = prob.initial(res.grid.nodes[i]);

    auto pin = [&](std::vector<Vec>& u) {
        if (prob.left.kind == BoundaryPolicy1D::Kind::Dirichlet)
            u[0] = prob.left.value;
        if (prob.right.kind == BoundaryPolicy1D::Kind::Dirichlet)
            u[n] = prob.right.value;
    };
    pin(res.state);

    double t = 0;
    double initial_residue = -1;
    for (long iter = 0; iter <= cfg.max_iters; ++iter) {
        const auto rates = assemble_rates_1d(prob, res.grid, res.state, cfg);
        const double r = l1_residue(rates, res.grid.dual_measures);
        res.history.push_back({iter, t, r});
        if (!std::isfinite(r))
            throw SolverDivergence(prob.name + ": non-finite residue at iteration " +
                                   std::to_string(iter));
        if (initial_residue < 0) initial_residue = r;
        if (r > 1e6 * (initial_residue + 1e-300))
            throw SolverDivergence(prob.name + ": residue blow-up at iteration " +
                                   std::to_string(iter));
        if (r <= cfg.residue_tol) {
            res.converged = true;
            break;
        }
        if (iter == cfg.max_iters) break;

        const double dt = compute_dt_1d(cfg, res.grid, res.state, *prob.law);
        res.state = rk3_step_from(
            res.state, rates,
            [&](const std::vector<Vec>& w) {
                return assemble_rates_1d(prob, res.grid, w, cfg);
            },
            dt, pin);
        t += dt;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 2D
// ---------------------------------------------------------------------------

struct BoundaryPolicy2D {
    enum class Kind { Dirichlet, Outflow, Reflective };
    Kind kind = Kind::Outflow;
    std::function<Vec(double, double)> value;  // Dirichlet edge data
    std::function<Vec(const Vec&)> mirror;     // Reflective ghost construction

    static BoundaryPolicy2D dirichlet(std::function<Vec(double, double)> v) {
        BoundaryPolicy2D p;
        p.kind = Kind::Dirichlet;
        p.value = std::move(v);
        return p;
    }
    static BoundaryPolicy2D outflow() { return {}; }
    static BoundaryPolicy2D reflective(std::function<Vec(const Vec&)> m) {
        BoundaryPolicy2D p;
        p.kind = Kind::Reflective;
        p.mirror = std::move(m);
        return p;
    }
};

struct Problem2D {
    std::string name;
    std::shared_ptr<const ConservationLaw2D> law;
    AxisSpec ax{0, 1, 40};
    AxisSpec ay{0, 1, 40};
    std::function<Vec(double, double)> initial;
    BoundaryPolicy2D left, right, bottom, top;
    std::function<Vec(double, double)> exact;  // null when unavailable
    bool fixed_direction = false;              // limiter projection along (1, 0)
};

struct Result2D {
    Grid2D grid;
    std::vector<Vec> state;  // row-major, index j * (nx + 1) + i
    ResidueHistory history;
    bool converged = false;
};

// Reflective walls are supported on the bottom edge only, which covers the
// benchmark suite; one ghost row below the wall mirrors the interior and
// takes part in stencils and wall-cell residuals.
class Solver2D {
public:
    Solver2D(const Problem2D& prob, int nx, int ny, const SolverConfig& cfg)
        : prob_(prob), cfg_(cfg),
          grid_(build_grid_2d({prob.ax.a, prob.ax.b, nx}, {prob.ay.a, prob.ay.b, ny})) {
        require(grid_.x.is_uniform() && grid_.y.is_uniform(),
                "Solver2D: grids must be uniform");
        require(prob.left.kind != BoundaryPolicy2D::Kind::Reflective &&
                    prob.right.kind != BoundaryPolicy2D::Kind::Reflective &&
                    prob.top.kind != BoundaryPolicy2D::Kind::Reflective,
                "Solver2D: reflective walls are only supported on the bottom edge");
        bottom_reflective_ = prob.bottom.kind == BoundaryPolicy2D::Kind::Reflective;
        cell_jlo_ = bottom_reflective_ ? -1 : 0;
        weights_.resize(num_nodes());
        for (int j = 0; j <= ny_(); ++j) {
            double wy = grid_.y.dual_measures[j];
            if (bottom_reflective_ && j == 0) wy = grid_.y.cell_widths[0];
            for (int i = 0; i <= nx_(); ++i)
                weights_[index(i, j)] = grid_.x.dual_measures[i] * wy;
        }
    }

    const Grid2D& grid() const { return grid_; }
    const std::vector<double>& node_weights() const { return weights_; }
    int index(int i, int j) const { return j * (nx_() + 1) + i; }
    int num_nodes() const { return (nx_() + 1) * (ny_() + 1); }

    std::vector<Vec> initial_state() const {
        std::vector<Vec> u(num_nodes());
        for (int j = 0; j <= ny_(); ++j)
            for (int i = 0; i <= nx_(); ++i)
                u[index(i, j)] = prob_.initial(grid_.x.nodes[i], grid_.y.nodes[j]);
        pin(u);
        return u;
    }

    void pin(std::vector<Vec>& u) const {
        using Kind = BoundaryPolicy2D::Kind;
        if (prob_.left.kind == Kind::Dirichlet)
            for (int j = 0; j <= ny_(); ++j)
                u[index(0, j)] = prob_.left.value(grid_.x.nodes[0], grid_.y.nodes[j]);
        if (prob_.right.kind == Kind::Dirichlet)
            for (int j = 0; j <= ny_(); ++j)
                u[index(nx_(), j)] =
                    prob_.right.value(grid_.x.nodes[nx_()], grid_.y.nodes[j]);
        if (prob_.bottom.kind == Kind::Dirichlet)
            for (int i = 0; i <= nx_(); ++i)
                u[index(i, 0)] = prob_.bottom.value(grid_.x.nodes[i], grid_.y.nodes[0]);
        if (prob_.top.kind == Kind::Dirichlet)
            for (int i = 0; i <= nx_(); ++i)
                u[index(i, ny_())] =
                    prob_.top.value(grid_.x.nodes[i], grid_.y.nodes[ny_()]);
    }

    std::vector<Vec> assemble_rates(const std::vector<Vec>& u) const {
        const int nx = nx_();
        const int ny = ny_();
        const int m = prob_.law->components();
        std::vector<Vec> rates(num_nodes(), Vec(m));
        auto at = [&](int i, int j) -> Vec {
            if (j < 0) return prob_.bottom.mirror(u[index(i, -j)]);
            return u[index(i, j)];
        };
        const double dx = grid_.x.cell_widths[0];
        const double dy = grid_.y.cell_widths[0];
        DistributionConfig dist = cfg_.dist;
        dist.fixed_direction = dist.fixed_direction || prob_.fixed_direction;
        for (int cj = cell_jlo_; cj < ny; ++cj) {
            const double yl = grid_.y.nodes.front() + cj * dy;
            for (int ci = 0; ci < nx; ++ci) {
                const double xl = grid_.x.nodes.front() + ci * dx;
                const Vec phi = total_residual_2d(*prob_.law, grid_, at, ci, cj,
                                                  cfg_.dist.weno, 0, cell_jlo_);
                const std::array<Vec, 4> vertices = {at(ci + 1, cj + 1), at(ci + 1, cj),
                                                     at(ci, cj + 1), at(ci, cj)};
                const auto d = distribute_cell_2d(*prob_.law, phi, vertices, xl,
                                                  xl + dx, yl, yl + dy, dist);
                // Vertex order M1..M4; ghost targets are dropped.
                if (cj + 1 >= 0) {
                    rates[index(ci + 1, cj + 1)] -= d.parts[0];
                    rates[index(ci, cj + 1)] -= d.parts[2];
                }
                if (cj >= 0) {
                    rates[index(ci + 1, cj)] -= d.parts[1];
                    rates[index(ci, cj)] -= d.parts[3];
                }
            }
        }
        for (int k = 0; k < num_nodes(); ++k) rates[k] *= 1.0 / weights_[k];
        using Kind = BoundaryPolicy2D::Kind;
        if (prob_.left.kind == Kind::Dirichlet)
            for (int j = 0; j <= ny; ++j) rates[index(0, j)] = Vec(m);
        if (prob_.right.kind == Kind::Dirichlet)
            for (int j = 0; j <= ny; ++j) rates[index(nx, j)] = Vec(m);
        if (prob_.bottom.kind == Kind::Dirichlet)
            for (int i = 0; i <= nx; ++i) rates[index(i, 0)] = Vec(m);
        if (prob_.top.kind == Kind::Dirichlet)
            for (int i = 0; i <= nx; ++i) rates[index(i, ny)] = Vec(m);
        return rates;
    }

    double compute_dt(const std::vector<Vec>& u) const {
        double speed = 0;
        for (int j = 0; j <= ny_(); ++j)
            for (int i = 0; i <= nx_(); ++i)
                speed = std::max(speed, prob_.law->max_wave_speed(
                                            u[index(i, j)], grid_.x.nodes[i],
                                            grid_.y.nodes[j]));
        const double measure = std::min(grid_.x.cell_widths[0], grid_.y.cell_widths[0]);
        return cfg_.cfl * measure / (speed + 1e-14);
    }

    Result2D march() const {
        Result2D res;
        res.grid = grid_;
        res.state = initial_state();
        double t = 0;
        double initial_residue = -1;
        for (long iter = 0; iter <= cfg_.max_iters; ++iter) {
            const auto rates = assemble_rates(res.state);
            const double r = l1_residue(rates, weights_);
            res.history.push_back({iter, t, r});
            if (!std::isfinite(r))
                throw SolverDivergence(prob_.name + ": non-finite residue at iteration " +
                                       std::to_string(iter));
            if (initial_residue < 0) initial_residue = r;
            if (r > 1e6 * (initial_residue + 1e-300))
                throw SolverDivergence(prob_.name + ": residue blow-up at iteration " +
                                       std::to_string(iter));
            if (r <= cfg_.residue_tol) {
                res.converged = true;
                break;
            }
            if (iter == cfg_.max_iters) break;

            const double dt = compute_dt(res.state);
            res.state = rk3_step_from(
                res.state, rates,
                [&](const std::vector<Vec>& w) { return assemble_rates(w); }, dt,
                [&](std::vector<Vec>& w) { pin(w); });
            t += dt;
        }
        return res;
    }

private:
    int nx_() const { return grid_.nx(); }
    int ny_() const { return grid_.ny(); }

    const Problem2D& prob_;
    SolverConfig cfg_;
    Grid2D grid_;
    bool bottom_reflective_ = false;
    int cell_jlo_ = 0;
    std::vector<double> weights_;
};

inline Result2D march_to_steady_2d(const Problem2D& prob, int nx, int ny,
                                   const SolverConfig& cfg = {}) {
    return Solver2D(prob, nx, ny, cfg).march();
}

}  // namespace rdweno
