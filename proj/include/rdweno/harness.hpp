// Benchmark harness: error norms, observed orders, shock location, CSV
// emission, and single-run orchestration.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rdweno/problems.hpp"
#include "rdweno/solver.hpp"

namespace rdweno {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Norms {
    double l1 = 0;
    double linf = 0;
};

// Dual-measure-weighted L1 and pointwise Linf of one component's error.
inline Norms error_norms(const std::vector<Vec>& state,
                         const std::vector<Vec>& exact,
                         const std::vector<double>& weights, int component = 0) {
    Norms n;
    double total_weight = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double e = std::abs(state[i][component] - exact[i][component]);
        n.l1 += weights[i] * e;
        n.linf = std::max(n.linf, e);
        total_weight += weights[i];
    }
    n.l1 /= total_weight;
    return n;
}

// Midpoint of the cell with the largest state increment; no shock when the
// largest jump does not clear 10x the median increment.
inline std::optional<double> shock_locator(const std::vector<double>& values,
                                           const std::vector<double>& nodes) {
    const std::size_t n = values.size();
    require(n >= 2 && nodes.size() == n, "shock_locator: need matching 1D data");
    std::vector<double> jumps(n - 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        jumps[i] = std::abs(values[i + 1] - values[i]);
        if (jumps[i] > jumps[best]) best = i;
    }
    std::vector<double> sorted = jumps;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    if (jumps[best] <= 10 * median) return std::nullopt;
    return 0.5 * (nodes[best] + nodes[best + 1]);
}

namespace detail {

inline std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace detail

inline void write_residue_csv(const ResidueHistory& hist, const std::string& path) {
    auto out = detail::open_out(path);
    out << "iter,pseudo_time,l1_residue\n";
    for (const auto& h : hist)
        out << h.iter << ',' << detail::fmt17(h.pseudo_time) << ','
            << detail::fmt17(h.l1_residue) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

inline void write_solution_csv_1d(const Grid1D& grid, const std::vector<Vec>& state,
                                  const std::string& path) {
    auto out = detail::open_out(path);
    out << "x";
    for (int c = 0; c < state.front().size(); ++c) out << ",comp" << c;
    out << '\n';
    for (std::size_t i = 0; i < state.size(); ++i) {
        out << detail::fmt17(grid.nodes[i]);
        for (int c = 0; c < state[i].size(); ++c)
            out << ',' << detail::fmt17(state[i][c]);
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

// Row-major over nodes (y outer, x inner), 17 significant digits.
inline void contour_dump(const std::vector<Vec>& state, const Grid2D& grid,
                         const std::string& path) {
    auto out = detail::open_out(path);
    out << "x,y";
    for (int c = 0; c < state.front().size(); ++c) out << ",comp" << c;
    out << '\n';
    for (int j = 0; j <= grid.ny(); ++j)
        for (int i = 0; i <= grid.nx(); ++i) {
            const Vec& u = state[j * (grid.nx() + 1) + i];
            out << detail::fmt17(grid.x.nodes[i]) << ','
                << detail::fmt17(grid.y.nodes[j]);
            for (int c = 0; c < u.size(); ++c) out << ',' << detail::fmt17(u[c]);
            out << '\n';
        }
    if (!out) throw IoError("write failed: " + path);
}

// Extract the row nearest to the requested y value.
inline std::vector<double> cross_section(const Result2D& res, double y,
                                         int component = 0) {
    const int nx = res.grid.nx();
    int jbest = 0;
    for (int j = 0; j <= res.grid.ny(); ++j)
        if (std::abs(res.grid.y.nodes[j] - y) <
            std::abs(res.grid.y.nodes[jbest] - y))
            jbest = j;
    std::vector<double> row(nx + 1);
    for (int i = 0; i <= nx; ++i) row[i] = res.state[jbest * (nx + 1) + i][component];
    return row;
}

struct ConvergenceRow {
    int n = 0;
    Norms norms;
    double order_l1 = std::nan("");
    double order_linf = std::nan("");
};

inline void fill_orders(std::vector<ConvergenceRow>& rows) {
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].n == 2 * rows[k - 1].n) {
            rows[k].order_l1 = std::log2(rows[k - 1].norms.l1 / rows[k].norms.l1);
            rows[k].order_linf =
                std::log2(rows[k - 1].norms.linf / rows[k].norms.linf);
        }
    }
}

// Run each level to steady state and report errors and observed orders for
// the given component (h for shallow water, density for Euler).
inline std::vector<ConvergenceRow> convergence_study(const Problem& prob,
                                                     const std::vector<int>& levels,
                                                     const SolverConfig& cfg = {},
                                                     int component = 0) {
    std::vector<ConvergenceRow> rows;
    for (int n : levels) {
        ConvergenceRow row;
        row.n = n;
        if (const auto* p1 = std::get_if<Problem1D>(&prob)) {
            require(static_cast<bool>(p1->exact),
                    "convergence_study: problem has no exact solution");
            const Result1D res = march_to_steady_1d(*p1, n, cfg);
            std::vector<Vec> exact(res.state.size());
            for (std::size_t i = 0; i < exact.size(); ++i)
                exact[i] = p1->exact(res.grid.nodes[i]);
            row.norms = error_norms(res.state, exact, res.grid.dual_measures, component);
        } else {
            const auto& p2 = std::get<Problem2D>(prob);
            require(static_cast<bool>(p2.exact),
                    "convergence_study: problem has no exact solution");
            Solver2D solver(p2, n, n, cfg);
            const Result2D res = solver.march();
            std::vector<Vec> exact(res.state.size());
            for (int j = 0; j <= res.grid.ny(); ++j)
                for (int i = 0; i <= res.grid.nx(); ++i)
                    exact[j * (res.grid.nx() + 1) + i] =
                        p2.exact(res.grid.x.nodes[i], res.grid.y.nodes[j]);
            row.norms = error_norms(res.state, exact, solver.node_weights(), component);
        }
        rows.push_back(row);
    }
    fill_orders(rows);
    return rows;
}

inline std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof(line), "%8s %13s %7s %13s %7s\n", "N", "L1 error",
                  "Order", "Linf error", "Order");
    os << line;
    for (const auto& r : rows) {
        if (std::isnan(r.order_l1)) {
            std::snprintf(line, sizeof(line), "%8d %13.4e %7s %13.4e %7s\n", r.n,
                          r.norms.l1, "-", r.norms.linf, "-");
        } else {
            std::snprintf(line, sizeof(line), "%8d %13.4e %7.2f %13.4e %7.2f\n",
                          r.n, r.norms.l1, r.order_l1, r.norms.linf, r.order_linf);
        }
        os << line;
    }
    return os.str();
}

inline void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                                  const std::string& path) {
    auto out = detail::open_out(path);
    out << "n,l1_error,l1_order,linf_error,linf_order\n";
    for (const auto& r : rows) {
        out << r.n << ',' << detail::fmt17(r.norms.l1) << ','
            << (std::isnan(r.order_l1) ? "" : detail::fmt17(r.order_l1)) << ','
            << detail::fmt17(r.norms.linf) << ','
            << (std::isnan(r.order_linf) ? "" : detail::fmt17(r.order_linf)) << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

struct RunReport {
    std::string problem;
    int nx = 0, ny = 0;
    bool two_d = false;
    std::optional<Norms> norms;
    double final_residue = 0;
    long iterations = 0;
    bool converged = false;
    std::optional<double> shock_location;
    double wall_seconds = 0;
};

struct RunOptions {
    std::string problem;
    int n = 0;   // 0: problem default
    int nx = 0, ny = 0;
    SolverConfig solver;
    std::string out_dir;  // empty: no files
};

inline RunReport run(const RunOptions& opt) {
    const Problem prob = registry_lookup(opt.problem);
    RunReport rep;
    rep.problem = opt.problem;
    const auto t0 = std::chrono::steady_clock::now();
    const bool want_files = !opt.out_dir.empty();
    if (want_files) std::filesystem::create_directories(opt.out_dir);
    auto path = [&](const char* f) { return opt.out_dir + "/" + f; };

    if (const auto* p1 = std::get_if<Problem1D>(&prob)) {
        rep.nx = opt.n > 0 ? opt.n : p1->default_n;
        const Result1D res = march_to_steady_1d(*p1, rep.nx, opt.solver);
        rep.final_residue = res.history.back().l1_residue;
        rep.iterations = res.history.back().iter;
        rep.converged = res.converged;
        if (p1->exact) {
            std::vector<Vec> exact(res.state.size());
            for (std::size_t i = 0; i < exact.size(); ++i)
                exact[i] = p1->exact(res.grid.nodes[i]);
            rep.norms = error_norms(res.state, exact, res.grid.dual_measures);
        }
        std::vector<double> comp0(res.state.size());
        for (std::size_t i = 0; i < comp0.size(); ++i) comp0[i] = res.state[i][0];
        rep.shock_location = shock_locator(comp0, res.grid.nodes);
        if (want_files) {
            write_solution_csv_1d(res.grid, res.state, path("solution.csv"));
            write_residue_csv(res.history, path("residue.csv"));
        }
    } else {
        const auto& p2 = std::get<Problem2D>(prob);
        rep.two_d = true;
        rep.nx = opt.nx > 0 ? opt.nx : (opt.n > 0 ? opt.n : p2.ax.n_cells);
        rep.ny = opt.ny > 0 ? opt.ny : (opt.n > 0 ? opt.n : p2.ay.n_cells);
        Solver2D solver(p2, rep.nx, rep.ny, opt.solver);
        const Result2D res = solver.march();
        rep.final_residue = res.history.back().l1_residue;
        rep.iterations = res.history.back().iter;
        rep.converged = res.converged;
        if (p2.exact) {
            std::vector<Vec> exact(res.state.size());
            for (int j = 0; j <= res.grid.ny(); ++j)
                for (int i = 0; i <= res.grid.nx(); ++i)
                    exact[j * (res.grid.nx() + 1) + i] =
                        p2.exact(res.grid.x.nodes[i], res.grid.y.nodes[j]);
            rep.norms = error_norms(res.state, exact, solver.node_weights());
        }
        if (want_files) {
            contour_dump(res.state, res.grid, path("contour.csv"));
            write_residue_csv(res.history, path("residue.csv"));
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

}  // namespace rdweno
