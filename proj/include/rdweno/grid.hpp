// Structured 1D and 2D tensor-product grids with node-centered dual measures.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rdweno/common.hpp"

namespace rdweno {

// Nodes x_0..x_N with N cells. The dual control volume of node i runs from
// the midpoint of the left cell to the midpoint of the right cell.
struct Grid1D {
    std::vector<double> nodes;         // size N+1, strictly increasing
    std::vector<double> cell_widths;   // size N
    std::vector<double> dual_measures; // size N+1

    int num_cells() const { return static_cast<int>(cell_widths.size()); }
    int num_nodes() const { return static_cast<int>(nodes.size()); }
    double length() const { return nodes.back() - nodes.front(); }

    // Uniform spacing only; the quadrature closed forms require it.
    bool is_uniform(double rel_tol = 1e-12) const {
        const double dx = cell_widths.front();
        for (double w : cell_widths)
            if (std::abs(w - dx) > rel_tol * dx) return false;
        return true;
    }
};

inline Grid1D build_grid_1d(double a, double b, int n_cells) {
    require(b > a, "build_grid_1d: b must exceed a");
    require(n_cells >= 4, "build_grid_1d: need at least 4 cells for WENO stencils");
    Grid1D g;
    g.nodes.resize(n_cells + 1);
    const double dx = (b - a) / n_cells;
    for (int i = 0; i <= n_cells; ++i)
        g.nodes[i] = (i == n_cells) ? b : a + i * dx;
    g.cell_widths.resize(n_cells);
    for (int i = 0; i < n_cells; ++i)
        g.cell_widths[i] = g.nodes[i + 1] - g.nodes[i];
    g.dual_measures.resize(n_cells + 1);
    g.dual_measures[0] = 0.5 * g.cell_widths[0];
    g.dual_measures[n_cells] = 0.5 * g.cell_widths[n_cells - 1];
    for (int i = 1; i < n_cells; ++i)
        g.dual_measures[i] = 0.5 * (g.cell_widths[i - 1] + g.cell_widths[i]);
    return g;
}

struct Grid2D {
    Grid1D x;
    Grid1D y;

    int nx() const { return x.num_cells(); }
    int ny() const { return y.num_cells(); }
    double dual_area(int i, int j) const {
        return x.dual_measures[i] * y.dual_measures[j];
    }
    double area() const { return x.length() * y.length(); }
};

struct AxisSpec {
    double a;
    double b;
    int n_cells;
};

inline Grid2D build_grid_2d(const AxisSpec& ax, const AxisSpec& ay) {
    return Grid2D{build_grid_1d(ax.a, ax.b, ax.n_cells),
                  build_grid_1d(ay.a, ay.b, ay.n_cells)};
}

}  // namespace rdweno
