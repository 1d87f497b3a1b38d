#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdweno/grid.hpp"

using namespace rdweno;

TEST_CASE("uniform 1D grid nodes and measures") {
    const Grid1D g = build_grid_1d(0.0, 1.0, 10);
    CHECK(g.num_cells() == 10);
    CHECK(g.num_nodes() == 11);
    CHECK(g.nodes.front() == 0.0);
    CHECK(g.nodes.back() == 1.0);
    CHECK(g.is_uniform());
    for (int i = 0; i < 10; ++i)
        CHECK(g.cell_widths[i] == doctest::Approx(0.1).epsilon(1e-14));
    // Boundary duals are half cells, interior duals full cells.
    CHECK(g.dual_measures[0] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(g.dual_measures[10] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(g.dual_measures[5] == doctest::Approx(0.1).epsilon(1e-14));
    // Dual measures tile the domain.
    double sum = 0;
    for (double w : g.dual_measures) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("grid construction rejects bad input") {
    CHECK_THROWS_AS(build_grid_1d(1.0, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_1d(0.0, 1.0, 3), std::invalid_argument);
}

TEST_CASE("2D grid composes axes") {
    const Grid2D g = build_grid_2d({0, 4, 16}, {0, 1, 8});
    CHECK(g.nx() == 16);
    CHECK(g.ny() == 8);
    CHECK(g.x.cell_widths[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(g.y.cell_widths[0] == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(g.dual_area(0, 0) == doctest::Approx(0.125 * 0.0625).epsilon(1e-14));
    CHECK(g.dual_area(5, 4) == doctest::Approx(0.25 * 0.125).epsilon(1e-14));
    CHECK(g.area() == doctest::Approx(4.0).epsilon(1e-14));
}
