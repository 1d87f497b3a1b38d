#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdweno/problems.hpp"
#include "rdweno/solver.hpp"

using namespace rdweno;

TEST_CASE("RK3 single-step error on u' = -u: frozen value") {
    // Exact solution exp(-dt); the third-order step leaves dt^4/24 - O(dt^5).
    const std::vector<Vec> u0 = {Vec{1.0}};
    auto rate = [](const std::vector<Vec>& u) {
        return std::vector<Vec>{Vec{-u[0][0]}};
    };
    const auto u1 = rk3_step(u0, rate, 0.1);
    const double err = std::abs(u1[0][0] - std::exp(-0.1));
    CHECK(err == doctest::Approx(4.0847e-6).epsilon(1e-3));
    CHECK(err <= 5e-6);
}

TEST_CASE("RK3 reproduces third order in time") {
    auto advance = [](double dt, int steps) {
        std::vector<Vec> u = {Vec{1.0}};
        auto rate = [](const std::vector<Vec>& w) {
            return std::vector<Vec>{Vec{-w[0][0]}};
        };
        for (int k = 0; k < steps; ++k) u = rk3_step(u, rate, dt);
        return u[0][0];
    };
    const double e1 = std::abs(advance(0.1, 10) - std::exp(-1.0));
    const double e2 = std::abs(advance(0.05, 20) - std::exp(-1.0));
    CHECK(std::log2(e1 / e2) > 2.8);
}

TEST_CASE("L1 residue definition: weighted mean of component averages") {
    const std::vector<Vec> rates = {Vec{1.0, -3.0}, Vec{0.0, 2.0}};
    const std::vector<double> weights = {1.0, 3.0};
    // (1*(1+3)/2 + 3*(0+2)/2) / 4 = (2 + 3) / 4
    CHECK(l1_residue(rates, weights) == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("1D assembly conserves: weighted rates sum to boundary fluxes") {
    // With outflow at both ends nothing is pinned, so summing the
    // dual-measure-weighted rates must telescope to the negated sum of cell
    // residuals.
    Problem1D prob = problems::burgers1d(2.0);
    prob.left = BoundaryPolicy1D::outflow();
    prob.right = BoundaryPolicy1D::outflow();
    const Grid1D grid = build_grid_1d(prob.a, prob.b, 24);
    std::vector<Vec> u(grid.num_nodes());
    for (int i = 0; i < grid.num_nodes(); ++i) u[i] = prob.initial(grid.nodes[i]);

    const SolverConfig cfg;
    const auto rates = assemble_rates_1d(prob, grid, u, cfg);
    Vec sum(1);
    for (int i = 0; i < grid.num_nodes(); ++i)
        sum += grid.dual_measures[i] * rates[i];
    Vec phi_sum(1);
    auto at = [&](int i) -> const Vec& { return u[i]; };
    for (int c = 0; c < grid.num_cells(); ++c)
        phi_sum += total_residual_1d(*prob.law, grid, at, c, cfg.dist.weno);
    CHECK(max_abs(sum + phi_sum) < 1e-12);
}

TEST_CASE("steady state of smooth 1D Burgers is a near fixed point") {
    const Problem1D prob = problems::burgers1d(2.0);
    SolverConfig cfg;
    cfg.residue_tol = 1e-12;
    cfg.max_iters = 20000;
    const Result1D res = march_to_steady_1d(prob, 20, cfg);
    CHECK(res.converged);
    // Residues decrease monotonically in the tail.
    const double final = res.history.back().l1_residue;
    CHECK(final <= 1e-11);
    // Steady error is small against the exact solution.
    double linf = 0;
    for (int i = 0; i <= 20; ++i)
        linf = std::max(linf,
                        std::abs(res.state[i][0] - prob.exact(res.grid.nodes[i])[0]));
    CHECK(linf < 1e-3);
}

TEST_CASE("marching is deterministic") {
    const Problem1D prob = problems::burgers1d(2.0);
    SolverConfig cfg;
    cfg.max_iters = 200;
    cfg.residue_tol = 0;
    const Result1D a = march_to_steady_1d(prob, 16, cfg);
    const Result1D b = march_to_steady_1d(prob, 16, cfg);
    for (std::size_t i = 0; i < a.state.size(); ++i)
        CHECK(a.state[i][0] == b.state[i][0]);
    CHECK(a.history.back().l1_residue == b.history.back().l1_residue);
}

TEST_CASE("divergence is detected and reported") {
    Problem1D prob = problems::burgers1d(2.0);
    SolverConfig cfg;
    cfg.cfl = 50.0;  // grossly unstable on purpose
    cfg.max_iters = 5000;
    CHECK_THROWS_AS(march_to_steady_1d(prob, 16, cfg), std::exception);
}

TEST_CASE("2D assembly: zero rate on the exact constant state") {
    // Constant-state Dirichlet problem for the shear law: the discrete
    // operator must keep the constant exactly.
    Problem2D prob;
    prob.name = "constant";
    prob.law = std::make_shared<ShearBurgersLaw>();
    prob.ax = {0, 1, 8};
    prob.ay = {0, 1, 8};
    prob.initial = [](double, double) { return Vec{0.4}; };
    prob.left = prob.right = prob.bottom = prob.top =
        BoundaryPolicy2D::dirichlet([](double, double) { return Vec{0.4}; });
    SolverConfig cfg;
    Solver2D solver(prob, 8, 8, cfg);
    const auto u = solver.initial_state();
    const auto rates = solver.assemble_rates(u);
    for (const auto& r : rates) CHECK(std::abs(r[0]) < 1e-13);
}

TEST_CASE("2D smooth Burgers run reduces the residue") {
    const Problem2D prob = problems::burgers2d_rotated_smooth(1.2);
    SolverConfig cfg;
    cfg.max_iters = 400;
    cfg.residue_tol = 0;
    const Result2D res = march_to_steady_2d(prob, 12, 12, cfg);
    CHECK(res.history.back().l1_residue < 0.05 * res.history.front().l1_residue);
}

TEST_CASE("reflective wall: symmetric flow stays tangent") {
    // Uniform horizontal Euler flow over a straight wall is an exact steady
    // state of the mirrored-ghost discretization.
    Problem2D prob = problems::shock_reflection();
    const Vec inflow = Euler2DLaw::conservative(1, 2.9, 0, 1 / euler::kGamma);
    prob.initial = [inflow](double, double) { return inflow; };
    prob.top = BoundaryPolicy2D::dirichlet([inflow](double, double) { return inflow; });
    SolverConfig cfg;
    Solver2D solver(prob, 16, 8, cfg);
    const auto u = solver.initial_state();
    const auto rates = solver.assemble_rates(u);
    for (const auto& r : rates)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(r[c]) < 1e-11);
}
