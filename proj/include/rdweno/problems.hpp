// Benchmark problem registry: fully configured domains, initial and boundary
// data, and exact steady solutions where available.
#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rdweno/models1d.hpp"
#include "rdweno/models2d.hpp"
#include "rdweno/solver.hpp"

namespace rdweno {

using Problem = std::variant<Problem1D, Problem2D>;

inline const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {
        "burgers1d-smooth", "burgers1d-shock", "burgers1d-source",
        "shallow-water",    "nozzle",          "burgers2d-smooth",
        "burgers2d-source", "burgers2d-shear", "cauchy-riemann",
        "shock-reflection"};
    return names;
}

namespace problems {

inline Problem1D burgers1d(double beta) {
    Problem1D p;
    p.law = std::make_shared<BurgersTrigSource>();
    p.a = 0;
    p.b = M_PI;
    p.default_n = 80;
    p.initial = [beta](double x) { return Vec{beta * std::sin(x)}; };
    p.left = BoundaryPolicy1D::dirichlet(Vec{0.0});
    p.right = BoundaryPolicy1D::dirichlet(Vec{0.0});
    if (beta >= 1) {
        p.exact = [](double x) { return Vec{std::sin(x)}; };
    } else {
        // Shock between the sin and -sin branches; its abscissa follows from
        // mass conservation of the initial data.
        const double xs = M_PI - std::asin(std::sqrt(1 - beta * beta));
        p.shock_x = xs;
        p.exact = [xs](double x) {
            return Vec{x < xs ? std::sin(x) : -std::sin(x)};
        };
    }
    return p;
}

inline Problem1D burgers1d_solution_source() {
    Problem1D p;
    p.name = "burgers1d-source";
    p.law = std::make_shared<BurgersSolutionSource>();
    p.a = 0;
    p.b = 1;
    p.default_n = 80;
    p.initial = [](double x) { return Vec{x < 0.5 ? 1.0 : -0.1}; };
    p.left = BoundaryPolicy1D::dirichlet(Vec{1.0});
    p.right = BoundaryPolicy1D::dirichlet(Vec{-0.1});
    // Stable branch: the zero-speed shock connects 1 - sin(pi x) to
    // -0.1 - sin(pi x) where sin(pi x_s) = 0.45.
    const double xs = std::asin(0.45) / M_PI;
    p.shock_x = xs;
    p.exact = [xs](double x) {
        return Vec{x < xs ? 1 - std::sin(M_PI * x) : -0.1 - std::sin(M_PI * x)};
    };
    return p;
}

inline Problem1D shallow_water() {
    Problem1D p;
    p.name = "shallow-water";
    const double g = 9.8;
    auto bottom = [](double x) {
        return 5 * std::exp(-0.4 * (x - 5) * (x - 5));
    };
    auto bottom_slope = [bottom](double x) { return -0.8 * (x - 5) * bottom(x); };
    p.law = std::make_shared<ShallowWaterLaw>(g, bottom_slope);
    p.a = 0;
    p.b = 10;
    p.default_n = 80;
    p.exact = [bottom](double x) { return Vec{10 - bottom(x), 0.0}; };
    p.initial = p.exact;
    p.left = BoundaryPolicy1D::dirichlet(p.exact(0));
    p.right = BoundaryPolicy1D::dirichlet(p.exact(10));
    return p;
}

inline Problem1D nozzle() {
    Problem1D p;
    p.name = "nozzle";
    const NozzleGeometry geom;
    p.law = std::make_shared<QuasiOneDEulerLaw>(
        [geom](double x) { return geom.dlog_area(x); });
    p.a = 0;
    p.b = 1;
    p.default_n = 81;
    p.exact = [geom](double x) { return geom.exact_state(x); };
    p.initial = p.exact;
    p.left = BoundaryPolicy1D::dirichlet(p.exact(0));
    p.right = BoundaryPolicy1D::outflow();
    p.shock_x = geom.shock_x;
    return p;
}

inline Problem2D burgers2d_rotated_smooth(double beta) {
    Problem2D p;
    p.name = "burgers2d-smooth";
    const double s2 = std::sqrt(2.0);
    p.law = std::make_shared<RotatedBurgersLaw>([s2](double, double x, double y) {
        const double z = (x + y) / s2;
        return std::sin(z) * std::cos(z);
    });
    p.ax = {0, M_PI / s2, 80};
    p.ay = {0, M_PI / s2, 80};
    p.exact = [s2](double x, double y) { return Vec{std::sin((x + y) / s2)}; };
    p.initial = [beta, s2](double x, double y) {
        return Vec{beta * std::sin((x + y) / s2)};
    };
    p.left = p.right = p.bottom = p.top = BoundaryPolicy2D::dirichlet(p.exact);
    return p;
}

inline Problem2D burgers2d_solution_source() {
    Problem2D p;
    p.name = "burgers2d-source";
    const double s2 = std::sqrt(2.0);
    p.law = std::make_shared<RotatedBurgersLaw>([s2](double u, double x, double y) {
        return -M_PI * std::cos(M_PI * (x + y) / s2) * u;
    });
    p.ax = {0, 1 / s2, 80};
    p.ay = {0, 1 / s2, 80};
    const double xs = std::asin(0.45) / M_PI;  // stable branch
    p.exact = [s2, xs](double x, double y) {
        const double z = (x + y) / s2;
        return Vec{z < xs ? 1 - std::sin(M_PI * z) : -0.1 - std::sin(M_PI * z)};
    };
    p.initial = [s2](double x, double y) {
        return Vec{(x + y) / s2 < 0.5 ? 1.0 : -0.1};
    };
    p.left = p.right = p.bottom = p.top = BoundaryPolicy2D::dirichlet(p.exact);
    return p;
}

// Fan merging into a shock whose foot sits at (3/4, 1/2).
inline double shear_burgers_exact(double x, double y) {
    if (y >= 0.5) {
        return -2 * (x - 0.75) + (y - 0.5) <= 0 ? -0.5 : 1.5;
    }
    return std::max(-0.5, std::min(1.5, (x - 0.75) / (y - 0.5)));
}

inline Problem2D burgers2d_shear() {
    Problem2D p;
    p.name = "burgers2d-shear";
    p.law = std::make_shared<ShearBurgersLaw>();
    p.ax = {0, 1, 80};
    p.ay = {0, 1, 80};
    p.exact = [](double x, double y) { return Vec{shear_burgers_exact(x, y)}; };
    p.initial = [](double x, double) { return Vec{1.5 - 2 * x}; };
    p.bottom = BoundaryPolicy2D::dirichlet(
        [](double x, double) { return Vec{1.5 - 2 * x}; });
    p.left = BoundaryPolicy2D::dirichlet([](double, double) { return Vec{1.5}; });
    p.right = BoundaryPolicy2D::dirichlet([](double, double) { return Vec{-0.5}; });
    p.top = BoundaryPolicy2D::outflow();
    return p;
}

// Piecewise-constant self-similar fields; the case tables are read in the
// minimal consistent way.
inline Vec cauchy_riemann_exact(double x, double y) {
    double u, v;
    if (x > 1) {
        u = y > 1 ? 1 : -1;
    } else {
        u = y > 1 ? -1 : (y > -1 ? 1.5 : 1);
    }
    if (x > -1) {
        v = y > 1 ? 1 : -1;
    } else {
        v = y > 1 ? -1 : (y > -1 ? 1.5 : 2);
    }
    return {u, v};
}

inline Problem2D cauchy_riemann() {
    Problem2D p;
    p.name = "cauchy-riemann";
    p.law = std::make_shared<CauchyRiemannLaw>();
    p.ax = {-2, 2, 80};
    p.ay = {-2, 2, 80};
    p.exact = [](double x, double y) { return cauchy_riemann_exact(x, y); };
    p.initial = p.exact;
    p.left = p.right = p.bottom = p.top = BoundaryPolicy2D::dirichlet(p.exact);
    p.fixed_direction = true;
    return p;
}

inline Problem2D shock_reflection() {
    Problem2D p;
    p.name = "shock-reflection";
    p.law = std::make_shared<Euler2DLaw>();
    p.ax = {0, 4, 160};
    p.ay = {0, 1, 40};
    const Vec inflow = Euler2DLaw::conservative(1, 2.9, 0, 1 / euler::kGamma);
    const Vec post_shock =
        Euler2DLaw::conservative(1.69997, 2.61934, -0.50632, 1.52819);
    p.initial = [inflow, post_shock](double, double y) {
        return y > 1 - 1e-12 ? post_shock : inflow;
    };
    p.left = BoundaryPolicy2D::dirichlet(
        [inflow](double, double) { return inflow; });
    p.top = BoundaryPolicy2D::dirichlet(
        [post_shock](double, double) { return post_shock; });
    p.bottom = BoundaryPolicy2D::reflective([](const Vec& u) {
        return Vec{u[0], u[1], -u[2], u[3]};
    });
    p.right = BoundaryPolicy2D::outflow();
    return p;
}

}  // namespace problems

inline Problem registry_lookup(const std::string& name) {
    if (name == "burgers1d-smooth") {
        Problem1D p = problems::burgers1d(2.0);
        p.name = name;
        return p;
    }
    if (name == "burgers1d-shock") {
        Problem1D p = problems::burgers1d(0.5);
        p.name = name;
        return p;
    }
    if (name == "burgers1d-source") return problems::burgers1d_solution_source();
    if (name == "shallow-water") return problems::shallow_water();
    if (name == "nozzle") return problems::nozzle();
    if (name == "burgers2d-smooth") return problems::burgers2d_rotated_smooth(1.2);
    if (name == "burgers2d-source") return problems::burgers2d_solution_source();
    if (name == "burgers2d-shear") return problems::burgers2d_shear();
    if (name == "cauchy-riemann") return problems::cauchy_riemann();
    if (name == "shock-reflection") return problems::shock_reflection();
    std::string msg = "unknown problem '" + name + "'; valid names:";
    for (const auto& n : problem_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace rdweno
