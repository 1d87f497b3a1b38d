#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rdweno/models1d.hpp"
#include "rdweno/models2d.hpp"

using namespace rdweno;

namespace {

double max_entry_diff(const Mat& a, const Mat& b) {
    double m = 0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

// Central-difference Jacobian of a flux map.
template <class F>
Mat fd_jacobian(F&& flux, const Vec& u, double h = 1e-6) {
    Mat j(u.size());
    for (int c = 0; c < u.size(); ++c) {
        Vec up = u, um = u;
        up[c] += h;
        um[c] -= h;
        const Vec fp = flux(up);
        const Vec fm = flux(um);
        for (int r = 0; r < u.size(); ++r) j(r, c) = (fp[r] - fm[r]) / (2 * h);
    }
    return j;
}

void check_eigen_consistency(const EigenSystem& e, const Mat& jac_fd,
                             double tol_inv, double tol_jac) {
    const Mat lr = e.left * e.right;
    CHECK(max_entry_diff(lr, Mat::identity(lr.size())) < tol_inv);
    const Mat jac = sandwich(e.right, e.lambda, e.left);
    CHECK(max_entry_diff(jac, jac_fd) < tol_jac);
}

}  // namespace

TEST_CASE("shallow water eigen-structure matches the flux Jacobian") {
    ShallowWaterLaw law(9.8, [](double) { return 0.0; });
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> hd(0.5, 12.0), vd(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double h = hd(rng), v = vd(rng);
        const Vec u{h, h * v};
        check_eigen_consistency(law.eigen(u, 0.0),
                                fd_jacobian([&](const Vec& w) { return law.flux(w, 0.0); }, u),
                                1e-12, 2e-5);
        CHECK(law.max_wave_speed(u, 0.0) ==
              doctest::Approx(std::abs(v) + std::sqrt(9.8 * h)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(law.flux(Vec{-1.0, 0.0}, 0.0), inadmissible_state);
}

TEST_CASE("shallow water source at rest balances the pressure gradient") {
    // For still water h = H - b the steady flux divergence (g h h_x) must
    // equal the source -g h b'; both reduce to -g h b' since h_x = -b'.
    auto b = [](double x) { return 5 * std::exp(-0.4 * (x - 5) * (x - 5)); };
    auto bp = [b](double x) { return -0.8 * (x - 5) * b(x); };
    ShallowWaterLaw law(9.8, bp);
    for (double x : {2.0, 4.5, 5.0, 6.25, 8.0}) {
        const double h = 10 - b(x);
        const Vec src = law.source(Vec{h, 0.0}, x);
        CHECK(src[0] == 0.0);
        CHECK(src[1] == doctest::Approx(-9.8 * h * bp(x)).epsilon(1e-13));
    }
}

TEST_CASE("quasi-1D Euler eigen-structure matches the flux Jacobian") {
    QuasiOneDEulerLaw law([](double) { return 0.0; });
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> rd(0.3, 3.0), vd(-2.0, 2.0), pd(0.2, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double rho = rd(rng), v = vd(rng), p = pd(rng);
        const Vec u{rho, rho * v, p / 0.4 + 0.5 * rho * v * v};
        check_eigen_consistency(law.eigen(u, 0.0),
                                fd_jacobian([&](const Vec& w) { return law.flux(w, 0.0); }, u),
                                1e-12, 2e-4);
    }
}

TEST_CASE("normal shock relations: frozen values") {
    CHECK(euler::post_shock_mach(1.8) ==
          doctest::Approx(0.6165012576937758).epsilon(1e-14));
    CHECK(euler::shock_total_pressure_ratio(1.8) ==
          doctest::Approx(0.8126837995986881).epsilon(1e-14));
    // Mach 1 shock is no shock.
    CHECK(euler::post_shock_mach(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(euler::shock_total_pressure_ratio(1.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("nozzle profile function: frozen values") {
    CHECK(NozzleGeometry::profile(1.0) ==
          doctest::Approx(0.5787037037037038).epsilon(1e-13));
    CHECK(NozzleGeometry::profile(0.8) ==
          doctest::Approx(0.5573945115279886).epsilon(1e-12));
    CHECK(NozzleGeometry::profile(1.8) ==
          doctest::Approx(0.40216186202043136).epsilon(1e-12));
}

TEST_CASE("nozzle exact state is steady: A rho u is constant") {
    const NozzleGeometry geom;
    auto mass_flux = [&](double x) {
        const Vec u = geom.exact_state(x);
        return geom.area(x) * u[1];
    };
    const double ref = mass_flux(0.0);
    for (double x : {0.1, 0.3, 0.49, 0.51, 0.7, 0.9, 1.0})
        CHECK(mass_flux(x) == doctest::Approx(ref).epsilon(1e-12));
    // Mach profile endpoints and shock jump.
    CHECK(geom.mach(0.0) == doctest::Approx(0.8));
    CHECK(geom.mach(0.5 - 1e-12) == doctest::Approx(1.8).epsilon(1e-9));
    CHECK(geom.mach(0.5) == doctest::Approx(0.6165012576937758).epsilon(1e-12));
    CHECK(geom.mach(1.0) == doctest::Approx(1.8));
}

TEST_CASE("2D Euler flux: frozen values at the inflow state") {
    const Vec u = Euler2DLaw::conservative(1.0, 2.9, 0.0, 1 / 1.4);
    CHECK(u[3] == doctest::Approx(5.990714285714286).epsilon(1e-14));
    Euler2DLaw law;
    const Vec fx = law.flux_x(u, 0, 0);
    CHECK(fx[0] == doctest::Approx(2.9).epsilon(1e-14));
    CHECK(fx[1] == doctest::Approx(9.124285714285714).epsilon(1e-14));
    CHECK(fx[2] == doctest::Approx(0.0));
    CHECK(fx[3] == doctest::Approx(19.4445).epsilon(1e-12));
    CHECK(Euler2DLaw::pressure(u) == doctest::Approx(1 / 1.4).epsilon(1e-14));
}

TEST_CASE("2D Euler directional eigen-structure matches the flux Jacobian") {
    Euler2DLaw law;
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> rd(0.3, 3.0), vd(-2.0, 2.0), pd(0.2, 4.0),
        ad(0.0, 2 * M_PI);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec u = Euler2DLaw::conservative(rd(rng), vd(rng), vd(rng), pd(rng));
        const double th = ad(rng);
        const double nx = std::cos(th), ny = std::sin(th);
        auto dirflux = [&](const Vec& w) {
            return nx * law.flux_x(w, 0, 0) + ny * law.flux_y(w, 0, 0);
        };
        check_eigen_consistency(law.eigen_in_direction(u, nx, ny, 0, 0),
                                fd_jacobian(dirflux, u), 1e-11, 2e-4);
    }
}

TEST_CASE("Cauchy-Riemann directional eigen-structure matches the fluxes") {
    CauchyRiemannLaw law;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> wd(-2.0, 2.0), xd(-2.0, 2.0),
        ad(0.0, 2 * M_PI);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec w{wd(rng), wd(rng)};
        const double x = xd(rng), y = xd(rng);
        const double th = ad(rng);
        const double nx = std::cos(th), ny = std::sin(th);
        auto dirflux = [&](const Vec& q) {
            return nx * law.flux_x(q, x, y) + ny * law.flux_y(q, x, y);
        };
        check_eigen_consistency(law.eigen_in_direction(w, nx, ny, x, y),
                                fd_jacobian(dirflux, w), 1e-12, 1e-8);
        // Unit wave speeds relative to the frame shift.
        const EigenSystem e = law.eigen_in_direction(w, nx, ny, x, y);
        const double shift = -(nx * x + ny * y);
        CHECK(e.lambda[0] == doctest::Approx(shift + 1).epsilon(1e-13));
        CHECK(e.lambda[1] == doctest::Approx(shift - 1).epsilon(1e-13));
    }
}

TEST_CASE("scalar adapters expose trivial eigen-structure") {
    BurgersTrigSource law;
    const EigenSystem e = law.eigen(Vec{0.7}, 0.3);
    CHECK(e.lambda[0] == doctest::Approx(0.7));
    CHECK(e.left(0, 0) == 1.0);
    CHECK(e.right(0, 0) == 1.0);
    CHECK(law.flux(Vec{0.7}, 0.0)[0] == doctest::Approx(0.245).epsilon(1e-14));
    CHECK(law.source(Vec{0.0}, M_PI / 4)[0] == doctest::Approx(0.5).epsilon(1e-13));
}
