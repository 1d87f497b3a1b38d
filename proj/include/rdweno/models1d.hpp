// One-dimensional benchmark models: Burgers with source terms, shallow water
// with bathymetry, quasi-1D nozzle flow.
#pragma once

#include <cmath>
#include <functional>
#include <sstream>

#include "rdweno/law.hpp"

namespace rdweno {

// u_t + (u^2/2)_x = sin(x) cos(x)
class BurgersTrigSource final : public ScalarLaw1D {
public:
    double f(double u, double) const override { return 0.5 * u * u; }
    double df(double u, double) const override { return u; }
    double s(double, double x) const override { return std::sin(x) * std::cos(x); }
};

// u_t + (u^2/2)_x = -pi cos(pi x) u
class BurgersSolutionSource final : public ScalarLaw1D {
public:
    double f(double u, double) const override { return 0.5 * u * u; }
    double df(double u, double) const override { return u; }
    double s(double u, double x) const override {
        return -M_PI * std::cos(M_PI * x) * u;
    }
};

// (h, hu) with momentum source -g h b'(x).
class ShallowWaterLaw final : public ConservationLaw1D {
public:
    ShallowWaterLaw(double gravity, std::function<double(double)> bottom_slope)
        : g_(gravity), bprime_(std::move(bottom_slope)) {}

    double gravity() const { return g_; }

    int components() const override { return 2; }

    Vec flux(const Vec& u, double) const override {
        const double h = u[0];
        check(h);
        const double vel = u[1] / h;
        return {u[1], u[1] * vel + 0.5 * g_ * h * h};
    }

    Vec source(const Vec& u, double x) const override {
        return {0.0, -g_ * u[0] * bprime_(x)};
    }

    EigenSystem eigen(const Vec& u, double) const override {
        const double h = u[0];
        check(h);
        const double vel = u[1] / h;
        const double c = std::sqrt(g_ * h);
        EigenSystem e{Mat(2), {vel - c, vel + c}, Mat(2)};
        e.right(0, 0) = 1;        e.right(0, 1) = 1;
        e.right(1, 0) = vel - c;  e.right(1, 1) = vel + c;
        const double ic = 0.5 / c;
        e.left(0, 0) = (vel + c) * ic;  e.left(0, 1) = -ic;
        e.left(1, 0) = -(vel - c) * ic; e.left(1, 1) = ic;
        return e;
    }

    double max_wave_speed(const Vec& u, double) const override {
        check(u[0]);
        return std::abs(u[1] / u[0]) + std::sqrt(g_ * u[0]);
    }

private:
    static void check(double h) {
        if (!(h > 0)) {
            std::ostringstream os;
            os << "shallow water: nonpositive depth h = " << h;
            throw inadmissible_state(os.str());
        }
    }

    double g_;
    std::function<double(double)> bprime_;
};

namespace euler {

constexpr double kGamma = 1.4;

inline double pressure1d(const Vec& u) {
    return (kGamma - 1) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
}

inline void check_admissible(double rho, double p, const char* who) {
    if (!(rho > 0) || !(p > 0)) {
        std::ostringstream os;
        os << who << ": inadmissible state rho = " << rho << ", p = " << p;
        throw inadmissible_state(os.str());
    }
}

// Total-pressure ratio across a normal shock at Mach m1.
inline double shock_total_pressure_ratio(double m1) {
    const double g = kGamma;
    const double a = ((g + 1) * m1 * m1 / 2) / (1 + 0.5 * (g - 1) * m1 * m1);
    const double b = (g + 1) / (2 * g * m1 * m1 - (g - 1));
    return std::pow(a, g / (g - 1)) * std::pow(b, 1 / (g - 1));
}

inline double post_shock_mach(double m1) {
    const double d = 0.5 * (kGamma - 1);
    return std::sqrt((1 + d * m1 * m1) / (kGamma * m1 * m1 - d));
}

}  // namespace euler

// Quasi-1D Euler with geometric source -(A'/A) (rho u, rho u^2, u(E+p)).
class QuasiOneDEulerLaw final : public ConservationLaw1D {
public:
    explicit QuasiOneDEulerLaw(std::function<double(double)> aprime_over_a)
        : dloga_(std::move(aprime_over_a)) {}

    int components() const override { return 3; }

    Vec flux(const Vec& u, double) const override {
        const double p = euler::pressure1d(u);
        euler::check_admissible(u[0], p, "quasi-1d euler flux");
        const double vel = u[1] / u[0];
        return {u[1], u[1] * vel + p, vel * (u[2] + p)};
    }

    Vec source(const Vec& u, double x) const override {
        const double p = euler::pressure1d(u);
        euler::check_admissible(u[0], p, "quasi-1d euler source");
        const double vel = u[1] / u[0];
        const double r = -dloga_(x);
        return {r * u[1], r * u[1] * vel, r * vel * (u[2] + p)};
    }

    EigenSystem eigen(const Vec& u, double) const override {
        const double g = euler::kGamma;
        const double rho = u[0];
        const double p = euler::pressure1d(u);
        euler::check_admissible(rho, p, "quasi-1d euler eigen");
        const double vel = u[1] / rho;
        const double c = std::sqrt(g * p / rho);
        const double H = (u[2] + p) / rho;
        const double b2 = (g - 1) / (c * c);
        const double b1 = 0.5 * b2 * vel * vel;

        EigenSystem e{Mat(3), {vel - c, vel, vel + c}, Mat(3)};
        Mat& R = e.right;
        R(0, 0) = 1;               R(0, 1) = 1;              R(0, 2) = 1;
        R(1, 0) = vel - c;         R(1, 1) = vel;            R(1, 2) = vel + c;
        R(2, 0) = H - vel * c;     R(2, 1) = 0.5 * vel * vel; R(2, 2) = H + vel * c;
        Mat& L = e.left;
        L(0, 0) = 0.5 * (b1 + vel / c);
        L(0, 1) = -0.5 * (b2 * vel + 1 / c);
        L(0, 2) = 0.5 * b2;
        L(1, 0) = 1 - b1;
        L(1, 1) = b2 * vel;
        L(1, 2) = -b2;
        L(2, 0) = 0.5 * (b1 - vel / c);
        L(2, 1) = -0.5 * (b2 * vel - 1 / c);
        L(2, 2) = 0.5 * b2;
        return e;
    }

    double max_wave_speed(const Vec& u, double) const override {
        const double p = euler::pressure1d(u);
        euler::check_admissible(u[0], p, "quasi-1d euler wave speed");
        return std::abs(u[1] / u[0]) + std::sqrt(euler::kGamma * p / u[0]);
    }

    Vec average_state(const Vec* states, int count, AverageKind kind) const override {
        if (kind == AverageKind::Roe && count == 2) {
            const Vec& ul = states[0];
            const Vec& ur = states[1];
            const double sl = std::sqrt(ul[0]);
            const double sr = std::sqrt(ur[0]);
            const double w = 1.0 / (sl + sr);
            const double rho = sl * sr;
            const double vel = (ul[1] / sl + ur[1] / sr) * w;
            const double pl = euler::pressure1d(ul);
            const double pr = euler::pressure1d(ur);
            const double H = ((ul[2] + pl) / sl + (ur[2] + pr) / sr) * w;
            const double p = (H - 0.5 * vel * vel) * rho * (euler::kGamma - 1) / euler::kGamma;
            return {rho, rho * vel, p / (euler::kGamma - 1) + 0.5 * rho * vel * vel};
        }
        return ConservationLaw1D::average_state(states, count, kind);
    }

private:
    std::function<double(double)> dloga_;
};

// Mach-profile description of the converging-diverging nozzle benchmark:
// linear Mach from the inlet value to the pre-shock value on [0, x_shock),
// a normal shock, then linear to the outlet value on (x_shock, 1].
struct NozzleGeometry {
    double mach_inlet = 0.8;
    double mach_outlet = 1.8;
    double mach_pre_shock = 1.8;
    double shock_x = 0.5;

    double mach(double x) const {
        if (x < shock_x) {
            return mach_inlet + (mach_pre_shock - mach_inlet) * x / shock_x;
        }
        const double m2 = euler::post_shock_mach(mach_pre_shock);
        return m2 + (mach_outlet - m2) * (x - shock_x) / (1 - shock_x);
    }

    double mach_slope(double x) const {
        if (x < shock_x) return (mach_pre_shock - mach_inlet) / shock_x;
        return (mach_outlet - euler::post_shock_mach(mach_pre_shock)) / (1 - shock_x);
    }

    // A(x) f(M(x)) = const per branch with f(w) = w (1 + delta w^2)^-p.
    // Only A'/A enters the source: A'/A = -(f'/f)(M) M'(x).
    double dlog_area(double x) const {
        const double d = 0.5 * (euler::kGamma - 1);
        const double pexp = 0.5 * (euler::kGamma + 1) / (euler::kGamma - 1);
        const double m = mach(x);
        const double fp_over_f = 1 / m - 2 * pexp * d * m / (1 + d * m * m);
        return -fp_over_f * mach_slope(x);
    }

    // Nozzle profile function f(w); the constancy relation A f(M) = const.
    static double profile(double w) {
        const double d = 0.5 * (euler::kGamma - 1);
        const double pexp = 0.5 * (euler::kGamma + 1) / (euler::kGamma - 1);
        return w / std::pow(1 + d * w * w, pexp);
    }

    // Area normalized to A = 1 at the inlet.
    double area(double x) const {
        const double c1 = profile(mach_inlet);
        if (x < shock_x) return c1 / profile(mach(x));
        const double m2 = euler::post_shock_mach(mach_pre_shock);
        const double a_shock = c1 / profile(mach_pre_shock);
        const double c2 = a_shock * profile(m2);
        return c2 / profile(mach(x));
    }

    // Exact steady conservative state. Stagnation density and pressure are 1
    // upstream of the shock; the total pressure drops across the shock while
    // the total temperature is unchanged.
    Vec exact_state(double x) const {
        const double g = euler::kGamma;
        const double d = 0.5 * (g - 1);
        const double m = mach(x);
        double p0 = 1, rho0 = 1;
        if (x >= shock_x) {
            const double ratio = euler::shock_total_pressure_ratio(mach_pre_shock);
            p0 *= ratio;
            rho0 *= ratio;
        }
        const double t = 1 + d * m * m;
        const double p = p0 * std::pow(t, -g / (g - 1));
        const double rho = rho0 * std::pow(t, -1 / (g - 1));
        const double c = std::sqrt(g * p / rho);
        const double vel = m * c;
        return {rho, rho * vel, p / (g - 1) + 0.5 * rho * vel * vel};
    }
};

}  // namespace rdweno
