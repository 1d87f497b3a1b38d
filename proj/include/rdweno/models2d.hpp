// Two-dimensional benchmark models: rotated Burgers, shear Burgers, the
// self-similar Cauchy-Riemann system, and the Euler equations.
#pragma once

#include <cmath>
#include <functional>
#include <sstream>

#include "rdweno/law.hpp"
#include "rdweno/models1d.hpp"

namespace rdweno {

// u_t + (u^2 / (2 sqrt(2)))_x + (u^2 / (2 sqrt(2)))_y = s(u, x, y)
class RotatedBurgersLaw final : public ScalarLaw2D {
public:
    explicit RotatedBurgersLaw(std::function<double(double, double, double)> src)
        : src_(std::move(src)) {}

    double f(double u, double, double) const override { return u * u / (2 * std::sqrt(2.0)); }
    double g(double u, double x, double y) const override { return f(u, x, y); }
    double df(double u, double, double) const override { return u / std::sqrt(2.0); }
    double dg(double u, double x, double y) const override { return df(u, x, y); }
    double s(double u, double x, double y) const override { return src_(u, x, y); }

private:
    std::function<double(double, double, double)> src_;
};

// u_t + (u^2/2)_x + u_y = 0
class ShearBurgersLaw final : public ScalarLaw2D {
public:
    double f(double u, double, double) const override { return 0.5 * u * u; }
    double g(double u, double, double) const override { return u; }
    double df(double u, double, double) const override { return u; }
    double dg(double, double, double) const override { return 1.0; }
};

// Self-similar Cauchy-Riemann system in (xi, eta):
//   d/dxi [(-xi I + A) W] + d/deta [(-eta I + B) W] = -2 W,
// with A = diag(1, -1), B = [[0,1],[1,0]]. Fluxes depend on position.
class CauchyRiemannLaw final : public ConservationLaw2D {
public:
    int components() const override { return 2; }

    Vec flux_x(const Vec& w, double x, double) const override {
        return {(1 - x) * w[0], -(1 + x) * w[1]};
    }
    Vec flux_y(const Vec& w, double, double y) const override {
        return {w[1] - y * w[0], w[0] - y * w[1]};
    }
    Vec source(const Vec& w, double, double) const override {
        return {-2 * w[0], -2 * w[1]};
    }

    EigenSystem eigen_in_direction(const Vec&, double nx, double ny, double x,
                                   double y) const override {
        // n . Jacobian = -(nx x + ny y) I + [[nx, ny], [ny, -nx]]
        const double shift = -(nx * x + ny * y);
        EigenSystem e{Mat(2), {shift + 1, shift - 1}, Mat(2)};
        double p0, p1, m0, m1;  // eigenvectors for +1 and -1 of the traceless part
        if (nx >= 0) {
            p0 = 1 + nx; p1 = ny;
            m0 = -ny;    m1 = 1 + nx;
        } else {
            p0 = ny;     p1 = 1 - nx;
            m0 = 1 - nx; m1 = -ny;
        }
        const double np = std::sqrt(p0 * p0 + p1 * p1);
        const double nm = std::sqrt(m0 * m0 + m1 * m1);
        Mat& R = e.right;
        R(0, 0) = p0 / np; R(0, 1) = m0 / nm;
        R(1, 0) = p1 / np; R(1, 1) = m1 / nm;
        const double det = R(0, 0) * R(1, 1) - R(0, 1) * R(1, 0);
        Mat& L = e.left;
        L(0, 0) = R(1, 1) / det;  L(0, 1) = -R(0, 1) / det;
        L(1, 0) = -R(1, 0) / det; L(1, 1) = R(0, 0) / det;
        return e;
    }

    double max_wave_speed(const Vec&, double x, double y) const override {
        return (std::abs(x) + 1) + (std::abs(y) + 1);
    }
};

// 2D compressible Euler, gamma-law gas.
class Euler2DLaw final : public ConservationLaw2D {
public:
    static double pressure(const Vec& u) {
        return (euler::kGamma - 1) *
               (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
    }

    static Vec conservative(double rho, double u, double v, double p) {
        return {rho, rho * u, rho * v,
                p / (euler::kGamma - 1) + 0.5 * rho * (u * u + v * v)};
    }

    int components() const override { return 4; }

    Vec flux_x(const Vec& u, double, double) const override {
        const double p = pressure(u);
        euler::check_admissible(u[0], p, "euler-2d flux_x");
        const double vx = u[1] / u[0];
        return {u[1], u[1] * vx + p, u[2] * vx, vx * (u[3] + p)};
    }

    Vec flux_y(const Vec& u, double, double) const override {
        const double p = pressure(u);
        euler::check_admissible(u[0], p, "euler-2d flux_y");
        const double vy = u[2] / u[0];
        return {u[2], u[1] * vy, u[2] * vy + p, vy * (u[3] + p)};
    }

    EigenSystem eigen_in_direction(const Vec& w, double nx, double ny, double,
                                   double) const override {
        const double g = euler::kGamma;
        const double rho = w[0];
        const double p = pressure(w);
        euler::check_admissible(rho, p, "euler-2d eigen");
        const double u = w[1] / rho;
        const double v = w[2] / rho;
        const double c = std::sqrt(g * p / rho);
        const double H = (w[3] + p) / rho;
        const double qn = u * nx + v * ny;
        const double qt = -u * ny + v * nx;
        const double q2 = u * u + v * v;
        const double b2 = (g - 1) / (c * c);
        const double b1 = 0.5 * b2 * q2;

        EigenSystem e{Mat(4), {qn - c, qn, qn, qn + c}, Mat(4)};
        Mat& R = e.right;
        R(0, 0) = 1;           R(0, 1) = 1;        R(0, 2) = 0;   R(0, 3) = 1;
        R(1, 0) = u - c * nx;  R(1, 1) = u;        R(1, 2) = -ny; R(1, 3) = u + c * nx;
        R(2, 0) = v - c * ny;  R(2, 1) = v;        R(2, 2) = nx;  R(2, 3) = v + c * ny;
        R(3, 0) = H - c * qn;  R(3, 1) = 0.5 * q2; R(3, 2) = qt;  R(3, 3) = H + c * qn;
        Mat& L = e.left;
        L(0, 0) = 0.5 * (b1 + qn / c);
        L(0, 1) = -0.5 * (b2 * u + nx / c);
        L(0, 2) = -0.5 * (b2 * v + ny / c);
        L(0, 3) = 0.5 * b2;
        L(1, 0) = 1 - b1;  L(1, 1) = b2 * u;  L(1, 2) = b2 * v;  L(1, 3) = -b2;
        L(2, 0) = -qt;     L(2, 1) = -ny;     L(2, 2) = nx;      L(2, 3) = 0;
        L(3, 0) = 0.5 * (b1 - qn / c);
        L(3, 1) = -0.5 * (b2 * u - nx / c);
        L(3, 2) = -0.5 * (b2 * v - ny / c);
        L(3, 3) = 0.5 * b2;
        return e;
    }

    double max_wave_speed(const Vec& w, double, double) const override {
        const double p = pressure(w);
        euler::check_admissible(w[0], p, "euler-2d wave speed");
        const double c = std::sqrt(euler::kGamma * p / w[0]);
        return (std::abs(w[1] / w[0]) + c) + (std::abs(w[2] / w[0]) + c);
    }

    void limiter_direction(const Vec& ubar, double& nx, double& ny) const override {
        const double u = ubar[1] / ubar[0];
        const double v = ubar[2] / ubar[0];
        const double speed = std::sqrt(u * u + v * v);
        if (speed < 1e-8) {
            nx = 1;
            ny = 0;
        } else {
            nx = u / speed;
            ny = v / speed;
        }
    }

    Vec average_state(const Vec* states, int count, AverageKind kind) const override {
        if (kind == AverageKind::Roe) {
            double sw = 0, su = 0, sv = 0, sh = 0, srho = 0;
            for (int k = 0; k < count; ++k) {
                const Vec& w = states[k];
                const double sq = std::sqrt(w[0]);
                const double p = pressure(w);
                sw += sq;
                su += w[1] / sq;
                sv += w[2] / sq;
                sh += (w[3] + p) / sq;
                srho += w[0];
            }
            const double u = su / sw;
            const double v = sv / sw;
            const double H = sh / sw;
            const double rho = srho / count;
            const double g = euler::kGamma;
            const double p = (H - 0.5 * (u * u + v * v)) * rho * (g - 1) / g;
            return conservative(rho, u, v, p);
        }
        return ConservationLaw2D::average_state(states, count, kind);
    }
};

}  // namespace rdweno
