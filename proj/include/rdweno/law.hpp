// Conservation-law descriptors: fluxes, sources, Jacobian eigen-structure.
#pragma once

#include <cmath>

#include "rdweno/small_matrix.hpp"

namespace rdweno {

// f'(u) = R diag(lambda) L with L the exact analytic inverse of R.
struct EigenSystem {
    Mat left;
    Vec lambda;
    Mat right;
};

enum class AverageKind { Arithmetic, Roe };

class ConservationLaw1D {
public:
    virtual ~ConservationLaw1D() = default;

    virtual int components() const = 0;
    virtual Vec flux(const Vec& u, double x) const = 0;
    virtual Vec source(const Vec& u, double x) const { (void)u; (void)x; return Vec(components()); }
    virtual EigenSystem eigen(const Vec& u, double x) const = 0;
    // Spectral radius of f'(u); used for alpha and the CFL condition.
    virtual double max_wave_speed(const Vec& u, double x) const = 0;

    // Cell-average state for the characteristic projection. Roe averaging is
    // only meaningful for Euler; the default is the arithmetic mean.
    virtual Vec average_state(const Vec* states, int count, AverageKind kind) const {
        (void)kind;
        Vec avg(components());
        for (int k = 0; k < count; ++k) avg += states[k];
        avg *= 1.0 / count;
        return avg;
    }
};

class ConservationLaw2D {
public:
    virtual ~ConservationLaw2D() = default;

    virtual int components() const = 0;
    virtual Vec flux_x(const Vec& u, double x, double y) const = 0;
    virtual Vec flux_y(const Vec& u, double x, double y) const = 0;
    virtual Vec source(const Vec& u, double x, double y) const {
        (void)u; (void)x; (void)y;
        return Vec(components());
    }
    // Eigen-structure of nx f'(u) + ny g'(u), |n| = 1.
    virtual EigenSystem eigen_in_direction(const Vec& u, double nx, double ny,
                                           double x, double y) const = 0;
    // rho(f') + rho(g'); used for alpha and the CFL condition.
    virtual double max_wave_speed(const Vec& u, double x, double y) const = 0;

    // Projection direction for the characteristic limiter.
    virtual void limiter_direction(const Vec& ubar, double& nx, double& ny) const {
        (void)ubar;
        nx = 1;
        ny = 0;
    }

    virtual Vec average_state(const Vec* states, int count, AverageKind kind) const {
        (void)kind;
        Vec avg(components());
        for (int k = 0; k < count; ++k) avg += states[k];
        avg *= 1.0 / count;
        return avg;
    }
};

// Scalar laws share the trivial eigen-structure L = R = 1.
class ScalarLaw1D : public ConservationLaw1D {
public:
    virtual double f(double u, double x) const = 0;
    virtual double df(double u, double x) const = 0;
    virtual double s(double u, double x) const { (void)u; (void)x; return 0; }

    int components() const final { return 1; }
    Vec flux(const Vec& u, double x) const final { return {f(u[0], x)}; }
    Vec source(const Vec& u, double x) const final { return {s(u[0], x)}; }
    EigenSystem eigen(const Vec& u, double x) const final {
        return {Mat::identity(1), Vec{df(u[0], x)}, Mat::identity(1)};
    }
    double max_wave_speed(const Vec& u, double x) const final {
        return std::abs(df(u[0], x));
    }
};

class ScalarLaw2D : public ConservationLaw2D {
public:
    virtual double f(double u, double x, double y) const = 0;
    virtual double g(double u, double x, double y) const = 0;
    virtual double df(double u, double x, double y) const = 0;
    virtual double dg(double u, double x, double y) const = 0;
    virtual double s(double u, double x, double y) const { (void)u; (void)x; (void)y; return 0; }

    int components() const final { return 1; }
    Vec flux_x(const Vec& u, double x, double y) const final { return {f(u[0], x, y)}; }
    Vec flux_y(const Vec& u, double x, double y) const final { return {g(u[0], x, y)}; }
    Vec source(const Vec& u, double x, double y) const final { return {s(u[0], x, y)}; }
    EigenSystem eigen_in_direction(const Vec& u, double nx, double ny, double x,
                                   double y) const final {
        return {Mat::identity(1), Vec{nx * df(u[0], x, y) + ny * dg(u[0], x, y)},
                Mat::identity(1)};
    }
    double max_wave_speed(const Vec& u, double x, double y) const final {
        return std::abs(df(u[0], x, y)) + std::abs(dg(u[0], x, y));
    }
};

}  // namespace rdweno
