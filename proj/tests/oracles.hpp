#pragma once

// Reference values computed with Boost's double-exponential quadrature,
// independent of the library's own Gauss-Kronrod code.

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.5772156649015329;

/// mu(x, 0, j) = int_0^inf x^(s+j) / Gamma(s+j+1) ds for x > 0, j >= -1.
inline double mu(double x, int j)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    const double lx = std::log(x);
    auto f = [&](double s) {
        const double e = (s + j) * lx - std::lgamma(s + j + 1.0);
        return e < -745.0 ? 0.0 : std::exp(e);
    };
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

/// Laplace form of the Volterra function: e^x + int_0^inf e^{-sx} / (log^2 s + pi^2) ds.
inline double volterra_I_laplace(double x)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double s) {
        const double l = std::log(s);
        return std::exp(-s * x) / (l * l + pi * pi);
    };
    return std::exp(x) + integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

/// int_a^b f by tanh-sinh.
template <class F>
double integrate(F f, double a, double b)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, 1e-13);
}

} // namespace oracle
