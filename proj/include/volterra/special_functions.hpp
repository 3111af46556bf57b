#pragma once

// Volterra-type special functions.
//
//   mu(x, 0, j) = int_0^inf x^(s+j) / Gamma(s+j+1) ds      (integer j >= -1)
//   I(x)        = mu(x, 0, -1)                             (Volterra function of order -1)
//   Ncal(x)     = mu(x, 0, 0) = int_0^x I                  (its integral function)
//   R(x)        = int_0^inf exp(-s x) / (s (log^2 s + pi^2)) ds   (Ramanujan function)
//
// with Ncal(x) = e^x - R(x). Near the origin I(x) ~ 1/(x log^2(1/x)) and
// Ncal(x) ~ 1/log(1/x); for large x, I(x) ~ e^x.

namespace volterra {

inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTolerance = 1e-9;

/// Largest argument accepted by the exponentially growing functions; e^x
/// overflows a double shortly after.
inline constexpr double kMaxArgument = 700.0;

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// mu(x, 0, order) for integer order >= -1 and x >= 0 (x > 0 when order = -1).
double volterra_mu(double x, int order, double rel_tol = kDefaultTolerance);

/// I(x), x > 0. Throws DomainError for x <= 0 or x > kMaxArgument.
double volterra_I(double x, double rel_tol = kDefaultTolerance);

/// Ncal(x) = int_0^x I, x >= 0, with Ncal(0) = 0.
double volterra_N(double x, double rel_tol = kDefaultTolerance);

/// First moment int_0^x s I(s) ds = int_0^inf x^(s+1) / ((s+1) Gamma(s)) ds.
double volterra_first_moment(double x, double rel_tol = kDefaultTolerance);

/// Ramanujan function R(x), x >= 0; R(0) = 1, completely monotonic.
double ramanujan_R(double x, double rel_tol = kDefaultTolerance);

/// Location of the positive minimum of the convex function I.
double volterra_I_argmin();

} // namespace volterra
