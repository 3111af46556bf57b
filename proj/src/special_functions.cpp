#include "volterra/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "volterra/errors.hpp"
#include "volterra/quadrature.hpp"

namespace volterra {

double digamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("digamma: argument must be positive and finite");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double f = 1.0 / (x * x);
    const double series =
        f * (1.0 / 12 - f * (1.0 / 120 - f * (1.0 / 252 - f * (1.0 / 240 - f * (1.0 / 132 - f * (691.0 / 32760))))));
    return acc + std::log(x) - 0.5 / x - series;
}

namespace {

void check_argument(double x, const char* who)
{
    if (std::isnan(x) || x > kMaxArgument)
        throw DomainError(std::string(who) + ": argument outside [0, " +
                          std::to_string(kMaxArgument) + "]");
}

quad::Options series_options(double rel_tol)
{
    quad::Options opt;
    opt.rel_tol = rel_tol;
    return opt;
}

} // namespace

double volterra_mu(double x, int order, double rel_tol)
{
    check_argument(x, "volterra_mu");
    if (order < -1)
        throw DomainError("volterra_mu: order must be >= -1");
    if (x < 0.0 || (order == -1 && x == 0.0))
        throw DomainError("volterra_mu: argument out of domain");
    if (x == 0.0)
        return 0.0;
    const double lx = std::log(x);
    const double shift = order + 1.0;
    auto log_f = [=](double s) { return (s + order) * lx - std::lgamma(s + shift); };
    auto dlog_f = [=](double s) { return lx - digamma(s + shift); };
    return quad::integrate_log_concave(log_f, dlog_f, 0.0, series_options(rel_tol)).value;
}

double volterra_I(double x, double rel_tol)
{
    if (!(x > 0.0))
        throw DomainError("volterra_I: x must be positive");
    return volterra_mu(x, -1, rel_tol);
}

double volterra_N(double x, double rel_tol)
{
    if (x < 0.0)
        throw DomainError("volterra_N: x must be nonnegative");
    return volterra_mu(x, 0, rel_tol);
}

double volterra_first_moment(double x, double rel_tol)
{
    check_argument(x, "volterra_first_moment");
    if (x < 0.0)
        throw DomainError("volterra_first_moment: x must be nonnegative");
    if (x == 0.0)
        return 0.0;
    // log[(s+1) Gamma(s)] = lgamma(s+2) - log(s) is convex, so the integrand
    // x^(s+1) / ((s+1) Gamma(s)) is log-concave.
    const double lx = std::log(x);
    auto log_f = [=](double s) { return (s + 1.0) * lx - std::log1p(s) - std::lgamma(s); };
    auto dlog_f = [=](double s) { return lx - 1.0 / (1.0 + s) - digamma(s); };
    return quad::integrate_log_concave(log_f, dlog_f, 0.0, series_options(rel_tol)).value;
}

double ramanujan_R(double x, double rel_tol)
{
    if (!(x >= 0.0) || !std::isfinite(x))
        throw DomainError("ramanujan_R: x must be nonnegative and finite");
    if (x == 0.0)
        return 1.0;

    // With u = log s the integral becomes int_R exp(-x e^u) / (u^2 + pi^2) du.
    // Left of u = -V (where x e^u <= 1) the factor exp(-x e^u) is written as
    // 1 - (1 - exp(-x e^u)); the first part integrates in closed form and the
    // remainder decays like e^u.
    constexpr double pi2 = kPi * kPi;
    auto body = [=](double u) { return std::exp(-x * std::exp(u)) / (u * u + pi2); };
    auto deficit = [=](double u) { return -std::expm1(-x * std::exp(u)) / (u * u + pi2); };

    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-5 * rel_tol;

    const double V = std::max(0.0, std::log(x));
    double value = std::atan(kPi / V) / kPi;
    value -= quad::integrate(deficit, -V - 40.0, -V, opt).value;
    if (V > 0.0)
        value += quad::integrate(body, -V, 0.0, opt).value;
    const double U = std::max(1.0, std::log(50.0 / x));
    value += quad::integrate(body, 0.0, U, opt).value;
    return value;
}

double volterra_I_argmin()
{
    static const double argmin = [] {
        // golden-section search; I is convex with its minimum well inside
        const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = 0.05, b = 3.0;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = volterra_I(c, 1e-13), fd = volterra_I(d, 1e-13);
        while (b - a > 1e-9) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = volterra_I(c, 1e-13);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = volterra_I(d, 1e-13);
            }
        }
        return 0.5 * (a + b);
    }();
    return argmin;
}

} // namespace volterra
