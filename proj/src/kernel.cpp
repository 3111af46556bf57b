#include "volterra/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "volterra/errors.hpp"
#include "volterra/quadrature.hpp"

namespace volterra {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_tolerance(double rel_tol)
{
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw DomainError("kernel tolerance must lie in (0, 1e-2]");
}

// Position of x inside a uniform table: cell index j and offset t in [0,1].
std::pair<std::size_t, double> locate(const Kernel::Tabulated& t, double x)
{
    const std::size_t cells = t.samples.size() - 1;
    const double pos = x / t.step;
    std::size_t j = static_cast<std::size_t>(pos);
    if (j >= cells)
        j = cells - 1;
    return {j, pos - static_cast<double>(j)};
}

double table_value(const Kernel::Tabulated& t, double x)
{
    auto [j, w] = locate(t, x);
    return (1.0 - w) * t.samples[j] + w * t.samples[j + 1];
}

// Exact integral of the interpolant (or of s times the interpolant) over [0,x].
double table_integral(const Kernel::Tabulated& t, double x, bool moment)
{
    auto [j, w] = locate(t, x);
    double acc = 0.0;
    auto cell = [&](double a, double b, double va, double vb) {
        if (!moment)
            return 0.5 * (b - a) * (va + vb);
        const double m = 0.5 * (a + b);
        return (b - a) / 6.0 * (a * va + 4.0 * m * 0.5 * (va + vb) + b * vb);
    };
    for (std::size_t k = 0; k < j; ++k)
        acc += cell(k * t.step, (k + 1) * t.step, t.samples[k], t.samples[k + 1]);
    const double a = j * t.step;
    return acc + cell(a, x, t.samples[j], table_value(t, x));
}

} // namespace

Kernel Kernel::volterra(double rel_tol)
{
    check_tolerance(rel_tol);
    return Kernel(VolterraI{}, rel_tol);
}

Kernel Kernel::abel(double alpha, double rel_tol)
{
    check_tolerance(rel_tol);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("Abel kernel exponent must lie in (0, 1)");
    return Kernel(Abel{alpha, std::tgamma(alpha)}, rel_tol);
}

Kernel Kernel::log_sonine()
{
    return Kernel(LogSonine{}, kDefaultTolerance);
}

Kernel Kernel::tabulated(double step, std::vector<double> samples)
{
    if (!(step > 0.0) || samples.size() < 2)
        throw DomainError("tabulated kernel needs a positive step and at least two samples");
    for (double v : samples)
        if (!std::isfinite(v))
            throw DomainError("tabulated kernel samples must be finite");
    return Kernel(Tabulated{step, std::move(samples)}, kDefaultTolerance);
}

KernelKind Kernel::kind() const
{
    return std::visit(overloaded{
                          [](const VolterraI&) { return KernelKind::volterra_i; },
                          [](const Abel&) { return KernelKind::abel; },
                          [](const LogSonine&) { return KernelKind::log_sonine; },
                          [](const Tabulated&) { return KernelKind::tabulated; },
                      },
                      v_);
}

std::string Kernel::name() const
{
    return std::visit(overloaded{
                          [](const VolterraI&) { return std::string("volterra-i"); },
                          [](const Abel& a) {
                              std::ostringstream os;
                              os << "abel(" << a.alpha << ")";
                              return os.str();
                          },
                          [](const LogSonine&) { return std::string("log-sonine"); },
                          [](const Tabulated&) { return std::string("tabulated"); },
                      },
                      v_);
}

double Kernel::alpha() const
{
    if (auto* a = std::get_if<Abel>(&v_))
        return a->alpha;
    return std::numeric_limits<double>::quiet_NaN();
}

double Kernel::domain_end() const
{
    if (auto* t = std::get_if<Tabulated>(&v_))
        return t->step * static_cast<double>(t->samples.size() - 1);
    if (std::holds_alternative<VolterraI>(v_))
        return kMaxArgument;
    return std::numeric_limits<double>::infinity();
}

double Kernel::value(double x) const
{
    if (!(x > 0.0))
        throw DomainError("kernel evaluated at a non-positive point");
    if (x > domain_end())
        throw DomainError("kernel evaluated beyond its domain");
    return std::visit(overloaded{
                          [&](const VolterraI&) { return volterra_I(x, rel_tol_); },
                          [&](const Abel& a) { return std::pow(x, a.alpha - 1.0) / a.gamma_alpha; },
                          [&](const LogSonine&) { return -kEulerGamma - std::log(x); },
                          [&](const Tabulated& t) { return table_value(t, x); },
                      },
                      v_);
}

double Kernel::integral(double x) const
{
    if (!(x >= 0.0))
        throw DomainError("kernel integral needs x >= 0");
    if (x == 0.0)
        return 0.0;
    if (x > domain_end())
        throw DomainError("kernel integral beyond its domain");
    return std::visit(overloaded{
                          [&](const VolterraI&) { return volterra_N(x, rel_tol_); },
                          [&](const Abel& a) { return std::pow(x, a.alpha) / (a.alpha * a.gamma_alpha); },
                          [&](const LogSonine&) { return x * (1.0 - kEulerGamma - std::log(x)); },
                          [&](const Tabulated& t) { return table_integral(t, x, false); },
                      },
                      v_);
}

double Kernel::first_moment(double x) const
{
    if (!(x >= 0.0))
        throw DomainError("kernel moment needs x >= 0");
    if (x == 0.0)
        return 0.0;
    if (x > domain_end())
        throw DomainError("kernel moment beyond its domain");
    return std::visit(
        overloaded{
            [&](const VolterraI&) { return volterra_first_moment(x, rel_tol_); },
            [&](const Abel& a) {
                return std::pow(x, a.alpha + 1.0) / ((a.alpha + 1.0) * a.gamma_alpha);
            },
            [&](const LogSonine&) { return x * x * (0.25 - 0.5 * kEulerGamma - 0.5 * std::log(x)); },
            [&](const Tabulated& t) { return table_integral(t, x, true); },
        },
        v_);
}

double Kernel::first_moment_by_parts(double x) const
{
    if (!(x >= 0.0))
        throw DomainError("kernel moment needs x >= 0");
    if (x == 0.0)
        return 0.0;
    quad::Options opt;
    opt.rel_tol = std::max(rel_tol_, 1e-12);
    auto n = [this](double s) { return integral(s); };
    return x * integral(x) - quad::integrate(n, 0.0, x, opt).value;
}

bool Kernel::positive_on(double horizon) const
{
    return std::visit(overloaded{
                          [](const VolterraI&) { return true; },
                          [](const Abel&) { return true; },
                          [&](const LogSonine&) { return horizon < std::exp(-kEulerGamma); },
                          [&](const Tabulated& t) {
                              const auto last = std::min<std::size_t>(
                                  t.samples.size() - 1,
                                  static_cast<std::size_t>(std::ceil(horizon / t.step)));
                              // the value at 0 only matters through interpolation
                              // on the first cell, which stays positive if the
                              // sample at step is positive and the one at 0 is not negative
                              if (t.samples[0] < 0.0)
                                  return false;
                              for (std::size_t k = 1; k <= last; ++k)
                                  if (!(t.samples[k] > 0.0))
                                      return false;
                              return true;
                          },
                      },
                      v_);
}

bool Kernel::smooth_away_from_origin() const
{
    return !std::holds_alternative<Tabulated>(v_);
}

double Kernel::decreasing_until() const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [](const VolterraI&) { return volterra_I_argmin(); },
                          [](const Abel&) { return inf; },
                          [](const LogSonine&) { return inf; },
                          [](const Tabulated& t) {
                              for (std::size_t k = 0; k + 1 < t.samples.size(); ++k)
                                  if (t.samples[k + 1] > t.samples[k])
                                      return static_cast<double>(k) * t.step;
                              return inf;
                          },
                      },
                      v_);
}

} // namespace volterra
