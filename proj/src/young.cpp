#include "volterra/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

constexpr double kInf = std::numeric_limits<double>::infinity();

double power_log_value(const YoungFunction::PowerLog& a, double x)
{
    if (x <= a.x0)
        return a.y0 * x / a.x0;
    return std::pow(x, a.p) * std::pow(std::log(x), a.gamma_log);
}

double power_log_slope(const YoungFunction::PowerLog& a, double x)
{
    if (x < a.x0)
        return a.y0 / a.x0;
    const double L = std::log(x);
    return std::pow(x, a.p - 1.0) * std::pow(L, a.gamma_log - 1.0) * (a.p * L + a.gamma_log);
}

// Solves p u + g log u = log y for u >= L0; the left side increases there.
double power_log_inverse(const YoungFunction::PowerLog& a, double y)
{
    if (y <= a.y0)
        return y * a.x0 / a.y0;
    const double target = std::log(y);
    auto F = [&](double u) { return a.p * u + a.gamma_log * std::log(u) - target; };
    double lo = std::log(a.x0);
    double hi = lo + 1.0;
    while (F(hi) < 0.0)
        hi = lo + 2.0 * (hi - lo);
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double fu = F(u);
        if (fu == 0.0)
            break;
        (fu < 0.0 ? lo : hi) = u;
        const double newton = u - fu / (a.p + a.gamma_log / u);
        u = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
        if (std::abs(fu) < 1e-15 * std::max(1.0, std::abs(target)))
            break;
    }
    return std::exp(u);
}

// Local exponent of the segment [i, i+1]; 1 when a value is zero (linear piece).
double segment_exponent(const YoungFunction::NumericMonotone& t, std::size_t i)
{
    if (t.y[i] <= 0.0 || t.y[i + 1] <= 0.0)
        return 1.0;
    return std::log(t.y[i + 1] / t.y[i]) / std::log(t.x[i + 1] / t.x[i]);
}

bool loglog(const YoungFunction::NumericMonotone& t, std::size_t i)
{
    return t.y[i] > 0.0 && t.y[i + 1] > 0.0;
}

std::size_t segment_of(const YoungFunction::NumericMonotone& t, double x)
{
    const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - t.x.begin());
    return std::clamp<std::size_t>(j, 1, t.x.size() - 1) - 1;
}

double numeric_value(const YoungFunction::NumericMonotone& t, double x)
{
    if (x <= 0.0)
        return 0.0;
    const std::size_t n = t.x.size();
    if (x < t.x[0]) {
        if (t.y[0] <= 0.0)
            return 0.0;
        return t.y[0] * std::pow(x / t.x[0], segment_exponent(t, 0));
    }
    const std::size_t i = segment_of(t, x);
    if (x > t.x[n - 1] && loglog(t, n - 2))
        return t.y[n - 1] * std::pow(x / t.x[n - 1], segment_exponent(t, n - 2));
    if (loglog(t, i))
        return t.y[i] * std::pow(x / t.x[i], segment_exponent(t, i));
    return t.y[i] + (t.y[i + 1] - t.y[i]) * (x - t.x[i]) / (t.x[i + 1] - t.x[i]);
}

double numeric_slope(const YoungFunction::NumericMonotone& t, double x)
{
    const std::size_t n = t.x.size();
    if (x < t.x[0]) {
        if (t.y[0] <= 0.0)
            return 0.0;
        const double b = segment_exponent(t, 0);
        if (x <= 0.0)
            return b > 1.0 ? 0.0 : (b == 1.0 ? t.y[0] / t.x[0] : kInf);
        return numeric_value(t, x) * b / x;
    }
    const std::size_t i = (x >= t.x[n - 1]) ? n - 2 : segment_of(t, x);
    if (loglog(t, i))
        return numeric_value(t, x) * segment_exponent(t, i) / x;
    return (t.y[i + 1] - t.y[i]) / (t.x[i + 1] - t.x[i]);
}

double numeric_inverse(const YoungFunction::NumericMonotone& t, double y)
{
    if (y <= 0.0)
        return 0.0;
    const std::size_t n = t.x.size();
    if (y < t.y[0])
        return t.x[0] * std::pow(y / t.y[0], 1.0 / segment_exponent(t, 0));
    if (y > t.y[n - 1]) {
        if (loglog(t, n - 2))
            return t.x[n - 1] * std::pow(y / t.y[n - 1], 1.0 / segment_exponent(t, n - 2));
        return t.x[n - 1] + (y - t.y[n - 1]) * (t.x[n - 1] - t.x[n - 2]) / (t.y[n - 1] - t.y[n - 2]);
    }
    // first node with y_j >= y, so y lies in (y_{j-1}, y_j]
    const auto it = std::lower_bound(t.y.begin(), t.y.end(), y);
    const std::size_t j = static_cast<std::size_t>(it - t.y.begin());
    if (j == 0)
        return t.x[0];
    const std::size_t i = j - 1;
    if (loglog(t, i))
        return t.x[i] * std::pow(y / t.y[i], 1.0 / segment_exponent(t, i));
    return t.x[i] + (y - t.y[i]) * (t.x[i + 1] - t.x[i]) / (t.y[i + 1] - t.y[i]);
}

} // namespace

YoungFunction YoungFunction::power(double p, double coefficient)
{
    if (!(p >= 1.0) || !std::isfinite(p) || !(coefficient > 0.0) || !std::isfinite(coefficient))
        throw DomainError("power Young function needs p >= 1 and a positive coefficient");
    return YoungFunction(Power{p, coefficient});
}

YoungFunction YoungFunction::power_log(double p, double gamma_log)
{
    if (!(p >= 1.0) || !std::isfinite(p) || !std::isfinite(gamma_log))
        throw DomainError("power-log Young function needs p >= 1");
    // With L = log x, convexity of x^p L^g reads
    //   Q(L) = p(p-1) L^2 + (2p-1) g L + g(g-1) >= 0
    // and A(x)/x increasing reads (p-1) L + g >= 0.
    double L0 = 1.0;
    if (p > 1.0) {
        const double a = p * (p - 1.0), b = (2.0 * p - 1.0) * gamma_log, c = gamma_log * (gamma_log - 1.0);
        const double disc = b * b - 4.0 * a * c;
        if (disc >= 0.0)
            L0 = std::max(L0, (-b + std::sqrt(disc)) / (2.0 * a));
        L0 = std::max(L0, -gamma_log / (p - 1.0));
    } else {
        if (gamma_log < 0.0)
            throw DomainError("x log^g x with g < 0 is not convex for large x");
        if (gamma_log > 0.0)
            L0 = std::max(L0, 1.0 - gamma_log);
    }
    const double x0 = std::exp(L0);
    const double y0 = std::pow(x0, p) * std::pow(L0, gamma_log);
    return YoungFunction(PowerLog{p, gamma_log, x0, y0});
}

YoungFunction YoungFunction::numeric(std::vector<double> x, std::vector<double> y)
{
    if (x.size() < 2 || x.size() != y.size())
        throw DomainError("numeric Young function needs at least two nodes");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]) || !(x[i] > 0.0) || y[i] < 0.0)
            throw DomainError("numeric Young function nodes must be finite, x > 0, y >= 0");
        if (i > 0 && (!(x[i] > x[i - 1]) || y[i] < y[i - 1] || (y[i - 1] > 0.0 && !(y[i] > y[i - 1]))))
            throw DomainError("numeric Young function table must be increasing");
    }
    if (!(y.back() > 0.0))
        throw DomainError("numeric Young function table is identically zero");
    return YoungFunction(NumericMonotone{std::move(x), std::move(y)});
}

double YoungFunction::operator()(double x) const
{
    if (!(x >= 0.0))
        throw DomainError("Young function argument must be nonnegative");
    if (x == 0.0)
        return 0.0;
    return std::visit(overloaded{
                          [&](const Power& a) { return a.coefficient * std::pow(x, a.p); },
                          [&](const PowerLog& a) { return power_log_value(a, x); },
                          [&](const NumericMonotone& t) { return numeric_value(t, x); },
                      },
                      v_);
}

double YoungFunction::slope(double x) const
{
    if (!(x >= 0.0))
        throw DomainError("Young function argument must be nonnegative");
    return std::visit(overloaded{
                          [&](const Power& a) {
                              if (x == 0.0)
                                  return a.p == 1.0 ? a.coefficient : 0.0;
                              return a.coefficient * a.p * std::pow(x, a.p - 1.0);
                          },
                          [&](const PowerLog& a) { return power_log_slope(a, x); },
                          [&](const NumericMonotone& t) { return numeric_slope(t, x); },
                      },
                      v_);
}

double YoungFunction::inverse(double y) const
{
    if (!(y >= 0.0))
        throw DomainError("Young function inverse needs a nonnegative argument");
    if (y == 0.0)
        return 0.0;
    return std::visit(overloaded{
                          [&](const Power& a) { return std::pow(y / a.coefficient, 1.0 / a.p); },
                          [&](const PowerLog& a) { return power_log_inverse(a, y); },
                          [&](const NumericMonotone& t) { return numeric_inverse(t, y); },
                      },
                      v_);
}

std::string YoungFunction::describe() const
{
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const Power& a) { os << a.coefficient << "*x^" << a.p; },
                   [&](const PowerLog& a) { os << "x^" << a.p << "*log^" << a.gamma_log << "(x)"; },
                   [&](const NumericMonotone& t) { os << "table(" << t.x.size() << " nodes)"; },
               },
               v_);
    return os.str();
}

bool YoungFunction::convex_on(double lo, double hi, std::size_t points, double tol) const
{
    if (!(lo > 0.0) || !(hi > lo) || points < 3)
        throw DomainError("convexity check needs 0 < lo < hi and at least three points");
    std::vector<double> x(points), y(points);
    for (std::size_t i = 0; i < points; ++i) {
        x[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(points - 1));
        y[i] = (*this)(x[i]);
    }
    for (std::size_t i = 1; i + 1 < points; ++i) {
        const double left = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
        const double right = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        if (right - left < -tol * std::max(std::abs(left), std::abs(right)))
            return false;
    }
    return true;
}

namespace {

bool superlinear(const YoungFunction& A)
{
    return std::visit(overloaded{
                          [](const YoungFunction::Power& a) { return a.p > 1.0; },
                          [](const YoungFunction::PowerLog& a) { return a.p > 1.0 || a.gamma_log > 0.0; },
                          [](const YoungFunction::NumericMonotone& t) {
                              return loglog(t, t.x.size() - 2) && segment_exponent(t, t.x.size() - 2) > 1.0;
                          },
                      },
                      A.variant());
}

// Smallest t with A'(t) >= s, by bisection in log t; NaN past the overflow cap.
double slope_preimage(const YoungFunction& A, double s)
{
    double lo = std::log(1e-300), hi = std::log(1e300);
    if (A.slope(std::exp(hi)) < s)
        return std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (A.slope(std::exp(mid)) >= s ? hi : lo) = mid;
    }
    return std::exp(hi);
}

} // namespace

YoungFunction young_conjugate(const YoungFunction& A)
{
    if (!superlinear(A))
        throw DomainError("conjugate needs a superlinear Young function");
    const double k = A.slope(0.0);
    auto legendre = [&](double s) {
        const double t = slope_preimage(A, s);
        if (!std::isfinite(t) || t > 1e150)
            return std::numeric_limits<double>::quiet_NaN();
        return s * t - A(t);
    };

    std::vector<double> xs, ys;
    if (k > 0.0) {
        xs.push_back(k);
        ys.push_back(0.0);
    }
    // Log-log interpolation is exact for powers but not for fast-growing
    // conjugates, so each interval is split until its midpoint matches.
    auto refine = [&](auto& self, double s0, double y0, double s1, double y1, int depth) -> void {
        if (depth < 12) {
            const double sm = std::sqrt(s0 * s1);
            const double ym = legendre(sm);
            if (ym > y0 && ym < y1) {
                const double guess = y0 * std::pow(sm / s0, std::log(y1 / y0) / std::log(s1 / s0));
                if (std::abs(guess - ym) > 1e-7 * ym) {
                    self(self, s0, y0, sm, ym, depth + 1);
                    xs.push_back(sm);
                    ys.push_back(ym);
                    self(self, sm, ym, s1, y1, depth + 1);
                }
            }
        }
    };
    constexpr double per_decade = 32.0;
    for (double u = -12.0; u <= 12.0 + 1e-9; u += 1.0 / per_decade) {
        const double s = (k > 0.0) ? k * (1.0 + std::pow(10.0, u)) : std::pow(10.0, u);
        const double value = legendre(s);
        if (std::isnan(value))
            break;
        if (!(value > 0.0) || !std::isfinite(value))
            continue;
        if (!ys.empty() && !(value > ys.back()))
            continue;
        if (!ys.empty() && ys.back() > 0.0)
            refine(refine, xs.back(), ys.back(), s, value, 0);
        xs.push_back(s);
        ys.push_back(value);
    }
    return YoungFunction::numeric(std::move(xs), std::move(ys));
}

YoungFunction young_C_from_A(const YoungFunction& A, double p)
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw DomainError("young_C_from_A needs p > 1");
    // u = log t turns the integrand t^(-2+1/p) A^{-1}(t) dt into phi(u) du.
    const double expo = -1.0 + 1.0 / p;
    auto phi = [&](double u) { return std::exp(expo * u) * A.inverse(std::exp(u)); };

    constexpr double per_decade = 16.0;
    const double u_lo = std::log(1e-20), u_hi = std::log(1e40);
    const double du = std::log(10.0) / per_decade;
    const std::size_t nodes = static_cast<std::size_t>(std::round((u_hi - u_lo) / du)) + 1;

    // Tail below the grid: phi behaves like exp(kappa u) there.
    const double f0 = phi(u_lo);
    const double kappa = std::log(f0) - std::log(phi(u_lo - 1.0));
    if (!(kappa > 1e-3) || !std::isfinite(kappa))
        throw DomainError("defining integral of C^{-1} diverges at the origin");

    std::vector<double> cinv(nodes), x(nodes);
    double acc = f0 / kappa;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double u = u_lo + static_cast<double>(i) * du;
        if (i > 0)
            acc += quad::kronrod15(phi, u - du, u);
        cinv[i] = acc;
        x[i] = std::exp(u);
    }
    // C is the inverse of C^{-1}: swap the roles of the columns.
    return YoungFunction::numeric(std::move(cinv), std::move(x));
}

} // namespace volterra
