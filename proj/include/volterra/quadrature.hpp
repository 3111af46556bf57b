#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature and a panel marcher for
// log-concave integrands on [start, inf).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    std::size_t max_intervals = 4000;
};

namespace detail {

// Kronrod abscissae on [0,1] (symmetric half), the odd-indexed ones are the
// 7-point Gauss nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = r * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kron * r, std::abs((kron - gauss) * r)};
}

} // namespace detail

/// Fixed 15-point Kronrod rule on [a,b]; exact for polynomials of degree 22.
/// Used on cells where the integrand is analytic.
template <class F>
double kronrod15(F&& f, double a, double b)
{
    return detail::gk15(f, a, b).value;
}

/// Globally adaptive bisection: the panel with the largest error estimate is
/// split until the summed estimate meets max(abs_tol, rel_tol*|I|).
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {})
{
    if (a == b)
        return {};
    std::priority_queue<detail::Panel> heap;
    auto first = detail::gk15(f, a, b);
    double total = first.value;
    double err = first.error;
    std::size_t evals = 15;
    heap.push(first);
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (heap.size() >= opt.max_intervals)
            throw AccuracyError("adaptive quadrature did not converge", err);
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // round-off floor: panels narrower than a few ulps cannot improve
        if (mid <= worst.a || mid >= worst.b)
            break;
    }
    // recompute sums to shed accumulated cancellation in the running totals
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {total, err, evals};
}

/// Integrates exp(log_f(s)) over [start, inf) for log-concave integrands.
///
/// Panels of growing width are integrated adaptively until the integrand is
/// past its maximum and the tail bound exp(log_f(S)) / |dlog_f(S)| falls below
/// a tenth of the requested relative tolerance. The bound follows from
/// concavity: log_f(S + t) <= log_f(S) + t * dlog_f(S).
template <class LogF, class DLogF>
Result integrate_log_concave(LogF&& log_f, DLogF&& dlog_f, double start, const Options& opt = {})
{
    auto f = [&](double s) { return std::exp(log_f(s)); };
    Result acc;
    double lo = start;
    Options local = opt;
    for (int panel = 0; panel < 100000; ++panel) {
        const double hi = lo + 1.0 + std::sqrt(lo);
        const auto piece = integrate(f, lo, hi, local);
        acc.value += piece.value;
        acc.error += piece.error;
        acc.evaluations += piece.evaluations;
        lo = hi;
        const double slope = dlog_f(hi);
        if (slope < 0.0) {
            const double tail = std::exp(log_f(hi)) / -slope;
            if (tail <= 0.1 * opt.rel_tol * std::abs(acc.value) || tail <= opt.abs_tol) {
                acc.error += tail;
                return acc;
            }
        }
        // later panels only need to resolve what remains
        local.abs_tol = std::max(opt.abs_tol, 0.1 * opt.rel_tol * std::abs(acc.value));
    }
    throw AccuracyError("log-concave tail integration did not terminate", acc.error);
}

} // namespace volterra::quad
