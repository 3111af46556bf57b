#include "volterra/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "volterra/errors.hpp"

namespace volterra {

double holder_seminorm(const RealSamples& g, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("Holder exponent must lie in (0, 1)");
    const auto& v = g.values();
    const std::size_t n = g.cells();
    std::vector<double> dist(n + 1);
    for (std::size_t d = 1; d <= n; ++d)
        dist[d] = std::pow(static_cast<double>(d) * g.step(), alpha);
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k)
            best = std::max(best, std::abs(v[k] - v[j]) / dist[k - j]);
    return best;
}

double gagliardo_seminorm(const RealSamples& g, double theta)
{
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("Gagliardo exponent must lie in (0, 1)");
    const auto& v = g.values();
    const std::size_t n = g.cells();
    const double h = g.step();
    std::vector<double> mid(n), weight(n);
    for (std::size_t j = 0; j < n; ++j)
        mid[j] = 0.5 * (v[j] + v[j + 1]);
    for (std::size_t d = 1; d < n; ++d)
        weight[d] = 2.0 * h * h / std::pow(static_cast<double>(d) * h, 1.0 + 2.0 * theta);

    double off = 0.0;
    for (std::size_t d = 1; d < n; ++d) {
        double row = 0.0;
        for (std::size_t j = 0; j + d < n; ++j) {
            const double diff = mid[j + d] - mid[j];
            row += diff * diff;
        }
        off += weight[d] * row;
    }
    const double diag_factor = 2.0 * std::pow(h, 3.0 - 2.0 * theta) / ((2.0 - 2.0 * theta) * (3.0 - 2.0 * theta));
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double slope = (v[j + 1] - v[j]) / h;
        diag += slope * slope;
    }
    return std::sqrt(off + diag_factor * diag);
}

double sobolev_norm(const RealSamples& g, double theta)
{
    const double l2 = norm_lp(g, 2.0);
    const double semi = gagliardo_seminorm(g, theta);
    return std::sqrt(l2 * l2 + semi * semi);
}

double norm_lp(const RealSamples& g, double p)
{
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("Lp norm needs p >= 1");
    const auto& v = g.values();
    double acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double w = (k == 0 || k + 1 == v.size()) ? 0.5 : 1.0;
        acc += w * std::pow(std::abs(v[k]), p);
    }
    return std::pow(acc * g.step(), 1.0 / p);
}

double norm_linf(const RealSamples& g)
{
    double best = 0.0;
    for (double x : g.values())
        best = std::max(best, std::abs(x));
    return best;
}

double norm_w11(const RealSamples& g)
{
    const auto& v = g.values();
    double variation = 0.0;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        variation += std::abs(v[k + 1] - v[k]);
    return norm_lp(g, 1.0) + variation;
}

double norm(const RealSamples& g, NormKind kind, double p)
{
    switch (kind) {
    case NormKind::lp:
        return norm_lp(g, p);
    case NormKind::linf:
        return norm_linf(g);
    case NormKind::w11:
        return norm_w11(g);
    }
    throw UsageError("unknown norm kind");
}

RealSamples extend_reflect(const RealSamples& g)
{
    const std::size_t n = g.cells();
    std::vector<double> v(2 * n + 1);
    for (std::size_t k = 0; k <= 2 * n; ++k)
        v[k] = k <= n ? g[k] : g[2 * n - k];
    return RealSamples(2.0 * g.length(), std::move(v));
}

double luxemburg_functional(const RealSamples& g, const YoungFunction& A, double lambda)
{
    const auto& v = g.values();
    double acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double w = (k == 0 || k + 1 == v.size()) ? 0.5 : 1.0;
        acc += w * A(std::abs(v[k]) / lambda);
    }
    return acc * g.step();
}

double luxemburg_norm(const RealSamples& g, const YoungFunction& A)
{
    const double top = norm_linf(g);
    if (top == 0.0)
        return 0.0;
    auto F = [&](double lambda) { return luxemburg_functional(g, A, lambda); };
    constexpr double cap = 1e300;
    double hi = top;
    while (!(F(hi) <= 1.0)) {
        hi *= 4.0;
        if (hi > cap)
            throw UnboundedNormError("Luxemburg functional stays above one");
    }
    double lo = hi;
    while (F(lo) <= 1.0) {
        lo *= 0.25;
        if (lo < 1e-300)
            return 0.0;
    }
    while (hi / lo - 1.0 > 1e-8) {
        const double mid = std::sqrt(lo * hi);
        (F(mid) <= 1.0 ? hi : lo) = mid;
    }
    return hi;
}

namespace {

// Bisection for a root of an increasing function on [lo, hi].
double increasing_root(const std::function<double(double)>& f, double lo, double hi)
{
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Top-x superlevel set of a kernel that decreases on (0, argmin) and
// increases on (argmin, H]: it is (0, a) u (b, H] with nu(a) = nu(b).
double unimodal_average(const Kernel& k, double x, double horizon)
{
    const double argmin = k.decreasing_until();
    const double nu_end = k.value(horizon);
    auto right_end = [&](double lambda) {
        if (nu_end <= lambda)
            return horizon;
        return increasing_root([&](double s) { return k.value(s) - lambda; }, argmin, horizon);
    };
    auto measure = [&](double a) { return a + horizon - right_end(k.value(a)); };
    const double a_max = std::min(x, argmin);
    double a = a_max;
    if (measure(a_max) > x)
        a = increasing_root([&](double s) { return measure(s) - x; }, 0.0, a_max);
    const double b = right_end(k.value(a));
    return (k.integral(a) + k.integral(horizon) - k.integral(b)) / x;
}

} // namespace

double avg_rearrangement(const Kernel& k, double x, double horizon)
{
    if (!(horizon > 0.0) || !(x > 0.0) || x > horizon * (1.0 + 1e-12))
        throw DomainError("rearrangement needs 0 < x <= horizon");
    if (!k.positive_on(horizon))
        throw DomainError("rearrangement needs a kernel positive on (0, horizon]");
    x = std::min(x, horizon);
    switch (k.kind()) {
    case KernelKind::abel:
    case KernelKind::log_sonine:
        return k.integral(x) / x;
    case KernelKind::volterra_i:
        if (horizon <= k.decreasing_until())
            return k.integral(x) / x;
        return unimodal_average(k, x, horizon);
    case KernelKind::tabulated:
        break;
    }
    // Tabulated: cell means of the interpolant, sorted decreasingly.
    const double h = k.table()->step;
    const double end = std::min(horizon, k.domain_end());
    const auto cells = static_cast<std::size_t>(std::ceil(end / h - 1e-9));
    std::vector<double> means(cells);
    for (std::size_t j = 0; j < cells; ++j) {
        const double lo = static_cast<double>(j) * h;
        const double hi = std::min(end, lo + h);
        means[j] = (k.integral(hi) - k.integral(lo)) / (hi - lo);
    }
    std::sort(means.begin(), means.end(), std::greater<>());
    double acc = 0.0, covered = 0.0;
    for (std::size_t j = 0; j < cells && covered < x; ++j) {
        const double width = std::min(h, x - covered);
        acc += means[j] * width;
        covered += width;
    }
    return acc / x;
}

Trend classify_trend(const std::vector<double>& values, double growth, double cauchy_tol)
{
    if (values.size() < 4)
        return Trend::undecided;
    const std::size_t n = values.size();
    bool grows = true, settles = true;
    for (std::size_t i = n - 3; i < n; ++i) {
        const double prev = values[i - 1], cur = values[i];
        if (!(cur > prev * (1.0 + growth)))
            grows = false;
        if (!(std::abs(cur - prev) <= cauchy_tol * std::abs(prev)))
            settles = false;
    }
    if (grows)
        return Trend::divergent;
    if (settles)
        return Trend::cauchy;
    return Trend::undecided;
}

} // namespace volterra
