#include "volterra/convolve.hpp"

#include <cmath>

#include "volterra/errors.hpp"
#include "volterra/quadrature.hpp"

namespace volterra {

ProductWeights::ProductWeights(const Kernel& kernel, double step, std::size_t cells)
    : kernel_(kernel), step_(step)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw UsageError("product weights need a positive step");
    if (cells == 0)
        throw UsageError("product weights need at least one cell");
    const double h = step;
    mass_.assign(cells + 1, 0.0);
    tilt_.assign(cells + 1, 0.0);
    integral_.assign(cells + 1, 0.0);

    for (std::size_t m = 1; m <= cells; ++m) {
        integral_[m] = kernel_.integral(static_cast<double>(m) * h);
        mass_[m] = integral_[m] - integral_[m - 1];
    }

    tilt_[1] = kernel_.first_moment(h) / h;
    const bool smooth = kernel_.smooth_away_from_origin();
    double moment_prev = kernel_.first_moment(h);
    for (std::size_t m = 2; m <= cells; ++m) {
        const double lo = static_cast<double>(m - 1) * h;
        const double hi = static_cast<double>(m) * h;
        if (smooth) {
            // away from the origin nu is analytic, so one Kronrod rule per cell
            // is accurate to round-off and avoids cancellation in M increments
            auto f = [&](double t) { return kernel_.value(t) * (t - lo); };
            tilt_[m] = quad::kronrod15(f, lo, hi) / h;
        } else {
            const double moment = kernel_.first_moment(hi);
            tilt_[m] = (moment - moment_prev) / h - static_cast<double>(m - 1) * mass_[m];
            moment_prev = moment;
        }
    }

    node_.assign(cells, 0.0);
    node_[0] = mass_[1] - tilt_[1];
    for (std::size_t d = 1; d < cells; ++d)
        node_[d] = mass_[d + 1] - tilt_[d + 1] + tilt_[d];
}

double ProductWeights::moment_increment(std::size_t m) const
{
    return tilt_.at(m) + static_cast<double>(m - 1) * mass_.at(m);
}

void ProductWeights::check_grid(double length, std::size_t cells) const
{
    const double h = length / static_cast<double>(cells);
    if (cells > this->cells() || std::abs(h - step_) > 1e-12 * step_)
        throw UsageError("sampled function grid does not match the product weights");
}

namespace {

void require_positive(const Kernel& k, double length)
{
    if (!k.positive_on(length))
        throw DomainError("kernel " + k.name() + " is not positive on the sampling interval");
}

template <class V>
SampledFunction<V> apply_checked(const Kernel& k, const SampledFunction<V>& g)
{
    require_positive(k, g.length());
    return ProductWeights(k, g.step(), g.cells()).apply(g);
}

} // namespace

RealSamples apply_Jnu(const Kernel& k, const RealSamples& g) { return apply_checked(k, g); }
ComplexSamples apply_Jnu(const Kernel& k, const ComplexSamples& g) { return apply_checked(k, g); }

RealSamples apply_Phi(const RealSamples& g)
{
    return ProductWeights(Kernel::log_sonine(), g.step(), g.cells()).apply(g);
}

ComplexSamples apply_Phi(const ComplexSamples& g)
{
    return ProductWeights(Kernel::log_sonine(), g.step(), g.cells()).apply(g);
}

RealSamples fractional_integral(double alpha, const RealSamples& g)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("fractional integral order must lie in (0, 1)");
    return apply_Jnu(Kernel::abel(alpha), g);
}

RealSamples kernel_convolution(const Kernel& k1, const Kernel& k2, double length, std::size_t cells)
{
    if (!(length > 0.0) || cells == 0)
        throw UsageError("kernel convolution needs a positive length and at least one cell");
    const double half = 0.5 * length / static_cast<double>(cells);
    const ProductWeights w1(k1, half, cells);
    const ProductWeights w2(k2, half, cells);
    std::vector<double> v1(2 * cells + 1), v2(2 * cells + 1);
    for (std::size_t j = 1; j <= 2 * cells; ++j) {
        v1[j] = k1.value(static_cast<double>(j) * half);
        v2[j] = k2.value(static_cast<double>(j) * half);
    }

    // Node x = 2k * half, midpoint X = k * half. With s = X - t on [0, X] and
    // s = X + t on [X, x]:
    //   int_0^X k2(s) k1(x-s) ds = (J_{k2} G)(X),  G(t) = k1(X + t)
    //   int_X^x k1(x-s) k2(s) ds = (J_{k1} F)(X),  F(t) = k2(X + t)
    // and G, F are smooth on [0, X], sampled at G_i = k1((k+i) half).
    auto half_sum = [](const ProductWeights& w, const std::vector<double>& v, std::size_t k) {
        double acc = w.newest() * v[2 * k] + w.tilt(k) * v[k];
        for (std::size_t d = 1; d < k; ++d)
            acc += w.node_weight(d) * v[2 * k - d];
        return acc;
    };

    std::vector<double> out(cells + 1, 0.0);
    for (std::size_t k = 1; k <= cells; ++k)
        out[k] = half_sum(w2, v1, k) + half_sum(w1, v2, k);
    return RealSamples(length, std::move(out));
}

} // namespace volterra
