#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

/// Samples of a function on the uniform grid x_k = k T / n, k = 0..n, read as
/// the piecewise-linear interpolant.
template <class V>
class SampledFunction {
public:
    using value_type = V;

    SampledFunction(double length, std::vector<V> values) : length_(length), values_(std::move(values))
    {
        if (!(length_ > 0.0) || !std::isfinite(length_))
            throw UsageError("sampled function needs a positive finite interval length");
        if (values_.size() < 2)
            throw UsageError("sampled function needs at least one cell");
        for (const V& v : values_)
            if (!finite(v))
                throw UsageError("sampled function values must be finite");
    }

    double length() const { return length_; }
    std::size_t cells() const { return values_.size() - 1; }
    double step() const { return length_ / static_cast<double>(cells()); }
    double node(std::size_t k) const { return length_ * static_cast<double>(k) / static_cast<double>(cells()); }

    const std::vector<V>& values() const { return values_; }
    const V& operator[](std::size_t k) const { return values_[k]; }

    bool same_grid(const SampledFunction& other) const
    {
        return cells() == other.cells() && length_ == other.length_;
    }
    template <class W>
    bool same_grid(const SampledFunction<W>& other) const
    {
        return cells() == other.cells() && length_ == other.length();
    }

private:
    static bool finite(double v) { return std::isfinite(v); }
    static bool finite(const std::complex<double>& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

    double length_;
    std::vector<V> values_;
};

using RealSamples = SampledFunction<double>;
using ComplexSamples = SampledFunction<std::complex<double>>;

/// Samples f at the n+1 nodes of [0, length].
template <class F>
auto sample(F&& f, double length, std::size_t cells)
{
    using V = decltype(f(0.0));
    if (cells == 0)
        throw UsageError("sample: need at least one cell");
    std::vector<V> v(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k)
        v[k] = f(length * static_cast<double>(k) / static_cast<double>(cells));
    return SampledFunction<V>(length, std::move(v));
}

} // namespace volterra
