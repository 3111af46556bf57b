#pragma once

#include <cstddef>
#include <vector>

#include "volterra/kernel.hpp"
#include "volterra/sampled.hpp"

namespace volterra {

/// Product-integration weights for (J_nu g)(x) = int_0^x nu(x-s) g(s) ds on a
/// uniform grid of step h. The rule integrates nu exactly against the
/// piecewise-linear interpolant of g, so only N and M of the kernel enter and
/// the singularity at the origin is never sampled.
///
/// For m >= 1 the cell [(m-1)h, mh] carries
///   a_m = N(mh) - N((m-1)h)                       (mass)
///   c_m = (1/h) int nu(t) (t - (m-1)h) dt          (tilt, 0 <= c_m <= a_m)
///   b_m = c_m + (m-1) a_m = [M(mh) - M((m-1)h)] / h
/// and the value at node k is
///   (J g)_k = w_0 g_k + sum_{d=1}^{k-1} w_d g_{k-d} + c_k g_0,
///   w_0 = a_1 - c_1,  w_d = a_{d+1} - c_{d+1} + c_d.
class ProductWeights {
public:
    ProductWeights(const Kernel& kernel, double step, std::size_t cells);

    const Kernel& kernel() const { return kernel_; }
    double step() const { return step_; }
    std::size_t cells() const { return mass_.size() - 1; }

    /// a_m, 1 <= m <= cells().
    double mass(std::size_t m) const { return mass_.at(m); }
    /// c_m, 1 <= m <= cells().
    double tilt(std::size_t m) const { return tilt_.at(m); }
    /// b_m = [M(mh) - M((m-1)h)] / h.
    double moment_increment(std::size_t m) const;
    /// N(kh), 0 <= k <= cells().
    double integral(std::size_t k) const { return integral_.at(k); }
    /// w_d as defined above; w_0 multiplies the newest sample.
    double node_weight(std::size_t d) const { return node_.at(d); }
    double newest() const { return node_[0]; }

    /// Everything in (J g)_k except the w_0 g_k term. Reads values[0..k-1].
    template <class V>
    V history(const std::vector<V>& values, std::size_t k) const
    {
        if (k == 0)
            return V{};
        V acc = tilt_[k] * values[0];
        for (std::size_t d = 1; d < k; ++d)
            acc += node_[d] * values[k - d];
        return acc;
    }

    template <class V>
    SampledFunction<V> apply(const SampledFunction<V>& g) const
    {
        check_grid(g.length(), g.cells());
        const auto& v = g.values();
        std::vector<V> out(v.size());
        out[0] = V{};
        for (std::size_t k = 1; k < v.size(); ++k)
            out[k] = history(v, k) + node_[0] * v[k];
        return SampledFunction<V>(g.length(), std::move(out));
    }

private:
    void check_grid(double length, std::size_t cells) const;

    Kernel kernel_;
    double step_;
    std::vector<double> mass_;     // index 0 unused
    std::vector<double> tilt_;     // index 0 unused
    std::vector<double> integral_; // N(kh)
    std::vector<double> node_;     // w_d, d = 0..cells-1
};

/// J_nu g for a kernel positive on (0, T]. Throws DomainError for kernels that
/// change sign on the grid.
RealSamples apply_Jnu(const Kernel& k, const RealSamples& g);
ComplexSamples apply_Jnu(const Kernel& k, const ComplexSamples& g);

/// Convolution with phi(x) = -gamma - log x, the Sonine companion of I.
RealSamples apply_Phi(const RealSamples& g);
ComplexSamples apply_Phi(const ComplexSamples& g);

/// Riemann-Liouville integral of order alpha in (0,1).
RealSamples fractional_integral(double alpha, const RealSamples& g);

/// Samples of (k1 * k2)(x) = int_0^x k1(x-s) k2(s) ds at x_k = kT/n, k = 1..n
/// (entry 0 is 0). Both kernels may be singular at the origin: [0, x] is
/// split at x/2 and each half integrates its singular factor exactly against
/// the linear interpolant of the smooth one on a grid of step h/2.
RealSamples kernel_convolution(const Kernel& k1, const Kernel& k2, double length, std::size_t cells);

} // namespace volterra
