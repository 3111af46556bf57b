#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "volterra/special_functions.hpp"

namespace volterra {

enum class KernelKind { volterra_i, abel, log_sonine, tabulated };

/// A locally integrable convolution kernel nu on (0, inf) together with its
/// integral function N(x) = int_0^x nu and first moment M(x) = int_0^x s nu(s) ds.
///
/// Immutable after construction and safe to share between threads.
class Kernel {
public:
    struct VolterraI {};
    struct Abel {
        double alpha;
        double gamma_alpha; // Gamma(alpha)
    };
    struct LogSonine {};
    struct Tabulated {
        double step;
        std::vector<double> samples; // nu(k * step), k = 0..m
    };

    static Kernel volterra(double rel_tol = kDefaultTolerance);
    /// x^(alpha-1) / Gamma(alpha), 0 < alpha < 1.
    static Kernel abel(double alpha, double rel_tol = kDefaultTolerance);
    /// -gamma - log x, the Sonine companion of I. Changes sign at e^-gamma.
    static Kernel log_sonine();
    /// Piecewise-linear interpolant of samples on a uniform grid starting at 0.
    /// Lower accuracy: N and M are exact only for the interpolant.
    static Kernel tabulated(double step, std::vector<double> samples);

    KernelKind kind() const;
    std::string name() const;
    double tolerance() const { return rel_tol_; }
    /// Abel exponent; NaN for other variants.
    double alpha() const;

    /// nu(x), x > 0.
    double value(double x) const;
    /// N(x), x >= 0.
    double integral(double x) const;
    /// M(x), x >= 0, through the variant's preferred route.
    double first_moment(double x) const;
    /// M(x) = x N(x) - int_0^x N, with the last integral done by adaptive
    /// quadrature. Independent of first_moment() for every variant except
    /// Tabulated.
    double first_moment_by_parts(double x) const;

    /// True when nu > 0 on (0, horizon].
    bool positive_on(double horizon) const;
    /// True when nu is analytic on (0, horizon] so fixed Gauss rules on cells
    /// away from the origin are accurate.
    bool smooth_away_from_origin() const;
    /// Right end of the interval (0, tau0) on which nu decreases; +inf when
    /// nu decreases everywhere on its domain.
    double decreasing_until() const;
    /// Largest admissible argument (the table end for Tabulated kernels).
    double domain_end() const;
    /// The sample table of a Tabulated kernel, null otherwise.
    const Tabulated* table() const { return std::get_if<Tabulated>(&v_); }

private:
    using Variant = std::variant<VolterraI, Abel, LogSonine, Tabulated>;
    Kernel(Variant v, double rel_tol) : v_(std::move(v)), rel_tol_(rel_tol) {}

    Variant v_;
    double rel_tol_;
};

} // namespace volterra
