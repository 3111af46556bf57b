#pragma once

#include <string>
#include <variant>
#include <vector>

namespace volterra {

/// Convex increasing A on [0, inf) with A(0) = 0.
///
///   Power(p, c)        c x^p, p >= 1
///   PowerLog(p, g)     x^p log^g x for x >= x0, and the chord A(x0) x / x0
///                      below x0, where x0 >= e is the smallest point beyond
///                      which x^p log^g x is convex with increasing A(x)/x
///   NumericMonotone    table (x_i, y_i), interpolated log-log between
///                      positive values and linearly next to a zero value;
///                      power-law extrapolation past either end
class YoungFunction {
public:
    struct Power {
        double p;
        double coefficient;
    };
    struct PowerLog {
        double p;
        double gamma_log;
        double x0; // start of the x^p log^g x branch
        double y0; // value there
    };
    struct NumericMonotone {
        std::vector<double> x;
        std::vector<double> y;
    };

    static YoungFunction power(double p, double coefficient = 1.0);
    static YoungFunction power_log(double p, double gamma_log);
    /// Nodes must have x strictly increasing and positive, y nondecreasing,
    /// nonnegative and strictly increasing once positive.
    static YoungFunction numeric(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    /// Right derivative A'(x).
    double slope(double x) const;
    /// Smallest x with A(x) >= y (the generalized inverse).
    double inverse(double y) const;
    std::string describe() const;

    const std::variant<Power, PowerLog, NumericMonotone>& variant() const { return v_; }

    /// Second differences on a log grid over [lo, hi] are >= -tol * scale.
    bool convex_on(double lo, double hi, std::size_t points = 200, double tol = 1e-9) const;

private:
    explicit YoungFunction(std::variant<Power, PowerLog, NumericMonotone> v) : v_(std::move(v)) {}
    std::variant<Power, PowerLog, NumericMonotone> v_;
};

/// Legendre transform s -> sup_t (s t - A(t)) as a NumericMonotone table.
/// Throws DomainError when A is not superlinear.
YoungFunction young_conjugate(const YoungFunction& A);

/// C with C^{-1}(x) = int_0^x t^(-2 + 1/p) A^{-1}(t) dt, p > 1. Throws
/// DomainError when the integral diverges at the origin.
YoungFunction young_C_from_A(const YoungFunction& A, double p);

} // namespace volterra
