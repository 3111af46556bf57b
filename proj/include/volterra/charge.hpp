#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "volterra/convolve.hpp"
#include "volterra/sampled.hpp"

namespace volterra {

using complex = std::complex<double>;

/// -log 4 + 2 gamma - i pi / 2
complex default_charge_constant();

enum class ChargeKind { linear, nonlinear };

/// q + J_I(coef(q) q) = f on [0, T] with
///   linear:    coef = 4 pi alpha + c_fixed
///   nonlinear: coef(q)(s) = 4 pi alpha0 |q(s)|^(2 sigma) + c_fixed
struct ChargeProblem {
    ChargeKind kind = ChargeKind::linear;
    double strength = 0.0; // alpha or alpha0
    double sigma = 1.0;    // nonlinear only
    complex c_fixed = default_charge_constant();
    ComplexSamples forcing;

    static ChargeProblem linear(double alpha, ComplexSamples forcing);
    static ChargeProblem nonlinear(double alpha0, double sigma, ComplexSamples forcing);

    /// coef evaluated at a value of q.
    complex coefficient(const complex& q) const;
};

struct SolveReport {
    ComplexSamples solution;
    double residual = 0.0;      // max_k |q_k + J(coef q)_k - f_k|
    std::size_t iterations = 0; // per-step maximum; 1 for the linear solver
};

/// Per-step fixed point failed; carries the last iterate and its defect.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::size_t step, complex last, double defect)
        : std::runtime_error(what), step_(step), last_(last), defect_(defect) {}
    std::size_t step() const noexcept { return step_; }
    complex last_iterate() const noexcept { return last_; }
    double defect() const noexcept { return defect_; }

private:
    std::size_t step_;
    complex last_;
    double defect_;
};

/// Weights of I on the forcing grid; reusable across problems on that grid.
ProductWeights charge_weights(const ComplexSamples& forcing);

SolveReport solve_linear_charge(const ChargeProblem& p, double tol);
SolveReport solve_linear_charge(const ChargeProblem& p, double tol, const ProductWeights& w);

SolveReport solve_nonlinear_charge(const ChargeProblem& p, double tol, std::size_t max_iter);
SolveReport solve_nonlinear_charge(const ChargeProblem& p, double tol, std::size_t max_iter,
                                   const ProductWeights& w);

double residual_check(const ChargeProblem& p, const ComplexSamples& q);
double residual_check(const ChargeProblem& p, const ComplexSamples& q, const ProductWeights& w);

} // namespace volterra
