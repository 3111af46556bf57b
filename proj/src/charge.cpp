#include "volterra/charge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

complex default_charge_constant()
{
    return {-std::log(4.0) + 2.0 * kEulerGamma, -0.5 * kPi};
}

ChargeProblem ChargeProblem::linear(double alpha, ComplexSamples forcing)
{
    if (!std::isfinite(alpha))
        throw DomainError("charge strength must be finite");
    return ChargeProblem{ChargeKind::linear, alpha, 1.0, default_charge_constant(), std::move(forcing)};
}

ChargeProblem ChargeProblem::nonlinear(double alpha0, double sigma, ComplexSamples forcing)
{
    if (!std::isfinite(alpha0))
        throw DomainError("charge strength must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("nonlinearity exponent sigma must be positive");
    return ChargeProblem{ChargeKind::nonlinear, alpha0, sigma, default_charge_constant(), std::move(forcing)};
}

complex ChargeProblem::coefficient(const complex& q) const
{
    const double four_pi = 4.0 * kPi;
    if (kind == ChargeKind::linear)
        return four_pi * strength + c_fixed;
    return four_pi * strength * std::pow(std::abs(q), 2.0 * sigma) + c_fixed;
}

ProductWeights charge_weights(const ComplexSamples& forcing)
{
    return ProductWeights(Kernel::volterra(), forcing.step(), forcing.cells());
}

namespace {

void check_weights(const ChargeProblem& p, const ProductWeights& w)
{
    const auto& f = p.forcing;
    if (f.cells() > w.cells() || std::abs(f.step() - w.step()) > 1e-12 * w.step() ||
        w.kernel().kind() != KernelKind::volterra_i)
        throw UsageError("charge weights do not match the forcing grid");
}

SolveReport finish(const ChargeProblem& p, std::vector<complex> q, std::size_t iterations, double tol,
                   const ProductWeights& w)
{
    ComplexSamples sol(p.forcing.length(), std::move(q));
    const double res = residual_check(p, sol, w);
    if (!(res <= tol))
        throw AccuracyError("charge equation defect above tolerance", res);
    return {std::move(sol), res, iterations};
}

} // namespace

SolveReport solve_linear_charge(const ChargeProblem& p, double tol)
{
    return solve_linear_charge(p, tol, charge_weights(p.forcing));
}

SolveReport solve_linear_charge(const ChargeProblem& p, double tol, const ProductWeights& w)
{
    if (p.kind != ChargeKind::linear)
        throw UsageError("solve_linear_charge needs a linear problem");
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
    check_weights(p, w);
    const complex c = p.coefficient({});
    const complex pivot = 1.0 + c * w.newest();
    const auto& f = p.forcing.values();
    std::vector<complex> q(f.size());
    q[0] = f[0];
    for (std::size_t k = 1; k < f.size(); ++k) {
        if (std::abs(pivot) < 1e-12)
            throw SingularStepError("1 + c w_0 vanishes", k);
        q[k] = (f[k] - c * w.history(q, k)) / pivot;
    }
    return finish(p, std::move(q), 1, tol, w);
}

SolveReport solve_nonlinear_charge(const ChargeProblem& p, double tol, std::size_t max_iter)
{
    return solve_nonlinear_charge(p, tol, max_iter, charge_weights(p.forcing));
}

SolveReport solve_nonlinear_charge(const ChargeProblem& p, double tol, std::size_t max_iter,
                                   const ProductWeights& w)
{
    if (p.kind != ChargeKind::nonlinear)
        throw UsageError("solve_nonlinear_charge needs a nonlinear problem");
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
    if (max_iter == 0)
        throw DomainError("max_iter must be positive");
    check_weights(p, w);
    const double w0 = w.newest();
    const auto& f = p.forcing.values();
    std::vector<complex> q(f.size()), u(f.size()); // u = coef(q) q
    q[0] = f[0];
    u[0] = p.coefficient(q[0]) * q[0];
    std::size_t worst = 1;

    for (std::size_t k = 1; k < f.size(); ++k) {
        const complex rhs = f[k] - w.history(u, k);
        auto defect = [&](const complex& z) { return std::abs(z + w0 * p.coefficient(z) * z - rhs); };
        const double target =
            std::max(0.01 * tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(rhs));
        complex z = q[k - 1];
        double d = defect(z);
        std::size_t it = 0;
        while (d > target) {
            if (it == max_iter)
                throw ConvergenceError("per-step fixed point did not converge", k, z, d);
            ++it;
            const complex pivot = 1.0 + w0 * p.coefficient(z);
            if (std::abs(pivot) < 1e-12)
                throw SingularStepError("1 + coef w_0 vanishes", k);
            complex next = rhs / pivot;
            double dn = defect(next);
            if (dn > d) {
                next = 0.5 * (z + next);
                dn = defect(next);
            }
            z = next;
            d = dn;
        }
        q[k] = z;
        u[k] = p.coefficient(z) * z;
        worst = std::max(worst, it);
    }
    return finish(p, std::move(q), worst, tol, w);
}

double residual_check(const ChargeProblem& p, const ComplexSamples& q)
{
    return residual_check(p, q, charge_weights(p.forcing));
}

double residual_check(const ChargeProblem& p, const ComplexSamples& q, const ProductWeights& w)
{
    if (!q.same_grid(p.forcing))
        throw UsageError("solution and forcing grids differ");
    check_weights(p, w);
    const auto& v = q.values();
    std::vector<complex> u(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        u[k] = p.coefficient(v[k]) * v[k];
    const auto Ju = w.apply(ComplexSamples(q.length(), std::move(u)));
    const auto& f = p.forcing.values();
    double res = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k)
        res = std::max(res, std::abs(v[k] + Ju[k] - f[k]));
    return res;
}

} // namespace volterra
