#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "volterra/kernel.hpp"
#include "volterra/sampled.hpp"
#include "volterra/young.hpp"

namespace volterra {

/// max over grid pairs j < k of |g_k - g_j| / (x_k - x_j)^alpha.
double holder_seminorm(const RealSamples& g, double alpha);

/// Gagliardo seminorm (int int |g(x)-g(y)|^2 / |x-y|^(1+2 theta))^(1/2) over
/// (0, T). Off-diagonal cell pairs use cell midpoint values; each diagonal
/// cell contributes its exact integral for the linear interpolant,
/// slope^2 * 2 h^(3-2 theta) / ((2-2 theta)(3-2 theta)).
double gagliardo_seminorm(const RealSamples& g, double theta);

/// (||g||_2^2 + [g]_theta^2)^(1/2).
double sobolev_norm(const RealSamples& g, double theta);

enum class NormKind { lp, linf, w11 };

/// Lp by the trapezoid rule on |g|^p; Linf = max |g_k|; W11 = L1 plus the
/// total variation of the interpolant.
double norm(const RealSamples& g, NormKind kind, double p = 1.0);
double norm_lp(const RealSamples& g, double p);
double norm_linf(const RealSamples& g);
double norm_w11(const RealSamples& g);

struct NormReport {
    std::string kind; // "holder(a)", "gagliardo(t)", "w11", "lp(p)", "linf", "luxemburg(A)"
    double value = 0.0;
    double length = 0.0;
    std::size_t cells = 0;
};

/// g(x) on [0, T], g(2T - x) on (T, 2T]; same cell count per unit length.
RealSamples extend_reflect(const RealSamples& g);

/// inf { lambda > 0 : int_0^T A(|g| / lambda) <= 1 } with the trapezoid
/// functional; geometric bisection to relative width 1e-8, returning the
/// upper end so the functional there is <= 1. Throws UnboundedNormError when
/// no scale up to the overflow cap brings the functional below one.
double luxemburg_norm(const RealSamples& g, const YoungFunction& A);
double luxemburg_functional(const RealSamples& g, const YoungFunction& A, double lambda);

/// nu**(x) = (1/x) int_0^x nu*, the average of the decreasing rearrangement of
/// nu restricted to (0, horizon], 0 < x <= horizon. Throws DomainError for
/// kernels that change sign on (0, horizon].
double avg_rearrangement(const Kernel& k, double x, double horizon = 1.0);

enum class Trend { cauchy, divergent, undecided };

/// Classifies a refinement sequence (one value per doubling of n):
/// divergent when the last three steps each grow by more than `growth`,
/// cauchy when the last three relative changes are within `cauchy_tol`.
Trend classify_trend(const std::vector<double>& values, double growth = 0.10, double cauchy_tol = 0.05);

} // namespace volterra
