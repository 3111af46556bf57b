#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "volterra/kernel.hpp"
#include "volterra/sampled.hpp"
#include "volterra/young.hpp"

namespace volterra {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct Criterion {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct TrendPoint {
    double level; // grid size n, interval length T, ...
    double value;
};

struct VerificationReport {
    std::string id;
    std::vector<Criterion> criteria;
    std::vector<TrendPoint> trend;
    Verdict verdict = Verdict::inconclusive;
    double tolerance = 0.0;
    std::uint64_t seed = 0;

    void add(std::string name, double measured, double threshold, bool passed);
    /// pass iff there is at least one criterion and every criterion passed.
    void finalize();
    bool passed() const { return verdict == Verdict::pass; }

    /// Comment header, then one `CHECK<TAB>measured<TAB>threshold<TAB>pass|fail`
    /// line per criterion, then `# trend` lines.
    std::string text() const;
    /// `check,criterion,measured,threshold,result` rows with a header.
    std::string csv() const;
};

/// Deterministic uniform numbers from a 64-bit Mersenne twister; the mapping
/// to [0,1) uses the top 53 bits so results agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// sum_{j=1}^{terms} j^(-decay) (a_j cos(2 pi j x / L) + b_j sin(2 pi j x / L))
/// with a_j, b_j uniform in [-1, 1]; optionally shifted so that g(0) = 0.
struct TrigPolynomial {
    std::vector<double> a, b;
    double period = 1.0;
    double decay = 1.0;
    double shift = 0.0;
    double operator()(double x) const;
};

TrigPolynomial random_trig(Rng& rng, double period, std::size_t terms = 8, double decay = 1.0,
                           bool vanish_at_zero = false);

/// Random +-1 samples.
RealSamples random_signs(Rng& rng, double length, std::size_t cells);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Sonine identity int_0^x I(x-s) phi(s) ds = 1 on [0.05, T] across `levels`
/// (defect at `reference` must be below `threshold`, and decrease with n),
/// and Phi(I g) = int_0^x g for g in {1, x, cos}.
VerificationReport check_sonine(const std::vector<std::size_t>& levels = {512, 1024, 2048, 4096},
                                double T = 1.0, std::size_t reference = 2048, double threshold = 1e-3);

/// Ratio S(n) = max over y/2 <= x < y of |Jg(x) - Jg(y)| / ([g]_a (y-x)^a N(y-x))
/// for g = x^alpha, and the constant in int_x^y nu <= c int_0^{y-x} nu.
VerificationReport check_holder(const Kernel& k, double alpha,
                                const std::vector<std::size_t>& levels = {512, 1024, 2048}, double T = 1.0);

/// ||J g||_C / ||g||_p over seeded g with C = young_C_from_A(A, p), after the
/// hypothesis N(t) <= c t A^{-1}(1/t) on (0, tau0].
VerificationReport check_lp_orlicz(const Kernel& k, const YoungFunction& A, double p, std::size_t trials = 8,
                                   std::uint64_t seed = kDefaultSeed,
                                   const std::vector<std::size_t>& levels = {256, 512, 1024}, double T = 1.0);

/// ||J g||_inf <= N(T) ||g||_inf over seeded g, saturation at g = 1, and the
/// largest increment of J g shrinking with h.
VerificationReport check_linf_continuity(const Kernel& k, std::size_t trials = 20, std::uint64_t seed = kDefaultSeed,
                                         double T = 1.0, const std::vector<std::size_t>& levels = {256, 512, 1024});

/// Largest ratio ||J g||_{H^theta} / ||g||_{H^theta} over grid functions on
/// (0, T) with n cells (the discrete operator norm, by power iteration on the
/// Cholesky-factored Gram matrix of the H^theta form). With `vanish_at_zero`
/// the sup runs over g with g(0) = 0.
double sobolev_operator_norm(const Kernel& k, double theta, double T, std::size_t n, bool vanish_at_zero);

/// H^theta ratio rho(T) (the operator norm above) across T_list, the W^{1,1} bound
/// with constant N(T), the reflection factors sqrt 2 and 2, and for
/// theta > 1/2 the divergence of [N]_theta (g = 1 violates g(0) = 0).
VerificationReport check_sobolev(const Kernel& k, double theta,
                                 const std::vector<double>& T_list = {1.0, 0.5, 0.25, 0.125}, std::size_t n = 1024,
                                 std::uint64_t seed = kDefaultSeed);

/// [Ncal]_theta on (0, dichotomy_length) converges for theta = 0.45, 0.5 and
/// diverges for theta = 0.75 as n doubles up to max_n; the H^{1/2} ratio of
/// I stays bounded on (0, T).
VerificationReport check_half_sobolev_I(double T = 1.0, std::uint64_t seed = kDefaultSeed,
                                        double dichotomy_length = 0.01, std::size_t max_n = 8192);

/// Convexity, positive minimum and initial decrease of I on (1e-4, 3].
VerificationReport check_kernel_shape();

/// Names accepted by run_check: sonine, holder, lp-orlicz, linf, sobolev,
/// half-sobolev, kernel-shape.
std::vector<std::string> check_names();

struct CheckOptions {
    Kernel kernel = Kernel::volterra();
    std::size_t n = 2048;
    double T = 1.0;
    std::uint64_t seed = kDefaultSeed;
    double exponent = 0.0; // Holder alpha / Sobolev theta; 0 picks the check's default
};

/// Runs a named check with CLI-style options. Throws UsageError for unknown names.
VerificationReport run_check(const std::string& name, const CheckOptions& opt);

} // namespace volterra
