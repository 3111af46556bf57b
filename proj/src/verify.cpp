#include "volterra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "volterra/convolve.hpp"
#include "volterra/errors.hpp"
#include "volterra/spaces.hpp"

namespace volterra {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

void VerificationReport::add(std::string name, double measured, double threshold, bool passed)
{
    criteria.push_back({std::move(name), measured, threshold, passed});
}

void VerificationReport::finalize()
{
    const bool all = std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.passed; });
    verdict = all && !criteria.empty() ? Verdict::pass : Verdict::fail;
}

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

} // namespace

std::string VerificationReport::text() const
{
    std::ostringstream os;
    os << "# " << id << " verdict=" << to_string(verdict) << " tolerance=" << fmt(tolerance) << " seed=" << seed
       << '\n';
    for (const auto& c : criteria)
        os << id << '.' << c.name << '\t' << fmt(c.measured) << '\t' << fmt(c.threshold) << '\t'
           << (c.passed ? "pass" : "fail") << '\n';
    for (const auto& t : trend)
        os << "# trend\t" << fmt(t.level) << '\t' << fmt(t.value) << '\n';
    return os.str();
}

std::string VerificationReport::csv() const
{
    std::ostringstream os;
    os << "check,criterion,measured,threshold,result\n";
    for (const auto& c : criteria)
        os << id << ',' << c.name << ',' << fmt(c.measured) << ',' << fmt(c.threshold) << ','
           << (c.passed ? "pass" : "fail") << '\n';
    return os.str();
}

double TrigPolynomial::operator()(double x) const
{
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double w = 2.0 * kPi * static_cast<double>(j + 1) * x / period;
        acc += std::pow(static_cast<double>(j + 1), -decay) * (a[j] * std::cos(w) + b[j] * std::sin(w));
    }
    return acc - shift;
}

TrigPolynomial random_trig(Rng& rng, double period, std::size_t terms, double decay, bool vanish_at_zero)
{
    TrigPolynomial t;
    t.period = period;
    t.decay = decay;
    for (std::size_t j = 0; j < terms; ++j) {
        t.a.push_back(rng.uniform(-1.0, 1.0));
        t.b.push_back(rng.uniform(-1.0, 1.0));
    }
    if (vanish_at_zero)
        t.shift = t(0.0);
    return t;
}

RealSamples random_signs(Rng& rng, double length, std::size_t cells)
{
    std::vector<double> v(cells + 1);
    for (auto& x : v)
        x = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return RealSamples(length, std::move(v));
}

namespace {

double spread(const std::vector<double>& v)
{
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (*lo <= 0.0)
        return *hi == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return *hi / *lo;
}

bool strictly_decreasing(const std::vector<double>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1]))
            return false;
    return true;
}

std::string tag(const char* prefix, double v)
{
    std::ostringstream os;
    os << prefix << v;
    return os.str();
}

} // namespace

VerificationReport check_sonine(const std::vector<std::size_t>& levels, double T, std::size_t reference,
                                double threshold)
{
    if (!(T > 0.05 && T <= 2.0))
        throw DomainError("Sonine check needs 0.05 < T <= 2");
    VerificationReport r;
    r.id = "sonine";
    r.tolerance = threshold;
    const Kernel I = Kernel::volterra();
    const Kernel phi = Kernel::log_sonine();

    std::vector<double> defects;
    double at_reference = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t n : levels) {
        const auto conv = kernel_convolution(I, phi, T, n);
        double d = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            if (conv.node(k) >= 0.05 - 1e-12)
                d = std::max(d, std::abs(conv[k] - 1.0));
        defects.push_back(d);
        r.trend.push_back({static_cast<double>(n), d});
        if (n == reference)
            at_reference = d;
    }
    if (std::isnan(at_reference)) {
        const auto conv = kernel_convolution(I, phi, T, reference);
        at_reference = 0.0;
        for (std::size_t k = 1; k <= reference; ++k)
            if (conv.node(k) >= 0.05 - 1e-12)
                at_reference = std::max(at_reference, std::abs(conv[k] - 1.0));
    }
    r.add(tag("identity_defect_n", static_cast<double>(reference)), at_reference, threshold,
          at_reference <= threshold);
    double worst_step = 0.0;
    for (std::size_t i = 1; i < defects.size(); ++i)
        worst_step = std::max(worst_step, defects[i] / defects[i - 1]);
    r.add("identity_defect_decreasing", worst_step, 1.0, defects.size() >= 3 && strictly_decreasing(defects));

    // Phi(I g) against the running integral of g
    struct Case {
        const char* name;
        std::function<double(double)> g, G;
    };
    const Case cases[] = {
        {"phi_of_I_one", [](double) { return 1.0; }, [](double x) { return x; }},
        {"phi_of_I_x", [](double x) { return x; }, [](double x) { return 0.5 * x * x; }},
        {"phi_of_I_cos", [](double x) { return std::cos(x); }, [](double x) { return std::sin(x); }},
    };
    const ProductWeights wI(I, T / static_cast<double>(reference), reference);
    const ProductWeights wphi(phi, T / static_cast<double>(reference), reference);
    for (const auto& c : cases) {
        const auto out = wphi.apply(wI.apply(sample(c.g, T, reference)));
        double d = 0.0;
        for (std::size_t k = 0; k <= reference; ++k)
            d = std::max(d, std::abs(out[k] - c.G(out.node(k))));
        r.add(c.name, d, threshold, d <= threshold);
    }
    r.finalize();
    return r;
}

VerificationReport check_holder(const Kernel& k, double alpha, const std::vector<std::size_t>& levels, double T)
{
    if (k.kind() != KernelKind::volterra_i && k.kind() != KernelKind::abel)
        throw DomainError("Holder check applies to the Volterra and Abel kernels");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("Holder exponent must lie in (0, 1)");
    VerificationReport r;
    r.id = "holder";
    r.tolerance = 2.0;

    std::vector<double> ratios, interval;
    for (std::size_t n : levels) {
        const double h = T / static_cast<double>(n);
        const ProductWeights w(k, h, n);
        const auto g = sample([&](double x) { return std::pow(x, alpha); }, T, n);
        const auto Jg = w.apply(g);
        const double semi = holder_seminorm(g, alpha);
        std::vector<double> denom(n + 1);
        for (std::size_t d = 1; d <= n; ++d)
            denom[d] = semi * std::pow(static_cast<double>(d) * h, alpha) * w.integral(d);
        double S = 0.0, c = 0.0;
        // pairs x = x_j, y = x_m with y/2 <= x < y
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t j = (m + 1) / 2; j < m; ++j) {
                if (semi > 0.0)
                    S = std::max(S, std::abs(Jg[m] - Jg[j]) / denom[m - j]);
                c = std::max(c, (w.integral(m) - w.integral(j)) / w.integral(m - j));
            }
        }
        ratios.push_back(S);
        interval.push_back(c);
        r.trend.push_back({static_cast<double>(n), S});
    }
    const double s = spread(ratios);
    r.add("ratio_spread", s, 2.0, std::isfinite(s) && s < 2.0 && levels.size() >= 3);
    r.add("ratio_max", *std::max_element(ratios.begin(), ratios.end()), std::numeric_limits<double>::infinity(),
          std::isfinite(*std::max_element(ratios.begin(), ratios.end())));
    const double ls = spread(interval);
    r.add("interval_constant", interval.back(), std::numeric_limits<double>::infinity(), std::isfinite(interval.back()));
    r.add("interval_constant_spread", ls, 2.0, ls < 2.0);
    r.finalize();
    return r;
}

VerificationReport check_lp_orlicz(const Kernel& k, const YoungFunction& A, double p, std::size_t trials,
                                   std::uint64_t seed, const std::vector<std::size_t>& levels, double T)
{
    if (!(p > 1.0))
        throw DomainError("Lp-Orlicz check needs p > 1");
    if (!k.positive_on(T))
        throw DomainError("Lp-Orlicz check needs a positive kernel");
    VerificationReport r;
    r.id = "lp-orlicz";
    r.tolerance = 2.0;
    r.seed = seed;

    // Hypothesis: sup of N(t) / (t A^{-1}(1/t)) over nested ranges (tau0 10^-d, tau0].
    const double tau0 = std::min(T, k.decreasing_until());
    std::vector<double> sups;
    double sup = 0.0;
    for (int d = 0; d <= 12 * 8; ++d) {
        const double t = tau0 * std::pow(10.0, -d / 8.0);
        sup = std::max(sup, k.integral(t) / (t * A.inverse(1.0 / t)));
        if (d > 0 && d % 32 == 0)
            sups.push_back(sup);
    }
    const double hs = spread(sups);
    r.add("hypothesis", hs, 2.0, std::isfinite(hs) && hs <= 2.0);
    r.add("hypothesis_constant", sup, std::numeric_limits<double>::infinity(), std::isfinite(sup));
    if (!r.criteria.front().passed) {
        r.verdict = Verdict::inconclusive;
        return r;
    }

    const YoungFunction C = young_C_from_A(A, p);
    std::vector<double> worst;
    for (std::size_t n : levels) {
        const ProductWeights w(k, T / static_cast<double>(n), n);
        Rng rng(seed);
        double m = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto g = sample(random_trig(rng, T), T, n);
            const double gp = norm_lp(g, p);
            if (gp > 0.0)
                m = std::max(m, luxemburg_norm(w.apply(g), C) / gp);
        }
        worst.push_back(m);
        r.trend.push_back({static_cast<double>(n), m});
    }
    const double s = spread(worst);
    r.add("ratio_spread", s, 2.0, std::isfinite(s) && s < 2.0 && levels.size() >= 3);
    r.add("ratio_max", *std::max_element(worst.begin(), worst.end()), std::numeric_limits<double>::infinity(),
          std::isfinite(worst.back()));
    r.finalize();
    return r;
}

VerificationReport check_linf_continuity(const Kernel& k, std::size_t trials, std::uint64_t seed, double T,
                                         const std::vector<std::size_t>& levels)
{
    if (!k.positive_on(T))
        throw DomainError("L-infinity check needs a positive kernel");
    VerificationReport r;
    r.id = "linf";
    r.tolerance = 1e-10;
    r.seed = seed;

    const std::size_t n = levels.back();
    const ProductWeights w(k, T / static_cast<double>(n), n);
    const double NT = w.integral(n);
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = (t % 2 == 0) ? random_signs(rng, T, n) : sample(random_trig(rng, T), T, n);
        worst = std::max(worst, norm_linf(w.apply(g)) / (NT * norm_linf(g)));
    }
    r.add("bound_constant_N", worst, 1.0 + 1e-10, worst <= 1.0 + 1e-10);
    const auto one = w.apply(sample([](double) { return 1.0; }, T, n));
    const double sat = std::abs(one[n] - k.integral(T)) / k.integral(T);
    r.add("saturation", sat, 1e-10, sat <= 1e-10);

    Rng rng2(seed);
    const auto g = random_trig(rng2, T);
    std::vector<double> incr;
    for (std::size_t m : levels) {
        const auto Jg = apply_Jnu(k, sample(g, T, m));
        double d = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            d = std::max(d, std::abs(Jg[j + 1] - Jg[j]));
        incr.push_back(d);
        r.trend.push_back({static_cast<double>(m), d});
    }
    r.add("increment_shrinks", incr.back() / incr.front(), 1.0, levels.size() >= 3 && strictly_decreasing(incr));
    r.finalize();
    return r;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Gram matrix of ||g||_2^2 + [g]_theta^2 in the nodal basis, matching
// norm_lp(., 2) and gagliardo_seminorm exactly.
MatrixXd sobolev_gram(std::size_t n, double h, double theta)
{
    const std::size_t N = n + 1;
    MatrixXd Q = MatrixXd::Zero(N, N);
    for (std::size_t k = 0; k < N; ++k)
        Q(k, k) += h * ((k == 0 || k == n) ? 0.5 : 1.0);

    // off-diagonal cells act on midpoints m = M g: sum_{j != k} w (m_j - m_k)^2
    std::vector<double> w(n);
    for (std::size_t d = 1; d < n; ++d)
        w[d] = 2.0 * h * h / std::pow(static_cast<double>(d) * h, 1.0 + 2.0 * theta);
    MatrixXd L = MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (j != k) {
                const double v = w[j > k ? j - k : k - j];
                L(j, k) -= v;
                L(j, j) += v;
            }
    // M^T L M with M bidiagonal (1/2, 1/2)
    MatrixXd LM = MatrixXd::Zero(n, N);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < N; ++i)
            LM(j, i) = 0.5 * ((i < n ? L(j, i) : 0.0) + (i > 0 ? L(j, i - 1) : 0.0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t c = 0; c < N; ++c)
            Q(i, c) += 0.5 * ((i < n ? LM(i, c) : 0.0) + (i > 0 ? LM(i - 1, c) : 0.0));

    const double diag = 2.0 * std::pow(h, 3.0 - 2.0 * theta) / ((2.0 - 2.0 * theta) * (3.0 - 2.0 * theta)) / (h * h);
    for (std::size_t j = 0; j < n; ++j) {
        Q(j, j) += diag;
        Q(j + 1, j + 1) += diag;
        Q(j, j + 1) -= diag;
        Q(j + 1, j) -= diag;
    }
    return Q;
}

} // namespace

double sobolev_operator_norm(const Kernel& k, double theta, double T, std::size_t n, bool vanish_at_zero)
{
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("Sobolev exponent must lie in (0, 1)");
    if (n < 2)
        throw UsageError("operator norm needs at least two cells");
    const double h = T / static_cast<double>(n);
    const ProductWeights w(k, h, n);
    const std::size_t s0 = vanish_at_zero ? 1 : 0;
    const std::size_t D = n + 1 - s0;

    MatrixXd J = MatrixXd::Zero(D, D);
    for (std::size_t kk = 1; kk <= n; ++kk) {
        J(kk - s0, kk - s0) += w.newest();
        if (s0 == 0)
            J(kk, 0) += w.tilt(kk);
        for (std::size_t d = 1; d < kk; ++d)
            if (kk - d >= s0)
                J(kk - s0, kk - d - s0) += w.node_weight(d);
    }
    const MatrixXd Q = sobolev_gram(n, h, theta).bottomRightCorner(D, D);
    const Eigen::LLT<MatrixXd> llt(Q);
    if (llt.info() != Eigen::Success)
        throw AccuracyError("Sobolev Gram matrix is not positive definite", 0.0);
    const MatrixXd R = llt.matrixL();

    // largest singular value of B = R^T J R^{-T} by power iteration on B^T B
    auto B = [&](const VectorXd& x) {
        const VectorXd y = R.transpose().triangularView<Eigen::Upper>().solve(x);
        return VectorXd(R.transpose() * (J * y));
    };
    auto Bt = [&](const VectorXd& u) {
        const VectorXd z = J.transpose() * (R * u);
        return VectorXd(R.triangularView<Eigen::Lower>().solve(z));
    };
    VectorXd x = VectorXd::Ones(static_cast<Eigen::Index>(D));
    x.normalize();
    double sigma = 0.0;
    for (int it = 0; it < 5000; ++it) {
        VectorXd next = Bt(B(x));
        const double lambda = next.norm();
        next /= lambda;
        x = next;
        const double s = std::sqrt(lambda);
        if (std::abs(s - sigma) <= 1e-10 * s) {
            sigma = s;
            break;
        }
        sigma = s;
    }
    return sigma;
}

VerificationReport check_sobolev(const Kernel& k, double theta, const std::vector<double>& T_list, std::size_t n,
                                 std::uint64_t seed)
{
    if (!(theta > 0.0 && theta < 1.0) || theta == 0.5)
        throw DomainError("Sobolev check needs theta in (0,1) without 1/2");
    VerificationReport r;
    r.id = "sobolev";
    r.tolerance = 0.05;
    r.seed = seed;
    const bool vanish = theta > 0.5;

    std::vector<double> rho, scaled;
    for (double T : T_list) {
        if (!k.positive_on(T))
            throw DomainError("Sobolev check needs a positive kernel");
        const double v = sobolev_operator_norm(k, theta, T, n, vanish);
        rho.push_back(v);
        scaled.push_back(v / k.integral(T));
        r.trend.push_back({T, v});
    }
    const double band = spread(scaled);
    r.add("rho_over_N_band", band, 2.0, std::isfinite(band) && band <= 2.0);
    const auto tmin = std::min_element(T_list.begin(), T_list.end()) - T_list.begin();
    const auto tmax = std::max_element(T_list.begin(), T_list.end()) - T_list.begin();
    r.add("rho_shrinks", rho[static_cast<std::size_t>(tmin)] / rho[static_cast<std::size_t>(tmax)], 1.0,
          rho[static_cast<std::size_t>(tmin)] < rho[static_cast<std::size_t>(tmax)]);

    // W^{1,1} with constant N(T)
    const double T = *std::max_element(T_list.begin(), T_list.end());
    const ProductWeights w(k, T / static_cast<double>(n), n);
    const double NT = w.integral(n);
    Rng rng(seed);
    double w11 = 0.0;
    std::vector<RealSamples> gs;
    gs.push_back(sample([](double x) { return x; }, T, n));
    for (int t = 0; t < 8; ++t)
        gs.push_back(sample(random_trig(rng, T), T, n));
    for (const auto& g : gs)
        w11 = std::max(w11, norm_w11(w.apply(g)) / (NT * (std::abs(g[0]) + norm_w11(g))));
    r.add("w11_constant_N", w11, 1.05, w11 <= 1.05);

    // reflection: L2 factor sqrt 2, Gagliardo factor 2
    double l2dev = 0.0, gag = 0.0;
    for (const auto& g : gs) {
        const auto e = extend_reflect(g);
        l2dev = std::max(l2dev, std::abs(norm_lp(e, 2.0) / norm_lp(g, 2.0) - std::sqrt(2.0)));
        gag = std::max(gag, gagliardo_seminorm(e, theta) / gagliardo_seminorm(g, theta));
    }
    r.add("extension_l2_sqrt2", l2dev, 1e-10, l2dev <= 1e-10);
    r.add("extension_gagliardo_2", gag, 2.0 * 1.05, gag <= 2.0 * 1.05);

    if (vanish) {
        // g = 1 violates g(0) = 0; J 1 = N has infinite H^theta seminorm
        std::vector<double> semi;
        const double len = 0.01;
        for (std::size_t m = 1024; m <= 8192; m *= 2) {
            const ProductWeights wm(k, len / static_cast<double>(m), m);
            std::vector<double> v(m + 1);
            for (std::size_t j = 0; j <= m; ++j)
                v[j] = wm.integral(j);
            semi.push_back(gagliardo_seminorm(RealSamples(len, std::move(v)), theta));
        }
        r.add("counterexample_diverges", semi.back() / semi.front(), 1.0,
              classify_trend(semi) == Trend::divergent);
    }
    r.finalize();
    return r;
}

VerificationReport check_half_sobolev_I(double T, std::uint64_t seed, double dichotomy_length, std::size_t max_n)
{
    if (!(T > 0.0 && T <= 1.0))
        throw DomainError("H^{1/2} check needs 0 < T <= 1");
    VerificationReport r;
    r.id = "half-sobolev";
    r.tolerance = 0.05;
    r.seed = seed;
    const Kernel I = Kernel::volterra();

    // samples of Ncal on (0, L) at n = max_n / 8 .. max_n
    std::vector<std::vector<double>> ncal;
    for (std::size_t m = max_n / 8; m <= max_n; m *= 2) {
        std::vector<double> v(m + 1);
        for (std::size_t j = 0; j <= m; ++j)
            v[j] = I.integral(dichotomy_length * static_cast<double>(j) / static_cast<double>(m));
        ncal.push_back(std::move(v));
    }
    for (double theta : {0.45, 0.5, 0.75}) {
        std::vector<double> semi;
        for (const auto& v : ncal) {
            semi.push_back(gagliardo_seminorm(RealSamples(dichotomy_length, v), theta));
            r.trend.push_back({static_cast<double>(v.size() - 1), semi.back()});
        }
        const Trend tr = classify_trend(semi);
        // largest relative change (Cauchy) or smallest growth (divergence) per doubling
        double largest = 0.0, smallest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < semi.size(); ++i) {
            const double change = semi[i] / semi[i - 1] - 1.0;
            largest = std::max(largest, std::abs(change));
            smallest = std::min(smallest, change);
        }
        if (theta < 0.6)
            r.add(tag("ncal_cauchy_theta", theta), largest, 0.05, tr == Trend::cauchy);
        else
            r.add(tag("ncal_diverges_theta", theta), smallest, 0.10, tr == Trend::divergent);
    }

    // ||I g||_{H^1/2} / (||g||_inf + ||g||_{H^1/2}) relative to max(||Ncal||_{H^1/2}, Ncal(T))
    std::vector<double> ratios;
    for (std::size_t n : {256, 512, 1024}) {
        const ProductWeights w(I, T / static_cast<double>(n), n);
        std::vector<double> nv(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            nv[j] = w.integral(j);
        const double scale = std::max(sobolev_norm(RealSamples(T, nv), 0.5), w.integral(n));
        Rng rng(seed);
        double m = 0.0;
        for (int t = 0; t < 6; ++t) {
            const auto g = sample(random_trig(rng, T), T, n);
            m = std::max(m, sobolev_norm(w.apply(g), 0.5) / (norm_linf(g) + sobolev_norm(g, 0.5)) / scale);
        }
        ratios.push_back(m);
    }
    const double s = spread(ratios);
    r.add("ratio_spread", s, 2.0, std::isfinite(s) && s < 2.0);
    r.add("ratio_over_scale", ratios.back(), std::numeric_limits<double>::infinity(), std::isfinite(ratios.back()));
    r.finalize();
    return r;
}

VerificationReport check_kernel_shape()
{
    VerificationReport r;
    r.id = "kernel-shape";
    r.tolerance = 1e-8;

    auto grid = [](std::size_t points) {
        std::vector<double> x(points);
        for (std::size_t i = 0; i < points; ++i)
            x[i] = 1e-4 * std::pow(3.0 / 1e-4, static_cast<double>(i + 1) / static_cast<double>(points));
        return x;
    };
    auto second_differences = [](const std::vector<double>& x, const std::vector<double>& f) {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i + 1 < x.size(); ++i) {
            const double left = (f[i] - f[i - 1]) / (x[i] - x[i - 1]);
            const double right = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
            worst = std::min(worst, 2.0 * (right - left) / (x[i + 1] - x[i - 1]));
        }
        return worst;
    };

    for (std::size_t points : {50, 100, 200}) {
        const auto x = grid(points);
        double m = std::numeric_limits<double>::infinity();
        for (double xi : x)
            m = std::min(m, volterra_I(xi));
        r.trend.push_back({static_cast<double>(points), m});
    }
    const auto x = grid(200);
    std::vector<double> f(x.size()), e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        f[i] = volterra_I(x[i]);
        e[i] = std::exp(x[i]);
    }
    const double convex = second_differences(x, f);
    r.add("second_differences", convex, -1e-8, convex >= -1e-8);
    const auto it = std::min_element(f.begin(), f.end());
    const std::size_t imin = static_cast<std::size_t>(it - f.begin());
    r.add("minimum_positive", *it, 1.0, *it > 1.0);
    r.add("minimum_location", x[imin], 2.0, x[imin] > 0.1 && x[imin] < 2.0);
    bool decreasing = true;
    for (std::size_t i = 1; i <= imin; ++i)
        decreasing = decreasing && f[i] < f[i - 1];
    r.add("decreasing_before_minimum", decreasing ? 1.0 : 0.0, 1.0, decreasing);
    const double sanity = second_differences(x, e);
    r.add("exp_sanity", sanity, 0.0, sanity > 0.0);
    r.finalize();
    return r;
}

std::vector<std::string> check_names()
{
    return {"sonine", "holder", "lp-orlicz", "linf", "sobolev", "half-sobolev", "kernel-shape"};
}

VerificationReport run_check(const std::string& name, const CheckOptions& opt)
{
    const std::size_t n = opt.n;
    if (n < 8)
        throw UsageError("grid needs at least 8 cells");
    const std::vector<std::size_t> three = {n / 4, n / 2, n};
    if (name == "sonine")
        return check_sonine({n / 4, n / 2, n, 2 * n}, opt.T, n);
    if (name == "holder")
        return check_holder(opt.kernel, opt.exponent > 0.0 ? opt.exponent : 0.4, three, opt.T);
    if (name == "lp-orlicz") {
        if (opt.kernel.kind() == KernelKind::abel) {
            const double a = opt.kernel.alpha();
            return check_lp_orlicz(opt.kernel, YoungFunction::power(1.0 / (1.0 - a)), 2.0, 8, opt.seed, three, opt.T);
        }
        return check_lp_orlicz(opt.kernel, YoungFunction::power_log(1.0, 1.0), 2.0, 8, opt.seed, three, opt.T);
    }
    if (name == "linf")
        return check_linf_continuity(opt.kernel, 20, opt.seed, opt.T, three);
    if (name == "sobolev") {
        std::vector<double> Ts;
        for (double T = opt.T; Ts.size() < 4; T *= 0.5)
            Ts.push_back(T);
        return check_sobolev(opt.kernel, opt.exponent > 0.0 ? opt.exponent : 0.3, Ts, std::min<std::size_t>(n, 1024),
                             opt.seed);
    }
    if (name == "half-sobolev")
        return check_half_sobolev_I(opt.T, opt.seed);
    if (name == "kernel-shape")
        return check_kernel_shape();
    throw UsageError("unknown check '" + name + "'");
}

} // namespace volterra
