#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "volterra/errors.hpp"
#include "volterra/spaces.hpp"
#include "volterra/verify.hpp"

using namespace volterra;

namespace {

RealSamples fn(double T, std::size_t n, double (*f)(double))
{
    return sample(f, T, n);
}

RealSamples scaled(const RealSamples& g, double c)
{
    auto v = g.values();
    for (auto& x : v)
        x *= c;
    return RealSamples(g.length(), std::move(v));
}

} // namespace

TEST_SUITE("spaces")
{
    TEST_CASE("Holder seminorm")
    {
        CHECK(holder_seminorm(fn(1.0, 64, [](double) { return 3.0; }), 0.5) == 0.0);
        CHECK(holder_seminorm(fn(1.0, 64, [](double x) { return x; }), 0.5) == doctest::Approx(1.0).epsilon(1e-12));
        const double s = holder_seminorm(fn(1.0, 4096, [](double x) { return std::pow(x, 0.3); }), 0.3);
        CHECK(std::abs(s - 1.0) <= 1e-3);
        CHECK_THROWS_AS(holder_seminorm(fn(1.0, 8, [](double x) { return x; }), 1.0), DomainError);
    }

    TEST_CASE("Gagliardo seminorm")
    {
        CHECK(gagliardo_seminorm(fn(1.0, 64, [](double) { return -2.0; }), 0.4) == 0.0);
        // g = x on (0,1): [g]^2 = int int |x-y|^(1-2t) = 2 / ((2-2t)(3-2t))
        for (double theta : {0.25, 0.5, 0.7}) {
            const double exact = std::sqrt(2.0 / ((2.0 - 2.0 * theta) * (3.0 - 2.0 * theta)));
            const double got = gagliardo_seminorm(fn(1.0, 1024, [](double x) { return x; }), theta);
            CHECK(std::abs(got - exact) <= 2e-2 * exact);
        }
        CHECK(gagliardo_seminorm(fn(1.0, 1024, [](double x) { return x; }), 0.5) ==
              doctest::Approx(1.0).epsilon(1e-12));
        // against a tanh-sinh double integral for a smooth function
        const double theta = 0.3;
        auto g = [](double x) { return std::sin(2.0 * x); };
        const double inner = oracle::integrate(
            [&](double x) {
                if (x >= 1.0)
                    return 0.0;
                return oracle::integrate(
                    [&](double d) {
                        return d > 1e-100 ? std::pow(g(x + d) - g(x), 2) / std::pow(d, 1.0 + 2.0 * theta) : 0.0;
                    },
                    0.0,
                    1.0 - x);
            },
            0.0, 1.0);
        const double got = gagliardo_seminorm(fn(1.0, 1024, [](double x) { return std::sin(2.0 * x); }), theta);
        CHECK(got == doctest::Approx(std::sqrt(2.0 * inner)).epsilon(2e-3));
    }

    TEST_CASE("norms of simple functions")
    {
        const auto one = fn(2.0, 64, [](double) { return 1.0; });
        CHECK(norm_lp(one, 1.0) == doctest::Approx(2.0));
        CHECK(norm_lp(one, 2.0) == doctest::Approx(std::sqrt(2.0)));
        CHECK(norm_linf(one) == 1.0);
        CHECK(norm_w11(one) == doctest::Approx(2.0));
        const auto x = fn(1.0, 64, [](double t) { return t; });
        CHECK(norm_w11(x) == doctest::Approx(1.5));
        CHECK(norm(x, NormKind::lp, 1.0) == doctest::Approx(0.5));
        CHECK(norm(x, NormKind::linf) == 1.0);
        CHECK(norm(x, NormKind::w11) == doctest::Approx(1.5));
        CHECK(sobolev_norm(fn(1.0, 256, [](double) { return 1.0; }), 0.3) == doctest::Approx(1.0));
    }

    TEST_CASE("Lp norms increase with p on a unit interval")
    {
        Rng rng(3);
        for (int t = 0; t < 5; ++t) {
            const auto g = sample(random_trig(rng, 1.0), 1.0, 256);
            double prev = 0.0;
            for (double p : {1.0, 1.5, 2.0, 4.0, 8.0}) {
                const double v = norm_lp(g, p);
                CHECK(v >= prev * (1.0 - 1e-12));
                prev = v;
            }
            CHECK(prev <= norm_linf(g) * (1.0 + 1e-12));
        }
    }

    TEST_CASE("norms are absolutely homogeneous")
    {
        Rng rng(5);
        const auto g = sample(random_trig(rng, 1.0), 1.0, 128);
        const auto A = YoungFunction::power_log(1.0, 1.0);
        for (double c : {-3.0, 0.25, 7.0}) {
            const auto cg = scaled(g, c);
            CHECK(norm_lp(cg, 3.0) == doctest::Approx(std::abs(c) * norm_lp(g, 3.0)).epsilon(1e-12));
            CHECK(norm_w11(cg) == doctest::Approx(std::abs(c) * norm_w11(g)).epsilon(1e-12));
            CHECK(holder_seminorm(cg, 0.4) == doctest::Approx(std::abs(c) * holder_seminorm(g, 0.4)).epsilon(1e-12));
            CHECK(gagliardo_seminorm(cg, 0.4) ==
                  doctest::Approx(std::abs(c) * gagliardo_seminorm(g, 0.4)).epsilon(1e-12));
            CHECK(luxemburg_norm(cg, A) == doctest::Approx(std::abs(c) * luxemburg_norm(g, A)).epsilon(1e-8));
        }
    }

    TEST_CASE("reflection doubles the interval")
    {
        Rng rng(9);
        const auto g = sample(random_trig(rng, 1.0), 1.0, 128);
        const auto e = extend_reflect(g);
        CHECK(e.length() == 2.0);
        CHECK(e.cells() == 256);
        CHECK(e[256] == g[0]);
        CHECK(norm_lp(e, 2.0) == doctest::Approx(std::sqrt(2.0) * norm_lp(g, 2.0)).epsilon(1e-13));
        CHECK(norm_w11(e) == doctest::Approx(2.0 * norm_w11(g)).epsilon(1e-13));
    }

    TEST_CASE("Luxemburg norm")
    {
        // indicator of (0, t): ||1_E|| = 1 / A^{-1}(1/t)
        const auto A = YoungFunction::power_log(1.0, 1.0);
        for (double t : {0.05, 0.25, 0.5}) {
            const std::size_t n = 4000;
            auto ind = sample([t](double x) { return x <= t ? 1.0 : 0.0; }, 1.0, n);
            CHECK(luxemburg_norm(ind, A) == doctest::Approx(1.0 / A.inverse(1.0 / t)).epsilon(1e-2));
        }
        Rng rng(13);
        const auto g = sample(random_trig(rng, 1.0), 1.0, 256);
        for (double p : {1.0, 2.0, 3.5})
            CHECK(luxemburg_norm(g, YoungFunction::power(p)) == doctest::Approx(norm_lp(g, p)).epsilon(1e-6));
        const double l = luxemburg_norm(g, A);
        const double F = luxemburg_functional(g, A, l);
        CHECK(F <= 1.0);
        CHECK(F >= 1.0 - 1e-6);
        CHECK(luxemburg_norm(fn(1.0, 8, [](double) { return 0.0; }), A) == 0.0);
    }

    TEST_CASE("averaged rearrangement")
    {
        const double a = 0.4;
        for (double x : {0.01, 0.3, 1.0})
            CHECK(avg_rearrangement(Kernel::abel(a), x) ==
                  doctest::Approx(std::pow(x, a - 1.0) / std::tgamma(a + 1.0)).epsilon(1e-12));
        const auto flat = Kernel::tabulated(0.1, std::vector<double>(11, 2.0));
        CHECK(avg_rearrangement(flat, 0.37) == doctest::Approx(2.0).epsilon(1e-12));
        // below the minimiser, I decreases, so the top set is (0, x)
        CHECK(avg_rearrangement(Kernel::volterra(), 1e-3) == doctest::Approx(volterra_N(1e-3) / 1e-3).epsilon(1e-12));
        CHECK(avg_rearrangement(Kernel::volterra(), 1e-3) == doctest::Approx(oracle::mu(1e-3, 0) / 1e-3).epsilon(1e-9));
        // non-increasing in x and never below the plain average
        double prev = 1e300;
        for (double x : {0.01, 0.1, 0.3, 0.6, 1.0, 2.0}) {
            const double v = avg_rearrangement(Kernel::volterra(), x, 2.0);
            CHECK(v <= prev * (1.0 + 1e-12));
            CHECK(v >= volterra_N(x) / x * (1.0 - 1e-8));
            prev = v;
        }
        CHECK(avg_rearrangement(Kernel::volterra(), 2.0, 2.0) == doctest::Approx(volterra_N(2.0) / 2.0).epsilon(1e-9));
        CHECK_THROWS_AS(avg_rearrangement(Kernel::log_sonine(), 0.5), DomainError);
        CHECK_THROWS_AS(avg_rearrangement(Kernel::volterra(), 2.0, 1.0), DomainError);
    }

    TEST_CASE("Abel satisfies the integrability hypothesis with 1/Gamma(alpha+1)")
    {
        for (double a : {0.2, 0.5, 0.8}) {
            const auto k = Kernel::abel(a);
            const auto A = YoungFunction::power(1.0 / (1.0 - a));
            double worst = 0.0;
            for (double t = 1e-6; t <= 1.0; t *= 1.5)
                worst = std::max(worst, k.integral(t) / (t * A.inverse(1.0 / t)));
            CHECK(worst <= 1.0 / std::tgamma(a + 1.0) + 1e-6);
        }
    }

    TEST_CASE("trend classification")
    {
        CHECK(classify_trend({1.0, 1.2, 1.5, 1.9}) == Trend::divergent);
        CHECK(classify_trend({1.0, 1.01, 1.015, 1.017}) == Trend::cauchy);
        CHECK(classify_trend({1.0, 1.3, 1.31, 1.6}) == Trend::undecided);
        CHECK(classify_trend({1.0, 2.0}) == Trend::undecided);
    }
}
