#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "volterra/errors.hpp"
#include "volterra/kernel.hpp"
#include "volterra/special_functions.hpp"

using namespace volterra;

TEST_SUITE("kernels")
{
    TEST_CASE("volterra_I near the origin follows 1/(x log^2(1/x))")
    {
        const double x = 1e-4;
        const double lead = 1.0 / (x * std::pow(std::log(1.0 / x), 2));
        CHECK(lead == doctest::Approx(117.88).epsilon(1e-4));
        CHECK(std::abs(volterra_I(x) / lead - 1.0) <= 0.11);
    }

    TEST_CASE("volterra_I at 20 is e^20 up to O(1/x)")
    {
        CHECK(std::abs(volterra_I(20.0) - std::exp(20.0)) <= 3.0 / 20.0);
    }

    TEST_CASE("volterra_I matches the Laplace representation on [0.01, 5]")
    {
        for (double x = 0.01; x <= 5.0; x *= 1.3)
            CHECK(volterra_I(x) == doctest::Approx(oracle::volterra_I_laplace(x)).epsilon(1e-8));
    }

    TEST_CASE("volterra_I rejects non-positive arguments")
    {
        CHECK_THROWS_AS(volterra_I(0.0), DomainError);
        CHECK_THROWS_AS(volterra_I(-1.0), DomainError);
        CHECK_THROWS_AS(volterra_I(1e4), DomainError);
    }

    TEST_CASE("ramanujan_R at 0, monotone and convex on [0, 2]")
    {
        CHECK(std::abs(ramanujan_R(0.0) - 1.0) <= 1e-8);
        // the u = log s form of R(0) integrates 1/(u^2 + pi^2): its limit is 1
        CHECK(oracle::integrate([](double u) { return 1.0 / (u * u + oracle::pi * oracle::pi); },
                                -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()) ==
              doctest::Approx(1.0).epsilon(1e-6));
        std::vector<double> r;
        for (int i = 0; i <= 40; ++i)
            r.push_back(ramanujan_R(0.05 * i));
        for (std::size_t i = 1; i < r.size(); ++i)
            CHECK(r[i] < r[i - 1]);
        for (std::size_t i = 1; i + 1 < r.size(); ++i)
            CHECK(r[i + 1] - 2.0 * r[i] + r[i - 1] > 0.0);
        const double r10 = ramanujan_R(10.0);
        CHECK(r10 > 0.0);
        CHECK(r10 < ramanujan_R(1.0));
    }

    TEST_CASE("volterra_N near the origin, at 0, and against e^x - R")
    {
        CHECK(volterra_N(0.0) == 0.0);
        CHECK(std::abs(volterra_N(1e-4) - 1.0 / std::log(1e4)) <= 0.012);
        for (double x = 0.01; x <= 2.0; x *= 1.25)
            CHECK(volterra_N(x) == doctest::Approx(std::exp(x) - ramanujan_R(x)).epsilon(1e-8));
    }

    TEST_CASE("volterra_mu matches the Gamma-integral oracle")
    {
        for (int j = -1; j <= 3; ++j)
            for (double x : {0.05, 0.3, 1.0, 2.5})
                CHECK(volterra_mu(x, j) == doctest::Approx(oracle::mu(x, j)).epsilon(1e-8));
        CHECK_THROWS_AS(volterra_mu(1.0, -2), DomainError);
    }

    TEST_CASE("digamma against known values")
    {
        CHECK(digamma(1.0) == doctest::Approx(-oracle::euler_gamma).epsilon(1e-13));
        CHECK(digamma(0.5) == doctest::Approx(-oracle::euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-13));
        CHECK(digamma(10.0) == doctest::Approx(2.251752589066721).epsilon(1e-13));
    }

    TEST_CASE("kernel_eval per variant")
    {
        CHECK(Kernel::abel(0.5).value(0.25) == doctest::Approx(2.0 / std::sqrt(oracle::pi)).epsilon(1e-14));
        CHECK(std::abs(Kernel::log_sonine().value(std::exp(-kEulerGamma))) < 1e-15);
        CHECK(Kernel::volterra().value(1e-4) == doctest::Approx(volterra_I(1e-4)).epsilon(1e-12));
        const auto tab = Kernel::tabulated(0.5, {1.0, 3.0, 2.0});
        CHECK(tab.value(0.25) == doctest::Approx(2.0));
        CHECK(tab.value(0.75) == doctest::Approx(2.5));
        CHECK_THROWS_AS(Kernel::abel(0.5).value(0.0), DomainError);
        CHECK_THROWS_AS(Kernel::abel(1.0), DomainError);
        CHECK_THROWS_AS(Kernel::volterra(0.1), DomainError);
    }

    TEST_CASE("kernel_N closed forms and zero")
    {
        CHECK(Kernel::abel(0.5).integral(1.0) == doctest::Approx(2.0 / std::sqrt(oracle::pi)).epsilon(1e-14));
        for (const auto& k : {Kernel::volterra(), Kernel::abel(0.3), Kernel::log_sonine(),
                              Kernel::tabulated(0.1, {1.0, 2.0, 3.0})})
            CHECK(k.integral(0.0) == 0.0);
        CHECK(std::abs(Kernel::volterra().integral(1e-4) - 0.10857) <= 0.012);
        CHECK(Kernel::tabulated(0.5, {1.0, 3.0, 2.0}).integral(1.0) == doctest::Approx(0.5 * 2.0 + 0.5 * 2.5));
    }

    TEST_CASE("kernel_M closed form and the integration-by-parts route")
    {
        CHECK(Kernel::abel(0.5).first_moment(1.0) ==
              doctest::Approx(2.0 / (3.0 * std::sqrt(oracle::pi))).epsilon(1e-14));
        CHECK(Kernel::volterra().first_moment(0.0) == 0.0);
        const auto I = Kernel::volterra();
        CHECK(I.first_moment(0.5) == doctest::Approx(I.first_moment_by_parts(0.5)).epsilon(1e-7));
        for (const auto& k : {Kernel::abel(0.3), Kernel::log_sonine()})
            for (double x : {0.1, 0.4, 0.9})
                CHECK(k.first_moment(x) == doctest::Approx(k.first_moment_by_parts(x)).epsilon(1e-9));
        // tabulated moment is exact for the interpolant: nu = 1 + 2 s on [0, 1]
        const auto tab = Kernel::tabulated(0.5, {1.0, 2.0, 3.0});
        CHECK(tab.first_moment(1.0) == doctest::Approx(0.5 + 2.0 / 3.0).epsilon(1e-14));
    }

    TEST_CASE("N is monotone and its increments match quadrature of nu")
    {
        for (const auto& k : {Kernel::volterra(), Kernel::abel(0.4), Kernel::log_sonine()}) {
            // the first cell holds the log singularity of I, too slow for tanh-sinh
            double prev = k.integral(0.02);
            for (double x = 0.04; x <= 0.5; x += 0.02) {
                const double n = k.integral(x);
                CHECK(n >= prev);
                const double inc = oracle::integrate([&](double s) { return k.value(s); }, x - 0.02, x);
                CHECK(n - prev == doctest::Approx(inc).epsilon(1e-8));
                prev = n;
            }
        }
    }

    TEST_CASE("I is convex with a positive minimum")
    {
        const double h = 0.01;
        double lowest = 1e300;
        for (double x = 2.0 * h; x + h <= 2.0; x += h) {
            CHECK(volterra_I(x + h) - 2.0 * volterra_I(x) + volterra_I(x - h) >= -1e-8);
            lowest = std::min(lowest, volterra_I(x));
        }
        CHECK(lowest > 0.0);
        const double a = volterra_I_argmin();
        CHECK(a > 0.1);
        CHECK(a < 2.0);
        CHECK(Kernel::volterra().decreasing_until() == a);
    }

    TEST_CASE("x log^2(1/x) I(x) tends to 1 with deviation shrinking like 1/|log x|")
    {
        double prev = 1e300;
        for (int k = 3; k <= 8; ++k) {
            const double x = std::pow(10.0, -k);
            const double L = std::log(1.0 / x);
            const double dev = std::abs(volterra_I(x) * x * L * L - 1.0);
            CHECK(dev < prev);
            CHECK(dev * L < 3.0);
            prev = dev;
        }
    }

    TEST_CASE("finite differences of N approximate I to O(h^2)")
    {
        for (double x : {0.1, 0.4, 1.0}) {
            const double e1 = std::abs((volterra_N(x + 1e-2) - volterra_N(x - 1e-2)) / 2e-2 - volterra_I(x));
            const double e2 = std::abs((volterra_N(x + 5e-3) - volterra_N(x - 5e-3)) / 1e-2 - volterra_I(x));
            CHECK(e2 < 0.3 * e1);
        }
    }

    TEST_CASE("positivity flags")
    {
        CHECK(Kernel::volterra().positive_on(1.0));
        CHECK(Kernel::log_sonine().positive_on(0.5));
        CHECK_FALSE(Kernel::log_sonine().positive_on(1.0));
        CHECK_FALSE(Kernel::tabulated(0.5, {1.0, -1.0}).positive_on(0.5));
    }
}
