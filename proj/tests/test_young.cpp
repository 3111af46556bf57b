#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "volterra/errors.hpp"
#include "volterra/young.hpp"

using namespace volterra;

namespace {

std::vector<double> log_grid(double lo, double hi, int per_decade)
{
    std::vector<double> x;
    const int steps = static_cast<int>(std::round(std::log10(hi / lo) * per_decade));
    for (int i = 0; i <= steps; ++i)
        x.push_back(lo * std::pow(10.0, static_cast<double>(i) / per_decade));
    return x;
}

} // namespace

TEST_SUITE("young")
{
    TEST_CASE("values of the closed forms")
    {
        const auto A = YoungFunction::power(3.0, 2.0);
        CHECK(A(2.0) == doctest::Approx(16.0));
        CHECK(A.slope(2.0) == doctest::Approx(24.0));
        CHECK(A(0.0) == 0.0);
        const auto B = YoungFunction::power_log(2.0, 1.0);
        const double x = 50.0;
        CHECK(B(x) == doctest::Approx(x * x * std::log(x)).epsilon(1e-14));
        CHECK_THROWS_AS(A(-1.0), DomainError);
        CHECK_THROWS_AS(YoungFunction::power(0.5), DomainError);
        CHECK_THROWS_AS(YoungFunction::numeric({1.0}, {1.0}), DomainError);
        CHECK_THROWS_AS(YoungFunction::numeric({1.0, 2.0}, {2.0, 1.0}), DomainError);
    }

    TEST_CASE("inverse round trip")
    {
        const std::vector<YoungFunction> fs = {
            YoungFunction::power(2.0), YoungFunction::power(1.0, 3.0), YoungFunction::power_log(1.0, 1.0),
            YoungFunction::power_log(2.0, 0.5),
            YoungFunction::numeric({0.1, 1.0, 10.0, 100.0}, {0.01, 1.0, 100.0, 1e4})};
        for (const auto& A : fs)
            for (double y : log_grid(1e-6, 1e6, 10)) {
                const double x = A.inverse(y);
                CHECK(A(x) == doctest::Approx(y).epsilon(1e-9));
            }
    }

    TEST_CASE("convexity of every variant")
    {
        CHECK(YoungFunction::power(1.5).convex_on(1e-4, 1e4));
        CHECK(YoungFunction::power_log(1.0, 1.0).convex_on(1e-4, 1e6));
        CHECK(YoungFunction::power_log(1.0, 3.0).convex_on(1e-4, 1e6));
        CHECK(YoungFunction::power_log(2.0, -0.5).convex_on(1e-4, 1e6));
        CHECK(YoungFunction::numeric({1.0, 2.0, 4.0}, {1.0, 4.0, 16.0}).convex_on(0.5, 8.0));
        // the chord reaches the log branch continuously
        const auto xlogx = YoungFunction::power_log(1.0, 1.0);
        const auto& pl = std::get<YoungFunction::PowerLog>(xlogx.variant());
        CHECK(pl.x0 >= std::exp(1.0) - 1e-12);
        CHECK(pl.y0 == doctest::Approx(pl.x0 * std::log(pl.x0)).epsilon(1e-14));
    }

    TEST_CASE("conjugate of a power is the dual power")
    {
        for (double p : {1.5, 2.0, 3.0}) {
            const auto At = young_conjugate(YoungFunction::power(p, 1.0 / p));
            const double q = p / (p - 1.0);
            for (double s : log_grid(1e-3, 1e3, 3))
                CHECK(At(s) == doctest::Approx(std::pow(s, q) / q).epsilon(1e-6));
        }
    }

    TEST_CASE("biconjugate returns the function")
    {
        const auto A = YoungFunction::power_log(1.0, 1.0);
        const auto AA = young_conjugate(young_conjugate(A));
        for (double x : log_grid(1e-2, 1e4, 4))
            CHECK(AA(x) == doctest::Approx(A(x)).epsilon(1e-5));
    }

    TEST_CASE("x <= A^-1(x) A~^-1(x) <= 2x")
    {
        for (const auto& A : {YoungFunction::power(3.0), YoungFunction::power_log(1.0, 1.0),
                              YoungFunction::power_log(2.0, 2.0)}) {
            const auto At = young_conjugate(A);
            for (double x : log_grid(1e-3, 1e3, 5)) {
                const double r = A.inverse(x) * At.inverse(x) / x;
                CHECK(r >= 1.0 - 1e-6);
                CHECK(r <= 2.0 + 1e-6);
            }
        }
    }

    TEST_CASE("sublinear functions have no conjugate")
    {
        CHECK_THROWS_AS(young_conjugate(YoungFunction::power(1.0, 2.0)), DomainError);
    }

    TEST_CASE("C from a power A matches the closed form")
    {
        // A = x^q: C^{-1}(x) = x^e / e with e = 1/p + 1/q - 1
        struct Case {
            double q, p;
        };
        for (const auto c : {Case{1.0, 2.0}, Case{1.5, 2.0}, Case{1.2, 1.5}}) {
            const double e = 1.0 / c.p + 1.0 / c.q - 1.0;
            const auto C = young_C_from_A(YoungFunction::power(c.q), c.p);
            for (double y : log_grid(1e-2, 1e2, 4)) {
                const double expect = std::pow(e * y, 1.0 / e);
                CHECK(C(y) == doctest::Approx(expect).epsilon(1e-6));
            }
        }
        CHECK(young_C_from_A(YoungFunction::power(1.0), 2.0)(3.0) == doctest::Approx(2.25).epsilon(1e-9));
    }

    TEST_CASE("C from A against an independent quadrature")
    {
        const auto A = YoungFunction::power_log(1.0, 1.0);
        const double p = 2.0;
        const auto C = young_C_from_A(A, p);
        for (double y : {0.5, 2.0, 10.0}) {
            const double x = C(y);
            const double Cinv = oracle::integrate([&](double t) { return t > 1e-200 ? std::pow(t, -1.5) * A.inverse(t) : 0.0; }, 0.0, x);
            CHECK(Cinv == doctest::Approx(y).epsilon(1e-5));
        }
    }

    TEST_CASE("C of x log x grows like x^2 log^2 x")
    {
        const auto C = young_C_from_A(YoungFunction::power_log(1.0, 1.0), 2.0);
        for (double x : {1e8, 1e9}) {
            const double l = std::log(x);
            CHECK(C(x) / (x * x * l * l) == doctest::Approx(1.0).epsilon(0.02));
        }
        double prev = 0.0;
        for (double x : log_grid(1e-2, 1e6, 4)) {
            const double r = C(x) / (x * x);
            CHECK(r >= prev * (1.0 - 1e-9));
            prev = r;
        }
    }

    TEST_CASE("divergent defining integral")
    {
        CHECK_THROWS_AS(young_C_from_A(YoungFunction::power(4.0), 2.0), DomainError);
        CHECK_THROWS_AS(young_C_from_A(YoungFunction::power(2.0), 1.0), DomainError);
    }
}
