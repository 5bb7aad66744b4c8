#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tagdecay/decay.hpp"
#include "tagdecay/errors.hpp"
#include "tagdecay/rng.hpp"
#include "support.hpp"

using namespace tagdecay;
using namespace testsupport;

namespace {
Duration secs(double s) { return Duration::seconds(s); }
}

TEST_CASE("decay params reject invalid values") {
    CHECK_THROWS_AS(DecayParams(1.0, 0.0), ConstraintError);
    CHECK_THROWS_AS(DecayParams(1.0, -0.3), ConstraintError);
    CHECK_THROWS_AS(DecayParams(-0.1, 1.0), ConstraintError);
    CHECK_THROWS_AS(DecayParams(1.0, std::nan("")), ConstraintError);
    CHECK_THROWS_AS(DecayParams(std::numeric_limits<double>::infinity(), 1.0),
                    ConstraintError);
    const DecayParams ok(0.0, 1e-12);
    CHECK(ok.x0() == 0.0);
    CHECK(ok.m() == 1e-12);
}

TEST_CASE("evaluate_interest matches the closed form") {
    CHECK(evaluate_interest(DecayParams(1.0, 0.5), secs(0.0)) == 1.0);
    CHECK(evaluate_interest(DecayParams(0.0, 2.0), secs(7.3)) == 0.0);

    // exp(-1), frozen from the long-double series oracle.
    const double expected = 0.36787944117144233;
    CHECK(close_rel(static_cast<double>(oracle_exp(-1.0L)), expected, 1e-15));
    CHECK(close_rel(evaluate_interest(DecayParams(1.0, 0.5), secs(2.0)), expected, 1e-15));

    CHECK_THROWS_AS(evaluate_interest(DecayParams(1.0, 0.5), secs(-0.1)), ConstraintError);
}

TEST_CASE("forgetfulness_rate is -m*x") {
    CHECK(forgetfulness_rate(0.0, 0.7) == 0.0);
    CHECK(forgetfulness_rate(1.0, 0.5) == -0.5);
    CHECK(forgetfulness_rate(2.0, 0.25) == -0.5);  // exact product
    CHECK(forgetfulness_rate(-2.0, 0.25) == 0.5);  // opposite sign to x
    CHECK_THROWS_AS(forgetfulness_rate(1.0, 0.0), ConstraintError);
    CHECK_THROWS_AS(forgetfulness_rate(1.0, -1.0), ConstraintError);
}

TEST_CASE("forgetfulness_rate agrees with the centered difference of the curve") {
    Rng rng(2001);
    for (int i = 0; i < 50; ++i) {
        const double x0 = rng.uniform(0.5, 10.0);
        const double m = rng.uniform(0.5, 2.0);
        const double t = rng.uniform(0.1, 3.0);
        const DecayParams params(x0, m);
        for (const double h : {1e-3, 1e-4}) {
            const double diff = (evaluate_interest(params, secs(t + h)) -
                                 evaluate_interest(params, secs(t - h))) /
                                (2.0 * h);
            const double rate = forgetfulness_rate(evaluate_interest(params, secs(t)), m);
            // Truncation term is m^3 x(t) h^2 / 6 plus cancellation noise.
            const double bound =
                m * m * m * evaluate_interest(params, secs(t - h)) * h * h / 6.0 * 1.2 +
                x0 * 1e-11;
            CHECK(std::fabs(rate - diff) <= bound);
        }
    }
}

TEST_CASE("integrate_euler basics") {
    CHECK(integrate_euler(DecayParams(1.0, 0.5), secs(0.0), 10) == 1.0);
    // Single step lands exactly on zero: x0 * (1 - m*t) with m*t = 1.
    CHECK(integrate_euler(DecayParams(1.0, 0.5), secs(2.0), 1) == 0.0);

    const double closed = evaluate_interest(DecayParams(1.0, 0.5), secs(2.0));
    const double euler = integrate_euler(DecayParams(1.0, 0.5), secs(2.0), 100000);
    CHECK(close_abs(euler, closed, 2e-6));

    CHECK_THROWS_AS(integrate_euler(DecayParams(1.0, 0.5), secs(2.0), 0), ArgumentError);
}

TEST_CASE("integrate_euler rejects unstable step sizes and names the fix") {
    // m*t = 6, so fewer than 6 steps puts the per-step factor below -1 ... 0.
    try {
        integrate_euler(DecayParams(1.0, 3.0), secs(2.0), 4);
        FAIL("expected StepSizeError");
    } catch (const StepSizeError& e) {
        CHECK(e.min_steps() == 6);
        CHECK(std::string(e.what()).find("6") != std::string::npos);
        CHECK(integrate_euler(DecayParams(1.0, 3.0), secs(2.0), e.min_steps()) == 0.0);
    }
}

TEST_CASE("integrate_euler converges at first order") {
    const DecayParams params(1.0, 0.5);
    const double closed = evaluate_interest(params, secs(10.0));
    double prev_err = 0.0;
    std::uint64_t steps = 6250;
    for (int rung = 0; rung < 6; ++rung, steps *= 2) {
        const double err = std::fabs(integrate_euler(params, secs(10.0), steps) - closed);
        if (rung > 0) {
            const double ratio = prev_err / err;
            CHECK(ratio >= 2.0 / 1.2);
            CHECK(ratio <= 2.0 * 1.2);
        }
        prev_err = err;
    }
}

TEST_CASE("half_life") {
    CHECK(close_rel(half_life(std::log(2.0)).count_seconds(), 1.0, 1e-15));
    // ln(2)/0.1, frozen from the long-double constant.
    CHECK(close_rel(half_life(0.1).count_seconds(), 6.931471805599453, 1e-15));
    CHECK_THROWS_AS(half_life(0.0), ConstraintError);
    CHECK_THROWS_AS(half_life(-2.0), ConstraintError);

    // Interest at one half-life is x0/2.
    const DecayParams params(8.0, 0.37);
    CHECK(close_rel(evaluate_interest(params, half_life(0.37)), 4.0, 1e-12));
}

TEST_CASE("decay_curve samples the closed form") {
    const auto endpoints = decay_curve(DecayParams(1.0, 0.5), secs(2.0), 2);
    REQUIRE(endpoints.size() == 2);
    CHECK(endpoints[0].t == 0.0);
    CHECK(endpoints[0].x == 1.0);
    CHECK(endpoints[1].t == 2.0);
    CHECK(close_rel(endpoints[1].x, 0.36787944117144233, 1e-15));

    const auto zero = decay_curve(DecayParams(0.0, 1.0), secs(5.0), 3);
    for (const auto& p : zero) CHECK(p.x == 0.0);

    const auto five = decay_curve(DecayParams(1.0, 0.5), secs(4.0), 5);
    REQUIRE(five.size() == 5);
    for (std::size_t i = 0; i + 1 < five.size(); ++i) {
        CHECK(five[i + 1].x < five[i].x);
    }
    for (std::size_t i = 0; i + 2 < five.size(); ++i) {
        CHECK(five[i].x - 2.0 * five[i + 1].x + five[i + 2].x >= 0.0);
    }

    CHECK_THROWS_AS(decay_curve(DecayParams(1.0, 0.5), secs(2.0), 1), ArgumentError);
    CHECK_THROWS_AS(decay_curve(DecayParams(1.0, 0.5), secs(0.0), 4), ArgumentError);
}

TEST_CASE("property: semigroup law") {
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        const double x0 = rng.uniform(0.0, 100.0);
        const double m = std::exp(rng.uniform(std::log(1e-6), std::log(10.0)));
        const double t1 = rng.uniform(0.0, 20.0);
        const double t2 = rng.uniform(0.0, 20.0);
        const DecayParams params(x0, m);

        const double direct = evaluate_interest(params, secs(t1 + t2));
        const double mid = evaluate_interest(params, secs(t1));
        const double two_leg = mid == 0.0
                                   ? 0.0
                                   : evaluate_interest(DecayParams(mid, m), secs(t2));
        CHECK(close_rel(direct, two_leg, 1e-12));
    }
}

TEST_CASE("property: monotone decay, positivity, ordering in m") {
    Rng rng(43);
    for (int i = 0; i < 1000; ++i) {
        const double x0 = rng.uniform(1e-3, 100.0);
        const double m_small = rng.uniform(1e-4, 1.0);
        const double m_large = m_small + rng.uniform(1e-4, 1.0);
        const double t1 = rng.uniform(0.0, 50.0);
        const double t2 = t1 + rng.uniform(1e-6, 50.0);

        const DecayParams params(x0, m_small);
        const double early = evaluate_interest(params, secs(t1));
        const double late = evaluate_interest(params, secs(t2));
        CHECK(late < early);
        CHECK(late > 0.0);

        if (t2 > 0.0) {
            CHECK(evaluate_interest(DecayParams(x0, m_large), secs(t2)) < late);
        }
    }
}
