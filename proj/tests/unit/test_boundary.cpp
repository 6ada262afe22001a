#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "../support/stats.hpp"
#include "debox/boundary.hpp"
#include "debox/domain.hpp"
#include "debox/errors.hpp"
#include "debox/rng.hpp"

using debox::ArgumentError;
using debox::correct;
using debox::CorrectionOutcome;
using debox::cotn;
using debox::Domain;
using debox::mirror;
using debox::NumericError;
using debox::RngStream;
using debox::saturate;
using debox::Strategy;
using debox::toroidal;

namespace {

// Brute-force oracles: apply one wrap / one reflection at a time until the
// value is feasible. Independent of the closed-form implementations.
double iterated_wrap(double x, double a, double b) {
    const double w = b - a;
    while (x < a || x > b) {
        if (x > b) x -= w;
        if (x < a) x += w;
    }
    return x;
}

double iterated_reflect(double x, double a, double b) {
    while (x < a || x > b) {
        if (x > b) x = b - (x - b);
        if (x < a) x = a + (a - x);
    }
    return x;
}

// Random point with overshoots up to `widths` domain-widths on each side.
std::vector<double> random_overshoot(const Domain& d, double widths, RngStream& rng) {
    std::vector<double> p(d.dimensionality());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double w = d.width(i);
        p[i] = rng.uniform_real(d.lower(i) - widths * w, d.upper(i) + widths * w);
    }
    return p;
}

}  // namespace

TEST_CASE("saturation clamps each coordinate to its nearest bound") {
    const Domain d = Domain::unit(3);
    CHECK(saturate({-0.2, 0.5, 1.3}, d) == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(saturate({0.2, 0.4, 0.9}, d) == std::vector<double>{0.2, 0.4, 0.9});
    const Domain d1 = Domain::unit(1);
    CHECK(saturate({-7.0}, d1) == std::vector<double>{0.0});  // overshoot size is irrelevant
}

TEST_CASE("toroidal wraps like a ring") {
    const Domain d1 = Domain::unit(1);
    CHECK(toroidal({1.3}, d1)[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(toroidal({-0.2}, d1)[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(toroidal({2.4}, d1)[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(toroidal({0.7}, d1)[0] == 0.7);  // feasible input untouched, bit for bit
    CHECK(toroidal({1.0}, d1)[0] == 1.0);  // the bound itself is feasible
}

TEST_CASE("mirror folds back off the bounds") {
    const Domain d1 = Domain::unit(1);
    CHECK(mirror({-0.2}, d1)[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(mirror({1.3}, d1)[0] == doctest::Approx(0.7).epsilon(1e-12));
    // Two reflections: 2.4 -> (off upper) -0.4 -> (off lower) 0.4.
    CHECK(mirror({2.4}, d1)[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(mirror({0.7}, d1)[0] == 0.7);
}

TEST_CASE("wrap and fold agree with single-step oracles over wide overshoots") {
    const Domain d({-2.0, 0.0, 1.0}, {-0.5, 1.0, 11.0});
    RngStream rng(31);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::vector<double> p = random_overshoot(d, 10.0, rng);
        const std::vector<double> t = toroidal(p, d);
        const std::vector<double> m = mirror(p, d);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double a = d.lower(i), b = d.upper(i);
            REQUIRE(t[i] >= a);
            REQUIRE(t[i] <= b);
            REQUIRE(m[i] >= a);
            REQUIRE(m[i] <= b);
            REQUIRE(t[i] ==
                    doctest::Approx(iterated_wrap(p[i], a, b)).epsilon(1e-9));
            REQUIRE(m[i] ==
                    doctest::Approx(iterated_reflect(p[i], a, b)).epsilon(1e-9));
        }
    }
}

TEST_CASE("deterministic corrections are idempotent") {
    const Domain d({-2.0, 0.0}, {-0.5, 1.0});
    RngStream rng(37);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::vector<double> p = random_overshoot(d, 10.0, rng);
        const std::vector<double> s = saturate(p, d);
        const std::vector<double> t = toroidal(p, d);
        const std::vector<double> m = mirror(p, d);
        REQUIRE(saturate(s, d) == s);
        REQUIRE(toroidal(t, d) == t);
        REQUIRE(mirror(m, d) == m);
    }
}

TEST_CASE("corrections touch only the violating coordinates") {
    const Domain d = Domain::unit(4);
    RngStream rng(41);
    const std::vector<double> p{0.25, 1.7, 0.75, -3.2};
    for (Strategy s : {Strategy::Saturation, Strategy::Toroidal, Strategy::Mirror,
                       Strategy::Cotn}) {
        const CorrectionOutcome out = correct(s, p, d, rng);
        CHECK(out.was_infeasible);
        CHECK(out.corrected[0] == 0.25);
        CHECK(out.corrected[2] == 0.75);
        CHECK(d.contains(out.corrected));
    }
}

TEST_CASE("resampling correction lands inside with the half-normal medians") {
    const Domain d1 = Domain::unit(1);
    RngStream rng(43);
    std::vector<double> lower_fixes, upper_fixes;
    lower_fixes.reserve(100000);
    upper_fixes.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        const double lo = cotn({-0.5}, d1, rng)[0];
        REQUIRE(lo >= 0.0);
        REQUIRE(lo <= 1.0);
        lower_fixes.push_back(lo);
        const double hi = cotn({1.5}, d1, rng)[0];
        REQUIRE(hi >= 0.0);
        REQUIRE(hi <= 1.0);
        upper_fixes.push_back(hi);
    }
    // Median of |N(0, 1/3)| is (1/3) * z_{0.75} ~ 0.2249; the truncation to
    // [0,1] moves it by < 1e-3. The upper branch is its mirror image.
    CHECK(std::fabs(testsupport::median(lower_fixes) - 0.2249) < 0.01);
    CHECK(std::fabs(testsupport::median(upper_fixes) - 0.7751) < 0.01);
    // Feasible input is untouched.
    CHECK(cotn({0.3}, d1, rng)[0] == 0.3);
}

TEST_CASE("resampling correction rescales to general boxes") {
    const Domain d({10.0}, {30.0});
    RngStream rng(47);
    for (int i = 0; i < 1000; ++i) {
        const double v = cotn({-5.0}, d, rng)[0];
        REQUIRE(v >= 10.0);
        REQUIRE(v <= 30.0);
    }
}

TEST_CASE("penalty passes coordinates through and flags infeasible input") {
    const Domain d = Domain::unit(2);
    RngStream rng(53);
    const CorrectionOutcome ok = correct(Strategy::Penalty, {0.2, 0.8}, d, rng);
    CHECK_FALSE(ok.was_infeasible);
    CHECK_FALSE(ok.penalty_applied);
    CHECK(ok.corrected == std::vector<double>{0.2, 0.8});

    const CorrectionOutcome bad = correct(Strategy::Penalty, {1.3, 0.5}, d, rng);
    CHECK(bad.was_infeasible);
    CHECK(bad.penalty_applied);
    CHECK(bad.corrected == std::vector<double>{1.3, 0.5});  // untouched
}

TEST_CASE("dispatch corrects with the requested strategy") {
    const Domain d = Domain::unit(2);
    RngStream rng(59);
    const CorrectionOutcome id = correct(Strategy::Saturation, {0.4, 0.6}, d, rng);
    CHECK_FALSE(id.was_infeasible);
    CHECK(id.corrected == std::vector<double>{0.4, 0.6});

    const CorrectionOutcome tor = correct(Strategy::Toroidal, {1.3, 0.5}, d, rng);
    CHECK(tor.was_infeasible);
    CHECK(tor.corrected[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(tor.corrected[1] == 0.5);

    const CorrectionOutcome fix = correct(Strategy::Cotn, {-3.0, 4.0}, d, rng);
    CHECK(fix.was_infeasible);
    CHECK(d.contains(fix.corrected));
}

TEST_CASE("range closure holds for every non-penalty strategy") {
    const Domain d({-1.0, 2.0}, {1.0, 2.5});
    RngStream rng(61);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::vector<double> p = random_overshoot(d, 10.0, rng);
        for (Strategy s : {Strategy::Saturation, Strategy::Toroidal,
                           Strategy::Mirror, Strategy::Cotn}) {
            REQUIRE(d.contains(correct(s, p, d, rng).corrected));
        }
    }
}

TEST_CASE("non-finite coordinates abort instead of being corrected") {
    const Domain d = Domain::unit(2);
    RngStream rng(67);
    CHECK_THROWS_AS(
        correct(Strategy::Saturation, {std::nan(""), 0.5}, d, rng), NumericError);
    CHECK_THROWS_AS(
        correct(Strategy::Toroidal,
                {std::numeric_limits<double>::infinity(), 0.5}, d, rng),
        NumericError);
}

TEST_CASE("strategy names round-trip") {
    for (Strategy s : {Strategy::Saturation, Strategy::Toroidal, Strategy::Mirror,
                       Strategy::Cotn, Strategy::Penalty}) {
        CHECK(debox::strategy_from_name(debox::strategy_name(s)) == s);
    }
    CHECK_THROWS_AS(debox::strategy_from_name("dismiss"), ArgumentError);
}
