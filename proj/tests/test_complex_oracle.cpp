#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbeta/complex_oracle.hpp"
#include "qbeta/qcombinatorics.hpp"

using namespace qbeta;

TEST_CASE("first-order series in closed form") {
    // n=1, q=0.3, x=0.7: the series is the plain geometric sum -q^x/(1-q).
    const SeriesPoint pt{{0.3, 0.0}, 0.7};
    const auto s = series_twisted(1, pt);
    const double expect = -std::pow(0.3, 0.7) / 0.7;
    CHECK(std::abs(s.value - expect) < 1e-12);
    CHECK(s.tail_bound < 1e-11);
    // n=0 vanishes through the -n factor.
    CHECK(series_twisted(0, pt).value == Complex{0.0, 0.0});
    CHECK_THROWS_AS(series_twisted(1, SeriesPoint{{1.2, 0.0}, 0.0}), DivergentSpec);
}

TEST_CASE("series match the closed form without the zero mode") {
    for (const Complex q0 : {Complex{0.3, 0.0}, Complex{0.5, 0.2}})
        for (const double x0 : {0.0, 0.7})
            for (unsigned n = 1; n <= 6; ++n) {
                const SeriesPoint pt{q0, x0};
                BetaFamily tw;
                tw.kind = FamilyKind::twisted;
                tw.n = n;
                const auto s = series_twisted(n, pt);
                const Complex without = eval_family_at(tw, pt, true);
                const Complex with = eval_family_at(tw, pt, false);
                CHECK(std::abs(s.value - without) <= s.tail_bound + 1e-12);
                // The two closed forms differ by the zero mode over (1-q)^n.
                const Complex gap =
                    complex_zero_mode(pt.q) / std::pow(1.0 - pt.q, static_cast<double>(n));
                CHECK(std::abs((with - without) - gap) < 1e-9);
            }
}

TEST_CASE("two-weight series for h >= 1") {
    for (long h : {1L, 2L, 3L})
        for (unsigned n = 1; n <= 5; ++n) {
            const SeriesPoint pt{{0.5, 0.0}, 0.25};
            BetaFamily hr;
            hr.kind = FamilyKind::hr;
            hr.n = n;
            hr.h = h;
            hr.r = 1;
            const auto s = series_order_two_weights(n, h, pt);
            // Only h = 1 has a zero mode to drop.
            const Complex exact = eval_family_at(hr, pt, h == 1);
            CHECK(std::abs(s.value - exact) <= s.tail_bound + 1e-12);
        }
    CHECK_THROWS_AS(series_order_two_weights(2, 0, SeriesPoint{{0.5, 0.0}, 0.0}), DivergentSpec);
    CHECK_THROWS_AS(series_order_two_weights(2, -1, SeriesPoint{{0.5, 0.0}, 0.0}), DivergentSpec);
}

TEST_CASE("character series needs the q-power factor") {
    const auto chars3 = enumerate_characters(3);
    const SeriesPoint pt{{0.4, 0.0}, 0.0};
    BetaFamily cf;
    cf.kind = FamilyKind::chi;
    cf.n = 1;
    cf.f = 3;
    cf.chi_index = 1;
    const Complex exact = eval_family_at(cf, pt, false);
    // Corrected candidate (with q^{x+m}) converges to the exact value:
    // at n=1 it is -sum chi(m) q^m = -q(1-q)/(1-q^3) = -q/(1+q+q^2).
    const auto good = series_chi(1, chars3[1], pt, true);
    CHECK(std::abs(good.value - exact) <= good.tail_bound + 1e-12);
    CHECK(std::abs(good.value - (-0.4 / (1.0 + 0.4 + 0.16))) < 1e-10);
    // The printed candidate (no q-power) oscillates and stays O(1) away:
    // after 600 terms the character sums cancel, two terms later they do not.
    const auto bad_a = series_chi(1, chars3[1], pt, false, 1e-12, 600);
    const auto bad_b = series_chi(1, chars3[1], pt, false, 1e-12, 602);
    CHECK(std::abs(bad_a.value - bad_b.value) > 0.1); // partial sums do not settle
    CHECK(std::abs(bad_b.value - exact) > 0.1);
}

TEST_CASE("generating-function coefficients") {
    const SeriesPoint pt{{0.3, 0.0}, 0.0};
    CHECK(gf_coefficient_twisted(0, pt).value == Complex{0.0, 0.0});
    // n=1 at x=0: -sum q^m = -1/(1-q).
    const auto c1 = gf_coefficient_twisted(1, pt);
    CHECK(std::abs(c1.value - Complex{-1.0 / 0.7, 0.0}) < 1e-10);
    // Agreement with the direct series for n <= 6.
    for (const Complex q0 : {Complex{0.3, 0.0}, Complex{0.5, 0.2}})
        for (const double x0 : {0.0, 0.7})
            for (unsigned n = 1; n <= 6; ++n) {
                const SeriesPoint p{q0, x0};
                const auto gf = gf_coefficient_twisted(n, p);
                const auto sv = series_twisted(n, p);
                CHECK(std::abs(gf.value - sv.value) < 1e-8);
            }
    // Character generating function against the exact value, mod 4.
    const auto chars4 = enumerate_characters(4);
    for (unsigned n = 1; n <= 4; ++n) {
        BetaFamily cf;
        cf.kind = FamilyKind::chi;
        cf.n = n;
        cf.f = 4;
        cf.chi_index = 1;
        const auto gf = gf_coefficient_chi(n, chars4[1], pt, true);
        const Complex exact = eval_family_at(cf, pt, false);
        CHECK(std::abs(gf.value - exact) < 1e-10);
    }
}

TEST_CASE("classical limits") {
    // Base numbers tend to the Bernoulli numbers linearly in eps.
    for (unsigned n = 0; n <= 6; ++n) {
        const auto rows = carlitz_limit_rows(n, {Rational(1, 100), Rational(1, 1000)});
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].abs_err <= 5.0 / 100.0);
        CHECK(rows[1].abs_err <= 5.0 / 1000.0);
        if (n >= 1) CHECK(rows[1].abs_err < rows[0].abs_err);
    }
    // First-order polynomials approach B_n(x) under L = log q.
    CHECK(twisted_limit_err(1, 0.25, 1e-2) < 5e-3);
    CHECK(twisted_limit_err(1, 0.25, 1e-3) < 5e-4);
    CHECK(twisted_limit_err(2, 0.25, 1e-3) < 5e-3);
}

TEST_CASE("reflection holds numerically") {
    for (unsigned n = 1; n <= 4; ++n)
        for (long h : {0L, 1L, 2L}) CHECK(reflection_residual(n, h, 0.4, 0.3) < 1e-10);
}

TEST_CASE("zero mode value") {
    CHECK(std::abs(complex_zero_mode({0.5, 0.0}) - Complex{0.721348, 0.0}) < 1e-5);
}
