#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "qbeta/characters.hpp"

using namespace qbeta;

namespace {
// Moebius function for the primitive-character count.
long moebius(unsigned long n) {
    long mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}
} // namespace

TEST_CASE("unit group structure") {
    for (unsigned long f : {1ul, 2ul, 3ul, 4ul, 8ul, 12ul, 16ul, 15ul, 24ul}) {
        const auto g = UnitGroupStructure::of(f);
        CHECK(g.phi() == euler_phi(f));
        // Each generator really has the stored order.
        for (const auto& c : g.components) {
            unsigned long x = c.generator % c.prime_power, k = 1;
            while (x != 1) {
                x = x * c.generator % c.prime_power;
                ++k;
                REQUIRE(k <= c.order);
            }
            CHECK(k == c.order);
        }
    }
}

TEST_CASE("enumeration basics") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(1)[0](7).is_one());

    const auto c4 = enumerate_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_trivial());
    CHECK(c4[1](3) == Coeff(Rational(-1)));
    CHECK(c4[1](2).is_zero());

    const auto c5 = enumerate_characters(5);
    REQUIRE(c5.size() == 4);
    CHECK(c5[0].is_trivial());
    // The order-2 character: quadratic residues mod 5 are {1,4}.
    const auto& quad = c5[2];
    CHECK(quad.value_order() == 2);
    CHECK(quad(2) == Coeff(Rational(-1)));
    CHECK(quad(3) == Coeff(Rational(-1)));
    CHECK(quad(4) == Coeff(Rational(1)));
    // An order-4 character: chi(4) = chi(2)^2 = -1.
    const auto& quartic = c5[1];
    CHECK(quartic.value_order() == 4);
    CHECK(quartic(4) == Coeff(CycloElement::root_of_unity(4, 2)));
}

TEST_CASE("multiplicativity on random unit pairs") {
    std::mt19937 rng(424242);
    for (unsigned long f = 1; f <= 24; ++f) {
        const auto g = UnitGroupStructure::of(f);
        const auto units = g.units();
        const auto chars = enumerate_characters(f);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        for (const auto& chi : chars)
            for (int t = 0; t < 200 / static_cast<int>(chars.size()) + 4; ++t) {
                const unsigned long a = units[pick(rng)], b = units[pick(rng)];
                CHECK(chi(static_cast<long>(a * b)) ==
                      chi(static_cast<long>(a)) * chi(static_cast<long>(b)));
            }
    }
}

TEST_CASE("basic value laws") {
    for (unsigned long f = 1; f <= 16; ++f) {
        for (const auto& chi : enumerate_characters(f)) {
            CHECK(chi(1).is_one());
            // Period f.
            CHECK(chi(3) == chi(3 + static_cast<long>(f)));
            CHECK(chi(-1) == chi(static_cast<long>(f) - 1));
            // Zero exactly off the units.
            for (long a = 0; a < static_cast<long>(f); ++a) {
                const bool unit = std::gcd(static_cast<unsigned long>(a), f) == 1;
                CHECK(chi(a).is_zero() == !unit);
            }
        }
    }
}

TEST_CASE("orthogonality of character sums") {
    for (unsigned long f = 1; f <= 24; ++f) {
        for (const auto& chi : enumerate_characters(f)) {
            Coeff sum{Rational(0)};
            for (long a = 0; a < static_cast<long>(f); ++a) sum += chi(a);
            if (chi.is_trivial())
                CHECK(sum == Coeff(Rational(static_cast<long>(euler_phi(f)))));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("conductors and primitivity") {
    // Trivial character mod 6 has conductor 1.
    const auto c6 = enumerate_characters(6);
    CHECK(c6[0].conductor() == 1);

    // The character mod 8 induced from the nontrivial one mod 4: depends on
    // a mod 4 only, so its conductor is 4.
    for (const auto& chi : enumerate_characters(8)) {
        bool factors_through_4 = true;
        for (unsigned long a : UnitGroupStructure::of(8).units())
            factors_through_4 =
                factors_through_4 && (a % 4 != 1 || chi(static_cast<long>(a)).is_one());
        if (factors_through_4 && !chi.is_trivial() && chi.conductor() == 4) {
            CHECK(!chi.is_primitive());
        }
    }
    CHECK(enumerate_characters(3)[1].conductor() == 3);
    CHECK(enumerate_characters(3)[1].is_primitive());

    // Primitive character counts match sum_{d|f} mu(f/d) phi(d).
    for (unsigned long f = 1; f <= 24; ++f) {
        long expected = 0;
        for (unsigned long d = 1; d <= f; ++d)
            if (f % d == 0) expected += moebius(f / d) * static_cast<long>(euler_phi(d));
        long got = 0;
        for (const auto& chi : enumerate_characters(f))
            if (chi.is_primitive()) ++got;
        CHECK(got == expected);
    }
}

TEST_CASE("character powers stay in the value group") {
    for (unsigned long f : {5ul, 7ul, 9ul, 13ul}) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned long a : UnitGroupStructure::of(f).units()) {
                Coeff v = chi(static_cast<long>(a));
                Coeff p{Rational(1)};
                for (unsigned long i = 0; i < euler_phi(f); ++i) p *= v;
                CHECK(p.is_one());
            }
        }
    }
}
