// Copyright 2026 The mayacal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "mayacal/arith.hpp"
#include "mayacal/errors.hpp"

using namespace mayacal;

namespace {

constexpr Int kMax = std::numeric_limits<Int>::max();

} // namespace

TEST(Factorize, PeriodRows) {
    EXPECT_EQ(factorize(116).to_string(), "2^2 × 29");
    EXPECT_EQ(factorize(584).to_string(), "2^3 × 73");
    EXPECT_EQ(factorize(365).to_string(), "5 × 73");
    EXPECT_EQ(factorize(780).to_string(), "2^2 × 3 × 5 × 13");
    EXPECT_EQ(factorize(399).to_string(), "3 × 7 × 19");
    EXPECT_EQ(factorize(378).to_string(), "2 × 3^3 × 7");
    EXPECT_EQ(factorize(177).to_string(), "3 × 59");
    EXPECT_EQ(factorize(178).to_string(), "2 × 89");
    EXPECT_EQ(factorize(148).to_string(), "2^2 × 37");
}

TEST(Factorize, SmallAndSpecial) {
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(factorize(1).to_string(), "1");
    EXPECT_EQ(factorize(3276).to_string(), "2^2 × 3^2 × 7 × 13");
    EXPECT_EQ(factorize(2).to_string(), "2");
    EXPECT_EQ(factorize(768039133778280).to_string(), "2^3 × 3^3 × 5 × 7 × 13 × 19 × 29 × 37 × 59 × 73 × 89");
    EXPECT_EQ(factorize(768039133778280).to_string("·"), "2^3·3^3·5·7·13·19·29·37·59·73·89");
}

TEST(Factorize, LargestPrimeBelow63Bits) {
    // 2^63 - 25 is prime.
    const Int p = kMax - 24;
    const auto f = factorize(p);
    ASSERT_EQ(f.factors().size(), 1U);
    EXPECT_EQ(f.factors()[0].prime, p);
    EXPECT_EQ(factorize(kMax).to_string(), "7^2 × 73 × 127 × 337 × 92737 × 649657");
}

TEST(Factorize, RejectsNonPositive) {
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(-12), std::invalid_argument);
}

TEST(Factorization, ValidatingConstructor) {
    EXPECT_THROW(Factorization({{4, 1}}), std::invalid_argument);
    EXPECT_THROW(Factorization({{3, 1}, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(Factorization({{2, 0}}), std::invalid_argument);
    const Factorization f({{2, 3}, {5, 1}});
    EXPECT_EQ(f.value(), 40);
    EXPECT_EQ(f.multiplicity(2), 3);
    EXPECT_EQ(f.multiplicity(7), 0);
}

TEST(Factorization, ValueOverflow) {
    const Factorization f({{2, 63}});
    EXPECT_THROW(f.value(), OverflowError);
}

TEST(Factorization, LcmMergeTakesMaxMultiplicity) {
    const auto m = factorize(360).lcm_with(factorize(3276));
    EXPECT_EQ(m.value(), 32760);
    EXPECT_EQ(m.to_string(), "2^3 × 3^2 × 5 × 7 × 13");
}

TEST(IsPrime, Basics) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(73));
    EXPECT_FALSE(is_prime(91));
    EXPECT_TRUE(is_prime(kMax - 24));
}

TEST(Gcd, XultunNumbers) {
    // The first pair shares 3 × 56940; all four together only 56940.
    EXPECT_EQ(gcd(341640, 1195740), 170820);
    EXPECT_EQ(gcd(gcd(gcd(341640, 1195740), 1765140), 2448420), 56940);
    EXPECT_EQ(gcd(341640, 1765140), 56940);
    EXPECT_EQ(gcd(0, 7), 7);
    EXPECT_EQ(gcd(7, 0), 7);
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_THROW(gcd(-4, 6), std::invalid_argument);
}

TEST(LcmMany, NamedCycles) {
    EXPECT_EQ(lcm_many({260, 365}), 18980);
    EXPECT_EQ(lcm_many({360, 365, 3276}), 2391480);
    EXPECT_EQ(lcm_many({260, 365, 144000}), 136656000);
    EXPECT_EQ(lcm_many({260, 2392}), 11960);
    EXPECT_EQ(lcm_many({11960, 18980}), 873080);
    EXPECT_EQ(lcm_many({116, 584, 365, 780, 399, 378, 177, 178, 148}), 768039133778280);
    EXPECT_EQ(lcm_many({7}), 7);
}

TEST(LcmMany, Errors) {
    EXPECT_THROW(lcm_many(std::span<const Int>{}), std::invalid_argument);
    EXPECT_THROW(lcm_many({0, 5}), std::invalid_argument);
    EXPECT_THROW(lcm_many({kMax - 24, kMax - 58}), OverflowError);
}

TEST(EuclidDiv, Identities) {
    EXPECT_EQ(euclid_div(20757814426440, 956592000), (DivMod{21699, 724618440}));
    EXPECT_EQ(euclid_div(20757814426440, 136656000), (DivMod{151898, 41338440}));
    EXPECT_EQ(euclid_div(0, 5), (DivMod{0, 0}));
    EXPECT_THROW(euclid_div(5, 0), DivisionByZero);
    EXPECT_THROW(euclid_div(5, -2), std::invalid_argument);
    EXPECT_THROW(euclid_div(-5, 2), std::invalid_argument);
}

TEST(FloorMod, NegativeOperands) {
    EXPECT_EQ(floor_mod(-1, 260), 259);
    EXPECT_EQ(floor_div(-1, 260), -1);
    EXPECT_EQ(floor_mod(520, 260), 0);
}

TEST(Checked, Overflow) {
    EXPECT_THROW(checked_mul(kMax, 2), OverflowError);
    EXPECT_THROW(checked_add(kMax, 1), OverflowError);
    EXPECT_EQ(checked_mul(3037000499, 3037000499), 9223372030926249001);
    EXPECT_THROW(narrow(Wide{kMax} + 1), OverflowError);
}

TEST(Rational, Normalization) {
    EXPECT_EQ(Rational(11960, 405), Rational(2392, 81));
    EXPECT_EQ(Rational(4, -6).num(), -2);
    EXPECT_EQ(Rational(4, -6).den(), 3);
    EXPECT_EQ(Rational(0, -9).den(), 1);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_THROW(a / Rational(0), DivisionByZero);
    EXPECT_LT(Rational(4400, 149), Rational(2392, 81));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).abs(), Rational(7, 2));
}

TEST(Rational, Rendering) {
    EXPECT_EQ(Rational(104, 81).to_string(), "104/81");
    EXPECT_EQ(Rational(30).to_string(), "30");
    EXPECT_EQ(Rational(2392, 81).to_decimal(6), "29.530864");
    EXPECT_EQ(Rational(4400, 149).to_decimal(6), "29.530201");
    EXPECT_EQ(Rational(104, 81).to_decimal(2), "1.28");
    EXPECT_EQ(Rational(1, 2).to_decimal(0), "1");
    EXPECT_EQ(Rational(-1, 2).to_decimal(0), "-1");
    EXPECT_EQ(Rational(-1, 3).to_decimal(3), "-0.333");
    EXPECT_EQ(Rational(5).to_decimal(2), "5.00");
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("2392/81"), Rational(2392, 81));
    EXPECT_EQ(Rational::parse("29.530588"), Rational(29530588, 1000000));
    EXPECT_EQ(Rational::parse("30"), Rational(30));
    EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("29.5x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(RoundNearest, HalvesAwayFromZero) {
    EXPECT_EQ(round_nearest(Rational(1, 2)), 1);
    EXPECT_EQ(round_nearest(Rational(-1, 2)), -1);
    EXPECT_EQ(round_nearest(Rational(5, 2)), 3);
    EXPECT_EQ(round_nearest(Rational(104, 81)), 1);
    EXPECT_EQ(round_nearest(Rational(1721, 150)), 11);
    EXPECT_EQ(round_nearest(Rational(308, 39)), 8);
    EXPECT_EQ(round_nearest(Rational(-7, 3)), -2);
}

// ---- properties

TEST(ArithProperty, LcmTimesGcdIsProduct) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> dist(1, 3000000);
    for (int i = 0; i < 20000; ++i) {
        const Int a = dist(rng);
        const Int b = dist(rng);
        ASSERT_EQ(Wide{lcm_many({a, b})} * gcd(a, b), Wide{a} * b) << a << " " << b;
    }
}

TEST(ArithProperty, FactorizationRoundTrip) {
    for (Int n = 1; n <= 100000; ++n) {
        const auto f = factorize(n);
        ASSERT_EQ(f.value(), n);
        for (const auto &pp : f.factors()) {
            ASSERT_TRUE(is_prime(pp.prime)) << n;
        }
    }
}

TEST(ArithProperty, EuclidDivRandom63Bit) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> n_dist(0, kMax);
    std::uniform_int_distribution<Int> d_dist(1, kMax);
    std::uniform_int_distribution<Int> small(1, 1000000);
    for (int i = 0; i < 100000; ++i) {
        const Int n = n_dist(rng);
        const Int d = (i % 2 == 0) ? d_dist(rng) : small(rng);
        const auto qr = euclid_div(n, d);
        ASSERT_GE(qr.remainder, 0);
        ASSERT_LT(qr.remainder, d);
        ASSERT_EQ(Wide{d} * qr.quotient + qr.remainder, Wide{n});
    }
}

TEST(ArithProperty, LcmManyPermutationInvariant) {
    std::vector<Int> periods = {116, 584, 365, 780, 399, 378, 177, 178, 148};
    std::mt19937 rng(3);
    const Int expected = lcm_many(periods);
    for (int i = 0; i < 200; ++i) {
        std::shuffle(periods.begin(), periods.end(), rng);
        ASSERT_EQ(lcm_many(periods), expected);
    }
}

TEST(ArithProperty, RationalScalingInvariant) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> dist(-100000, 100000);
    std::uniform_int_distribution<Int> pos(1, 100000);
    for (int i = 0; i < 20000; ++i) {
        const Int n = dist(rng);
        const Int d = pos(rng);
        const Int k = pos(rng);
        const Rational r(n, d);
        ASSERT_EQ(Rational(n * k, d * k), r);
        ASSERT_EQ(std::gcd(r.num(), r.den()), r.num() == 0 ? r.den() : 1);
        ASSERT_GT(r.den(), 0);
    }
}
