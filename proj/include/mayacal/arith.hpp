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

#pragma once

// Exact integer and rational arithmetic. Values are signed 64-bit; every
// product of two values is formed in 128 bits and narrowed with a range check.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mayacal {

using Int = std::int64_t;
using Wide = __int128;

struct PrimePower {
    Int prime = 0;
    int multiplicity = 0;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

// Prime factorization with strictly increasing primes. An empty list is 1.
class Factorization {
  public:
    Factorization() = default;
    // Throws std::invalid_argument unless primes are increasing primes and
    // multiplicities are positive.
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower> &factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    int multiplicity(Int prime) const noexcept;

    // Reconstructs the integer; throws OverflowError past 2^63 - 1.
    Int value() const;

    // Max-multiplicity merge, i.e. the factorization of the LCM.
    Factorization lcm_with(const Factorization &other) const;

    // "2^3 × 3^3 × 5"; "1" for the empty product.
    std::string to_string(std::string_view times = " × ") const;

    friend bool operator==(const Factorization &, const Factorization &) = default;

  private:
    std::vector<PrimePower> factors_;
};

bool is_prime(Int n) noexcept;

// Trial division. Throws std::invalid_argument for n < 1.
Factorization factorize(Int n);

// gcd(0, b) = b. Throws std::invalid_argument for negative input.
Int gcd(Int a, Int b);

// LCM via factorization merge. Throws std::invalid_argument on an empty list
// or a value < 1, OverflowError when the result exceeds 2^63 - 1.
Int lcm_many(std::span<const Int> values);
Int lcm_many(std::initializer_list<Int> values);
Factorization lcm_factorization(std::span<const Int> values);

struct DivMod {
    Int quotient = 0;
    Int remainder = 0;

    friend bool operator==(const DivMod &, const DivMod &) = default;
};

// n = d * quotient + remainder, 0 <= remainder < d. Requires n >= 0; throws
// DivisionByZero for d == 0 and std::invalid_argument for d < 0.
DivMod euclid_div(Int n, Int d);

// Floor-based modulus with a non-negative result for any sign of a.
Int floor_mod(Int a, Int m);
Int floor_div(Int a, Int m);

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int narrow(Wide value);

class Rational {
  public:
    constexpr Rational() noexcept = default;
    Rational(Int value) noexcept : num_(value), den_(1) {} // NOLINT: implicit from integers
    // Normalized to lowest terms with a positive denominator. Throws
    // DivisionByZero for den == 0.
    Rational(Int num, Int den);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    Int floor() const noexcept;
    Rational abs() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a);

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept;

    // "104/81", or "30" when the denominator is 1.
    std::string to_string() const;
    // Decimal rendering rounded half away from zero, e.g. 29.530864.
    std::string to_decimal(int places) const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Accepts "a/b", "a", or a finite decimal such as "29.530588".
    static Rational parse(std::string_view text);

  private:
    static Rational from_wide(Wide num, Wide den);

    Int num_ = 0;
    Int den_ = 1;
};

// Nearest integer; exact halves round away from zero.
Int round_nearest(const Rational &r);

} // namespace mayacal
