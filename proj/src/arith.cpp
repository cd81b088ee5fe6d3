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

#include "mayacal/arith.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>

#include "mayacal/errors.hpp"

namespace mayacal {

namespace {

constexpr Int kIntMax = std::numeric_limits<Int>::max();

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Int narrow(Wide value) {
    if (value > kIntMax || value < -static_cast<Wide>(kIntMax)) {
        throw OverflowError("integer result exceeds 2^63 - 1");
    }
    return static_cast<Int>(value);
}

Int checked_mul(Int a, Int b) { return narrow(static_cast<Wide>(a) * b); }

Int checked_add(Int a, Int b) { return narrow(static_cast<Wide>(a) + b); }

Int floor_div(Int a, Int m) {
    if (m == 0) {
        throw DivisionByZero("floor_div by zero");
    }
    Int q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0))) {
        --q;
    }
    return q;
}

Int floor_mod(Int a, Int m) {
    if (m == 0) {
        throw DivisionByZero("floor_mod by zero");
    }
    Int r = a % m;
    if (r != 0 && ((r < 0) != (m < 0))) {
        r += m;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Factorization

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    Int previous = 1;
    for (const auto &f : factors_) {
        if (f.prime <= previous || !is_prime(f.prime)) {
            throw std::invalid_argument("factorization primes must be increasing primes");
        }
        if (f.multiplicity < 1) {
            throw std::invalid_argument("factorization multiplicities must be >= 1");
        }
        previous = f.prime;
    }
}

int Factorization::multiplicity(Int prime) const noexcept {
    for (const auto &f : factors_) {
        if (f.prime == prime) {
            return f.multiplicity;
        }
    }
    return 0;
}

Int Factorization::value() const {
    Int result = 1;
    for (const auto &f : factors_) {
        for (int i = 0; i < f.multiplicity; ++i) {
            result = checked_mul(result, f.prime);
        }
    }
    return result;
}

Factorization Factorization::lcm_with(const Factorization &other) const {
    std::vector<PrimePower> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || b->prime < a->prime) {
            merged.push_back(*b++);
        } else {
            merged.push_back({a->prime, std::max(a->multiplicity, b->multiplicity)});
            ++a;
            ++b;
        }
    }
    Factorization out;
    out.factors_ = std::move(merged);
    return out;
}

std::string Factorization::to_string(std::string_view times) const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &f : factors_) {
        if (!out.empty()) {
            out += times;
        }
        out += std::to_string(f.prime);
        if (f.multiplicity > 1) {
            out += '^';
            out += std::to_string(f.multiplicity);
        }
    }
    return out;
}

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

U64 mul_mod(U64 a, U64 b, U64 m) { return static_cast<U64>(static_cast<U128>(a) * b % m); }

U64 pow_mod(U64 base, U64 exp, U64 m) {
    U64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Miller-Rabin; the first twelve primes as bases are deterministic below 2^64.
bool miller_rabin(U64 n) {
    constexpr std::array<U64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    U64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const U64 a : bases) {
        if (a % n == 0) {
            continue;
        }
        U64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

U64 gcd_u(U64 a, U64 b) {
    while (b != 0) {
        const U64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's variant of Pollard rho on an odd composite. Deterministic: c walks
// 1, 2, 3, ...
U64 pollard_brent(U64 n) {
    for (U64 c = 1;; ++c) {
        auto f = [&](U64 x) { return (mul_mod(x, x, n) + c) % n; };
        U64 y = 2;
        U64 x = y;
        U64 ys = y;
        U64 g = 1;
        U64 q = 1;
        constexpr U64 m = 128;
        for (U64 r = 1; g == 1; r <<= 1U) {
            x = y;
            for (U64 i = 0; i < r; ++i) {
                y = f(y);
            }
            for (U64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (U64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u(q, n);
            }
        }
        if (g == n) {
            // Batched product hit zero; redo one step at a time.
            do {
                ys = f(ys);
                g = gcd_u(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void split(U64 n, std::map<Int, int> &out) {
    if (n == 1) {
        return;
    }
    if (miller_rabin(n)) {
        ++out[static_cast<Int>(n)];
        return;
    }
    const U64 d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

constexpr Int kTrialBound = 1000;

} // namespace

bool is_prime(Int n) noexcept {
    if (n < 2) {
        return false;
    }
    for (const Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    return miller_rabin(static_cast<U64>(n));
}

// Trial division by small factors, then Pollard rho on what is left.
Factorization factorize(Int n) {
    if (n < 1) {
        throw std::invalid_argument("factorize requires n >= 1, got " + std::to_string(n));
    }
    std::map<Int, int> found;
    for (Int p = 2; p < kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            n /= p;
            ++found[p];
        }
    }
    split(static_cast<U64>(n), found); // no factor below kTrialBound remains
    std::vector<PrimePower> factors;
    for (const auto &[p, k] : found) {
        factors.push_back({p, k});
    }
    return Factorization(std::move(factors));
}

Int gcd(Int a, Int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("gcd requires non-negative arguments");
    }
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Factorization lcm_factorization(std::span<const Int> values) {
    if (values.empty()) {
        throw std::invalid_argument("lcm of an empty list");
    }
    Factorization acc;
    for (Int v : values) {
        if (v < 1) {
            throw std::invalid_argument("lcm requires values >= 1, got " + std::to_string(v));
        }
        acc = acc.lcm_with(factorize(v));
    }
    return acc;
}

Int lcm_many(std::span<const Int> values) { return lcm_factorization(values).value(); }

Int lcm_many(std::initializer_list<Int> values) {
    return lcm_many(std::span<const Int>(values.begin(), values.size()));
}

DivMod euclid_div(Int n, Int d) {
    if (d == 0) {
        throw DivisionByZero("euclid_div by zero");
    }
    if (d < 0 || n < 0) {
        throw std::invalid_argument("euclid_div requires n >= 0 and d >= 1");
    }
    return {n / d, n % d};
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(Int num, Int den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Int Rational::floor() const noexcept {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        --q;
    }
    return q;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational operator+(const Rational &a, const Rational &b) {
    return Rational::from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                               static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator-(const Rational &a) {
    Rational r;
    r.num_ = narrow(-static_cast<Wide>(a.num_));
    r.den_ = a.den_;
    return r;
}

Rational operator*(const Rational &a, const Rational &b) {
    return Rational::from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) {
        throw DivisionByZero("rational division by zero");
    }
    return Rational::from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept {
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
    if (places < 0 || places > 18) {
        throw std::invalid_argument("decimal places must be in 0..18");
    }
    Wide scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    // Round |num| * scale / den half away from zero, then re-apply the sign.
    const Wide mag = wide_abs(static_cast<Wide>(num_)) * scale;
    Wide q = mag / den_;
    const Wide rem = mag % den_;
    if (2 * rem >= den_) {
        ++q;
    }
    const Wide int_part = q / scale;
    Wide frac_part = q % scale;
    std::string digits;
    if (places > 0) {
        digits.assign(static_cast<std::size_t>(places), '0');
        for (int i = places - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac_part % 10));
            frac_part /= 10;
        }
    }
    std::string out = (num_ < 0 && q != 0) ? "-" : "";
    out += std::to_string(static_cast<Int>(int_part));
    if (places > 0) {
        out += '.';
        out += digits;
    }
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        Int v = 0;
        if (s.empty()) {
            throw std::invalid_argument("empty integer in rational");
        }
        const auto *first = s.data();
        if (*first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
        if (ec == std::errc::result_out_of_range) {
            throw OverflowError("rational component out of range: " + std::string(s));
        }
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed rational: " + std::string(s));
        }
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
        const bool negative = !whole.empty() && whole.front() == '-';
        Int w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale = checked_mul(scale, 10);
        }
        Int f = parse_int(frac);
        Wide n = static_cast<Wide>(w < 0 ? -w : w) * scale + f;
        return from_wide(negative ? -n : n, scale);
    }
    return Rational(parse_int(text));
}

Int round_nearest(const Rational &r) {
    const Int fl = r.floor();
    // Fractional part r - fl in [0, 1) compared against 1/2 as 2*(num - fl*den) vs den.
    const Wide twice_rem = 2 * (static_cast<Wide>(r.num()) - static_cast<Wide>(fl) * r.den());
    if (twice_rem > r.den()) {
        return fl + 1;
    }
    if (twice_rem < r.den()) {
        return fl;
    }
    return r.num() > 0 ? fl + 1 : fl;
}

} // namespace mayacal
