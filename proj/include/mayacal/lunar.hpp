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

// Lunar ratios S = T/L measured against the super-number: the error
// |N - Rd(N/S) * S|, the lunar-table reproduction, the lunation search and
// Moon age.

#include <optional>
#include <string>
#include <vector>

#include "mayacal/arith.hpp"
#include "mayacal/calendar.hpp"
#include "mayacal/report.hpp"

namespace mayacal {

// 29.530588 days.
inline const Rational kModernSynodicMonth{29530588, 1000000};
// 29.53, the divisor used to assign lunation counts to table lengths.
inline const Rational kTableLunation{2953, 100};
inline constexpr int kDefaultMaxLunations = 643;

struct LunarCandidate {
    Int T = 0;      // days
    Int L = 0;      // lunations
    Rational S;     // T/L in lowest terms
    Rational epsilon;
    Int lcm260 = 0; // LCM(260, T)

    friend bool operator==(const LunarCandidate &, const LunarCandidate &) = default;
};

// |N - Rd(N/S) * S| for S = T/L, exact. Throws std::invalid_argument for T or
// L < 1.
Rational epsilon(Int N, Int T, Int L);
Rational epsilon(Int N, const Rational &S);

LunarCandidate make_candidate(Int N, Int T, Int L);

struct LunarTableRow {
    LunarCandidate candidate; // T, L and lcm260 are 0 on the modern row
    std::string source;
    bool modern = false;
};

// The six lunar-table lengths with L = Rd(T / 29.53), followed by the modern value.
std::vector<LunarTableRow> ratio_table(Int N);

struct SearchRow {
    LunarCandidate candidate;
    Rational distance; // |S - reference|
    bool within_cr = false; // LCM(260, T) < 18980
    bool zero_error = false;
    bool pareto = false; // non-dominated in (epsilon, distance) among within_cr rows
    bool best = false;
};

struct LunarSearch {
    Rational reference;
    int max_lunations = 0;
    std::vector<SearchRow> rows;   // one per lunation count, i = 1..max
    std::vector<std::size_t> ranked; // within_cr rows by (epsilon, distance, i)
    std::optional<std::size_t> best; // smallest distance among minimal nonzero epsilon

    const SearchRow &row_for(int lunations) const { return rows.at(static_cast<std::size_t>(lunations - 1)); }
};

// Throws std::invalid_argument for max_lunations < 1 or a non-positive reference.
LunarSearch search(Int N, const Rational &reference = kModernSynodicMonth, int max_lunations = kDefaultMaxLunations);

// (lc - lc0) mod S in [0, S). Throws std::invalid_argument for lc < lc0 or S <= 0.
Rational moon_age(DayNumber lc, DayNumber lc0, const Rational &S);

Report verify_lunar(Int N);
Report eclipse_commensuration();

} // namespace mayacal
