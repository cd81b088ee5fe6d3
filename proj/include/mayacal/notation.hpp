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

// Text notation for Mayan dates.
//
//   expression := [long-count] [calendar-round] [[","] kawil]   (at least one part)
//   long-count := INT ["(" INT ")"] "." INT "." INT "." INT "." INT
//   calendar-round := INT TZOLKIN-NAME INT HAAB-MONTH
//   kawil := INT DIRECTION-COLOR
//
// Names are matched case-insensitively against the fixed lists in
// calendar.hpp. Whitespace may appear between any two tokens. "13(0)" is
// display sugar for baktun 13; the parenthesized value must equal baktun mod 13.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mayacal/calendar.hpp"

namespace mayacal {

struct DateExpression {
    std::optional<LongCount> long_count;
    std::optional<TzolkinDate> tzolkin;
    std::optional<HaabDate> haab;
    std::optional<KawilDate> kawil;

    bool empty() const noexcept { return !long_count && !tzolkin && !haab && !kawil; }
    friend bool operator==(const DateExpression &, const DateExpression &) = default;
};

enum class FormatStyle { plain, annotated };

// Throws ParseError carrying the byte offset of the offending token.
DateExpression parse(std::string_view text);

// Long Count plus Calendar Round of a day.
DateExpression expression_from_day(DayNumber day);

// Annotated style writes the baktun of a positive multiple of 1872000 days as
// "13(0)". Throws std::invalid_argument for an empty expression.
std::string format(const DateExpression &expr, FormatStyle style = FormatStyle::plain);
std::string format_day(DayNumber day, FormatStyle style = FormatStyle::plain);
std::string format_long_count(const LongCount &lc, FormatStyle style = FormatStyle::plain);

bool matches(const DateExpression &expr, const CycleDate &date);

struct DayWindow {
    DayNumber lo = 0;
    DayNumber hi = 0; // inclusive
};

struct Resolution {
    std::vector<DayNumber> days;
    // The Long Count alone lands in the window but another component disagrees.
    bool inconsistent = false;
};

// Every day in the window whose cycle position matches all present parts.
// Throws std::invalid_argument for an empty expression, a window with
// lo < 0 or lo > hi, or a search that would exceed 10^7 candidates.
Resolution resolve(const DateExpression &expr, DayWindow window);

} // namespace mayacal
