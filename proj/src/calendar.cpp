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

#include "mayacal/calendar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace mayacal {

namespace {

template <std::size_t N>
std::optional<int> find_name(const std::array<std::string_view, N> &names, std::string_view name) {
    for (std::size_t i = 0; i < N; ++i) {
        const auto &candidate = names[i];
        if (candidate.size() == name.size() &&
            std::equal(candidate.begin(), candidate.end(), name.begin(), [](char a, char b) {
                return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
            })) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

void require_day(DayNumber day) {
    if (day < 0) {
        throw std::out_of_range("day numbers before creation are not supported: " + std::to_string(day));
    }
}

} // namespace

TzolkinDate TzolkinDate::make(int number, int name_index) {
    if (number < 1 || number > 13) {
        throw std::out_of_range("Tzolk'in number must be in 1..13");
    }
    if (name_index < 0 || name_index > 19) {
        throw std::out_of_range("Tzolk'in name index must be in 0..19");
    }
    return {number, name_index};
}

int TzolkinDate::ordinal() const noexcept {
    // CRT over (13, 20): the ordinal o with o = number - 1 (mod 13), o = name (mod 20).
    // 40 = 1 mod 13 and 0 mod 20; 221 = 0 mod 13 and 1 mod 20.
    return static_cast<int>((40 * (number - 1) + 221 * name_index) % 260);
}

HaabDate HaabDate::make(int day, int month_index) {
    if (month_index < 0 || month_index > 18) {
        throw std::out_of_range("Haab' month index must be in 0..18");
    }
    const int max_day = month_index == 18 ? 4 : 19;
    if (day < 0 || day > max_day) {
        throw std::out_of_range("Haab' day must be in 0.." + std::to_string(max_day));
    }
    return {day, month_index};
}

LongCount long_count_from_day(DayNumber day) {
    require_day(day);
    LongCount lc;
    lc.kin = static_cast<int>(day % 20);
    day /= 20;
    lc.winal = static_cast<int>(day % 18);
    day /= 18;
    lc.tun = static_cast<int>(day % 20);
    day /= 20;
    lc.katun = static_cast<int>(day % 20);
    lc.baktun = day / 20;
    return lc;
}

DayNumber day_from_long_count(const LongCount &lc) {
    if (lc.baktun < 0 || lc.katun < 0 || lc.tun < 0 || lc.winal < 0 || lc.kin < 0) {
        throw std::out_of_range("Long Count digits must be non-negative");
    }
    if (lc.katun > 19 || lc.tun > 19 || lc.kin > 19) {
        throw std::out_of_range("katun, tun and kin must be in 0..19");
    }
    if (lc.winal > 17) {
        throw std::out_of_range("winal must be in 0..17");
    }
    const Int low = 7200 * lc.katun + 360 * lc.tun + 20 * lc.winal + lc.kin;
    return checked_add(checked_mul(lc.baktun, 144000), low);
}

TzolkinDate tzolkin_from_pos(int pos) {
    if (pos < 0 || pos >= kTzolkinDays) {
        throw std::out_of_range("Tzolk'in position must be in 0..259");
    }
    const int ordinal = (pos + 259) % 260;
    return {ordinal % 13 + 1, ordinal % 20};
}

int tzolkin_pos_of(const TzolkinDate &t) noexcept { return (t.ordinal() + 1) % 260; }

HaabDate haab_from_pos(int pos) {
    if (pos < 0 || pos >= kHaabDays) {
        throw std::out_of_range("Haab' position must be in 0..364");
    }
    const int ordinal = (pos + 364) % 365;
    return {ordinal % 20, ordinal / 20};
}

int haab_pos_of(const HaabDate &h) noexcept { return (h.ordinal() + 1) % 365; }

int tzolkin_pos_of_day(DayNumber day) { return static_cast<int>(floor_mod(day + kCreationTzolkinPos, kTzolkinDays)); }

int haab_pos_of_day(DayNumber day) { return static_cast<int>(floor_mod(day + kCreationHaabPos, kHaabDays)); }

KawilDate kawil_of_day(DayNumber day) {
    const Int shifted = day + kCreationKawilOffset;
    return {static_cast<int>(floor_mod(shifted, kKawilDays)),
            static_cast<int>(floor_mod(floor_div(shifted, kKawilDays), 4))};
}

CycleDate cycle_date(DayNumber day) {
    require_day(day);
    CycleDate c;
    c.day = day;
    c.tzolkin_pos = tzolkin_pos_of_day(day);
    c.haab_pos = haab_pos_of_day(day);
    c.tzolkin = tzolkin_from_pos(c.tzolkin_pos);
    c.haab = haab_from_pos(c.haab_pos);
    c.kawil = kawil_of_day(day);
    c.long_count = long_count_from_day(day);
    return c;
}

std::optional<DayNumber> calendar_round_day(const TzolkinDate &t, const HaabDate &h) {
    // day = tp - 160 (mod 260) and day = hp - 349 (mod 365); solvable iff the two
    // residues agree mod gcd = 5. Walk the 73 candidates of the Tzolk'in residue.
    const Int t_res = floor_mod(tzolkin_pos_of(t) - kCreationTzolkinPos, kTzolkinDays);
    const Int h_res = floor_mod(haab_pos_of(h) - kCreationHaabPos, kHaabDays);
    if ((t_res - h_res) % 5 != 0) {
        return std::nullopt;
    }
    for (Int d = t_res; d < kCalendarRoundDays; d += kTzolkinDays) {
        if (d % kHaabDays == h_res) {
            return d;
        }
    }
    return std::nullopt;
}

std::optional<int> tzolkin_name_index(std::string_view name) { return find_name(kTzolkinNames, name); }

std::optional<int> haab_month_index(std::string_view name) { return find_name(kHaabMonthNames, name); }

std::optional<int> direction_color_index(std::string_view name) { return find_name(kDirectionColorNames, name); }

} // namespace mayacal
