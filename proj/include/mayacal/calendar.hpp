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

// Day number <-> cycle position conversions anchored at the creation epoch
// (day 0 = 0.0.0.0.0 4 Ahau 8 Cumku, Kawil 3 East-Red).
//
// Positions use the one-based convention reduced mod the cycle: Tzolk'in
// position p in 0..259 denotes ordinal (p - 1) mod 260 of the ordered list
// 1 Imix .. 13 Ahau (so 0 stands for 260, 13 Ahau), and Haab' position p in
// 0..364 denotes ordinal (p - 1) mod 365 of 0 Pop .. 4 Uayeb. This is the
// reading under which creation sits at {160; 349}.

#include <array>
#include <optional>
#include <string_view>

#include "mayacal/arith.hpp"

namespace mayacal {

using DayNumber = Int;

inline constexpr Int kTzolkinDays = 260;
inline constexpr Int kHaabDays = 365;
inline constexpr Int kCalendarRoundDays = 18980;
inline constexpr Int kKawilDays = 819;
inline constexpr Int kFourKawilDays = 3276;
inline constexpr Int kEraDays = 1872000;

inline constexpr Int kCreationTzolkinPos = 160;
inline constexpr Int kCreationHaabPos = 349;
inline constexpr Int kCreationKawilOffset = 3;

inline constexpr std::array<std::string_view, 20> kTzolkinNames = {
    "Imix", "Ik",  "Akbal", "Kan",   "Chicchan", "Cimi",  "Manik",   "Lamat", "Muluc", "Oc",
    "Chuen", "Eb", "Ben",   "Ix",    "Men",      "Cib",   "Caban",   "Etznab", "Cauac", "Ahau"};

inline constexpr std::array<std::string_view, 19> kHaabMonthNames = {
    "Pop", "Uo",  "Zip", "Zotz", "Tzec", "Xul", "Yaxkin", "Mol",   "Chen",  "Yax",
    "Zac", "Ceh", "Mac", "Kankin", "Muan", "Pax", "Kayab", "Cumku", "Uayeb"};

inline constexpr std::array<std::string_view, 4> kDirectionColorNames = {"East-Red", "South-Yellow", "West-Black",
                                                                          "North-White"};

struct TzolkinDate {
    int number = 1;     // 1..13
    int name_index = 0; // Imix = 0 .. Ahau = 19

    // Throws std::out_of_range for number outside 1..13 or name outside 0..19.
    static TzolkinDate make(int number, int name_index);
    std::string_view name() const { return kTzolkinNames.at(static_cast<std::size_t>(name_index)); }
    int ordinal() const noexcept; // 0..259 in the list 1 Imix .. 13 Ahau

    friend bool operator==(const TzolkinDate &, const TzolkinDate &) = default;
};

struct HaabDate {
    int day = 0;         // 0..19, 0..4 in Uayeb
    int month_index = 0; // Pop = 0 .. Cumku = 17, Uayeb = 18

    static HaabDate make(int day, int month_index);
    std::string_view month_name() const { return kHaabMonthNames.at(static_cast<std::size_t>(month_index)); }
    int ordinal() const noexcept { return month_index * 20 + day; }

    friend bool operator==(const HaabDate &, const HaabDate &) = default;
};

struct LongCount {
    Int baktun = 0;
    int katun = 0;
    int tun = 0;
    int winal = 0;
    int kin = 0;

    friend bool operator==(const LongCount &, const LongCount &) = default;
};

// Mixed-radix digit expansion (baktun unbounded).
LongCount long_count_from_day(DayNumber day);
// Throws std::out_of_range for kin/tun/katun >= 20, winal >= 18 or negative digits.
DayNumber day_from_long_count(const LongCount &lc);

struct KawilDate {
    int count = 0;           // 0..818
    int direction_color = 0; // 0 East-Red .. 3 North-White

    friend bool operator==(const KawilDate &, const KawilDate &) = default;
};

struct CycleDate {
    DayNumber day = 0;
    TzolkinDate tzolkin;
    HaabDate haab;
    int tzolkin_pos = 0;
    int haab_pos = 0;
    KawilDate kawil;
    LongCount long_count;

    friend bool operator==(const CycleDate &, const CycleDate &) = default;
};

TzolkinDate tzolkin_from_pos(int pos);
int tzolkin_pos_of(const TzolkinDate &t) noexcept;
HaabDate haab_from_pos(int pos);
int haab_pos_of(const HaabDate &h) noexcept;

int tzolkin_pos_of_day(DayNumber day);
int haab_pos_of_day(DayNumber day);
KawilDate kawil_of_day(DayNumber day);

// Throws std::out_of_range for day < 0.
CycleDate cycle_date(DayNumber day);

// Offset in [0, 18980) of the day carrying both components, or nullopt when the
// pair never occurs (only 18980 of the 260 * 365 pairs do).
std::optional<DayNumber> calendar_round_day(const TzolkinDate &t, const HaabDate &h);

// Parses exactly one of the fixed spellings, case-insensitively.
std::optional<int> tzolkin_name_index(std::string_view name);
std::optional<int> haab_month_index(std::string_view name);
std::optional<int> direction_color_index(std::string_view name);

} // namespace mayacal
