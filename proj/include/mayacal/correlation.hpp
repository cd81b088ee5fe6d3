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

// Day numbers to Julian Day Numbers and Julian / proleptic Gregorian dates.
// Years use astronomical numbering (year 0 = 1 BC); BC appears only when
// rendering.

#include <string>

#include "mayacal/calendar.hpp"

namespace mayacal {

// Goodman-Martinez-Thompson: 13.0.0.0.0 falls on 21 December 2012 (Gregorian).
inline constexpr Int kGmtCorrelation = 584283;

struct CorrelationConstant {
    Int jdn_at_creation = kGmtCorrelation;

    // Throws std::invalid_argument for non-positive values.
    static CorrelationConstant make(Int jdn_at_creation);
    bool is_gmt() const noexcept { return jdn_at_creation == kGmtCorrelation; }
};

enum class CivilCalendar { julian, gregorian };

const char *to_string(CivilCalendar calendar) noexcept;

struct CivilDate {
    Int year = 0;
    int month = 1;
    int day = 1;
    CivilCalendar calendar = CivilCalendar::gregorian;

    // "2012-12-21", "-3113-08-11".
    std::string iso() const;
    // "21 December 2012 CE", "11 August 3114 BC".
    std::string display() const;

    friend bool operator==(const CivilDate &, const CivilDate &) = default;
};

bool is_leap_year(Int year, CivilCalendar calendar) noexcept;
int days_in_month(Int year, int month, CivilCalendar calendar);

// Throws std::out_of_range for day < 0.
Int to_jdn(DayNumber day, CorrelationConstant c = {});

// Throws std::out_of_range for jdn < 0.
CivilDate jdn_to_civil(Int jdn, CivilCalendar calendar);
// Throws std::out_of_range for an invalid date.
Int civil_to_jdn(const CivilDate &date);

struct CorrelationReport {
    DayNumber day = 0;
    Int jdn = 0;
    CorrelationConstant correlation;
    CivilDate julian;
    CivilDate gregorian;
};

CorrelationReport describe(DayNumber day, CorrelationConstant c = {});

} // namespace mayacal
