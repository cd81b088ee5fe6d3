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

#include "mayacal/correlation.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace mayacal {

namespace {

constexpr std::array<const char *, 12> kMonthNames = {"January", "February", "March",     "April",   "May",      "June",
                                                      "July",    "August",   "September", "October", "November", "December"};

} // namespace

CorrelationConstant CorrelationConstant::make(Int jdn_at_creation) {
    if (jdn_at_creation <= 0) {
        throw std::invalid_argument("correlation constant must be positive");
    }
    return CorrelationConstant{jdn_at_creation};
}

const char *to_string(CivilCalendar calendar) noexcept {
    return calendar == CivilCalendar::julian ? "julian" : "gregorian";
}

std::string CivilDate::iso() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%04lld-%02d-%02d", year < 0 ? "-" : "",
                  static_cast<long long>(year < 0 ? -year : year), month, day);
    return buf;
}

std::string CivilDate::display() const {
    std::string out = std::to_string(day) + " " + kMonthNames.at(static_cast<std::size_t>(month - 1)) + " ";
    if (year <= 0) {
        out += std::to_string(1 - year) + " BC";
    } else {
        out += std::to_string(year) + " CE";
    }
    return out;
}

bool is_leap_year(Int year, CivilCalendar calendar) noexcept {
    if (calendar == CivilCalendar::julian) {
        return floor_mod(year, 4) == 0;
    }
    return floor_mod(year, 4) == 0 && (floor_mod(year, 100) != 0 || floor_mod(year, 400) == 0);
}

int days_in_month(Int year, int month, CivilCalendar calendar) {
    constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) {
        throw std::out_of_range("month must be in 1..12");
    }
    if (month == 2 && is_leap_year(year, calendar)) {
        return 29;
    }
    return lengths[static_cast<std::size_t>(month - 1)];
}

Int to_jdn(DayNumber day, CorrelationConstant c) {
    if (day < 0) {
        throw std::out_of_range("day numbers before creation are not supported");
    }
    return checked_add(day, c.jdn_at_creation);
}

// Richards' integer algorithm, with March-based years so leap days fall at
// the end of the counting year.
CivilDate jdn_to_civil(Int jdn, CivilCalendar calendar) {
    if (jdn < 0) {
        throw std::out_of_range("Julian Day Number must be non-negative");
    }
    Int c = 0;
    Int century = 0;
    if (calendar == CivilCalendar::gregorian) {
        const Int a = jdn + 32044;
        century = floor_div(4 * a + 3, 146097);
        c = a - floor_div(146097 * century, 4);
    } else {
        c = jdn + 32082;
    }
    const Int d = floor_div(4 * c + 3, 1461);
    const Int e = c - floor_div(1461 * d, 4);
    const Int m = floor_div(5 * e + 2, 153);
    CivilDate out;
    out.calendar = calendar;
    out.day = static_cast<int>(e - floor_div(153 * m + 2, 5) + 1);
    out.month = static_cast<int>(m + 3 - 12 * floor_div(m, 10));
    out.year = 100 * century + d - 4800 + floor_div(m, 10);
    return out;
}

Int civil_to_jdn(const CivilDate &date) {
    if (date.day < 1 || date.day > days_in_month(date.year, date.month, date.calendar)) {
        throw std::out_of_range("invalid civil date " + date.iso());
    }
    const Int a = floor_div(14 - date.month, 12);
    const Int y = date.year + 4800 - a;
    const Int m = date.month + 12 * a - 3;
    const Int base = date.day + floor_div(153 * m + 2, 5) + 365 * y + floor_div(y, 4);
    if (date.calendar == CivilCalendar::gregorian) {
        return base - floor_div(y, 100) + floor_div(y, 400) - 32045;
    }
    return base - 32083;
}

CorrelationReport describe(DayNumber day, CorrelationConstant c) {
    CorrelationReport r;
    r.day = day;
    r.correlation = c;
    r.jdn = to_jdn(day, c);
    r.julian = jdn_to_civil(r.jdn, CivilCalendar::julian);
    r.gregorian = jdn_to_civil(r.jdn, CivilCalendar::gregorian);
    return r;
}

} // namespace mayacal
