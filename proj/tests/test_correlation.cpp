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

#include "mayacal/correlation.hpp"

using namespace mayacal;

namespace {

CivilDate greg(Int y, int m, int d) { return {y, m, d, CivilCalendar::gregorian}; }
CivilDate jul(Int y, int m, int d) { return {y, m, d, CivilCalendar::julian}; }

} // namespace

TEST(Correlation, GmtAnchors) {
    EXPECT_EQ(to_jdn(0), 584283);
    EXPECT_EQ(to_jdn(1), 584284);
    EXPECT_EQ(to_jdn(1872000), 2456283);
    EXPECT_EQ(to_jdn(1708200), 2292483);
    EXPECT_EQ(to_jdn(1416600), 2000883);
}

TEST(Correlation, EraEndIsWinterSolstice2012) {
    const auto r = describe(1872000);
    EXPECT_EQ(r.gregorian, greg(2012, 12, 21));
    EXPECT_EQ(r.julian, jul(2012, 12, 8));
    EXPECT_EQ(r.gregorian.display(), "21 December 2012 CE");
}

TEST(Correlation, CreationDate) {
    const auto r = describe(0);
    EXPECT_EQ(r.gregorian, greg(-3113, 8, 11));
    EXPECT_EQ(r.julian, jul(-3113, 9, 6));
    EXPECT_EQ(r.gregorian.display(), "11 August 3114 BC");
    EXPECT_EQ(r.gregorian.iso(), "-3113-08-11");
    EXPECT_EQ(describe(1).gregorian, greg(-3113, 8, 12));
}

TEST(Correlation, HistoricalDatesAreGregorian) {
    EXPECT_EQ(describe(1708200).gregorian, greg(1564, 7, 3));
    EXPECT_EQ(describe(1708200).julian, jul(1564, 6, 23));
    EXPECT_EQ(describe(1416600).gregorian, greg(766, 2, 17));
    EXPECT_EQ(describe(1416600).julian, jul(766, 2, 13));
}

TEST(Correlation, AlternativeConstant) {
    const auto c = CorrelationConstant::make(584285);
    EXPECT_FALSE(c.is_gmt());
    EXPECT_EQ(describe(1872000, c).gregorian, greg(2012, 12, 23));
    EXPECT_THROW(CorrelationConstant::make(0), std::invalid_argument);
    EXPECT_THROW(to_jdn(-1), std::out_of_range);
}

TEST(Civil, KnownJdns) {
    EXPECT_EQ(civil_to_jdn(greg(2000, 1, 1)), 2451545);
    EXPECT_EQ(civil_to_jdn(jul(-4712, 1, 1)), 0);
    EXPECT_EQ(jdn_to_civil(0, CivilCalendar::julian), jul(-4712, 1, 1));
    EXPECT_EQ(jdn_to_civil(0, CivilCalendar::gregorian), greg(-4713, 11, 24));
    // The 1582 reform: Julian 4 October is followed by Gregorian 15 October.
    EXPECT_EQ(civil_to_jdn(jul(1582, 10, 4)) + 1, civil_to_jdn(greg(1582, 10, 15)));
}

TEST(Civil, LeapYears) {
    EXPECT_TRUE(is_leap_year(2000, CivilCalendar::gregorian));
    EXPECT_FALSE(is_leap_year(1900, CivilCalendar::gregorian));
    EXPECT_TRUE(is_leap_year(1900, CivilCalendar::julian));
    EXPECT_TRUE(is_leap_year(0, CivilCalendar::gregorian));
    EXPECT_TRUE(is_leap_year(-4, CivilCalendar::julian));
    EXPECT_FALSE(is_leap_year(-1, CivilCalendar::julian));
    EXPECT_EQ(days_in_month(2024, 2, CivilCalendar::gregorian), 29);
    EXPECT_THROW(days_in_month(2024, 13, CivilCalendar::gregorian), std::out_of_range);
}

TEST(Civil, InvalidDatesRejected) {
    EXPECT_THROW(civil_to_jdn(greg(1900, 2, 29)), std::out_of_range);
    EXPECT_NO_THROW(civil_to_jdn(jul(1900, 2, 29)));
    EXPECT_THROW(civil_to_jdn(greg(2012, 12, 32)), std::out_of_range);
    EXPECT_THROW(civil_to_jdn(greg(2012, 0, 1)), std::out_of_range);
    EXPECT_THROW(jdn_to_civil(-1, CivilCalendar::gregorian), std::out_of_range);
}

TEST(Civil, Rendering) {
    EXPECT_EQ(greg(1, 1, 1).display(), "1 January 1 CE");
    EXPECT_EQ(greg(0, 12, 31).display(), "31 December 1 BC");
    EXPECT_EQ(jul(766, 2, 13).iso(), "0766-02-13");
}

// ---- properties

TEST(CorrelationProperty, JdnRoundTripBothCalendars) {
    for (Int jdn = 0; jdn <= 3000000; ++jdn) {
        for (const auto cal : {CivilCalendar::julian, CivilCalendar::gregorian}) {
            const auto date = jdn_to_civil(jdn, cal);
            ASSERT_GE(date.day, 1);
            ASSERT_LE(date.day, days_in_month(date.year, date.month, cal));
            ASSERT_EQ(civil_to_jdn(date), jdn) << jdn;
        }
    }
}

TEST(CorrelationProperty, ConsecutiveDaysAreMonotone) {
    for (const auto cal : {CivilCalendar::julian, CivilCalendar::gregorian}) {
        auto prev = jdn_to_civil(0, cal);
        for (Int jdn = 1; jdn <= 3000000; ++jdn) {
            const auto cur = jdn_to_civil(jdn, cal);
            const bool next_day = cur.year == prev.year && cur.month == prev.month && cur.day == prev.day + 1;
            const bool next_month = cur.year == prev.year && cur.month == prev.month + 1 && cur.day == 1 &&
                                    prev.day == days_in_month(prev.year, prev.month, cal);
            const bool next_year = cur.year == prev.year + 1 && cur.month == 1 && cur.day == 1 && prev.month == 12 &&
                                   prev.day == 31;
            ASSERT_TRUE(next_day || next_month || next_year) << jdn;
            prev = cur;
        }
    }
}

TEST(CorrelationProperty, CalendarDriftIn2012) {
    // Between 1900 and 2099 a Julian label, read as Gregorian, falls 13 days earlier.
    for (Int day = 1870000; day < 1874000; ++day) {
        const auto r = describe(day);
        ASSERT_EQ(civil_to_jdn({r.julian.year, r.julian.month, r.julian.day, CivilCalendar::gregorian}) - r.jdn, -13);
    }
}
