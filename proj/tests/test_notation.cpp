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

#include <random>
#include <string>

#include "mayacal/errors.hpp"
#include "mayacal/notation.hpp"

using namespace mayacal;

namespace {

// Offset and kind of the ParseError thrown for text.
std::pair<ParseErrorKind, std::size_t> parse_failure(std::string_view text) {
    try {
        parse(text);
    } catch (const ParseError &e) {
        return {e.kind(), e.offset()};
    }
    ADD_FAILURE() << "no ParseError for '" << text << "'";
    return {ParseErrorKind::empty_input, 0};
}

} // namespace

TEST(Parse, LongCountOnly) {
    const auto e = parse("9.9.16.0.0");
    ASSERT_TRUE(e.long_count);
    EXPECT_EQ(*e.long_count, (LongCount{9, 9, 16, 0, 0}));
    EXPECT_FALSE(e.tzolkin);
    EXPECT_FALSE(e.haab);
    EXPECT_FALSE(e.kawil);
}

TEST(Parse, FullExpression) {
    const auto e = parse("13.0.0.0.0 4 Ahau 3 Kankin, 588 South-Yellow");
    EXPECT_EQ(*e.long_count, (LongCount{13, 0, 0, 0, 0}));
    EXPECT_EQ(*e.tzolkin, TzolkinDate::make(4, 19));
    EXPECT_EQ(*e.haab, HaabDate::make(3, 13));
    EXPECT_EQ(*e.kawil, (KawilDate{588, 1}));
}

TEST(Parse, WhitespaceAndCase) {
    EXPECT_EQ(parse("  0 . 0 .0. 0 .0   4   ahau 8 CUMKU  "), parse("0.0.0.0.0 4 Ahau 8 Cumku"));
    EXPECT_EQ(parse("4 Ahau 8 Cumku 3 East-Red"), parse("4 Ahau 8 Cumku, 3 East-Red"));
}

TEST(Parse, CalendarRoundOnlyAndKawilOnly) {
    const auto cr = parse("4 Ahau 8 Zip");
    EXPECT_FALSE(cr.long_count);
    EXPECT_EQ(*cr.haab, HaabDate::make(8, 2));
    const auto k = parse("588 South-Yellow");
    EXPECT_EQ(*k.kawil, (KawilDate{588, 1}));
    EXPECT_FALSE(k.tzolkin);
}

TEST(Parse, BaktunAnnotation) {
    EXPECT_EQ(parse("13(0).0.0.0.0"), parse("13.0.0.0.0"));
    EXPECT_EQ(parse("26(0).0.0.0.0").long_count->baktun, 26);
    EXPECT_EQ(parse_failure("13(1).0.0.0.0").first, ParseErrorKind::digit_out_of_range);
}

TEST(Parse, ErrorOffsets) {
    EXPECT_EQ(parse_failure(""), std::make_pair(ParseErrorKind::empty_input, std::size_t{0}));
    EXPECT_EQ(parse_failure("   "), std::make_pair(ParseErrorKind::empty_input, std::size_t{3}));
    EXPECT_EQ(parse_failure("4 Foo 8 Cumku"), std::make_pair(ParseErrorKind::unknown_name, std::size_t{2}));
    EXPECT_EQ(parse_failure("4 Ahau 8 Cumkuu"), std::make_pair(ParseErrorKind::unknown_name, std::size_t{9}));
    EXPECT_EQ(parse_failure("9.9.16.18.0"), std::make_pair(ParseErrorKind::digit_out_of_range, std::size_t{7}));
    EXPECT_EQ(parse_failure("1 Ahau 5 Uayeb"), std::make_pair(ParseErrorKind::digit_out_of_range, std::size_t{7}));
    EXPECT_EQ(parse_failure("14 Ahau 8 Cumku"), std::make_pair(ParseErrorKind::digit_out_of_range, std::size_t{0}));
    EXPECT_EQ(parse_failure("9.9.16.0").first, ParseErrorKind::malformed_long_count);
    EXPECT_EQ(parse_failure("9.9.16.0.0.0").first, ParseErrorKind::malformed_long_count);
    EXPECT_EQ(parse_failure("4 Ahau 8 Cumku,").first, ParseErrorKind::unexpected_token);
    EXPECT_EQ(parse_failure("819 East-Red").first, ParseErrorKind::digit_out_of_range);
    EXPECT_EQ(parse_failure("4 Ahau 8 Cumku junk").first, ParseErrorKind::unexpected_token);
    EXPECT_EQ(parse_failure("99999999999999999999.0.0.0.0").first, ParseErrorKind::digit_out_of_range);
}

TEST(Parse, ErrorMessageCarriesOffset) {
    try {
        parse("4 Foo 8 Cumku");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("(at byte 2)"), std::string::npos) << e.what();
    }
}

TEST(Format, PlainAndAnnotated) {
    EXPECT_EQ(format_day(0), "0.0.0.0.0 4 Ahau 8 Cumku");
    EXPECT_EQ(format_day(0, FormatStyle::annotated), "0.0.0.0.0 4 Ahau 8 Cumku");
    EXPECT_EQ(format_day(1872000), "13.0.0.0.0 4 Ahau 3 Kankin");
    EXPECT_EQ(format_day(1872000, FormatStyle::annotated), "13(0).0.0.0.0 4 Ahau 3 Kankin");
    EXPECT_EQ(format_long_count({13, 0, 0, 0, 1}, FormatStyle::annotated), "13.0.0.0.1");
    EXPECT_EQ(format_long_count({26, 0, 0, 0, 0}, FormatStyle::annotated), "26(0).0.0.0.0");
    DateExpression k;
    k.kawil = KawilDate{3, 0};
    EXPECT_EQ(format(k), "3 East-Red");
    EXPECT_THROW(format(DateExpression{}), std::invalid_argument);
}

TEST(Resolve, EraEndInWindow) {
    const auto r = resolve(parse("4 Ahau 3 Kankin"), {0, 1872000});
    ASSERT_FALSE(r.days.empty());
    EXPECT_EQ(r.days.back(), 1872000);
    EXPECT_EQ(r.days.front(), 11960);
    for (std::size_t i = 1; i < r.days.size(); ++i) {
        EXPECT_EQ(r.days[i] - r.days[i - 1], 18980);
    }
}

TEST(Resolve, WindowIsInclusive) {
    EXPECT_EQ(resolve(parse("4 Ahau 8 Cumku"), {0, 0}).days, std::vector<DayNumber>{0});
    EXPECT_EQ(resolve(parse("4 Ahau 8 Cumku"), {1, 18979}).days, std::vector<DayNumber>{});
    EXPECT_EQ(resolve(parse("4 Ahau 8 Cumku"), {1, 18980}).days, std::vector<DayNumber>{18980});
}

TEST(Resolve, ImpossiblePairIsEmpty) {
    EXPECT_TRUE(resolve(parse("1 Imix 0 Pop"), {0, 1000000}).days.empty());
}

TEST(Resolve, LongCountConsistency) {
    const auto ok = resolve(parse("9.9.16.0.0 4 Ahau 8 Cumku"), {0, 2000000});
    EXPECT_EQ(ok.days, std::vector<DayNumber>{1366560});
    EXPECT_FALSE(ok.inconsistent);
    const auto bad = resolve(parse("9.9.16.0.0 1 Imix 8 Cumku"), {0, 2000000});
    EXPECT_TRUE(bad.days.empty());
    EXPECT_TRUE(bad.inconsistent);
    EXPECT_TRUE(resolve(parse("9.9.16.0.0"), {0, 10}).days.empty());
}

TEST(Resolve, KawilOnly) {
    const auto r = resolve(parse("3 East-Red"), {0, 10000});
    EXPECT_EQ(r.days, (std::vector<DayNumber>{0, 3276, 6552, 9828}));
}

TEST(Resolve, BadWindows) {
    EXPECT_THROW(resolve(parse("4 Ahau 8 Cumku"), {5, 4}), std::invalid_argument);
    EXPECT_THROW(resolve(parse("4 Ahau 8 Cumku"), {-1, 4}), std::invalid_argument);
    EXPECT_THROW(resolve(parse("3 East-Red"), {0, 4000000000000}), std::invalid_argument);
}

// ---- properties

TEST(NotationProperty, RoundTripSampledDays) {
    std::mt19937_64 rng(2012);
    std::uniform_int_distribution<DayNumber> dist(0, 2 * 1872000);
    for (int i = 0; i < 10000; ++i) {
        const DayNumber day = dist(rng);
        for (const auto style : {FormatStyle::plain, FormatStyle::annotated}) {
            const auto text = format_day(day, style);
            const auto back = parse(text);
            ASSERT_EQ(back, expression_from_day(day)) << text;
            ASSERT_EQ(day_from_long_count(*back.long_count), day);
        }
        // With the Kawil appended the expression still resolves to the same day.
        DateExpression e = expression_from_day(day);
        e.kawil = kawil_of_day(day);
        const auto parsed = parse(format(e));
        ASSERT_EQ(parsed, e);
        ASSERT_EQ(resolve(parsed, {day, day}).days, std::vector<DayNumber>{day});
    }
}

TEST(NotationProperty, ResolvedDaysMatch) {
    std::mt19937_64 rng(819);
    std::uniform_int_distribution<DayNumber> dist(0, 1872000);
    for (int i = 0; i < 200; ++i) {
        const auto c = cycle_date(dist(rng));
        DateExpression e;
        e.tzolkin = c.tzolkin;
        e.haab = c.haab;
        const auto r = resolve(e, {0, 1872000});
        ASSERT_FALSE(r.days.empty());
        for (const auto d : r.days) {
            ASSERT_TRUE(matches(e, cycle_date(d)));
        }
        ASSERT_LE(r.days.front(), 18979);
    }
}

TEST(NotationProperty, FuzzRejectsOutOfRangeDigits) {
    std::mt19937 rng(18);
    std::uniform_int_distribution<int> digit(0, 19);
    for (int i = 0; i < 2000; ++i) {
        const int baktun = digit(rng);
        const int katun = digit(rng);
        const int tun = digit(rng);
        const int kin = digit(rng);
        const int winal = 18 + (i % 2);
        const auto text = std::to_string(baktun) + "." + std::to_string(katun) + "." + std::to_string(tun) + "." +
                          std::to_string(winal) + "." + std::to_string(kin);
        EXPECT_THROW(parse(text), ParseError) << text;
    }
    for (int day = 5; day < 20; ++day) {
        const auto text = "1 Ahau " + std::to_string(day) + " Uayeb";
        EXPECT_THROW(parse(text), ParseError) << text;
    }
    for (int day = 0; day < 5; ++day) {
        EXPECT_NO_THROW(parse("1 Ahau " + std::to_string(day) + " Uayeb"));
    }
}
