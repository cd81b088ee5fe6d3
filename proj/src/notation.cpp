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

#include "mayacal/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "mayacal/errors.hpp"

namespace mayacal {

namespace {

struct Number {
    Int value = 0;
    std::size_t offset = 0;
};

struct Word {
    std::string_view text;
    std::size_t offset = 0;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    DateExpression run() {
        DateExpression expr;
        skip_ws();
        if (at_end()) {
            fail(ParseErrorKind::empty_input, "empty date expression");
        }
        if (starts_long_count()) {
            expr.long_count = long_count();
        }
        skip_ws();
        if (!at_end() && is_digit(peek())) {
            const std::size_t mark = pos_;
            const Number n = number();
            skip_ws();
            const Word w = word();
            if (direction_color_index(w.text)) {
                pos_ = mark;
            } else {
                expr.tzolkin = tzolkin(n, w);
                skip_ws();
                expr.haab = haab();
            }
        }
        skip_ws();
        if (!at_end() && peek() == ',' && (expr.tzolkin || expr.long_count)) {
            ++pos_;
            skip_ws();
            if (at_end()) {
                fail(ParseErrorKind::unexpected_token, "expected a Kawil count after ','");
            }
        }
        if (!at_end() && is_digit(peek())) {
            expr.kawil = kawil();
        }
        skip_ws();
        if (!at_end()) {
            fail(ParseErrorKind::unexpected_token, "unexpected input '" + std::string(text_.substr(pos_)) + "'");
        }
        return expr;
    }

  private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_word_char(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '\'';
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string &msg) const { fail_at(kind, pos_, msg); }
    [[noreturn]] static void fail_at(ParseErrorKind kind, std::size_t offset, const std::string &msg) {
        throw ParseError(kind, offset, msg);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }

    // A leading integer followed by '.' or '(' opens a Long Count.
    bool starts_long_count() const {
        std::size_t p = pos_;
        if (p >= text_.size() || !is_digit(text_[p])) {
            return false;
        }
        while (p < text_.size() && is_digit(text_[p])) {
            ++p;
        }
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])) != 0) {
            ++p;
        }
        return p < text_.size() && (text_[p] == '.' || text_[p] == '(');
    }

    Number number() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) {
            ++pos_;
        }
        if (start == pos_) {
            fail(ParseErrorKind::unexpected_token, "expected a number");
        }
        Number n;
        n.offset = start;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n.value);
        if (ec != std::errc()) {
            fail_at(ParseErrorKind::digit_out_of_range, start, "number too large");
        }
        return n;
    }

    Word word() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && is_word_char(peek())) {
            ++pos_;
        }
        if (start == pos_) {
            fail(ParseErrorKind::unexpected_token, "expected a name");
        }
        return {text_.substr(start, pos_ - start), start};
    }

    LongCount long_count() {
        LongCount lc;
        const Number baktun = number();
        lc.baktun = baktun.value;
        skip_ws();
        if (!at_end() && peek() == '(') {
            ++pos_;
            const Number alias = number();
            skip_ws();
            if (at_end() || peek() != ')') {
                fail(ParseErrorKind::malformed_long_count, "expected ')'");
            }
            ++pos_;
            if (alias.value != baktun.value % 13) {
                fail_at(ParseErrorKind::digit_out_of_range, alias.offset,
                        "parenthesized baktun must equal baktun mod 13");
            }
        }
        std::array<Number, 4> rest;
        for (auto &digit : rest) {
            skip_ws();
            if (at_end() || peek() != '.') {
                fail(ParseErrorKind::malformed_long_count, "a Long Count has five dot-separated digits");
            }
            ++pos_;
            skip_ws();
            if (at_end() || !is_digit(peek())) {
                fail(ParseErrorKind::malformed_long_count, "expected a digit after '.'");
            }
            digit = number();
        }
        skip_ws();
        if (!at_end() && peek() == '.') {
            fail(ParseErrorKind::malformed_long_count, "a Long Count has five dot-separated digits");
        }
        constexpr std::array<Int, 4> limits = {20, 20, 18, 20};
        constexpr std::array<const char *, 4> names = {"katun", "tun", "winal", "kin"};
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i].value >= limits[i]) {
                fail_at(ParseErrorKind::digit_out_of_range, rest[i].offset,
                        std::string(names[i]) + " must be below " + std::to_string(limits[i]));
            }
        }
        lc.katun = static_cast<int>(rest[0].value);
        lc.tun = static_cast<int>(rest[1].value);
        lc.winal = static_cast<int>(rest[2].value);
        lc.kin = static_cast<int>(rest[3].value);
        return lc;
    }

    static TzolkinDate tzolkin(const Number &n, const Word &w) {
        if (n.value < 1 || n.value > 13) {
            fail_at(ParseErrorKind::digit_out_of_range, n.offset, "Tzolk'in number must be in 1..13");
        }
        const auto idx = tzolkin_name_index(w.text);
        if (!idx) {
            fail_at(ParseErrorKind::unknown_name, w.offset, "unknown Tzolk'in day name '" + std::string(w.text) + "'");
        }
        return {static_cast<int>(n.value), *idx};
    }

    HaabDate haab() {
        if (at_end()) {
            fail(ParseErrorKind::unexpected_token, "expected a Haab' day");
        }
        const Number n = number();
        const Word w = word();
        const auto idx = haab_month_index(w.text);
        if (!idx) {
            fail_at(ParseErrorKind::unknown_name, w.offset, "unknown Haab' month '" + std::string(w.text) + "'");
        }
        const Int max_day = *idx == 18 ? 4 : 19;
        if (n.value > max_day) {
            fail_at(ParseErrorKind::digit_out_of_range, n.offset,
                    "Haab' day in " + std::string(w.text) + " must be in 0.." + std::to_string(max_day));
        }
        return {static_cast<int>(n.value), *idx};
    }

    KawilDate kawil() {
        const Number n = number();
        const Word w = word();
        const auto idx = direction_color_index(w.text);
        if (!idx) {
            fail_at(ParseErrorKind::unknown_name, w.offset, "unknown direction-color '" + std::string(w.text) + "'");
        }
        if (n.value >= kKawilDays) {
            fail_at(ParseErrorKind::digit_out_of_range, n.offset, "Kawil count must be in 0..818");
        }
        return {static_cast<int>(n.value), *idx};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

DateExpression parse(std::string_view text) { return Parser(text).run(); }

DateExpression expression_from_day(DayNumber day) {
    const auto c = cycle_date(day);
    DateExpression e;
    e.long_count = c.long_count;
    e.tzolkin = c.tzolkin;
    e.haab = c.haab;
    return e;
}

std::string format_long_count(const LongCount &lc, FormatStyle style) {
    std::string lead = std::to_string(lc.baktun);
    if (style == FormatStyle::annotated && lc.baktun > 0 && lc.baktun % 13 == 0 && lc.katun == 0 && lc.tun == 0 &&
        lc.winal == 0 && lc.kin == 0) {
        lead += "(0)";
    }
    return lead + "." + std::to_string(lc.katun) + "." + std::to_string(lc.tun) + "." + std::to_string(lc.winal) +
           "." + std::to_string(lc.kin);
}

std::string format(const DateExpression &expr, FormatStyle style) {
    if (expr.empty()) {
        throw std::invalid_argument("cannot format an empty date expression");
    }
    std::string out;
    auto append = [&out](const std::string &part) {
        if (!out.empty()) {
            out += ' ';
        }
        out += part;
    };
    if (expr.long_count) {
        append(format_long_count(*expr.long_count, style));
    }
    if (expr.tzolkin) {
        append(std::to_string(expr.tzolkin->number) + " " + std::string(expr.tzolkin->name()));
    }
    if (expr.haab) {
        append(std::to_string(expr.haab->day) + " " + std::string(expr.haab->month_name()));
    }
    if (expr.kawil) {
        if (!out.empty()) {
            out += ',';
        }
        append(std::to_string(expr.kawil->count) + " " +
               std::string(kDirectionColorNames.at(static_cast<std::size_t>(expr.kawil->direction_color))));
    }
    return out;
}

std::string format_day(DayNumber day, FormatStyle style) { return format(expression_from_day(day), style); }

bool matches(const DateExpression &expr, const CycleDate &date) {
    return (!expr.long_count || *expr.long_count == date.long_count) && (!expr.tzolkin || *expr.tzolkin == date.tzolkin) &&
           (!expr.haab || *expr.haab == date.haab) && (!expr.kawil || *expr.kawil == date.kawil);
}

Resolution resolve(const DateExpression &expr, DayWindow window) {
    if (expr.empty()) {
        throw std::invalid_argument("cannot resolve an empty date expression");
    }
    if (window.lo < 0 || window.lo > window.hi) {
        throw std::invalid_argument("window must satisfy 0 <= lo <= hi");
    }
    Resolution out;
    if (expr.long_count) {
        const DayNumber d = day_from_long_count(*expr.long_count);
        if (d >= window.lo && d <= window.hi) {
            if (matches(expr, cycle_date(d))) {
                out.days.push_back(d);
            } else {
                out.inconsistent = true;
            }
        }
        return out;
    }

    // Residue class of the matching days, taken from the most selective part.
    Int residue = 0;
    Int modulus = 1;
    if (expr.tzolkin && expr.haab) {
        const auto offset = calendar_round_day(*expr.tzolkin, *expr.haab);
        if (!offset) {
            return out;
        }
        residue = *offset;
        modulus = kCalendarRoundDays;
    } else if (expr.tzolkin) {
        residue = floor_mod(tzolkin_pos_of(*expr.tzolkin) - kCreationTzolkinPos, kTzolkinDays);
        modulus = kTzolkinDays;
    } else if (expr.haab) {
        residue = floor_mod(haab_pos_of(*expr.haab) - kCreationHaabPos, kHaabDays);
        modulus = kHaabDays;
    } else {
        residue = floor_mod(expr.kawil->direction_color * kKawilDays + expr.kawil->count - kCreationKawilOffset,
                            kFourKawilDays);
        modulus = kFourKawilDays;
    }

    constexpr Int kMaxCandidates = 10'000'000;
    if ((window.hi - window.lo) / modulus > kMaxCandidates) {
        throw std::invalid_argument("window too large for a search without a Long Count");
    }
    DayNumber d = window.lo + floor_mod(residue - window.lo, modulus);
    for (; d <= window.hi; d += modulus) {
        if (matches(expr, cycle_date(d))) {
            out.days.push_back(d);
        }
        if (d > std::numeric_limits<DayNumber>::max() - modulus) {
            break;
        }
    }
    return out;
}

} // namespace mayacal
