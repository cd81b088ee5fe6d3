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

#include "mayacal/mayacal.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "mayacal/arith.hpp"
#include "mayacal/calendar.hpp"
#include "mayacal/correlation.hpp"
#include "mayacal/errors.hpp"
#include "mayacal/lunar.hpp"
#include "mayacal/notation.hpp"
#include "mayacal/supernumber.hpp"
#include "mayacal/verify.hpp"

struct mayacal_expr {
    mayacal::DateExpression value;
};

struct mayacal_report {
    mayacal::Report value;
};

struct mayacal_lunar_list {
    std::vector<mayacal_lunar_candidate> rows;
    std::vector<std::string> sources; // backing storage for rows[i].source
};

namespace {

using namespace mayacal;

thread_local std::string t_last_error;
thread_local std::string t_last_error_kind;
thread_local int64_t t_last_error_offset = -1;

mayacal_status fail(mayacal_status status, const char *message) {
    t_last_error = message;
    t_last_error_kind.clear();
    t_last_error_offset = -1;
    return status;
}

// Runs f and maps the core's exceptions onto status codes.
template <typename F>
mayacal_status guarded(F &&f) noexcept {
    try {
        return f();
    } catch (const ParseError &e) {
        mayacal_status s = fail(MAYACAL_E_PARSE, e.what());
        t_last_error_kind = to_string(e.kind());
        t_last_error_offset = static_cast<int64_t>(e.offset());
        return s;
    } catch (const OverflowError &e) {
        return fail(MAYACAL_E_OVERFLOW, e.what());
    } catch (const DivisionByZero &e) {
        return fail(MAYACAL_E_DIVISION_BY_ZERO, e.what());
    } catch (const std::out_of_range &e) {
        return fail(MAYACAL_E_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(MAYACAL_E_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(MAYACAL_E_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(MAYACAL_E_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(MAYACAL_E_INTERNAL, e.what());
    } catch (...) {
        return fail(MAYACAL_E_INTERNAL, "unknown error");
    }
}

#define MAYACAL_REQUIRE(cond)                                                                                          \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            return fail(MAYACAL_E_INVALID_ARGUMENT, "null argument: " #cond);                                          \
        }                                                                                                              \
    } while (0)

mayacal_status write_string(const std::string &s, char *buf, size_t capacity, size_t *len) {
    if (len != nullptr) {
        *len = s.size();
    }
    if (capacity > 0 && buf != nullptr) {
        const size_t n = std::min(capacity - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
    if (capacity <= s.size()) {
        return fail(MAYACAL_E_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return MAYACAL_OK;
}

mayacal_status write_factors(const Factorization &f, mayacal_prime_power *out, size_t capacity, size_t *count) {
    const auto &factors = f.factors();
    *count = factors.size();
    for (size_t i = 0; i < std::min(capacity, factors.size()); ++i) {
        out[i] = {factors[i].prime, factors[i].multiplicity};
    }
    if (capacity < factors.size()) {
        return fail(MAYACAL_E_BUFFER_TOO_SMALL, "factor buffer too small");
    }
    return MAYACAL_OK;
}

mayacal_rational to_c(const Rational &r) { return {r.num(), r.den()}; }
Rational from_c(mayacal_rational r) { return Rational(r.num, r.den); }

mayacal_long_count to_c(const LongCount &lc) { return {lc.baktun, lc.katun, lc.tun, lc.winal, lc.kin}; }
LongCount from_c(const mayacal_long_count &lc) { return {lc.baktun, lc.katun, lc.tun, lc.winal, lc.kin}; }

mayacal_cycle_date to_c(const CycleDate &c) {
    mayacal_cycle_date out{};
    out.day = c.day;
    out.tzolkin = {c.tzolkin.number, c.tzolkin.name_index};
    out.haab = {c.haab.day, c.haab.month_index};
    out.tzolkin_pos = c.tzolkin_pos;
    out.haab_pos = c.haab_pos;
    out.kawil = {c.kawil.count, c.kawil.direction_color};
    out.long_count = to_c(c.long_count);
    return out;
}

mayacal_civil_date to_c(const CivilDate &d) {
    return {d.year, d.month, d.day, d.calendar == CivilCalendar::julian ? MAYACAL_JULIAN : MAYACAL_GREGORIAN};
}

CivilCalendar from_c(mayacal_calendar c) {
    if (c != MAYACAL_JULIAN && c != MAYACAL_GREGORIAN) {
        throw std::invalid_argument("unknown calendar");
    }
    return c == MAYACAL_JULIAN ? CivilCalendar::julian : CivilCalendar::gregorian;
}

CivilDate from_c(const mayacal_civil_date &d) {
    return {d.year, d.month, d.day, from_c(d.calendar)};
}

InputPeriods from_c(const mayacal_periods *p) {
    if (p == nullptr) {
        return {};
    }
    return {p->mercury, p->venus, p->earth_haab, p->mars, p->jupiter, p->saturn, p->lunar_semester_a,
            p->lunar_semester_b, p->pentalunex};
}

DerivedConstants from_c(const mayacal_constants &c) {
    DerivedConstants out;
    out.N = c.N;
    std::copy(std::begin(c.X), std::end(c.X), out.X.begin());
    out.Y = c.Y;
    out.A = c.A;
    out.GC = c.GC;
    out.E = c.E;
    out.LR = c.LR;
    out.CR = c.CR;
    out.kawil4 = c.kawil4;
    return out;
}

mayacal_lunar_candidate to_c(const LunarCandidate &c) {
    mayacal_lunar_candidate out{};
    out.T = c.T;
    out.L = c.L;
    out.S = to_c(c.S);
    out.epsilon = to_c(c.epsilon);
    out.distance = {0, 1};
    out.lcm260 = c.lcm260;
    out.source = "";
    return out;
}

const char *name_at(const auto &names, int32_t index) {
    if (index < 0 || static_cast<size_t>(index) >= names.size()) {
        return nullptr;
    }
    return names[static_cast<size_t>(index)].data(); // the name tables are NUL-terminated literals
}

} // namespace

extern "C" {

const char *mayacal_version(void) { return "1.0.0"; }

const char *mayacal_status_name(mayacal_status status) {
    switch (status) {
    case MAYACAL_OK:
        return "ok";
    case MAYACAL_E_INVALID_ARGUMENT:
        return "invalid_argument";
    case MAYACAL_E_OUT_OF_RANGE:
        return "out_of_range";
    case MAYACAL_E_OVERFLOW:
        return "overflow";
    case MAYACAL_E_DIVISION_BY_ZERO:
        return "division_by_zero";
    case MAYACAL_E_PARSE:
        return "parse_error";
    case MAYACAL_E_BUFFER_TOO_SMALL:
        return "buffer_too_small";
    case MAYACAL_E_INTERNAL:
        return "internal_error";
    }
    return "unknown_status";
}

const char *mayacal_last_error(void) { return t_last_error.c_str(); }
int64_t mayacal_last_error_offset(void) { return t_last_error_offset; }
const char *mayacal_last_error_kind(void) { return t_last_error_kind.c_str(); }

// ---- arithmetic

mayacal_status mayacal_factorize(int64_t n, mayacal_prime_power *factors, size_t capacity, size_t *count) {
    MAYACAL_REQUIRE(count != nullptr);
    MAYACAL_REQUIRE(factors != nullptr || capacity == 0);
    return guarded([&] { return write_factors(factorize(n), factors, capacity, count); });
}

mayacal_status mayacal_gcd(int64_t a, int64_t b, int64_t *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = gcd(a, b);
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_lcm_many(const int64_t *values, size_t n, int64_t *out) {
    MAYACAL_REQUIRE(out != nullptr);
    MAYACAL_REQUIRE(values != nullptr || n == 0);
    return guarded([&] {
        *out = lcm_many(std::span<const Int>(values, n));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_euclid_div(int64_t n, int64_t d, int64_t *quotient, int64_t *remainder) {
    MAYACAL_REQUIRE(quotient != nullptr && remainder != nullptr);
    return guarded([&] {
        const auto qr = euclid_div(n, d);
        *quotient = qr.quotient;
        *remainder = qr.remainder;
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_round_nearest(mayacal_rational r, int64_t *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = round_nearest(from_c(r));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_rational_normalize(mayacal_rational r, mayacal_rational *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = to_c(from_c(r));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_rational_parse(const char *text, mayacal_rational *out) {
    MAYACAL_REQUIRE(text != nullptr && out != nullptr);
    return guarded([&] {
        *out = to_c(Rational::parse(text));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_rational_decimal(mayacal_rational r, int32_t places, char *buf, size_t capacity, size_t *len) {
    MAYACAL_REQUIRE(buf != nullptr || capacity == 0);
    return guarded([&] { return write_string(from_c(r).to_decimal(places), buf, capacity, len); });
}

// ---- calendar

mayacal_status mayacal_cycle_date_of(int64_t day, mayacal_cycle_date *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = to_c(cycle_date(day));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_day_from_long_count(const mayacal_long_count *lc, int64_t *day) {
    MAYACAL_REQUIRE(lc != nullptr && day != nullptr);
    return guarded([&] {
        *day = day_from_long_count(from_c(*lc));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_tzolkin_from_pos(int32_t pos, mayacal_tzolkin *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto t = tzolkin_from_pos(pos);
        *out = {t.number, t.name_index};
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_haab_from_pos(int32_t pos, mayacal_haab *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto h = haab_from_pos(pos);
        *out = {h.day, h.month_index};
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_calendar_round_day(mayacal_tzolkin t, mayacal_haab h, int64_t *day, int32_t *found) {
    MAYACAL_REQUIRE(day != nullptr && found != nullptr);
    return guarded([&] {
        const auto offset =
            calendar_round_day(TzolkinDate::make(t.number, t.name_index), HaabDate::make(h.day, h.month_index));
        *found = offset.has_value() ? 1 : 0;
        if (offset) {
            *day = *offset;
        }
        return MAYACAL_OK;
    });
}

const char *mayacal_tzolkin_name(int32_t name_index) { return name_at(kTzolkinNames, name_index); }
const char *mayacal_haab_month_name(int32_t month_index) { return name_at(kHaabMonthNames, month_index); }
const char *mayacal_direction_color_name(int32_t direction_color) {
    return name_at(kDirectionColorNames, direction_color);
}

// ---- notation

mayacal_status mayacal_expr_parse(const char *text, mayacal_expr **out) {
    MAYACAL_REQUIRE(text != nullptr && out != nullptr);
    return guarded([&] {
        *out = new mayacal_expr{parse(text)};
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_expr_from_day(int64_t day, mayacal_expr **out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = new mayacal_expr{expression_from_day(day)};
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_expr_from_fields(const mayacal_expr_fields *fields, mayacal_expr **out) {
    MAYACAL_REQUIRE(fields != nullptr && out != nullptr);
    return guarded([&] {
        DateExpression e;
        if (fields->has_long_count) {
            const auto lc = from_c(fields->long_count);
            day_from_long_count(lc); // digit range validation
            e.long_count = lc;
        }
        if (fields->has_tzolkin) {
            e.tzolkin = TzolkinDate::make(fields->tzolkin.number, fields->tzolkin.name_index);
        }
        if (fields->has_haab) {
            e.haab = HaabDate::make(fields->haab.day, fields->haab.month_index);
        }
        if (fields->has_kawil) {
            if (fields->kawil.count < 0 || fields->kawil.count >= kKawilDays || fields->kawil.direction_color < 0 ||
                fields->kawil.direction_color > 3) {
                throw std::out_of_range("Kawil count must be in 0..818 and direction-color in 0..3");
            }
            e.kawil = KawilDate{fields->kawil.count, fields->kawil.direction_color};
        }
        if (e.empty()) {
            throw std::invalid_argument("a date expression needs at least one component");
        }
        *out = new mayacal_expr{e};
        return MAYACAL_OK;
    });
}

void mayacal_expr_free(mayacal_expr *expr) { delete expr; }

mayacal_status mayacal_expr_get(const mayacal_expr *expr, mayacal_expr_fields *out) {
    MAYACAL_REQUIRE(expr != nullptr && out != nullptr);
    const auto &e = expr->value;
    *out = mayacal_expr_fields{};
    if (e.long_count) {
        out->has_long_count = 1;
        out->long_count = to_c(*e.long_count);
    }
    if (e.tzolkin) {
        out->has_tzolkin = 1;
        out->tzolkin = {e.tzolkin->number, e.tzolkin->name_index};
    }
    if (e.haab) {
        out->has_haab = 1;
        out->haab = {e.haab->day, e.haab->month_index};
    }
    if (e.kawil) {
        out->has_kawil = 1;
        out->kawil = {e.kawil->count, e.kawil->direction_color};
    }
    return MAYACAL_OK;
}

mayacal_status mayacal_expr_format(const mayacal_expr *expr, mayacal_style style, char *buf, size_t capacity,
                                   size_t *len) {
    MAYACAL_REQUIRE(expr != nullptr);
    MAYACAL_REQUIRE(buf != nullptr || capacity == 0);
    return guarded([&] {
        const auto s = style == MAYACAL_STYLE_ANNOTATED ? FormatStyle::annotated : FormatStyle::plain;
        return write_string(format(expr->value, s), buf, capacity, len);
    });
}

mayacal_status mayacal_expr_resolve(const mayacal_expr *expr, int64_t lo, int64_t hi, int64_t *days,
                                    size_t capacity, size_t *count, int32_t *inconsistent) {
    MAYACAL_REQUIRE(expr != nullptr && count != nullptr);
    MAYACAL_REQUIRE(days != nullptr || capacity == 0);
    return guarded([&] {
        const auto res = resolve(expr->value, DayWindow{lo, hi});
        *count = res.days.size();
        if (inconsistent != nullptr) {
            *inconsistent = res.inconsistent ? 1 : 0;
        }
        std::copy_n(res.days.begin(), std::min(capacity, res.days.size()), days);
        if (capacity < res.days.size()) {
            return fail(MAYACAL_E_BUFFER_TOO_SMALL, "day buffer too small");
        }
        return MAYACAL_OK;
    });
}

// ---- correlation

mayacal_status mayacal_to_jdn(int64_t day, int64_t correlation, int64_t *jdn) {
    MAYACAL_REQUIRE(jdn != nullptr);
    return guarded([&] {
        *jdn = to_jdn(day, CorrelationConstant::make(correlation));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_jdn_to_civil(int64_t jdn, mayacal_calendar calendar, mayacal_civil_date *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = to_c(jdn_to_civil(jdn, from_c(calendar)));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_civil_to_jdn(const mayacal_civil_date *date, int64_t *jdn) {
    MAYACAL_REQUIRE(date != nullptr && jdn != nullptr);
    return guarded([&] {
        *jdn = civil_to_jdn(from_c(*date));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_civil_display(const mayacal_civil_date *date, char *buf, size_t capacity, size_t *len) {
    MAYACAL_REQUIRE(date != nullptr);
    MAYACAL_REQUIRE(buf != nullptr || capacity == 0);
    return guarded([&] { return write_string(from_c(*date).display(), buf, capacity, len); });
}

mayacal_status mayacal_civil_iso(const mayacal_civil_date *date, char *buf, size_t capacity, size_t *len) {
    MAYACAL_REQUIRE(date != nullptr);
    MAYACAL_REQUIRE(buf != nullptr || capacity == 0);
    return guarded([&] { return write_string(from_c(*date).iso(), buf, capacity, len); });
}

// ---- super-number

void mayacal_default_periods(mayacal_periods *out) {
    if (out == nullptr) {
        return;
    }
    const InputPeriods p;
    *out = {p.mercury, p.venus, p.earth_haab, p.mars, p.jupiter, p.saturn, p.lunar_semester_a, p.lunar_semester_b,
            p.pentalunex};
}

mayacal_status mayacal_supernumber(const mayacal_periods *periods, int64_t *n, mayacal_prime_power *factors,
                                   size_t capacity, size_t *count) {
    MAYACAL_REQUIRE(n != nullptr && count != nullptr);
    MAYACAL_REQUIRE(factors != nullptr || capacity == 0);
    return guarded([&] {
        const auto sn = compute_supernumber(from_c(periods));
        *n = sn.value;
        return write_factors(sn.factors, factors, capacity, count);
    });
}

mayacal_status mayacal_derive_constants(const mayacal_periods *periods, mayacal_constants *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto c = derive_constants(from_c(periods));
        mayacal_constants r{};
        r.N = c.N;
        std::copy(c.X.begin(), c.X.end(), std::begin(r.X));
        r.Y = c.Y;
        r.A = c.A;
        r.GC = c.GC;
        r.E = c.E;
        r.LR = c.LR;
        r.CR = c.CR;
        r.kawil4 = c.kawil4;
        *out = r;
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_creation_residues(const mayacal_constants *c, mayacal_residues *out) {
    MAYACAL_REQUIRE(c != nullptr && out != nullptr);
    return guarded([&] {
        const auto r = creation_residues(from_c(*c));
        *out = {r.quotient,           r.mod260,           r.mod13,      r.mod20,
                r.mod73,              r.kawil_residue,    r.anchor_tzolkin_pos, r.anchor_haab_pos,
                r.shift_days,         r.creation_tzolkin_pos, r.creation_haab_pos};
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_cultural_dates(const mayacal_constants *c, mayacal_cultural_date *out) {
    MAYACAL_REQUIRE(c != nullptr && out != nullptr);
    return guarded([&] {
        const auto rows = cultural_dates(from_c(*c));
        if (rows.size() != MAYACAL_CULTURAL_DATE_COUNT) {
            return fail(MAYACAL_E_INTERNAL, "unexpected cultural date count");
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            // Labels do not depend on the periods; hand out static copies.
            static const auto names = cultural_dates(derive_constants());
            out[i] = {names[i].label.c_str(), names[i].description.c_str(), to_c(rows[i].date)};
        }
        return MAYACAL_OK;
    });
}

// ---- verification

size_t mayacal_verify_scope_count(void) { return kVerifyScopes.size(); }

const char *mayacal_verify_scope_name(size_t index) {
    return index < kVerifyScopes.size() ? kVerifyScopes[index].data() : nullptr;
}

mayacal_status mayacal_verify(const char *scope, mayacal_report **out) {
    MAYACAL_REQUIRE(scope != nullptr && out != nullptr);
    return guarded([&] {
        *out = new mayacal_report{verify(scope)};
        return MAYACAL_OK;
    });
}

size_t mayacal_report_size(const mayacal_report *report) { return report == nullptr ? 0 : report->value.size(); }

mayacal_status mayacal_report_check(const mayacal_report *report, size_t index, mayacal_check *out) {
    MAYACAL_REQUIRE(report != nullptr && out != nullptr);
    if (index >= report->value.size()) {
        return fail(MAYACAL_E_OUT_OF_RANGE, "check index out of range");
    }
    const auto &c = report->value.checks()[index];
    *out = {c.suite.c_str(), c.name.c_str(), c.expected.c_str(), c.computed.c_str(), c.pass ? 1 : 0};
    return MAYACAL_OK;
}

int32_t mayacal_report_passed(const mayacal_report *report) {
    return report != nullptr && report->value.passed() ? 1 : 0;
}

void mayacal_report_free(mayacal_report *report) { delete report; }

// ---- lunar

mayacal_status mayacal_epsilon(int64_t n, int64_t T, int64_t L, mayacal_rational *out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = to_c(epsilon(n, T, L));
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_lunar_table(int64_t n, mayacal_lunar_list **out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        auto list = std::make_unique<mayacal_lunar_list>();
        const auto rows = ratio_table(n);
        list->sources.reserve(rows.size());
        for (const auto &row : rows) {
            list->sources.push_back(row.source);
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            auto c = to_c(rows[i].candidate);
            c.flags = rows[i].modern ? MAYACAL_LUNAR_MODERN : 0;
            if (!rows[i].modern && rows[i].candidate.lcm260 < kCalendarRoundDays) {
                c.flags |= MAYACAL_LUNAR_WITHIN_CR;
            }
            if (rows[i].candidate.epsilon == Rational(0)) {
                c.flags |= MAYACAL_LUNAR_ZERO_ERROR;
            }
            c.source = list->sources[i].c_str();
            list->rows.push_back(c);
        }
        *out = list.release();
        return MAYACAL_OK;
    });
}

mayacal_status mayacal_lunar_search(int64_t n, mayacal_rational reference, int32_t max_lunations, int32_t include_all,
                                    mayacal_lunar_list **out) {
    MAYACAL_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto s = search(n, from_c(reference), max_lunations);
        auto list = std::make_unique<mayacal_lunar_list>();
        auto convert = [](const SearchRow &row) {
            auto c = to_c(row.candidate);
            c.distance = to_c(row.distance);
            c.flags = (row.within_cr ? MAYACAL_LUNAR_WITHIN_CR : 0) | (row.zero_error ? MAYACAL_LUNAR_ZERO_ERROR : 0) |
                      (row.pareto ? MAYACAL_LUNAR_PARETO : 0) | (row.best ? MAYACAL_LUNAR_BEST : 0);
            return c;
        };
        if (include_all != 0) {
            for (const auto &row : s.rows) {
                list->rows.push_back(convert(row));
            }
        } else {
            for (size_t k : s.ranked) {
                list->rows.push_back(convert(s.rows[k]));
            }
        }
        *out = list.release();
        return MAYACAL_OK;
    });
}

size_t mayacal_lunar_list_size(const mayacal_lunar_list *list) { return list == nullptr ? 0 : list->rows.size(); }

mayacal_status mayacal_lunar_list_get(const mayacal_lunar_list *list, size_t index, mayacal_lunar_candidate *out) {
    MAYACAL_REQUIRE(list != nullptr && out != nullptr);
    if (index >= list->rows.size()) {
        return fail(MAYACAL_E_OUT_OF_RANGE, "candidate index out of range");
    }
    *out = list->rows[index];
    return MAYACAL_OK;
}

void mayacal_lunar_list_free(mayacal_lunar_list *list) { delete list; }

mayacal_status mayacal_moon_age(int64_t lc, int64_t lc0, mayacal_rational s, mayacal_rational *age) {
    MAYACAL_REQUIRE(age != nullptr);
    return guarded([&] {
        *age = to_c(moon_age(lc, lc0, from_c(s)));
        return MAYACAL_OK;
    });
}

} // extern "C"
