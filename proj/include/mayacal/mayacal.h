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

#ifndef MAYACAL_MAYACAL_H
#define MAYACAL_MAYACAL_H

/*
 * C interface to the mayacal library.
 *
 * Every fallible function returns a mayacal_status. On failure the message
 * for the calling thread is available from mayacal_last_error() until the
 * next failing call on that thread. Output parameters are left untouched on
 * failure unless stated otherwise.
 *
 * Objects returned through a pointer-to-pointer (mayacal_expr, mayacal_report,
 * mayacal_lunar_list) are owned by the caller and released with the matching
 * *_free function. Strings obtained from a report remain valid until that
 * report is freed.
 *
 * Buffer-filling functions follow snprintf conventions: *len receives the
 * length the full result needs (excluding the terminating NUL); if capacity
 * is too small the output is truncated, NUL-terminated when capacity > 0, and
 * MAYACAL_E_BUFFER_TOO_SMALL is returned.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAYACAL_BUILDING_LIBRARY)
#    define MAYACAL_API __declspec(dllexport)
#  else
#    define MAYACAL_API __declspec(dllimport)
#  endif
#else
#  define MAYACAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mayacal_status {
  MAYACAL_OK = 0,
  MAYACAL_E_INVALID_ARGUMENT = 1,
  MAYACAL_E_OUT_OF_RANGE = 2,
  MAYACAL_E_OVERFLOW = 3,
  MAYACAL_E_DIVISION_BY_ZERO = 4,
  MAYACAL_E_PARSE = 5,
  MAYACAL_E_BUFFER_TOO_SMALL = 6,
  MAYACAL_E_INTERNAL = 7
} mayacal_status;

MAYACAL_API const char *mayacal_version(void);
MAYACAL_API const char *mayacal_status_name(mayacal_status status);
MAYACAL_API const char *mayacal_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
MAYACAL_API int64_t mayacal_last_error_offset(void);
/* Kind of the last parse error ("unknown_name", ...), or "" if none. */
MAYACAL_API const char *mayacal_last_error_kind(void);

/* ---- exact arithmetic ---------------------------------------------------- */

typedef struct mayacal_prime_power {
  int64_t prime;
  int32_t multiplicity;
} mayacal_prime_power;

typedef struct mayacal_rational {
  int64_t num;
  int64_t den;
} mayacal_rational;

/* Writes up to capacity factors; *count receives the number of distinct primes. */
MAYACAL_API mayacal_status mayacal_factorize(int64_t n, mayacal_prime_power *factors, size_t capacity,
                                             size_t *count);
MAYACAL_API mayacal_status mayacal_gcd(int64_t a, int64_t b, int64_t *out);
MAYACAL_API mayacal_status mayacal_lcm_many(const int64_t *values, size_t n, int64_t *out);
MAYACAL_API mayacal_status mayacal_euclid_div(int64_t n, int64_t d, int64_t *quotient, int64_t *remainder);
/* Halves round away from zero. */
MAYACAL_API mayacal_status mayacal_round_nearest(mayacal_rational r, int64_t *out);
/* Normalizes to lowest terms with a positive denominator. */
MAYACAL_API mayacal_status mayacal_rational_normalize(mayacal_rational r, mayacal_rational *out);
/* Parses "a/b", "a" or a finite decimal "29.530588". */
MAYACAL_API mayacal_status mayacal_rational_parse(const char *text, mayacal_rational *out);
MAYACAL_API mayacal_status mayacal_rational_decimal(mayacal_rational r, int32_t places, char *buf, size_t capacity,
                                                    size_t *len);

/* ---- calendar cycles ----------------------------------------------------- */

typedef struct mayacal_long_count {
  int64_t baktun;
  int32_t katun;
  int32_t tun;
  int32_t winal;
  int32_t kin;
} mayacal_long_count;

typedef struct mayacal_tzolkin {
  int32_t number;     /* 1..13 */
  int32_t name_index; /* Imix = 0 .. Ahau = 19 */
} mayacal_tzolkin;

typedef struct mayacal_haab {
  int32_t day;         /* 0..19, 0..4 in Uayeb */
  int32_t month_index; /* Pop = 0 .. Cumku = 17, Uayeb = 18 */
} mayacal_haab;

typedef struct mayacal_kawil {
  int32_t count;           /* 0..818 */
  int32_t direction_color; /* 0 East-Red, 1 South-Yellow, 2 West-Black, 3 North-White */
} mayacal_kawil;

typedef struct mayacal_cycle_date {
  int64_t day;
  mayacal_tzolkin tzolkin;
  mayacal_haab haab;
  int32_t tzolkin_pos; /* mod(day + 160, 260) */
  int32_t haab_pos;    /* mod(day + 349, 365) */
  mayacal_kawil kawil;
  mayacal_long_count long_count;
} mayacal_cycle_date;

MAYACAL_API mayacal_status mayacal_cycle_date_of(int64_t day, mayacal_cycle_date *out);
MAYACAL_API mayacal_status mayacal_day_from_long_count(const mayacal_long_count *lc, int64_t *day);
MAYACAL_API mayacal_status mayacal_tzolkin_from_pos(int32_t pos, mayacal_tzolkin *out);
MAYACAL_API mayacal_status mayacal_haab_from_pos(int32_t pos, mayacal_haab *out);
/* *found is 0 when the pair never occurs; *day is then left untouched. */
MAYACAL_API mayacal_status mayacal_calendar_round_day(mayacal_tzolkin t, mayacal_haab h, int64_t *day,
                                                      int32_t *found);

/* Static strings; NULL for an out-of-range index. */
MAYACAL_API const char *mayacal_tzolkin_name(int32_t name_index);
MAYACAL_API const char *mayacal_haab_month_name(int32_t month_index);
MAYACAL_API const char *mayacal_direction_color_name(int32_t direction_color);

/* ---- notation ------------------------------------------------------------ */

typedef struct mayacal_expr mayacal_expr;

typedef enum mayacal_style { MAYACAL_STYLE_PLAIN = 0, MAYACAL_STYLE_ANNOTATED = 1 } mayacal_style;

typedef struct mayacal_expr_fields {
  int32_t has_long_count;
  int32_t has_tzolkin;
  int32_t has_haab;
  int32_t has_kawil;
  mayacal_long_count long_count;
  mayacal_tzolkin tzolkin;
  mayacal_haab haab;
  mayacal_kawil kawil;
} mayacal_expr_fields;

/* On MAYACAL_E_PARSE, mayacal_last_error_offset() gives the byte offset. */
MAYACAL_API mayacal_status mayacal_expr_parse(const char *text, mayacal_expr **out);
MAYACAL_API mayacal_status mayacal_expr_from_day(int64_t day, mayacal_expr **out);
MAYACAL_API mayacal_status mayacal_expr_from_fields(const mayacal_expr_fields *fields, mayacal_expr **out);
MAYACAL_API void mayacal_expr_free(mayacal_expr *expr);
MAYACAL_API mayacal_status mayacal_expr_get(const mayacal_expr *expr, mayacal_expr_fields *out);
MAYACAL_API mayacal_status mayacal_expr_format(const mayacal_expr *expr, mayacal_style style, char *buf,
                                               size_t capacity, size_t *len);
/*
 * Days in [lo, hi] matching every component. *count receives the total number
 * of matches; at most capacity are written. *inconsistent is set when the Long
 * Count lies in the window but another component disagrees.
 */
MAYACAL_API mayacal_status mayacal_expr_resolve(const mayacal_expr *expr, int64_t lo, int64_t hi, int64_t *days,
                                                size_t capacity, size_t *count, int32_t *inconsistent);

/* ---- correlation --------------------------------------------------------- */

#define MAYACAL_GMT_CORRELATION 584283

typedef enum mayacal_calendar { MAYACAL_JULIAN = 0, MAYACAL_GREGORIAN = 1 } mayacal_calendar;

typedef struct mayacal_civil_date {
  int64_t year; /* astronomical: 0 = 1 BC */
  int32_t month;
  int32_t day;
  mayacal_calendar calendar;
} mayacal_civil_date;

MAYACAL_API mayacal_status mayacal_to_jdn(int64_t day, int64_t correlation, int64_t *jdn);
MAYACAL_API mayacal_status mayacal_jdn_to_civil(int64_t jdn, mayacal_calendar calendar, mayacal_civil_date *out);
MAYACAL_API mayacal_status mayacal_civil_to_jdn(const mayacal_civil_date *date, int64_t *jdn);
/* "21 December 2012 CE", "11 August 3114 BC". */
MAYACAL_API mayacal_status mayacal_civil_display(const mayacal_civil_date *date, char *buf, size_t capacity,
                                                 size_t *len);
/* "2012-12-21", "-3113-08-11". */
MAYACAL_API mayacal_status mayacal_civil_iso(const mayacal_civil_date *date, char *buf, size_t capacity, size_t *len);

/* ---- super-number --------------------------------------------------------- */

typedef struct mayacal_periods {
  int64_t mercury;
  int64_t venus;
  int64_t earth_haab;
  int64_t mars;
  int64_t jupiter;
  int64_t saturn;
  int64_t lunar_semester_a;
  int64_t lunar_semester_b;
  int64_t pentalunex;
} mayacal_periods;

typedef struct mayacal_constants {
  int64_t N;
  int64_t X[4];
  int64_t Y;
  int64_t A;
  int64_t GC;
  int64_t E;
  int64_t LR;
  int64_t CR;
  int64_t kawil4;
} mayacal_constants;

typedef struct mayacal_residues {
  int64_t quotient; /* N / (13 * 37 * 73) */
  int64_t mod260;
  int64_t mod13;
  int64_t mod20;
  int64_t mod73;
  int64_t kawil_residue; /* (N / 37 / 32760) mod 4 */
  int32_t anchor_tzolkin_pos;
  int32_t anchor_haab_pos;
  int64_t shift_days;
  int32_t creation_tzolkin_pos;
  int32_t creation_haab_pos;
} mayacal_residues;

typedef struct mayacal_cultural_date {
  const char *label; /* static */
  const char *description; /* static */
  mayacal_cycle_date date;
} mayacal_cultural_date;

#define MAYACAL_CULTURAL_DATE_COUNT 5

MAYACAL_API void mayacal_default_periods(mayacal_periods *out);
/* periods may be NULL for the defaults. */
MAYACAL_API mayacal_status mayacal_supernumber(const mayacal_periods *periods, int64_t *n,
                                               mayacal_prime_power *factors, size_t capacity, size_t *count);
MAYACAL_API mayacal_status mayacal_derive_constants(const mayacal_periods *periods, mayacal_constants *out);
MAYACAL_API mayacal_status mayacal_creation_residues(const mayacal_constants *c, mayacal_residues *out);
/* Fills exactly MAYACAL_CULTURAL_DATE_COUNT rows. */
MAYACAL_API mayacal_status mayacal_cultural_dates(const mayacal_constants *c, mayacal_cultural_date *out);

/* ---- verification reports ------------------------------------------------ */

typedef struct mayacal_report mayacal_report;

typedef struct mayacal_check {
  const char *suite;
  const char *name;
  const char *expected;
  const char *computed;
  int32_t pass;
} mayacal_check;

MAYACAL_API size_t mayacal_verify_scope_count(void);
MAYACAL_API const char *mayacal_verify_scope_name(size_t index);
/* scope: "all", "eq1", "xultun", "eq2", "eq3", "eq4", "residues", "dates",
   "lunar", "eclipse" or "correlation". */
MAYACAL_API mayacal_status mayacal_verify(const char *scope, mayacal_report **out);
MAYACAL_API size_t mayacal_report_size(const mayacal_report *report);
MAYACAL_API mayacal_status mayacal_report_check(const mayacal_report *report, size_t index, mayacal_check *out);
MAYACAL_API int32_t mayacal_report_passed(const mayacal_report *report);
MAYACAL_API void mayacal_report_free(mayacal_report *report);

/* ---- lunar ---------------------------------------------------------------- */

enum {
  MAYACAL_LUNAR_WITHIN_CR = 1,  /* LCM(260, T) < 18980 */
  MAYACAL_LUNAR_ZERO_ERROR = 2,
  MAYACAL_LUNAR_PARETO = 4,
  MAYACAL_LUNAR_BEST = 8,
  MAYACAL_LUNAR_MODERN = 16
};

typedef struct mayacal_lunar_candidate {
  int64_t T; /* days; 0 on the modern row */
  int64_t L; /* lunations; 0 on the modern row */
  mayacal_rational S;
  mayacal_rational epsilon;
  mayacal_rational distance; /* |S - reference|; search rows only */
  int64_t lcm260;
  int32_t flags;
  const char *source; /* table rows only, else "" */
} mayacal_lunar_candidate;

typedef struct mayacal_lunar_list mayacal_lunar_list;

MAYACAL_API mayacal_status mayacal_epsilon(int64_t n, int64_t T, int64_t L, mayacal_rational *out);
MAYACAL_API mayacal_status mayacal_lunar_table(int64_t n, mayacal_lunar_list **out);
/*
 * Rows for i = 1..max_lunations. With include_all == 0 only rows within one
 * Calendar Round are returned, ranked by (epsilon, distance, i); otherwise all
 * rows are returned in lunation order.
 */
MAYACAL_API mayacal_status mayacal_lunar_search(int64_t n, mayacal_rational reference, int32_t max_lunations,
                                                int32_t include_all, mayacal_lunar_list **out);
MAYACAL_API size_t mayacal_lunar_list_size(const mayacal_lunar_list *list);
MAYACAL_API mayacal_status mayacal_lunar_list_get(const mayacal_lunar_list *list, size_t index,
                                                  mayacal_lunar_candidate *out);
MAYACAL_API void mayacal_lunar_list_free(mayacal_lunar_list *list);
MAYACAL_API mayacal_status mayacal_moon_age(int64_t lc, int64_t lc0, mayacal_rational s, mayacal_rational *age);

#ifdef __cplusplus
}
#endif

#endif /* MAYACAL_MAYACAL_H */
