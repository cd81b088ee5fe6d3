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

#include "mayacal/lunar.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mayacal {

namespace {

// Nearest integer to a/b (b > 0), halves away from zero.
Wide round_ratio(Wide a, Wide b) {
    Wide q = a / b;
    Wide r = a % b;
    if (r < 0) {
        r += b;
        --q;
    }
    if (2 * r > b || (2 * r == b && a > 0)) {
        ++q;
    }
    return q;
}

} // namespace

Rational epsilon(Int N, const Rational &S) {
    if (S.num() <= 0) {
        throw std::invalid_argument("lunar ratio must be positive");
    }
    // With S = p/q: N - Rd(N q / p) p / q = (N q - Rd(N q / p) p) / q.
    const Wide scaled = static_cast<Wide>(N) * S.den();
    const Wide k = round_ratio(scaled, S.num());
    Wide diff = scaled - k * S.num();
    if (diff < 0) {
        diff = -diff;
    }
    return Rational(narrow(diff), S.den());
}

Rational epsilon(Int N, Int T, Int L) {
    if (T < 1 || L < 1) {
        throw std::invalid_argument("epsilon requires T >= 1 and L >= 1");
    }
    return epsilon(N, Rational(T, L));
}

LunarCandidate make_candidate(Int N, Int T, Int L) {
    LunarCandidate c;
    c.T = T;
    c.L = L;
    c.S = Rational(T, L);
    c.epsilon = epsilon(N, T, L);
    c.lcm260 = lcm_many({kTzolkinDays, T});
    return c;
}

std::vector<LunarTableRow> ratio_table(Int N) {
    struct Length {
        Int T;
        const char *source;
    };
    constexpr std::array<Length, 6> lengths = {{
        {11960, "Dresden Codex eclipse table"},
        {4784, "Xultun lunar table"},
        {4606, "Xultun lunar table"},
        {4429, "Xultun lunar table"},
        {4400, "Copan Moon ratio"},
        {2392, "Palenque formula"},
    }};
    std::vector<LunarTableRow> rows;
    rows.reserve(lengths.size() + 1);
    for (const auto &len : lengths) {
        const Int L = round_nearest(Rational(len.T) / kTableLunation);
        rows.push_back({make_candidate(N, len.T, L), len.source, false});
    }
    LunarTableRow modern;
    modern.candidate.S = kModernSynodicMonth;
    modern.candidate.epsilon = epsilon(N, kModernSynodicMonth);
    modern.source = "Modern value";
    modern.modern = true;
    rows.push_back(modern);
    return rows;
}

LunarSearch search(Int N, const Rational &reference, int max_lunations) {
    if (max_lunations < 1) {
        throw std::invalid_argument("max_lunations must be >= 1");
    }
    if (reference.num() <= 0) {
        throw std::invalid_argument("reference synodic month must be positive");
    }
    LunarSearch out;
    out.reference = reference;
    out.max_lunations = max_lunations;
    out.rows.reserve(static_cast<std::size_t>(max_lunations));
    for (int i = 1; i <= max_lunations; ++i) {
        const Int T = round_nearest(reference * Rational(i));
        SearchRow row;
        row.candidate = make_candidate(N, T, i);
        row.distance = (row.candidate.S - reference).abs();
        row.within_cr = row.candidate.lcm260 < kCalendarRoundDays;
        row.zero_error = row.candidate.epsilon == Rational(0);
        out.rows.push_back(row);
    }

    std::vector<std::size_t> &ranked = out.ranked;
    for (std::size_t k = 0; k < out.rows.size(); ++k) {
        if (out.rows[k].within_cr) {
            ranked.push_back(k);
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        const auto &ra = out.rows[a];
        const auto &rb = out.rows[b];
        if (ra.candidate.epsilon != rb.candidate.epsilon) {
            return ra.candidate.epsilon < rb.candidate.epsilon;
        }
        return ra.distance < rb.distance;
    });

    for (std::size_t a : ranked) {
        auto &ra = out.rows[a];
        ra.pareto = std::none_of(ranked.begin(), ranked.end(), [&](std::size_t b) {
            const auto &rb = out.rows[b];
            const bool no_worse = rb.candidate.epsilon <= ra.candidate.epsilon && rb.distance <= ra.distance;
            const bool better = rb.candidate.epsilon < ra.candidate.epsilon || rb.distance < ra.distance;
            return no_worse && better;
        });
    }

    // Ranked order is (epsilon, distance, i), so the first nonzero entry wins.
    for (std::size_t k : ranked) {
        if (!out.rows[k].zero_error) {
            out.best = k;
            out.rows[k].best = true;
            break;
        }
    }
    return out;
}

Rational moon_age(DayNumber lc, DayNumber lc0, const Rational &S) {
    if (lc < lc0) {
        throw std::invalid_argument("moon_age requires lc >= lc0");
    }
    if (S.num() <= 0) {
        throw std::invalid_argument("moon_age requires a positive ratio");
    }
    // elapsed mod (p/q) = ((elapsed * q) mod p) / q
    const Wide scaled = static_cast<Wide>(lc - lc0) * S.den();
    return Rational(narrow(scaled % S.num()), S.den());
}

Report verify_lunar(Int N) {
    Report r("lunar");
    struct Printed {
        Int T;
        Int L;
        const char *S;
        Int eps;
    };
    constexpr std::array<Printed, 6> printed = {{
        {11960, 405, "29.530864", 1},
        {4784, 162, "29.530864", 1},
        {4606, 156, "29.525641", 8},
        {4429, 150, "29.526667", 11},
        {4400, 149, "29.530201", 2},
        {2392, 81, "29.530864", 1},
    }};
    const auto table = ratio_table(N);
    for (std::size_t i = 0; i < printed.size(); ++i) {
        const auto &c = table[i].candidate;
        const std::string tag = "T = " + std::to_string(printed[i].T);
        r.expect_eq<Int>(tag + " L", printed[i].L, c.L);
        r.expect_eq<std::string>(tag + " S", printed[i].S, c.S.to_decimal(6));
        r.expect_eq<Int>(tag + " Rd(epsilon)", printed[i].eps, round_nearest(c.epsilon));
    }
    const auto &modern = table.back().candidate;
    r.expect_eq<std::string>("modern S", "29.530588", modern.S.to_decimal(6));
    r.expect_eq<Int>("modern Rd(epsilon)", 4, round_nearest(modern.epsilon));

    r.expect_eq<Rational>("Palenque epsilon(2392, 81)", Rational(104, 81), epsilon(N, 2392, 81));
    r.expect_eq<std::string>("Palenque epsilon decimal", "1.28", epsilon(N, 2392, 81).to_decimal(2));
    r.expect_eq<std::string>("Copan epsilon(4400, 149) decimal", "1.88", epsilon(N, 4400, 149).to_decimal(2));
    r.expect_eq<Rational>("pentalunex epsilon(148, 5)", Rational(0), epsilon(N, 148, 5));
    const Int alpha = 26008014145502;
    r.expect_eq<Int>("81 N + 104 = 26008014145502 × 2392", checked_add(checked_mul(81, N), 104),
                     checked_mul(alpha, 2392));
    r.expect_eq<Int>("alpha = Rd(81 N / 2392)", alpha, narrow(round_ratio(static_cast<Wide>(N) * 81, 2392)));
    r.expect_eq<Rational>("11960/405 = 2392/81", Rational(2392, 81), Rational(11960, 405));
    r.expect_eq<Rational>("4784/162 = 2392/81", Rational(2392, 81), Rational(4784, 162));
    r.expect_eq<Rational>("S0 = 2^3 × 13 × 23 / 3^4", Rational(2392, 81), Rational(8 * 13 * 23, 81));
    r.expect_eq<std::string>("S0 decimal", "29.530864", Rational(2392, 81).to_decimal(6));

    const auto s = search(N);
    std::string zero;
    for (const auto &row : s.rows) {
        if (row.within_cr && row.zero_error) {
            zero += (zero.empty() ? "" : ", ") + std::to_string(row.candidate.T) + "/" + std::to_string(row.candidate.L);
        }
    }
    r.expect_eq<std::string>("epsilon = 0 candidates within 1 CR", "30/1, 59/2, 118/4, 148/5, 236/8, 295/10", zero);
    const std::string best =
        s.best ? std::to_string(s.rows[*s.best].candidate.T) + "/" + std::to_string(s.rows[*s.best].candidate.L)
               : "none";
    r.expect_eq<std::string>("best nonzero approximation", "2392/81", best);
    r.expect_eq<Int>("T at 643 lunations", 18988, s.row_for(643).candidate.T);
    r.expect_eq<Rational>("Copan ratio present in search", Rational(4400, 149), s.row_for(149).candidate.S);
    return r;
}

Report eclipse_commensuration() {
    Report r("eclipse");
    const Int eclipse = lcm_many({260, 2392});
    const Int with_cr = lcm_many({eclipse, kCalendarRoundDays});
    r.expect_eq<Int>("LCM(260, 2392)", 11960, eclipse);
    r.expect_eq<Int>("11960 = 5 × 2392", eclipse, 5 * 2392);
    r.expect_eq<Int>("LCM(11960, 18980)", 873080, with_cr);
    r.expect_eq<Int>("= 73 × 11960", with_cr, 73 * eclipse);
    r.expect_eq<Int>("= 365 × 2392", with_cr, 365 * 2392);
    r.expect_eq<Int>("= 46 CR", with_cr, 46 * kCalendarRoundDays);
    r.expect_eq<Int>("LCM(260, 365) = 1 CR", kCalendarRoundDays, lcm_many({260, 365}));
    r.expect_eq<Int>("LCM(260, 584) = 2 CR", 2 * kCalendarRoundDays, lcm_many({260, 584}));
    r.expect_eq<Int>("LCM(365, 780) = 3 CR", 3 * kCalendarRoundDays, lcm_many({365, 780}));
    r.expect_eq<Int>("73 × 260 = 52 × 365", 73 * 260, 52 * 365);
    return r;
}

} // namespace mayacal
