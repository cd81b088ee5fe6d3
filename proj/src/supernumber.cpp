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

#include "mayacal/supernumber.hpp"

#include <numeric>
#include <stdexcept>

namespace mayacal {

namespace {

std::string join(const std::vector<Int> &values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(values[i]);
    }
    return out + "}";
}

// {LCM(P_i, base) / base} over the input periods.
std::vector<Int> cofactors(const std::array<Int, 9> &periods, Int base) {
    std::vector<Int> out;
    out.reserve(periods.size());
    for (Int p : periods) {
        out.push_back(lcm_many({p, base}) / base);
    }
    return out;
}

std::string position_string(const CycleDate &d) {
    return "{" + std::to_string(d.tzolkin_pos) + ", " + std::to_string(d.haab_pos) + ", " +
           std::to_string(d.kawil.count) + ", " + std::to_string(d.kawil.direction_color) + "}";
}

std::string long_count_string(const LongCount &lc) {
    return std::to_string(lc.baktun) + "." + std::to_string(lc.katun) + "." + std::to_string(lc.tun) + "." +
           std::to_string(lc.winal) + "." + std::to_string(lc.kin);
}

Int exact_div(Int n, Int d, const char *what) {
    const auto qr = euclid_div(n, d);
    if (qr.remainder != 0) {
        throw std::domain_error(std::string("super-number is not divisible by ") + what);
    }
    return qr.quotient;
}

} // namespace

SuperNumber compute_supernumber(const InputPeriods &periods) {
    const auto values = periods.as_array();
    SuperNumber s;
    s.factors = lcm_factorization(values);
    s.value = s.factors.value();
    return s;
}

DerivedConstants derive_constants(const InputPeriods &periods) {
    DerivedConstants c;
    c.N = compute_supernumber(periods).value;
    c.X = {lcm_many({260, 360, 365}), 365 * kFourKawilDays, kXultunNumbers[2], kXultunNumbers[3]};
    c.Y = lcm_many({360, 365, kFourKawilDays});
    c.A = 400 * c.X[0];
    c.GC = lcm_many({365, kFourKawilDays, 144000});
    c.E = 13 * 144000;
    c.LR = day_from_long_count({9, 9, 16, 0, 0});
    c.CR = lcm_many({kTzolkinDays, kHaabDays});
    c.kawil4 = 4 * kKawilDays;
    return c;
}

Report verify_supernumber(const DerivedConstants &c) {
    Report r("eq1");
    const InputPeriods defaults;
    const auto periods = defaults.as_array();
    const auto sn = compute_supernumber(defaults);
    r.expect_eq<Int>("N = LCM of the nine periods", 768039133778280, c.N);
    r.expect_eq<std::string>("prime factorization of N", "2^3 × 3^3 × 5 × 7 × 13 × 19 × 29 × 37 × 59 × 73 × 89",
                             sn.factors.to_string());
    r.expect_eq<Int>("N = 365 × 3276 × 2 × 3 × 19 × 29 × 37 × 59 × 89", c.N,
                     365 * 3276 * Int{2} * 3 * 19 * 29 * 37 * 59 * 89);
    r.expect_eq<Int>("N = LCM(360,365,3276) × 3 × 19 × 29 × 37 × 59 × 89", c.N,
                     checked_mul(c.Y, Int{3} * 19 * 29 * 37 * 59 * 89));

    std::vector<Int> remainders;
    for (Int p : periods) {
        remainders.push_back(c.N % p);
    }
    r.expect_eq<std::string>("N divisible by every period", join(std::vector<Int>(9, 0)), join(remainders));

    r.expect_eq<std::string>("{LCM(P_i,365)/365}", "{116, 8, 1, 156, 399, 378, 177, 178, 148}",
                             join(cofactors(periods, 365)));
    r.expect_eq<std::string>("{LCM(P_i,3276)/3276}", "{29, 146, 365, 5, 19, 3, 59, 89, 37}",
                             join(cofactors(periods, 3276)));
    r.expect_eq<std::string>("{LCM(P_i,X1)/X1}", "{29, 2, 1, 1, 19, 3, 59, 89, 37}",
                             join(cofactors(periods, c.X[1])));
    r.expect_eq<std::string>("{LCM(P_i,32760)/32760}", "{29, 73, 73, 1, 19, 3, 59, 89, 37}",
                             join(cofactors(periods, 32760)));
    r.expect_eq<std::string>("{LCM(P_i,Y)/Y}", "{29, 1, 1, 1, 19, 3, 59, 89, 37}", join(cofactors(periods, c.Y)));
    r.expect_eq<Int>("LCM(360,3276)", 32760, lcm_many({360, 3276}));
    return r;
}

Report verify_xultun(const DerivedConstants &c) {
    Report r("xultun");
    const std::array<LongCount, 4> painted = {
        LongCount{2, 7, 9, 0, 0}, LongCount{8, 6, 1, 9, 0}, LongCount{12, 5, 3, 3, 0}, LongCount{17, 0, 1, 3, 0}};
    const std::array<Int, 4> ratios = {6, 21, 31, 43};
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string tag = "X" + std::to_string(i);
        r.expect_eq<Int>(tag + " = " + long_count_string(painted[i]), kXultunNumbers[i], day_from_long_count(painted[i]));
        r.expect_eq<Int>(tag + " in derived constants", kXultunNumbers[i], c.X[i]);
        const auto qr = euclid_div(c.X[i], kXultunCommonDivisor);
        r.add(tag + "/56940", std::to_string(ratios[i]),
              qr.remainder == 0 ? std::to_string(qr.quotient) : Rational(c.X[i], kXultunCommonDivisor).to_string(),
              qr.remainder == 0 && qr.quotient == ratios[i]);
    }
    const Int g = gcd(gcd(c.X[0], c.X[1]), gcd(c.X[2], c.X[3]));
    r.expect_eq<Int>("gcd(X0..X3)", kXultunCommonDivisor, g);
    r.expect_eq<Int>("LCM(365,780) = 56940", kXultunCommonDivisor, lcm_many({365, 780}));
    r.expect_eq<Int>("56940 = 3 CR", kXultunCommonDivisor, 3 * c.CR);
    r.expect_eq<Int>("X0 = 585 × 584", c.X[0], 585 * 584);
    r.expect_eq<Int>("X0 = 438 × 780", c.X[0], 438 * 780);
    r.expect_eq<Int>("X0 = LR/4", c.X[0], c.LR / 4);
    r.expect_eq<Int>("X0 = LCM(260,360,365)", 341640, c.X[0]);
    r.expect_eq<Int>("X1 = 365 × 3276 = LCM(365,3276)", 365 * 3276, lcm_many({365, 3276}));
    r.expect_eq<Int>("Y = LCM(360,365,3276) = 7 X0", 2391480, c.Y);
    r.expect_eq<Int>("7 X0", c.Y, 7 * c.X[0]);
    r.expect_eq<Int>("LR = 9.9.16.0.0", 1366560, c.LR);
    return r;
}

Report verify_grand_cycle_division(const DerivedConstants &c) {
    Report r("eq2");
    const Int n37 = exact_div(c.N, 37, "37");
    const auto qr = euclid_div(n37, c.GC);
    const Int sum_x = c.X[0] + c.X[1] + c.X[2] + c.X[3];
    r.expect_eq<Int>("GC = LCM(365,3276,144000)", 956592000, c.GC);
    r.expect_eq<Int>("GC = 400 × LCM(360,365,3276)", c.GC, 400 * c.Y);
    r.expect_eq<Int>("GC = LCM(260,365,3276,E)", c.GC, lcm_many({260, 365, 3276, c.E}));
    r.expect_eq<Int>("GC = 511 E", c.GC, 511 * c.E);
    r.expect_eq<Int>("Q of N/37 by GC", 21699, qr.quotient);
    r.expect_eq<Int>("R of N/37 by GC", 724618440, qr.remainder);
    r.expect_eq<Int>("N/37 = GC × Q + R", n37, c.GC * qr.quotient + qr.remainder);
    r.expect_eq<Int>("R = 101 × 126 × 56940", qr.remainder, 101 * 126 * kXultunCommonDivisor);
    r.expect_eq<Int>("R = 126 × ΣX_i", qr.remainder, 126 * sum_x);
    r.expect_eq<Int>("3 × 19 × 29 × 59 × 89", 8679903, Int{3} * 19 * 29 * 59 * 89);
    r.expect_eq<Int>("N/37 = LCM(360,365,3276) × 8679903", n37, c.Y * 8679903);
    const auto inner = euclid_div(8679903, 400);
    r.expect_eq<Int>("8679903 div 400 gives Q", 21699, inner.quotient);
    r.expect_eq<Int>("(8679903 mod 400) × Y = R", qr.remainder, inner.remainder * c.Y);
    return r;
}

Report verify_aeon_division(const DerivedConstants &c) {
    Report r("eq3");
    const Int n37 = exact_div(c.N, 37, "37");
    const auto qr = euclid_div(n37, c.A);
    const Int sum_x = c.X[0] + c.X[1] + c.X[2] + c.X[3];
    r.expect_eq<Int>("A = 13 × 73 × 144000", 136656000, Int{13} * 73 * 144000);
    r.expect_eq<Int>("A = 400 X0", 136656000, c.A);
    r.expect_eq<Int>("A = 100 LR", c.A, 100 * c.LR);
    r.expect_eq<Int>("A = LCM(260,365,144000)", c.A, lcm_many({260, 365, 144000}));
    r.expect_eq<Int>("A = 7200 × 18980", c.A, 7200 * Int{18980});
    r.expect_eq<Int>("A = 3600 × 37960", c.A, 3600 * Int{37960});
    r.expect_eq<Int>("A = 2400 × 56940", c.A, 2400 * Int{56940});
    // 37960 is the Tzolk'in-Venus commensuration (2 CR); Haab' and Venus meet after 2920.
    r.expect_eq<Int>("LCM(260,584) = 37960", 37960, lcm_many({260, 584}));
    r.expect_eq<Int>("LCM(365,584) = 2920", 2920, lcm_many({365, 584}));
    r.expect_eq<Int>("LCM(365,780) = 56940", 56940, lcm_many({365, 780}));
    r.expect_eq<Int>("GC = 7 A", c.GC, 7 * c.A);
    r.expect_eq<Int>("Q of N/37 by A", 151898, qr.quotient);
    r.expect_eq<Int>("R of N/37 by A", 41338440, qr.remainder);
    r.expect_eq<Int>("N/37 = A × Q + R", n37, c.A * qr.quotient + qr.remainder);
    r.expect_eq<Int>("R = 6 × 121 × 56940", qr.remainder, 6 * 121 * kXultunCommonDivisor);
    r.expect_eq<Int>("R = 121 × X0", qr.remainder, 121 * c.X[0]);
    r.expect_eq<Int>("3 × 7 × 19 × 29 × 59 × 89", 60759321, Int{3} * 7 * 19 * 29 * 59 * 89);
    r.expect_eq<Int>("N/37 = X0 × 60759321", n37, c.X[0] * 60759321);
    r.expect_eq<Int>("N/37 − 121 X0 = 151898 A", n37 - 121 * c.X[0], 151898 * c.A);
    r.expect_eq<Int>("N/37 − 126 ΣX_i = 151893 A", n37 - 126 * sum_x, 151893 * c.A);
    return r;
}

Report verify_euclid_identities(const DerivedConstants &c) {
    Report r = verify_grand_cycle_division(c);
    r.append(verify_aeon_division(c));
    return r;
}

Report verify_aeon_identity(const DerivedConstants &c) {
    Report r("eq4");
    const Int five_a = 5 * c.A;
    const Int five_x0 = 5 * c.X[0];
    const Int lcm_sums = lcm_many({c.X[1] + c.X[2] + c.X[3], c.X[1] + 2 * c.X[2] + c.X[3]});
    r.expect_eq<Int>("X1 + X2 + X3", 5409300, c.X[1] + c.X[2] + c.X[3]);
    r.expect_eq<Int>("X1 + 2 X2 + X3", 7174440, c.X[1] + 2 * c.X[2] + c.X[3]);
    r.expect_eq<Int>("LCM(X1+X2+X3, X1+2X2+X3)", 681571800, lcm_sums);
    r.expect_eq<Int>("5A − 5X0 = 95 × 126 × 56940", five_a - five_x0, 95 * 126 * kXultunCommonDivisor);
    r.expect_eq<Int>("5A − 5X0 = LCM(X1+X2+X3, X1+2X2+X3)", five_a - five_x0, lcm_sums);
    r.expect_eq<Int>("5A = 5X0 + 570 X1", five_a, five_x0 + 570 * c.X[1]);
    r.expect_eq<Int>("5A = 365 E", five_a, 365 * c.E);
    r.expect_eq<Int>("5A = 12000 × 56940", five_a, 12000 * kXultunCommonDivisor);
    r.expect_eq<Int>("5A = 5 × 13 × 73 × 144000", five_a, Int{5} * 13 * 73 * 144000);
    r.expect_eq<Int>("5A", 683280000, five_a);
    r.expect_eq<Int>("E − 5X0", 163800, c.E - five_x0);
    r.expect_eq<Int>("E − 5X0 = 10 × LCM(260,3276)", c.E - five_x0, 10 * lcm_many({260, 3276}));
    return r;
}

CreationResidues creation_residues(const DerivedConstants &c) {
    CreationResidues out;
    out.quotient = exact_div(c.N, 13 * 37 * 73, "13 × 37 × 73");
    out.mod260 = out.quotient % 260;
    out.mod13 = out.quotient % 13;
    out.mod20 = out.quotient % 20;
    out.mod73 = out.quotient % 73;
    out.kawil_residue = exact_div(c.N, 37 * 32760, "37 × 32760") % 4;

    out.anchor_tzolkin_pos = static_cast<int>(out.mod260);
    out.anchor_haab_pos = static_cast<int>(out.mod73);
    out.anchor_tzolkin = tzolkin_from_pos(out.anchor_tzolkin_pos);
    out.anchor_haab = haab_from_pos(out.anchor_haab_pos);

    // Count forward from the anchor; the first completed 13-Tun day is the epoch.
    constexpr Int kThirteenTun = 13 * 360;
    for (Int s = 1; s <= kCalendarRoundDays; ++s) {
        if (s % kThirteenTun == 0) {
            out.shift_days = s;
            break;
        }
    }
    out.creation_tzolkin_pos = static_cast<int>((out.anchor_tzolkin_pos + out.shift_days) % kTzolkinDays);
    out.creation_haab_pos = static_cast<int>((out.anchor_haab_pos + out.shift_days) % kHaabDays);
    out.creation_tzolkin = tzolkin_from_pos(out.creation_tzolkin_pos);
    out.creation_haab = haab_from_pos(out.creation_haab_pos);
    return out;
}

Report verify_creation_residues(const DerivedConstants &c) {
    Report r("residues");
    const auto res = creation_residues(c);
    auto cr_name = [](const TzolkinDate &t, const HaabDate &h) {
        return std::to_string(t.number) + " " + std::string(t.name()) + " " + std::to_string(h.day) + " " +
               std::string(h.month_name());
    };
    r.expect_eq<Int>("N/13/37/73", 21873355560, res.quotient);
    r.expect_eq<Int>("mod(N/13/37/73, 260)", 160, res.mod260);
    r.expect_eq<Int>("mod(N/13/37/73, 13)", 4, res.mod13);
    r.expect_eq<Int>("mod(N/13/37/73, 20)", 0, res.mod20);
    r.expect_eq<Int>("mod(N/13/37/73, 73)", 49, res.mod73);
    r.expect_eq<Int>("mod(N/37/32760, 4)", 3, res.kawil_residue);
    r.expect_eq<std::string>("anchor {160;49}", "4 Ahau 8 Zip", cr_name(res.anchor_tzolkin, res.anchor_haab));
    r.expect_eq<Int>("13-Tun shift from the anchor", 4680, res.shift_days);
    r.expect_eq<std::string>("creation position", "{160;349}",
                             "{" + std::to_string(res.creation_tzolkin_pos) + ";" +
                                 std::to_string(res.creation_haab_pos) + "}");
    r.expect_eq<std::string>("creation Calendar Round", "4 Ahau 8 Cumku",
                             cr_name(res.creation_tzolkin, res.creation_haab));
    const auto origin = cycle_date(0);
    r.expect_eq<std::string>("creation Kawil", "3 East-Red",
                             std::to_string(origin.kawil.count) + " " +
                                 std::string(kDirectionColorNames[static_cast<std::size_t>(origin.kawil.direction_color)]));
    r.expect_eq<Int>("mod(N/37/32760, 4) initializes the creation Kawil count", origin.kawil.count,
                     res.kawil_residue);
    return r;
}

std::vector<CulturalDate> cultural_dates(const DerivedConstants &c) {
    return {
        {"I0", "mythical date of creation", cycle_date(0)},
        {"5X0", "date of the Itza prophecy", cycle_date(5 * c.X[0])},
        {"E", "end of the 13 Baktun Era", cycle_date(c.E)},
        {"5A", "end of the 5 Maya Aeon", cycle_date(5 * c.A)},
        {"GC", "end of the Maya grand cycle", cycle_date(c.GC)},
    };
}

Report verify_cultural_dates(const DerivedConstants &c) {
    Report r("dates");
    struct Row {
        const char *label;
        Int day;
        const char *long_count;
        const char *positions;
    };
    const std::array<Row, 5> table = {{
        {"I0", 0, "0.0.0.0.0", "{160, 349, 3, 0}"},
        {"5X0", 1708200, "11.17.5.0.0", "{160, 349, 588, 1}"},
        {"E", 1872000, "13.0.0.0.0", "{160, 264, 588, 1}"},
        {"5A", 365 * Int{1872000}, "4745.0.0.0.0", "{160, 349, 588, 1}"},
        {"GC", 511 * Int{1872000}, "6643.0.0.0.0", "{160, 349, 3, 0}"},
    }};
    const auto rows = cultural_dates(c);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto &d = rows[i].date;
        const std::string label = table[i].label;
        r.expect_eq<Int>(label + " day", table[i].day, d.day);
        r.expect_eq<std::string>(label + " Long Count", table[i].long_count, long_count_string(d.long_count));
        r.expect_eq<std::string>(label + " {T; H; K; n}", table[i].positions, position_string(d));
    }
    return r;
}

} // namespace mayacal
