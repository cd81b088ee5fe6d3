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

// The calendar super-number: LCM of the nine canonical periods, and the
// constants and identities that follow from it.

#include <array>
#include <string>
#include <vector>

#include "mayacal/arith.hpp"
#include "mayacal/calendar.hpp"
#include "mayacal/report.hpp"

namespace mayacal {

struct InputPeriods {
    Int mercury = 116;
    Int venus = 584;
    Int earth_haab = 365;
    Int mars = 780;
    Int jupiter = 399;
    Int saturn = 378;
    Int lunar_semester_a = 177;
    Int lunar_semester_b = 178;
    Int pentalunex = 148;

    std::array<Int, 9> as_array() const {
        return {mercury, venus, earth_haab, mars, jupiter, saturn, lunar_semester_a, lunar_semester_b, pentalunex};
    }
    friend bool operator==(const InputPeriods &, const InputPeriods &) = default;
};

inline constexpr std::array<std::string_view, 9> kPeriodNames = {
    "Mercury", "Venus", "Earth (Haab')", "Mars", "Jupiter", "Saturn", "Lunar semester", "Lunar semester",
    "Pentalunex"};

// The four Long Count numbers painted at Xultun. The last two are taken as
// given; only their ratios to 56940 are checked.
inline constexpr std::array<Int, 4> kXultunNumbers = {341640, 1195740, 1765140, 2448420};
inline constexpr Int kXultunCommonDivisor = 56940;

struct SuperNumber {
    Int value = 0;
    Factorization factors;
};

// Throws std::invalid_argument for a period < 1, OverflowError if the LCM
// does not fit 63 bits.
SuperNumber compute_supernumber(const InputPeriods &periods = {});

struct DerivedConstants {
    Int N = 0;                  // super-number
    std::array<Int, 4> X{};     // Xultun numbers
    Int Y = 0;                  // Tun-Haab'-Kawil cycle, LCM(360, 365, 3276)
    Int A = 0;                  // Maya Aeon, 400 X0
    Int GC = 0;                 // grand cycle, 7 A
    Int E = 0;                  // Maya Era, 13 baktun
    Int LR = 0;                 // Long Round 9.9.16.0.0
    Int CR = 0;                 // Calendar Round
    Int kawil4 = 0;             // 4-Kawil

    friend bool operator==(const DerivedConstants &, const DerivedConstants &) = default;
};

DerivedConstants derive_constants(const InputPeriods &periods = {});

// Identities reproduced from the constants; each check carries expected
// and computed values.
Report verify_supernumber(const DerivedConstants &c);
Report verify_xultun(const DerivedConstants &c);
Report verify_euclid_identities(const DerivedConstants &c);
Report verify_grand_cycle_division(const DerivedConstants &c);
Report verify_aeon_division(const DerivedConstants &c);
Report verify_aeon_identity(const DerivedConstants &c);

struct CreationResidues {
    Int quotient = 0;      // N / (13 * 37 * 73)
    Int mod260 = 0;
    Int mod13 = 0;
    Int mod20 = 0;
    Int mod73 = 0;
    Int kawil_residue = 0; // (N / 37 / 32760) mod 4
    int anchor_tzolkin_pos = 0;
    int anchor_haab_pos = 0; // {mod260 ; mod73} read as a CR pair
    TzolkinDate anchor_tzolkin;
    HaabDate anchor_haab;
    Int shift_days = 0;      // smallest positive multiple of 4680 reaching creation
    int creation_tzolkin_pos = 0;
    int creation_haab_pos = 0;
    TzolkinDate creation_tzolkin;
    HaabDate creation_haab;
};

// Throws std::domain_error when N is not divisible by 13 * 37 * 73 or 37 * 32760.
CreationResidues creation_residues(const DerivedConstants &c);
Report verify_creation_residues(const DerivedConstants &c);

struct CulturalDate {
    std::string label;
    std::string description;
    CycleDate date;
};

// Creation, 5 X0, Era, 5 Aeon and grand cycle.
std::vector<CulturalDate> cultural_dates(const DerivedConstants &c);
Report verify_cultural_dates(const DerivedConstants &c);

} // namespace mayacal
