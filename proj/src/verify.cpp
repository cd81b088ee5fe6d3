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

#include "mayacal/verify.hpp"

#include <stdexcept>
#include <string>

#include "mayacal/correlation.hpp"
#include "mayacal/lunar.hpp"

namespace mayacal {

Report verify_correlation() {
    Report r("correlation");
    struct Anchor {
        DayNumber day;
        Int jdn;
        const char *gregorian;
        const char *julian;
    };
    constexpr std::array<Anchor, 4> anchors = {{
        {0, 584283, "11 August 3114 BC", "6 September 3114 BC"},
        {1416600, 2000883, "17 February 766 CE", "13 February 766 CE"},
        {1708200, 2292483, "3 July 1564 CE", "23 June 1564 CE"},
        {1872000, 2456283, "21 December 2012 CE", "8 December 2012 CE"},
    }};
    for (const auto &a : anchors) {
        const auto rep = describe(a.day);
        const std::string tag = "day " + std::to_string(a.day);
        r.expect_eq<Int>(tag + " JDN", a.jdn, rep.jdn);
        r.expect_eq<std::string>(tag + " Gregorian", a.gregorian, rep.gregorian.display());
        r.expect_eq<std::string>(tag + " Julian", a.julian, rep.julian.display());
    }
    return r;
}

Report verify(std::string_view scope, const InputPeriods &periods) {
    const auto c = derive_constants(periods);
    if (scope == "eq1") {
        return verify_supernumber(c);
    }
    if (scope == "xultun") {
        return verify_xultun(c);
    }
    if (scope == "eq2") {
        return verify_grand_cycle_division(c);
    }
    if (scope == "eq3") {
        return verify_aeon_division(c);
    }
    if (scope == "eq4") {
        return verify_aeon_identity(c);
    }
    if (scope == "residues") {
        return verify_creation_residues(c);
    }
    if (scope == "dates") {
        return verify_cultural_dates(c);
    }
    if (scope == "lunar") {
        return verify_lunar(c.N);
    }
    if (scope == "eclipse") {
        return eclipse_commensuration();
    }
    if (scope == "correlation") {
        return verify_correlation();
    }
    if (scope == "all") {
        Report all;
        for (const auto s : kVerifyScopes) {
            if (s != "all") {
                all.append(verify(s, periods));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown verify scope '" + std::string(scope) + "'");
}

} // namespace mayacal
