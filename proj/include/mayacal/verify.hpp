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

#include <array>
#include <string_view>

#include "mayacal/report.hpp"
#include "mayacal/supernumber.hpp"

namespace mayacal {

inline constexpr std::array<std::string_view, 11> kVerifyScopes = {
    "all", "eq1", "xultun", "eq2", "eq3", "eq4", "residues", "dates", "lunar", "eclipse", "correlation"};

// Anchor dates under the GMT correlation.
Report verify_correlation();

// Runs one identity suite, or every suite for "all". Throws
// std::invalid_argument for an unknown scope.
Report verify(std::string_view scope, const InputPeriods &periods = {});

} // namespace mayacal
