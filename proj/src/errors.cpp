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

#include "mayacal/errors.hpp"

namespace mayacal {

const char *to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
    case ParseErrorKind::empty_input:
        return "empty_input";
    case ParseErrorKind::malformed_long_count:
        return "malformed_long_count";
    case ParseErrorKind::digit_out_of_range:
        return "digit_out_of_range";
    case ParseErrorKind::unknown_name:
        return "unknown_name";
    case ParseErrorKind::unexpected_token:
        return "unexpected_token";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string &detail)
    : std::invalid_argument(detail + " (at byte " + std::to_string(offset) + ")"), kind_(kind), offset_(offset) {}

} // namespace mayacal
