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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mayacal {

// Result exceeds the signed 63-bit range.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

class DivisionByZero : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class ParseErrorKind {
    empty_input,
    malformed_long_count,
    digit_out_of_range,
    unknown_name,
    unexpected_token,
};

const char *to_string(ParseErrorKind kind) noexcept;

// Notation errors carry the byte offset into the input where the problem starts.
class ParseError : public std::invalid_argument {
  public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string &detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

  private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

} // namespace mayacal
