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

#include <string>
#include <type_traits>
#include <vector>

namespace mayacal {

struct Check {
    std::string suite;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

class Report {
  public:
    explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

    // Records expected vs computed, comparing their string renderings.
    template <typename T>
    bool expect_eq(std::string name, const T &expected, const T &computed) {
        return add(std::move(name), render(expected), render(computed), expected == computed);
    }

    bool add(std::string name, std::string expected, std::string computed, bool pass) {
        checks_.push_back({suite_, std::move(name), std::move(expected), std::move(computed), pass});
        return pass;
    }

    void append(const Report &other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

    const std::vector<Check> &checks() const noexcept { return checks_; }
    std::size_t size() const noexcept { return checks_.size(); }
    bool passed() const noexcept {
        for (const auto &c : checks_) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }

  private:
    template <typename T>
    static std::string render(const T &v) {
        if constexpr (std::is_convertible_v<T, std::string>) {
            return std::string(v);
        } else if constexpr (requires { v.to_string(); }) {
            return v.to_string();
        } else {
            return std::to_string(v);
        }
    }

    std::string suite_;
    std::vector<Check> checks_;
};

} // namespace mayacal
