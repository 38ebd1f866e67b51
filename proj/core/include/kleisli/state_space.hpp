/*
 * Copyright 2026 The kleisli authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kleisli {

/// A finite carrier: an ordered list of distinct state names. States are
/// addressed by dense index 0..n-1 everywhere else in the library.
class StateSpace {
public:
    StateSpace();
    static StateSpace make(std::vector<std::string> names);

    /// Convenience: states named "s0", "s1", ...
    static StateSpace numbered(int32_t n, const std::string& prefix = "s");

    int32_t size() const { return static_cast<int32_t>(d_->names.size()); }
    const std::string& name(int32_t i) const { return d_->names[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return d_->names; }
    std::optional<int32_t> index_of(std::string_view name) const;

    bool operator==(const StateSpace& o) const;
    bool operator!=(const StateSpace& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, int32_t> index;
    };
    explicit StateSpace(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

}  // namespace kleisli
