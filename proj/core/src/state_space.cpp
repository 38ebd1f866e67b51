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

#include "kleisli/state_space.hpp"

#include "kleisli/errors.hpp"

namespace kleisli {

StateSpace::StateSpace() : d_(std::make_shared<Data>()) {}

StateSpace StateSpace::make(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    for (size_t i = 0; i < names.size(); ++i) {
        auto [it, fresh] = d->index.emplace(names[i], static_cast<int32_t>(i));
        (void)it;
        if (!fresh)
            throw SchemaError("states[" + std::to_string(i) + "]",
                              "duplicate state name '" + names[i] + "'");
    }
    d->names = std::move(names);
    return StateSpace{std::move(d)};
}

StateSpace StateSpace::numbered(int32_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int32_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return make(std::move(names));
}

std::optional<int32_t> StateSpace::index_of(std::string_view name) const {
    auto it = d_->index.find(std::string(name));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

bool StateSpace::operator==(const StateSpace& o) const {
    if (d_ == o.d_) return true;
    return d_->names == o.d_->names;
}

}  // namespace kleisli
