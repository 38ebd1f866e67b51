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

#include "kleisli/alphabet.hpp"

#include "kleisli/errors.hpp"

namespace kleisli {

Alphabet::Alphabet() {
    auto d = std::make_shared<Data>();
    d->silent = "tau";
    d_ = std::move(d);
}

Alphabet Alphabet::make(std::vector<std::string> visible, std::string silent) {
    auto d = std::make_shared<Data>();
    if (silent.empty())
        throw SchemaError("alphabet.silent", "silent label must be non-empty");
    for (size_t i = 0; i < visible.size(); ++i) {
        const std::string& l = visible[i];
        if (l.empty())
            throw SchemaError("alphabet[" + std::to_string(i) + "]", "letters must be non-empty");
        if (l == silent)
            throw SchemaError("alphabet[" + std::to_string(i) + "]",
                              "silent label collides with visible letter '" + l + "'");
        auto [it, fresh] = d->index.emplace(l, static_cast<int32_t>(i));
        (void)it;
        if (!fresh)
            throw SchemaError("alphabet[" + std::to_string(i) + "]",
                              "duplicate letter '" + l + "'");
    }
    d->visible = std::move(visible);
    d->silent = std::move(silent);
    return Alphabet{std::move(d)};
}

std::optional<int32_t> Alphabet::letter_index(std::string_view name) const {
    auto it = d_->index.find(std::string(name));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

std::string Alphabet::format_word(const Word& w) const {
    std::string out;
    for (int32_t l : w.letters()) out += letter(l);
    return out;
}

bool Alphabet::operator==(const Alphabet& o) const {
    if (d_ == o.d_) return true;
    return d_->visible == o.d_->visible && d_->silent == o.d_->silent;
}

}  // namespace kleisli
