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

/// A word over the visible letters of an alphabet, stored as letter indices.
/// The empty word stands for the unit of concatenation. Ordering is shortlex
/// (length first, then lexicographic) so canonical effect order matches the
/// enumeration order used elsewhere.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int32_t> letters) : letters_(std::move(letters)) {}

    static Word epsilon() { return Word{}; }
    static Word single(int32_t letter) { return Word{{letter}}; }

    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int32_t operator[](size_t i) const { return letters_[i]; }
    const std::vector<int32_t>& letters() const { return letters_; }

    Word concat(const Word& tail) const {
        std::vector<int32_t> out = letters_;
        out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
        return Word{std::move(out)};
    }

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const {
        if (letters_.size() != o.letters_.size())
            return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }

private:
    std::vector<int32_t> letters_;
};

/// Visible letters plus one distinguished internal label (rendered "tau" for
/// transition systems, "eps" for automata). Immutable and cheap to copy.
class Alphabet {
public:
    Alphabet();
    static Alphabet make(std::vector<std::string> visible, std::string silent);

    int32_t size() const { return static_cast<int32_t>(d_->visible.size()); }
    const std::string& letter(int32_t i) const { return d_->visible[static_cast<size_t>(i)]; }
    const std::vector<std::string>& letters() const { return d_->visible; }
    const std::string& silent() const { return d_->silent; }
    std::optional<int32_t> letter_index(std::string_view name) const;

    /// Concatenated letter names; the empty string for the empty word.
    std::string format_word(const Word& w) const;

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<std::string> visible;
        std::string silent;
        std::unordered_map<std::string, int32_t> index;
    };
    explicit Alphabet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

}  // namespace kleisli
