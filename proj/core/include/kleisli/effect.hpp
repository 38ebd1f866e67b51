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
#include <string>
#include <vector>

#include "kleisli/alphabet.hpp"

namespace kleisli {

/// The four supported effect types. This is a closed enumeration on purpose:
/// Pow        P X              -- plain nondeterminism
/// Lts        P(Sigma_tau x X) -- labelled transitions with a silent label
/// FreeLts    P(Sigma* x X)    -- word-labelled transitions
/// Ena        P(Sigma* x X + Sigma*) -- word-labelled transitions plus a set
///                                      of accepted ("bare") words per state
enum class Monad { Pow, Lts, FreeLts, Ena };

const char* monad_name(Monad m);

/// Label of one LTS move: a visible letter index, or silent_label for the
/// internal move (tau / eps).
using Label = int32_t;
inline constexpr Label silent_label = -1;

struct LtsEdge {
    Label label;
    int32_t state;
    auto operator<=>(const LtsEdge&) const = default;
};

struct WordEdge {
    Word word;
    int32_t state;
    bool operator==(const WordEdge&) const = default;
    bool operator<(const WordEdge& o) const {
        if (word == o.word) return state < o.state;
        return word < o.word;
    }
};

/// The value T X at one state: a finite, canonically sorted, duplicate-free
/// description of its successors. Immutable after construction.
class Effect {
public:
    Effect() = default;

    static Effect pow(std::vector<int32_t> states);
    static Effect lts(std::vector<LtsEdge> moves);
    static Effect free_lts(std::vector<WordEdge> moves);
    static Effect ena(std::vector<WordEdge> moves, std::vector<Word> bare);
    static Effect bottom(Monad m);

    Monad tag() const { return tag_; }
    bool empty() const;

    const std::vector<int32_t>& states() const { return states_; }
    const std::vector<LtsEdge>& moves() const { return lts_; }
    const std::vector<WordEdge>& word_moves() const { return words_; }
    const std::vector<Word>& bare() const { return bare_; }

    bool operator==(const Effect&) const = default;

private:
    Monad tag_ = Monad::Pow;
    std::vector<int32_t> states_;   // Pow
    std::vector<LtsEdge> lts_;      // Lts
    std::vector<WordEdge> words_;   // FreeLts, Ena
    std::vector<Word> bare_;        // Ena
};

/// Pointwise set union; both effects must carry the same tag.
Effect effect_join(const Effect& a, const Effect& b);

/// Pointwise inclusion.
bool effect_leq(const Effect& a, const Effect& b);

}  // namespace kleisli
