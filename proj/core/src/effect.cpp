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

#include "kleisli/effect.hpp"

#include <algorithm>

#include "kleisli/errors.hpp"

namespace kleisli {

namespace {

template <typename T>
void canonicalize(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Inclusion of sorted duplicate-free vectors.
template <typename T>
bool subset(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <typename T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

const char* monad_name(Monad m) {
    switch (m) {
        case Monad::Pow: return "pow";
        case Monad::Lts: return "lts";
        case Monad::FreeLts: return "free-lts";
        case Monad::Ena: return "ena";
    }
    return "?";
}

Effect Effect::pow(std::vector<int32_t> states) {
    Effect e;
    e.tag_ = Monad::Pow;
    e.states_ = std::move(states);
    canonicalize(e.states_);
    return e;
}

Effect Effect::lts(std::vector<LtsEdge> moves) {
    Effect e;
    e.tag_ = Monad::Lts;
    e.lts_ = std::move(moves);
    canonicalize(e.lts_);
    return e;
}

Effect Effect::free_lts(std::vector<WordEdge> moves) {
    Effect e;
    e.tag_ = Monad::FreeLts;
    e.words_ = std::move(moves);
    canonicalize(e.words_);
    return e;
}

Effect Effect::ena(std::vector<WordEdge> moves, std::vector<Word> bare) {
    Effect e;
    e.tag_ = Monad::Ena;
    e.words_ = std::move(moves);
    e.bare_ = std::move(bare);
    canonicalize(e.words_);
    canonicalize(e.bare_);
    return e;
}

Effect Effect::bottom(Monad m) {
    Effect e;
    e.tag_ = m;
    return e;
}

bool Effect::empty() const {
    return states_.empty() && lts_.empty() && words_.empty() && bare_.empty();
}

Effect effect_join(const Effect& a, const Effect& b) {
    if (a.tag() != b.tag())
        throw MonadMismatch("effect_join: mixed effect tags");
    Effect e;
    switch (a.tag()) {
        case Monad::Pow:
            return Effect::pow(set_union(a.states(), b.states()));
        case Monad::Lts:
            return Effect::lts(set_union(a.moves(), b.moves()));
        case Monad::FreeLts:
            return Effect::free_lts(set_union(a.word_moves(), b.word_moves()));
        case Monad::Ena:
            return Effect::ena(set_union(a.word_moves(), b.word_moves()),
                               set_union(a.bare(), b.bare()));
    }
    return e;
}

bool effect_leq(const Effect& a, const Effect& b) {
    if (a.tag() != b.tag())
        throw MonadMismatch("effect_leq: mixed effect tags");
    switch (a.tag()) {
        case Monad::Pow: return subset(a.states(), b.states());
        case Monad::Lts: return subset(a.moves(), b.moves());
        case Monad::FreeLts: return subset(a.word_moves(), b.word_moves());
        case Monad::Ena:
            return subset(a.word_moves(), b.word_moves()) && subset(a.bare(), b.bare());
    }
    return false;
}

}  // namespace kleisli
