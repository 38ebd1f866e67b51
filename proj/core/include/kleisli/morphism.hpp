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
#include <functional>
#include <string>
#include <vector>

#include "kleisli/alphabet.hpp"
#include "kleisli/effect.hpp"
#include "kleisli/errors.hpp"
#include "kleisli/state_space.hpp"

namespace kleisli {

/// A Kleisli arrow f: X -o Y, i.e. a map X -> T Y for one of the four
/// effect types. A morphism whose source equals its target is a system
/// (a coalgebra). Morphisms are immutable values.
class Morphism {
public:
    Morphism() = default;

    /// Validates that every effect matches the tag, the target and the
    /// alphabet. Throws MonadMismatch / SpaceMismatch on violations.
    static Morphism make(Monad tag, Alphabet alphabet, StateSpace source,
                         StateSpace target, std::vector<Effect> image);

    /// The Kleisli identity 1_X: unit moves only.
    static Morphism identity(Monad tag, const Alphabet& alphabet, const StateSpace& space);

    /// The least morphism X -o Y: every state maps to the empty effect.
    static Morphism bottom(Monad tag, const Alphabet& alphabet,
                           const StateSpace& source, const StateSpace& target);

    Monad tag() const { return tag_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const StateSpace& source() const { return source_; }
    const StateSpace& target() const { return target_; }
    const Effect& at(int32_t state) const { return image_[static_cast<size_t>(state)]; }
    const std::vector<Effect>& image() const { return image_; }
    bool is_system() const { return source_ == target_; }

    bool operator==(const Morphism&) const = default;

private:
    Monad tag_ = Monad::Pow;
    Alphabet alphabet_;
    StateSpace source_;
    StateSpace target_;
    std::vector<Effect> image_;
};

/// Systems are endomorphisms in the Kleisli category.
using System = Morphism;

/// Kleisli composition g . f (f first, then g). Requires f.target == g.source
/// and matching monad tag and alphabet.
Morphism compose(const Morphism& g, const Morphism& f);

/// Pointwise join and order on parallel morphisms.
Morphism join(const Morphism& f, const Morphism& g);
bool leq(const Morphism& f, const Morphism& g);

/// Kleene iteration of a monotone step function from a given bottom element.
/// Stops at the first fixed point (exact = true) or after `fuel` steps
/// (exact = false). Throws NonMonotone if an iterate fails x <= step(x).
struct LfpResult {
    Morphism value;
    bool exact = false;
    int iterations = 0;
};
LfpResult lfp(const std::function<Morphism(const Morphism&)>& step,
              const Morphism& bottom, int fuel);

/// Default fuel: ten times the lattice-height bound when one exists for the
/// tag (finite effect lattices), otherwise 1000.
int default_fuel(const Morphism& bottom);

/// A nondeterministic automaton with eps-moves in surface form: an Lts-tagged
/// system whose silent label is read as eps, plus a final-state marker per
/// state. This is the input shape of the word-level embedding below.
struct SurfaceEna {
    Morphism moves;               // Lts tag
    std::vector<uint8_t> final_;  // size |states|

    const StateSpace& space() const { return moves.source(); }
    const Alphabet& alphabet() const { return moves.alphabet(); }
    bool is_final(int32_t s) const { return final_[static_cast<size_t>(s)] != 0; }
    bool operator==(const SurfaceEna&) const = default;
};

/// Word-level embedding: visible labels become one-letter words, silent moves
/// become the empty word, and the final marker becomes the bare word eps.
Morphism embed_underline(const Morphism& lts_system);
Morphism embed_underline(const SurfaceEna& ena);

/// Composition, identity, join and order for surface automata. The silent
/// label is the unit: labels of two composed moves merge only when one of
/// them is silent, and final markers travel backwards along silent moves.
SurfaceEna surface_compose(const SurfaceEna& g, const SurfaceEna& f);
SurfaceEna surface_identity(const Alphabet& alphabet, const StateSpace& space);
SurfaceEna surface_join(const SurfaceEna& f, const SurfaceEna& g);
bool surface_leq(const SurfaceEna& f, const SurfaceEna& g);

/// Extensional check of the monad laws on supplied composable triples:
/// 1.f = f = f.1 for each morphism and h.(g.f) = (h.g).f for each triple.
struct LawTriple {
    Morphism f;  // X -o Y
    Morphism g;  // Y -o Z
    Morphism h;  // Z -o W
};
struct LawReport {
    int triples = 0;
    int unit_violations = 0;
    int assoc_violations = 0;
    std::vector<std::string> details;
    bool ok() const { return unit_violations == 0 && assoc_violations == 0; }
};
LawReport check_monad_laws(const std::vector<LawTriple>& samples);

}  // namespace kleisli
