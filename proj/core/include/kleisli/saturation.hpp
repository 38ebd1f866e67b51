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

#include <vector>

#include "kleisli/morphism.hpp"
#include "kleisli/reglang.hpp"

namespace kleisli {

/// Reflexive-transitive closure of an lts system under Kleisli composition:
/// the least fixed point of x |-> 1 v x.alpha. The result relates x to
/// (sigma, y) exactly when x reaches y by a sigma move padded with silent
/// moves on both sides (sigma = silent: any silent chain, including length 0).
System star(const System& alpha);

/// Same closure for a surface automaton; final markers saturate backwards
/// along silent chains.
SurfaceEna star(const SurfaceEna& alpha);

/// Least beta >= alpha with beta.alpha <= beta; no reflexive part is added.
System transitive_closure(const System& alpha);

/// The saturated form of a word-level system, held symbolically because its
/// images are infinite in general. lang[x][y] is the exact language
/// { s : x reaches y along edges spelling s }, and for Ena systems bare[x] is
/// the language of words spelled by paths from x that end in a bare word.
/// All cells share one node graph: states come first, then one fresh node per
/// interior letter of a multi-letter edge, then (Ena only) a single sink that
/// bare words feed into.
struct WeakMatrix {
    StateSpace space;
    Alphabet alphabet;
    std::vector<std::vector<RegLang>> lang;  // |X| x |X|
    std::vector<RegLang> bare;               // per state; empty vector unless Ena
    bool has_bare = false;
};

WeakMatrix saturate_free(const System& underlined);

/// The monad morphism h applied pointwise: empty words become silent moves,
/// one-letter words become visible moves, longer words are dropped. With
/// strict = true a word of length >= 2 raises WrongMonad instead (diagnostic).
Morphism elim_to_lts(const Morphism& f, bool strict = false);

/// Length <= 1 projection of a saturated word-level system: the lts system
/// with a silent x->y move when eps is in lang[x][y] and an a-move when the
/// one-letter word a is. This is h applied to the (infinite) saturation.
System elim_matrix_to_lts(const WeakMatrix& m);

/// Extensional check of the saturation axioms on one system.
/// (a) 1 <= a*, (b) a <= a*, (c) a*.a* <= a*, (d) a* <= beta for every
/// supplied closed beta, (e) f#.a [] b.f# => f#.a* [] b*.f# for each supplied
/// witness and [] in {<=, >=}.
struct StarAxiomWitness {
    std::vector<int32_t> f;  // plain function on state indices, X -> Y
    System beta;             // system on Y
};
struct StarAxiomsReport {
    bool a_reflexive = false;
    bool b_increasing = false;
    bool c_transitive = false;
    int d_candidates = 0;
    int d_closed = 0;
    int d_violations = 0;
    int e_witnesses = 0;
    int e_premises_held = 0;
    int e_violations = 0;
    bool ok() const {
        return a_reflexive && b_increasing && c_transitive && d_violations == 0 &&
               e_violations == 0;
    }
};
StarAxiomsReport star_axioms_check(const System& alpha,
                                   const std::vector<System>& candidates,
                                   const std::vector<StarAxiomWitness>& witnesses);

}  // namespace kleisli
