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

#include <utility>
#include <vector>

#include "kleisli/morphism.hpp"
#include "kleisli/reglang.hpp"

namespace kleisli {

/// Per-state accepted words of a word-level automaton system: either the
/// k-th Kleene iterate (a finite word set per state) or the exact language.
struct TraceMap {
    StateSpace space;
    Alphabet alphabet;
    bool exact = false;
    int bound = 0;                         // bounded mode only
    std::vector<std::vector<Word>> words;  // bounded mode, shortlex per state
    std::vector<RegLang> langs;            // exact mode
};

/// n-fold Kleisli composition against bottom: tr_0 = empty everywhere,
/// tr_k = tr_{k-1} . alpha. Monotone in n.
TraceMap trace_iterate(const System& underlined, int n);

/// The exact accepted language per state: the bare component of the
/// word-level saturation, which is the least fixed point of x |-> x . alpha.
TraceMap trace_exact(const System& underlined);

/// One Kleisli step applied to a language-valued candidate:
/// (t . alpha)(x) = union of w.t[y] over word moves (w, y) plus the bare
/// words of x. Exact traces are fixed points of this map.
std::vector<RegLang> trace_step(const std::vector<RegLang>& t, const System& underlined);

/// Uniformity of the trace operator: when h is a homomorphism from alpha to
/// beta (h# . alpha = beta . h#), exact traces must transport along h.
struct UniformityReport {
    bool premise = false;
    bool conclusion_checked = false;
    bool conclusion = false;
    bool ok() const { return !premise || conclusion; }
};
/// h given as a plain function on state indices.
UniformityReport check_uniformity(const System& alpha, const std::vector<int32_t>& h,
                                  const System& beta);
/// h given as a word-valued (free-lts) morphism, embedded with empty bare part.
UniformityReport check_uniformity(const System& alpha, const Morphism& h_free,
                                  const System& beta);

/// The Conway dagger over word-valued morphisms: for f: X -o X + A (the first
/// x_count target states are the X copy, the rest form A), dagger(f)(x)(a) is
/// the language of words spelled along paths from x that exit through a.
struct DaggerResult {
    StateSpace source;
    std::vector<std::string> exit_names;     // names of the A part
    std::vector<std::vector<RegLang>> lang;  // [x][a]
};
DaggerResult conway_dagger(const Morphism& f, int32_t x_count);

/// The dagger fixed-point law f+ = [f+, unit] . f, checked per state and exit
/// via language equivalence.
bool dagger_fixed_point_holds(const Morphism& f, int32_t x_count, const DaggerResult& d);

/// Recast of an automaton system through P(S* x Id + S*) ~ P(S* x (Id + 1)):
/// a word-valued morphism X -o X + {acc} whose exit moves are the bare words.
/// Returns the morphism and x_count = |X|.
std::pair<Morphism, int32_t> ena_to_pointed(const System& underlined_ena);

}  // namespace kleisli
