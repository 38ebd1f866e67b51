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

#include <optional>
#include <string>

#include "kleisli/equivalence.hpp"
#include "kleisli/morphism.hpp"
#include "kleisli/saturation.hpp"
#include "kleisli/trace.hpp"

namespace kleisli {

/// A system document: an lts system, or an automaton in word-labelled form
/// (surface automata are the special case of words of length <= 1 and final
/// markers; readers of general documents produce Ena-tagged systems where
/// final states carry the bare word eps).
struct Model {
    enum class Kind { Lts, Ena };
    Kind kind = Kind::Lts;
    System system;
    std::optional<int32_t> initial;

    bool operator==(const Model&) const = default;
};

/// Canonical JSON: sorted keys, transitions sorted in effect order, final
/// list sorted, UTF-8, newline terminated. write(read(bytes)) is the
/// canonical form of the input; read(write(m)) == m.
Model read_json(const std::string& bytes);
std::string write_json(const Model& m);

/// Aldebaran format, lts only. Header `des (<first_state>, <transitions>,
/// <states>)`, then one `(<from>, "<label>", <to>)` line per transition.
/// Labels `i` and `tau` read as the silent label; the reader's alphabet is
/// the sorted set of visible labels that occur.
Model read_aut(const std::string& bytes);
std::string write_aut(const Model& m);

/// GraphViz renderings.
std::string write_dot(const Model& m);
std::string write_dot(const System& system, const Partition& clusters);
std::string write_dot(const WeakMatrix& summary);

/// Envelope for arbitrary morphisms (used by counterexample reports).
std::string write_morphism_json(const Morphism& m);
Morphism read_morphism_json(const std::string& bytes);

/// Envelope for bounded trace tables; canonical bytes back golden tests.
std::string write_trace_json(const TraceMap& t);

/// Envelope for partitions.
std::string write_partition_json(const Partition& p);

/// Envelope for an exact language: the canonical minimal DFA table.
std::string write_language_json(const RegLang& l);

/// Summary document for a word-level saturation: per pair a minimal DFA size
/// and a few sample words (the object itself is infinite).
std::string write_matrix_summary_json(const WeakMatrix& m, int sample_maxlen = 3,
                                      int sample_count = 4);

/// Surface view of an embedded automaton system: moves must have words of
/// length <= 1 and bare parts within {eps}. Inverse of embed_underline.
SurfaceEna surface_from_embedded(const System& ena);

/// Model wrappers around systems.
Model model_of_lts(System lts, std::optional<int32_t> initial = std::nullopt);
Model model_of_ena(System ena, std::optional<int32_t> initial = std::nullopt);
Model model_of_surface(const SurfaceEna& s, std::optional<int32_t> initial = std::nullopt);

}  // namespace kleisli
