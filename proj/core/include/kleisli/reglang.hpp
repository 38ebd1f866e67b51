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
#include <string>
#include <vector>

#include "kleisli/alphabet.hpp"

namespace kleisli {

/// A deterministic automaton with a total transition table. Produced by the
/// subset construction; minimized and BFS-renumbered by minimize().
struct Dfa {
    int32_t letters = 0;
    int32_t start = 0;
    std::vector<std::vector<int32_t>> next;  // [state][letter]
    std::vector<uint8_t> accepting;

    int32_t size() const { return static_cast<int32_t>(next.size()); }
    bool operator==(const Dfa&) const = default;
};

/// An exact regular language over the visible letters of an alphabet,
/// held as an eps-NFA handle. Values are immutable; the underlying node
/// graph is shared between handles, so copies are cheap and languages cut
/// from the same graph (same nodes, different accepts) union for free.
///
/// Handles are never minimized implicitly; the decision procedures
/// normalize internally.
class RegLang {
public:
    struct Edge {
        int32_t from;
        int32_t letter;  // silent_label (-1) for an eps edge
        int32_t to;
        auto operator<=>(const Edge&) const = default;
    };
    struct Graph {
        int32_t nodes = 0;
        std::vector<Edge> edges;
    };

    static RegLang none(const Alphabet& alphabet);  // the empty language
    static RegLang from_words(const Alphabet& alphabet, const std::vector<Word>& words);

    /// A language carved out of an existing shared graph.
    static RegLang over_graph(const Alphabet& alphabet, std::shared_ptr<const Graph> graph,
                              int32_t start, std::vector<int32_t> accepts);

    const Alphabet& alphabet() const { return alphabet_; }
    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    int32_t start() const { return start_; }
    const std::vector<int32_t>& accepts() const { return accepts_; }

    bool member(const Word& w) const;
    bool is_empty() const;

    /// Exactly the words of length <= maxlen, in shortlex order.
    std::vector<Word> enumerate_upto(int maxlen) const;

    /// Subset construction (total, sink included).
    Dfa determinize() const;

    /// Unique minimal total DFA with canonical BFS numbering.
    Dfa minimal_dfa() const;

    /// DOT rendering of the underlying NFA (debugging aid).
    std::string to_dot() const;

private:
    Alphabet alphabet_;
    std::shared_ptr<const Graph> graph_;
    int32_t start_ = 0;
    std::vector<int32_t> accepts_;
};

RegLang reg_union(const RegLang& a, const RegLang& b);
RegLang reg_concat(const RegLang& a, const RegLang& b);
RegLang reg_star(const RegLang& a);

/// Language equality via subset construction on both sides and a
/// Hopcroft-Karp union-find run over the pair of DFAs.
bool equivalent(const RegLang& a, const RegLang& b);

/// a <= b, decided as union(a, b) == b.
bool reg_subset(const RegLang& a, const RegLang& b);

bool dfa_equivalent(const Dfa& a, const Dfa& b);
Dfa minimize_dfa(const Dfa& d);

/// Canonical byte encoding of minimize_dfa(d); equal strings iff equal
/// languages. Usable as a map key.
std::string dfa_key(const Dfa& d);

/// Stable text rendering of a DFA (one line per transition).
std::string describe_dfa(const Dfa& d, const Alphabet& alphabet);

}  // namespace kleisli
