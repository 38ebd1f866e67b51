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

#include "kleisli/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace kleisli {

namespace {

// A comparable successor description of one state after collapsing successor
// states to block ids. Equal signatures within a block = stability.
std::string signature(const Effect& e, const std::vector<int32_t>& block_of) {
    std::string sig;
    auto put = [&sig](int64_t v) {
        sig += std::to_string(v);
        sig += ',';
    };
    switch (e.tag()) {
        case Monad::Pow: {
            std::vector<int32_t> bs;
            for (int32_t s : e.states()) bs.push_back(block_of[static_cast<size_t>(s)]);
            std::sort(bs.begin(), bs.end());
            bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
            for (int32_t b : bs) put(b);
            break;
        }
        case Monad::Lts: {
            std::vector<std::pair<int32_t, int32_t>> ms;
            for (const LtsEdge& m : e.moves())
                ms.push_back({m.label, block_of[static_cast<size_t>(m.state)]});
            std::sort(ms.begin(), ms.end());
            ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
            for (auto [l, b] : ms) {
                put(l);
                put(b);
            }
            break;
        }
        case Monad::FreeLts:
        case Monad::Ena: {
            std::vector<std::pair<Word, int32_t>> ms;
            for (const WordEdge& m : e.word_moves())
                ms.push_back({m.word, block_of[static_cast<size_t>(m.state)]});
            std::sort(ms.begin(), ms.end(), [](const auto& a, const auto& b) {
                if (a.first == b.first) return a.second < b.second;
                return a.first < b.first;
            });
            ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
            for (const auto& [w, b] : ms) {
                for (int32_t l : w.letters()) put(l);
                sig += '/';
                put(b);
            }
            sig += '|';
            for (const Word& w : e.bare()) {
                for (int32_t l : w.letters()) put(l);
                sig += '/';
            }
            break;
        }
    }
    return sig;
}

Partition refine_by(const StateSpace& space, Partition current,
                    const std::function<std::string(int32_t, const std::vector<int32_t>&)>& sig) {
    const int32_t n = space.size();
    for (;;) {
        std::vector<int32_t> block_of(static_cast<size_t>(n));
        for (int32_t s = 0; s < n; ++s) block_of[static_cast<size_t>(s)] = current.block_of(s);
        std::map<std::pair<int32_t, std::string>, int32_t> groups;
        std::vector<int32_t> next(static_cast<size_t>(n));
        for (int32_t s = 0; s < n; ++s) {
            std::pair<int32_t, std::string> key{current.block_of(s), sig(s, block_of)};
            auto [it, fresh] = groups.emplace(std::move(key), static_cast<int32_t>(groups.size()));
            (void)fresh;
            next[static_cast<size_t>(s)] = it->second;
        }
        Partition refined = Partition::from_block_of(space, std::move(next));
        if (refined == current) return current;
        current = std::move(refined);
    }
}

std::vector<std::string> prefixed_names(const System& a, const System& b) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(a.source().size() + b.source().size()));
    for (const std::string& n : a.source().names()) names.push_back("1:" + n);
    for (const std::string& n : b.source().names()) names.push_back("2:" + n);
    return names;
}

Effect offset_effect(const Effect& e, int32_t offset) {
    switch (e.tag()) {
        case Monad::Pow: {
            std::vector<int32_t> out;
            for (int32_t s : e.states()) out.push_back(s + offset);
            return Effect::pow(std::move(out));
        }
        case Monad::Lts: {
            std::vector<LtsEdge> out;
            for (const LtsEdge& m : e.moves()) out.push_back({m.label, m.state + offset});
            return Effect::lts(std::move(out));
        }
        case Monad::FreeLts: {
            std::vector<WordEdge> out;
            for (const WordEdge& m : e.word_moves()) out.push_back({m.word, m.state + offset});
            return Effect::free_lts(std::move(out));
        }
        case Monad::Ena: {
            std::vector<WordEdge> out;
            for (const WordEdge& m : e.word_moves()) out.push_back({m.word, m.state + offset});
            return Effect::ena(std::move(out), e.bare());
        }
    }
    return Effect{};
}

}  // namespace

Partition Partition::discrete(const StateSpace& space) {
    std::vector<int32_t> ids(static_cast<size_t>(space.size()));
    for (int32_t i = 0; i < space.size(); ++i) ids[static_cast<size_t>(i)] = i;
    return from_block_of(space, std::move(ids));
}

Partition Partition::single_block(const StateSpace& space) {
    return from_block_of(space, std::vector<int32_t>(static_cast<size_t>(space.size()), 0));
}

Partition Partition::from_block_of(const StateSpace& space, std::vector<int32_t> block_of) {
    if (block_of.size() != static_cast<size_t>(space.size()))
        throw SpaceMismatch("partition: block assignment size mismatch");
    Partition p;
    p.space_ = space;
    // Renumber by first occurrence.
    std::map<int32_t, int32_t> renumber;
    p.block_of_.resize(block_of.size());
    for (size_t i = 0; i < block_of.size(); ++i) {
        auto [it, fresh] = renumber.emplace(block_of[i], static_cast<int32_t>(renumber.size()));
        (void)fresh;
        p.block_of_[i] = it->second;
    }
    p.blocks_.resize(renumber.size());
    for (size_t i = 0; i < p.block_of_.size(); ++i)
        p.blocks_[static_cast<size_t>(p.block_of_[i])].push_back(static_cast<int32_t>(i));
    return p;
}

bool Partition::refines(const Partition& coarser) const {
    if (space_ != coarser.space_)
        throw SpaceMismatch("refines: partitions over different spaces");
    for (const auto& block : blocks_)
        for (size_t i = 1; i < block.size(); ++i)
            if (!coarser.same_block(block[0], block[i])) return false;
    return true;
}

Partition coarsest_stable(const System& system, const Partition& initial) {
    if (!system.is_system())
        throw SpaceMismatch("coarsest_stable: not an endomorphism");
    return refine_by(system.source(), initial,
                     [&](int32_t s, const std::vector<int32_t>& block_of) {
                         return signature(system.at(s), block_of);
                     });
}

Partition coarsest_stable(const SurfaceEna& system, const Partition& initial) {
    return refine_by(system.space(), initial,
                     [&](int32_t s, const std::vector<int32_t>& block_of) {
                         std::string sig = signature(system.moves.at(s), block_of);
                         sig += system.is_final(s) ? "!" : "-";
                         return sig;
                     });
}

Partition strong_partition(const System& system) {
    return coarsest_stable(system, Partition::single_block(system.source()));
}

Partition strong_partition(const SurfaceEna& system) {
    return coarsest_stable(system, Partition::single_block(system.space()));
}

System disjoint_union(const System& a, const System& b) {
    if (a.tag() != b.tag()) throw MonadMismatch("disjoint_union: mixed monad tags");
    if (a.alphabet() != b.alphabet()) throw MonadMismatch("disjoint_union: mixed alphabets");
    if (!a.is_system() || !b.is_system())
        throw SpaceMismatch("disjoint_union: arguments must be systems");
    StateSpace space = StateSpace::make(prefixed_names(a, b));
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(space.size()));
    for (const Effect& e : a.image()) image.push_back(e);
    for (const Effect& e : b.image()) image.push_back(offset_effect(e, a.source().size()));
    return Morphism::make(a.tag(), a.alphabet(), space, space, std::move(image));
}

SurfaceEna disjoint_union(const SurfaceEna& a, const SurfaceEna& b) {
    System moves = disjoint_union(a.moves, b.moves);
    std::vector<uint8_t> final_ = a.final_;
    final_.insert(final_.end(), b.final_.begin(), b.final_.end());
    return SurfaceEna{std::move(moves), std::move(final_)};
}

Partition strong_bisimilarity(const System& a, const System& b) {
    return strong_partition(disjoint_union(a, b));
}

bool is_bisimulation(const System& system, const Partition& p) {
    if (p.space() != system.source())
        throw SpaceMismatch("is_bisimulation: partition over a different space");
    return coarsest_stable(system, p) == p;
}

bool is_bisimulation(const SurfaceEna& system, const Partition& p) {
    if (p.space() != system.space())
        throw SpaceMismatch("is_bisimulation: partition over a different space");
    return coarsest_stable(system, p) == p;
}

Partition weak_bisimilarity_star(const System& lts) {
    return strong_partition(star(lts));
}

Partition weak_bisimilarity_star(const SurfaceEna& ena) {
    return strong_partition(star(ena));
}

Partition weak_partition_of_matrix(const WeakMatrix& m) {
    const int32_t n = m.space.size();
    // Canonical per-state keys of bare languages; computed once.
    std::vector<std::string> bare_keys(static_cast<size_t>(n));
    if (m.has_bare)
        for (int32_t x = 0; x < n; ++x)
            bare_keys[static_cast<size_t>(x)] = dfa_key(m.bare[static_cast<size_t>(x)].determinize());

    Partition current = Partition::single_block(m.space);
    for (;;) {
        // Memoized per round: the language from x into each current block is
        // one accept-set widening over the shared saturation graph.
        std::vector<std::string> keys(static_cast<size_t>(n));
        for (int32_t x = 0; x < n; ++x) {
            std::string key;
            for (int32_t b = 0; b < current.block_count(); ++b) {
                RegLang into_block = RegLang::over_graph(
                    m.alphabet, m.lang[static_cast<size_t>(x)][0].graph_ptr(), x,
                    current.block(b));
                key += dfa_key(into_block.determinize());
                key += '#';
            }
            if (m.has_bare) key += bare_keys[static_cast<size_t>(x)];
            keys[static_cast<size_t>(x)] = std::move(key);
        }
        std::map<std::pair<int32_t, std::string>, int32_t> groups;
        std::vector<int32_t> next(static_cast<size_t>(n));
        for (int32_t s = 0; s < n; ++s) {
            std::pair<int32_t, std::string> k{current.block_of(s), keys[static_cast<size_t>(s)]};
            auto [it, fresh] = groups.emplace(std::move(k), static_cast<int32_t>(groups.size()));
            (void)fresh;
            next[static_cast<size_t>(s)] = it->second;
        }
        Partition refined = Partition::from_block_of(m.space, std::move(next));
        if (refined == current) return current;
        current = std::move(refined);
    }
}

Partition weak_bisimilarity_free(const System& underlined) {
    return weak_partition_of_matrix(saturate_free(underlined));
}

Partition milner_oracle(const System& lts) {
    if (lts.tag() != Monad::Lts) throw WrongMonad("milner_oracle: expected an lts system");
    if (!lts.is_system()) throw SpaceMismatch("milner_oracle: not an endomorphism");
    const int32_t n = lts.source().size();
    if (n > 10) throw TooLarge("milner_oracle: oracle scale is |X| <= 10");
    const int32_t k = lts.alphabet().size();

    auto matrix = [&](bool value) {
        return std::vector<std::vector<uint8_t>>(static_cast<size_t>(n),
                                                 std::vector<uint8_t>(static_cast<size_t>(n), value));
    };
    auto mat_mult = [&](const auto& a, const auto& b) {
        auto out = matrix(false);
        for (int32_t i = 0; i < n; ++i)
            for (int32_t j = 0; j < n; ++j)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    for (int32_t l = 0; l < n; ++l)
                        if (b[static_cast<size_t>(j)][static_cast<size_t>(l)])
                            out[static_cast<size_t>(i)][static_cast<size_t>(l)] = 1;
        return out;
    };

    auto tau_step = matrix(false);
    std::vector<std::vector<std::vector<uint8_t>>> vis(static_cast<size_t>(k), matrix(false));
    for (int32_t x = 0; x < n; ++x)
        for (const LtsEdge& m : lts.at(x).moves()) {
            if (m.label == silent_label)
                tau_step[static_cast<size_t>(x)][static_cast<size_t>(m.state)] = 1;
            else
                vis[static_cast<size_t>(m.label)][static_cast<size_t>(x)][static_cast<size_t>(m.state)] = 1;
        }
    // Reflexive-transitive closure of the silent step (Warshall).
    auto tau_star = tau_step;
    for (int32_t i = 0; i < n; ++i) tau_star[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int32_t via = 0; via < n; ++via)
        for (int32_t i = 0; i < n; ++i)
            if (tau_star[static_cast<size_t>(i)][static_cast<size_t>(via)])
                for (int32_t j = 0; j < n; ++j)
                    if (tau_star[static_cast<size_t>(via)][static_cast<size_t>(j)])
                        tau_star[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;

    // Double arrows: index 0 = silent, 1 + a = visible letter a.
    std::vector<std::vector<std::vector<uint8_t>>> dbl;
    dbl.push_back(tau_star);
    for (int32_t a = 0; a < k; ++a)
        dbl.push_back(mat_mult(mat_mult(tau_star, vis[static_cast<size_t>(a)]), tau_star));

    auto related = matrix(true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int32_t x = 0; x < n; ++x)
            for (int32_t y = 0; y < n; ++y) {
                if (!related[static_cast<size_t>(x)][static_cast<size_t>(y)]) continue;
                bool ok = true;
                for (size_t sigma = 0; ok && sigma < dbl.size(); ++sigma) {
                    const auto& step = dbl[sigma];
                    for (int32_t x2 = 0; ok && x2 < n; ++x2) {
                        if (!step[static_cast<size_t>(x)][static_cast<size_t>(x2)]) continue;
                        bool matched = false;
                        for (int32_t y2 = 0; y2 < n && !matched; ++y2)
                            if (step[static_cast<size_t>(y)][static_cast<size_t>(y2)] &&
                                related[static_cast<size_t>(x2)][static_cast<size_t>(y2)])
                                matched = true;
                        if (!matched) ok = false;
                    }
                    for (int32_t y2 = 0; ok && y2 < n; ++y2) {
                        if (!step[static_cast<size_t>(y)][static_cast<size_t>(y2)]) continue;
                        bool matched = false;
                        for (int32_t x2 = 0; x2 < n && !matched; ++x2)
                            if (step[static_cast<size_t>(x)][static_cast<size_t>(x2)] &&
                                related[static_cast<size_t>(y2)][static_cast<size_t>(x2)])
                                matched = true;
                        if (!matched) ok = false;
                    }
                }
                if (!ok) {
                    related[static_cast<size_t>(x)][static_cast<size_t>(y)] = 0;
                    changed = true;
                }
            }
    }
    // The greatest fixed point is an equivalence; read off its classes.
    std::vector<int32_t> block_of(static_cast<size_t>(n), -1);
    int32_t blocks = 0;
    for (int32_t x = 0; x < n; ++x) {
        if (block_of[static_cast<size_t>(x)] >= 0) continue;
        int32_t b = blocks++;
        block_of[static_cast<size_t>(x)] = b;
        for (int32_t y = x + 1; y < n; ++y)
            if (related[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                related[static_cast<size_t>(y)][static_cast<size_t>(x)] &&
                block_of[static_cast<size_t>(y)] < 0)
                block_of[static_cast<size_t>(y)] = b;
    }
    return Partition::from_block_of(lts.source(), std::move(block_of));
}

namespace {

std::vector<std::string> block_names(const StateSpace& space, const Partition& p) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(p.block_count()));
    for (int32_t b = 0; b < p.block_count(); ++b)
        names.push_back(space.name(p.block(b).front()));
    return names;
}

Effect quotient_effect(const Effect& e, const Partition& p) {
    switch (e.tag()) {
        case Monad::Pow: {
            std::vector<int32_t> out;
            for (int32_t s : e.states()) out.push_back(p.block_of(s));
            return Effect::pow(std::move(out));
        }
        case Monad::Lts: {
            std::vector<LtsEdge> out;
            for (const LtsEdge& m : e.moves()) out.push_back({m.label, p.block_of(m.state)});
            return Effect::lts(std::move(out));
        }
        case Monad::FreeLts: {
            std::vector<WordEdge> out;
            for (const WordEdge& m : e.word_moves()) out.push_back({m.word, p.block_of(m.state)});
            return Effect::free_lts(std::move(out));
        }
        case Monad::Ena: {
            std::vector<WordEdge> out;
            for (const WordEdge& m : e.word_moves()) out.push_back({m.word, p.block_of(m.state)});
            return Effect::ena(std::move(out), e.bare());
        }
    }
    return Effect{};
}

}  // namespace

System quotient(const System& system, const Partition& p) {
    if (p.space() != system.source())
        throw SpaceMismatch("quotient: partition over a different space");
    StateSpace space = StateSpace::make(block_names(system.source(), p));
    std::vector<Effect> image(static_cast<size_t>(p.block_count()), Effect::bottom(system.tag()));
    for (int32_t x = 0; x < system.source().size(); ++x) {
        Effect& slot = image[static_cast<size_t>(p.block_of(x))];
        slot = effect_join(slot, quotient_effect(system.at(x), p));
    }
    return Morphism::make(system.tag(), system.alphabet(), space, space, std::move(image));
}

SurfaceEna quotient(const SurfaceEna& system, const Partition& p) {
    System moves = quotient(system.moves, p);
    std::vector<uint8_t> final_(static_cast<size_t>(p.block_count()), 0);
    for (int32_t x = 0; x < system.space().size(); ++x)
        if (system.is_final(x)) final_[static_cast<size_t>(p.block_of(x))] = 1;
    return SurfaceEna{std::move(moves), std::move(final_)};
}

}  // namespace kleisli
