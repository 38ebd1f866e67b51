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

#include "kleisli/saturation.hpp"

#include <algorithm>

namespace kleisli {

System star(const System& alpha) {
    if (alpha.tag() != Monad::Lts)
        throw WrongMonad("star: expected an lts system");
    if (!alpha.is_system())
        throw SpaceMismatch("star: not an endomorphism");
    Morphism unit = Morphism::identity(alpha.tag(), alpha.alphabet(), alpha.source());
    Morphism bottom = Morphism::bottom(alpha.tag(), alpha.alphabet(), alpha.source(), alpha.target());
    auto step = [&](const Morphism& x) { return join(unit, compose(x, alpha)); };
    LfpResult r = lfp(step, bottom, default_fuel(bottom));
    if (!r.exact)
        throw Error("star: iteration did not stabilize within fuel");
    return r.value;
}

SurfaceEna star(const SurfaceEna& alpha) {
    SurfaceEna unit = surface_identity(alpha.alphabet(), alpha.space());
    SurfaceEna current{Morphism::bottom(Monad::Lts, alpha.alphabet(), alpha.space(), alpha.space()),
                       std::vector<uint8_t>(static_cast<size_t>(alpha.space().size()), 0)};
    const int fuel = default_fuel(current.moves) + 2 * alpha.space().size() + 2;
    for (int i = 0; i < fuel; ++i) {
        SurfaceEna next = surface_join(unit, surface_compose(current, alpha));
        if (next == current) return current;
        current = std::move(next);
    }
    throw Error("star: surface iteration did not stabilize within fuel");
}

System transitive_closure(const System& alpha) {
    if (alpha.tag() != Monad::Lts)
        throw WrongMonad("transitive_closure: expected an lts system");
    if (!alpha.is_system())
        throw SpaceMismatch("transitive_closure: not an endomorphism");
    Morphism bottom = Morphism::bottom(alpha.tag(), alpha.alphabet(), alpha.source(), alpha.target());
    auto step = [&](const Morphism& x) { return join(alpha, compose(x, alpha)); };
    LfpResult r = lfp(step, bottom, default_fuel(bottom));
    if (!r.exact)
        throw Error("transitive_closure: iteration did not stabilize within fuel");
    return r.value;
}

WeakMatrix saturate_free(const System& underlined) {
    if (underlined.tag() != Monad::FreeLts && underlined.tag() != Monad::Ena)
        throw WrongMonad("saturate_free: expected a word-level system");
    if (!underlined.is_system())
        throw SpaceMismatch("saturate_free: not an endomorphism");
    const StateSpace& space = underlined.source();
    const Alphabet& alphabet = underlined.alphabet();
    const int32_t n = space.size();
    const bool has_bare = underlined.tag() == Monad::Ena;

    auto g = std::make_shared<RegLang::Graph>();
    g->nodes = n;
    int32_t sink = -1;
    if (has_bare) sink = g->nodes++;
    auto add_chain = [&](int32_t from, const Word& w, int32_t to) {
        if (w.empty()) {
            g->edges.push_back({from, silent_label, to});
            return;
        }
        int32_t at = from;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            int32_t mid = g->nodes++;
            g->edges.push_back({at, w[i], mid});
            at = mid;
        }
        g->edges.push_back({at, w[w.size() - 1], to});
    };
    for (int32_t x = 0; x < n; ++x) {
        const Effect& e = underlined.at(x);
        for (const WordEdge& m : e.word_moves()) add_chain(x, m.word, m.state);
        for (const Word& w : e.bare()) add_chain(x, w, sink);
    }
    std::shared_ptr<const RegLang::Graph> shared = std::move(g);

    WeakMatrix out{space, alphabet, {}, {}, has_bare};
    out.lang.resize(static_cast<size_t>(n));
    for (int32_t x = 0; x < n; ++x) {
        out.lang[static_cast<size_t>(x)].reserve(static_cast<size_t>(n));
        for (int32_t y = 0; y < n; ++y)
            out.lang[static_cast<size_t>(x)].push_back(
                RegLang::over_graph(alphabet, shared, x, {y}));
        if (has_bare)
            out.bare.push_back(RegLang::over_graph(alphabet, shared, x, {sink}));
    }
    return out;
}

Morphism elim_to_lts(const Morphism& f, bool strict) {
    if (f.tag() != Monad::FreeLts)
        throw WrongMonad("elim_to_lts: expected a free-lts morphism");
    std::vector<Effect> image;
    image.reserve(f.image().size());
    for (const Effect& e : f.image()) {
        std::vector<LtsEdge> moves;
        for (const WordEdge& m : e.word_moves()) {
            if (m.word.empty())
                moves.push_back({silent_label, m.state});
            else if (m.word.size() == 1)
                moves.push_back({m.word[0], m.state});
            else if (strict)
                throw WrongMonad("elim_to_lts: word of length >= 2 in strict mode");
        }
        image.push_back(Effect::lts(std::move(moves)));
    }
    return Morphism::make(Monad::Lts, f.alphabet(), f.source(), f.target(), std::move(image));
}

System elim_matrix_to_lts(const WeakMatrix& m) {
    const int32_t n = m.space.size();
    const int32_t k = m.alphabet.size();
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(n));
    for (int32_t x = 0; x < n; ++x) {
        std::vector<LtsEdge> moves;
        for (int32_t y = 0; y < n; ++y) {
            const RegLang& l = m.lang[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (l.member(Word::epsilon())) moves.push_back({silent_label, y});
            for (int32_t a = 0; a < k; ++a)
                if (l.member(Word::single(a))) moves.push_back({a, y});
        }
        image.push_back(Effect::lts(std::move(moves)));
    }
    return Morphism::make(Monad::Lts, m.alphabet, m.space, m.space, std::move(image));
}

StarAxiomsReport star_axioms_check(const System& alpha,
                                   const std::vector<System>& candidates,
                                   const std::vector<StarAxiomWitness>& witnesses) {
    StarAxiomsReport report;
    System saturated = star(alpha);
    Morphism unit = Morphism::identity(alpha.tag(), alpha.alphabet(), alpha.source());
    report.a_reflexive = leq(unit, saturated);
    report.b_increasing = leq(alpha, saturated);
    report.c_transitive = leq(compose(saturated, saturated), saturated);
    for (const System& beta : candidates) {
        ++report.d_candidates;
        bool closed = leq(unit, beta) && leq(alpha, beta) && leq(compose(beta, beta), beta);
        if (!closed) continue;
        ++report.d_closed;
        if (!leq(saturated, beta)) ++report.d_violations;
    }
    for (const StarAxiomWitness& w : witnesses) {
        ++report.e_witnesses;
        // f# = unit . f, a one-move-per-state morphism into beta's space.
        std::vector<Effect> image;
        for (int32_t x = 0; x < alpha.source().size(); ++x)
            image.push_back(Effect::lts({{silent_label, w.f[static_cast<size_t>(x)]}}));
        Morphism fs = Morphism::make(Monad::Lts, alpha.alphabet(), alpha.source(),
                                     w.beta.source(), std::move(image));
        System beta_star = star(w.beta);
        Morphism lhs = compose(fs, alpha);
        Morphism rhs = compose(w.beta, fs);
        Morphism lhs_star = compose(fs, saturated);
        Morphism rhs_star = compose(beta_star, fs);
        if (leq(lhs, rhs)) {
            ++report.e_premises_held;
            if (!leq(lhs_star, rhs_star)) ++report.e_violations;
        }
        if (leq(rhs, lhs)) {
            ++report.e_premises_held;
            if (!leq(rhs_star, lhs_star)) ++report.e_violations;
        }
    }
    return report;
}

}  // namespace kleisli
