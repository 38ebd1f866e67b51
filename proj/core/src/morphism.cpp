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

#include "kleisli/morphism.hpp"

#include <algorithm>
#include <cassert>

namespace kleisli {

namespace {

void check_effect(const Effect& e, Monad tag, const Alphabet& alphabet,
                  const StateSpace& target, int32_t state) {
    const std::string where = "image[" + std::to_string(state) + "]";
    if (e.tag() != tag)
        throw MonadMismatch(where + ": effect tag " + monad_name(e.tag()) +
                            " does not match morphism tag " + monad_name(tag));
    const int32_t n = target.size();
    const int32_t k = alphabet.size();
    auto check_state = [&](int32_t s) {
        if (s < 0 || s >= n)
            throw SpaceMismatch(where + ": successor index " + std::to_string(s) +
                                " outside target of size " + std::to_string(n));
    };
    auto check_word = [&](const Word& w) {
        for (int32_t l : w.letters())
            if (l < 0 || l >= k)
                throw MonadMismatch(where + ": letter index " + std::to_string(l) +
                                    " outside alphabet of size " + std::to_string(k));
    };
    for (int32_t s : e.states()) check_state(s);
    for (const LtsEdge& m : e.moves()) {
        check_state(m.state);
        if (m.label != silent_label && (m.label < 0 || m.label >= k))
            throw MonadMismatch(where + ": bad label index " + std::to_string(m.label));
    }
    for (const WordEdge& m : e.word_moves()) {
        check_state(m.state);
        check_word(m.word);
    }
    for (const Word& w : e.bare()) check_word(w);
}

void require_parallel(const Morphism& f, const Morphism& g, const char* op) {
    if (f.tag() != g.tag())
        throw MonadMismatch(std::string(op) + ": mixed monad tags");
    if (f.alphabet() != g.alphabet())
        throw MonadMismatch(std::string(op) + ": mixed alphabets");
    if (f.source() != g.source() || f.target() != g.target())
        throw SpaceMismatch(std::string(op) + ": morphisms are not parallel");
}

Effect compose_at(const Morphism& g, const Effect& fx) {
    switch (fx.tag()) {
        case Monad::Pow: {
            std::vector<int32_t> out;
            for (int32_t y : fx.states()) {
                const Effect& gy = g.at(y);
                out.insert(out.end(), gy.states().begin(), gy.states().end());
            }
            return Effect::pow(std::move(out));
        }
        case Monad::Lts: {
            // Labels merge only when one of the two is silent.
            std::vector<LtsEdge> out;
            for (const LtsEdge& m1 : fx.moves()) {
                for (const LtsEdge& m2 : g.at(m1.state).moves()) {
                    if (m2.label == silent_label)
                        out.push_back({m1.label, m2.state});
                    else if (m1.label == silent_label)
                        out.push_back({m2.label, m2.state});
                }
            }
            return Effect::lts(std::move(out));
        }
        case Monad::FreeLts: {
            std::vector<WordEdge> out;
            for (const WordEdge& m1 : fx.word_moves())
                for (const WordEdge& m2 : g.at(m1.state).word_moves())
                    out.push_back({m1.word.concat(m2.word), m2.state});
            return Effect::free_lts(std::move(out));
        }
        case Monad::Ena: {
            std::vector<WordEdge> out;
            std::vector<Word> bare = fx.bare();
            for (const WordEdge& m1 : fx.word_moves()) {
                const Effect& gy = g.at(m1.state);
                for (const WordEdge& m2 : gy.word_moves())
                    out.push_back({m1.word.concat(m2.word), m2.state});
                for (const Word& s2 : gy.bare())
                    bare.push_back(m1.word.concat(s2));
            }
            return Effect::ena(std::move(out), std::move(bare));
        }
    }
    return Effect{};
}

}  // namespace

Morphism Morphism::make(Monad tag, Alphabet alphabet, StateSpace source,
                        StateSpace target, std::vector<Effect> image) {
    if (image.size() != static_cast<size_t>(source.size()))
        throw SpaceMismatch("morphism image has " + std::to_string(image.size()) +
                            " entries for a source of size " + std::to_string(source.size()));
    for (size_t i = 0; i < image.size(); ++i)
        check_effect(image[i], tag, alphabet, target, static_cast<int32_t>(i));
    Morphism m;
    m.tag_ = tag;
    m.alphabet_ = std::move(alphabet);
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.image_ = std::move(image);
    return m;
}

Morphism Morphism::identity(Monad tag, const Alphabet& alphabet, const StateSpace& space) {
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(space.size()));
    for (int32_t x = 0; x < space.size(); ++x) {
        switch (tag) {
            case Monad::Pow: image.push_back(Effect::pow({x})); break;
            case Monad::Lts: image.push_back(Effect::lts({{silent_label, x}})); break;
            case Monad::FreeLts: image.push_back(Effect::free_lts({{Word::epsilon(), x}})); break;
            case Monad::Ena: image.push_back(Effect::ena({{Word::epsilon(), x}}, {})); break;
        }
    }
    return make(tag, alphabet, space, space, std::move(image));
}

Morphism Morphism::bottom(Monad tag, const Alphabet& alphabet,
                          const StateSpace& source, const StateSpace& target) {
    std::vector<Effect> image(static_cast<size_t>(source.size()), Effect::bottom(tag));
    return make(tag, alphabet, source, target, std::move(image));
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.tag() != g.tag())
        throw MonadMismatch("compose: mixed monad tags");
    if (f.alphabet() != g.alphabet())
        throw MonadMismatch("compose: mixed alphabets");
    if (f.target() != g.source())
        throw SpaceMismatch("compose: target of f differs from source of g");
    std::vector<Effect> image;
    image.reserve(f.image().size());
    for (const Effect& fx : f.image()) image.push_back(compose_at(g, fx));
    return Morphism::make(f.tag(), f.alphabet(), f.source(), g.target(), std::move(image));
}

Morphism join(const Morphism& f, const Morphism& g) {
    require_parallel(f, g, "join");
    std::vector<Effect> image;
    image.reserve(f.image().size());
    for (size_t i = 0; i < f.image().size(); ++i)
        image.push_back(effect_join(f.image()[i], g.image()[i]));
    return Morphism::make(f.tag(), f.alphabet(), f.source(), f.target(), std::move(image));
}

bool leq(const Morphism& f, const Morphism& g) {
    require_parallel(f, g, "leq");
    for (size_t i = 0; i < f.image().size(); ++i)
        if (!effect_leq(f.image()[i], g.image()[i])) return false;
    return true;
}

LfpResult lfp(const std::function<Morphism(const Morphism&)>& step,
              const Morphism& bottom, int fuel) {
    if (fuel <= 0) throw Error("lfp: fuel must be positive");
    Morphism current = bottom;
    for (int i = 0; i < fuel; ++i) {
        Morphism next = step(current);
        if (!leq(current, next))
            throw NonMonotone("lfp: iterate " + std::to_string(i + 1) +
                              " is not above its predecessor");
        if (next == current) return {std::move(next), true, i + 1};
        current = std::move(next);
    }
    return {std::move(current), false, fuel};
}

int default_fuel(const Morphism& bottom) {
    const long long n = bottom.source().size();
    const long long m = bottom.target().size();
    const long long k = bottom.alphabet().size();
    long long height = 0;
    switch (bottom.tag()) {
        case Monad::Pow: height = n * m; break;
        case Monad::Lts: height = n * (k + 1) * m; break;
        case Monad::FreeLts:
        case Monad::Ena:
            // Word sets have no finite height; fall back to a flat budget.
            return 1000;
    }
    long long fuel = 10 * height + 10;
    if (fuel > 1000000) fuel = 1000000;
    return static_cast<int>(fuel);
}

Morphism embed_underline(const Morphism& lts_system) {
    if (lts_system.tag() != Monad::Lts)
        throw WrongMonad("embed_underline: expected an lts system");
    std::vector<Effect> image;
    image.reserve(lts_system.image().size());
    for (const Effect& e : lts_system.image()) {
        std::vector<WordEdge> moves;
        moves.reserve(e.moves().size());
        for (const LtsEdge& m : e.moves())
            moves.push_back({m.label == silent_label ? Word::epsilon() : Word::single(m.label),
                             m.state});
        image.push_back(Effect::free_lts(std::move(moves)));
    }
    return Morphism::make(Monad::FreeLts, lts_system.alphabet(), lts_system.source(),
                          lts_system.target(), std::move(image));
}

Morphism embed_underline(const SurfaceEna& ena) {
    const Morphism& m = ena.moves;
    if (m.tag() != Monad::Lts)
        throw WrongMonad("embed_underline: surface moves must be lts-tagged");
    if (ena.final_.size() != static_cast<size_t>(m.source().size()))
        throw SpaceMismatch("embed_underline: final marker size mismatch");
    std::vector<Effect> image;
    image.reserve(m.image().size());
    for (int32_t x = 0; x < m.source().size(); ++x) {
        std::vector<WordEdge> moves;
        for (const LtsEdge& e : m.at(x).moves())
            moves.push_back({e.label == silent_label ? Word::epsilon() : Word::single(e.label),
                             e.state});
        std::vector<Word> bare;
        if (ena.is_final(x)) bare.push_back(Word::epsilon());
        image.push_back(Effect::ena(std::move(moves), std::move(bare)));
    }
    return Morphism::make(Monad::Ena, m.alphabet(), m.source(), m.target(), std::move(image));
}

SurfaceEna surface_compose(const SurfaceEna& g, const SurfaceEna& f) {
    if (f.moves.target() != g.moves.source())
        throw SpaceMismatch("surface_compose: spaces do not line up");
    // Pairs compose like lts moves. The final marker of the composite holds at
    // x when f already marks x, or when a silent f-move reaches a g-final state.
    Morphism pairs = compose(g.moves, f.moves);
    std::vector<uint8_t> final_(f.final_);
    for (int32_t x = 0; x < f.moves.source().size(); ++x) {
        if (final_[static_cast<size_t>(x)]) continue;
        for (const LtsEdge& m : f.moves.at(x).moves()) {
            if (m.label == silent_label && g.is_final(m.state)) {
                final_[static_cast<size_t>(x)] = 1;
                break;
            }
        }
    }
    return SurfaceEna{std::move(pairs), std::move(final_)};
}

SurfaceEna surface_identity(const Alphabet& alphabet, const StateSpace& space) {
    return SurfaceEna{Morphism::identity(Monad::Lts, alphabet, space),
                      std::vector<uint8_t>(static_cast<size_t>(space.size()), 0)};
}

SurfaceEna surface_join(const SurfaceEna& f, const SurfaceEna& g) {
    if (f.final_.size() != g.final_.size())
        throw SpaceMismatch("surface_join: final marker size mismatch");
    std::vector<uint8_t> final_(f.final_.size());
    for (size_t i = 0; i < final_.size(); ++i)
        final_[i] = f.final_[i] || g.final_[i];
    return SurfaceEna{join(f.moves, g.moves), std::move(final_)};
}

bool surface_leq(const SurfaceEna& f, const SurfaceEna& g) {
    if (f.final_.size() != g.final_.size())
        throw SpaceMismatch("surface_leq: final marker size mismatch");
    for (size_t i = 0; i < f.final_.size(); ++i)
        if (f.final_[i] && !g.final_[i]) return false;
    return leq(f.moves, g.moves);
}

LawReport check_monad_laws(const std::vector<LawTriple>& samples) {
    LawReport report;
    auto unit_of = [](const Morphism& m, const StateSpace& space) {
        return Morphism::identity(m.tag(), m.alphabet(), space);
    };
    for (size_t i = 0; i < samples.size(); ++i) {
        const LawTriple& t = samples[i];
        ++report.triples;
        const Morphism& f = t.f;
        if (compose(f, unit_of(f, f.source())) != f) {
            ++report.unit_violations;
            report.details.push_back("triple " + std::to_string(i) + ": f.1 != f");
        }
        if (compose(unit_of(f, f.target()), f) != f) {
            ++report.unit_violations;
            report.details.push_back("triple " + std::to_string(i) + ": 1.f != f");
        }
        Morphism left = compose(t.h, compose(t.g, t.f));
        Morphism right = compose(compose(t.h, t.g), t.f);
        if (left != right) {
            ++report.assoc_violations;
            report.details.push_back("triple " + std::to_string(i) + ": h.(g.f) != (h.g).f");
        }
    }
    return report;
}

}  // namespace kleisli
