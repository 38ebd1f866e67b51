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

#include "kleisli/trace.hpp"

#include <algorithm>

#include "kleisli/saturation.hpp"

namespace kleisli {

namespace {

void require_ena_system(const System& s, const char* who) {
    if (s.tag() != Monad::Ena)
        throw WrongMonad(std::string(who) + ": expected an ena system");
    if (!s.is_system())
        throw SpaceMismatch(std::string(who) + ": not an endomorphism");
}

Morphism unit_graph(const System& beta, const std::vector<int32_t>& h, const System& alpha) {
    // h# = unit . h, an ena morphism with one eps move per state and no bare part.
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(alpha.source().size()));
    for (int32_t x = 0; x < alpha.source().size(); ++x) {
        int32_t y = h[static_cast<size_t>(x)];
        if (y < 0 || y >= beta.source().size())
            throw SpaceMismatch("check_uniformity: h maps outside the target space");
        image.push_back(Effect::ena({{Word::epsilon(), y}}, {}));
    }
    return Morphism::make(Monad::Ena, alpha.alphabet(), alpha.source(), beta.source(),
                          std::move(image));
}

}  // namespace

TraceMap trace_iterate(const System& underlined, int n) {
    require_ena_system(underlined, "trace_iterate");
    if (n < 0) throw Error("trace_iterate: negative iteration count");
    StateSpace empty;
    Morphism tr = Morphism::bottom(Monad::Ena, underlined.alphabet(), underlined.source(), empty);
    for (int i = 0; i < n; ++i) tr = compose(tr, underlined);
    TraceMap out;
    out.space = underlined.source();
    out.alphabet = underlined.alphabet();
    out.exact = false;
    out.bound = n;
    out.words.reserve(static_cast<size_t>(underlined.source().size()));
    for (const Effect& e : tr.image()) out.words.push_back(e.bare());
    return out;
}

TraceMap trace_exact(const System& underlined) {
    require_ena_system(underlined, "trace_exact");
    WeakMatrix m = saturate_free(underlined);
    TraceMap out;
    out.space = underlined.source();
    out.alphabet = underlined.alphabet();
    out.exact = true;
    out.langs = std::move(m.bare);
    return out;
}

std::vector<RegLang> trace_step(const std::vector<RegLang>& t, const System& underlined) {
    if (underlined.tag() != Monad::Ena)
        throw WrongMonad("trace_step: expected an ena morphism");
    if (t.size() != static_cast<size_t>(underlined.target().size()))
        throw SpaceMismatch("trace_step: candidate size mismatch");
    std::vector<RegLang> out;
    out.reserve(t.size());
    for (int32_t x = 0; x < underlined.source().size(); ++x) {
        const Effect& e = underlined.at(x);
        RegLang acc = RegLang::from_words(underlined.alphabet(), e.bare());
        for (const WordEdge& m : e.word_moves()) {
            RegLang prefix = RegLang::from_words(underlined.alphabet(), {m.word});
            acc = reg_union(acc, reg_concat(prefix, t[static_cast<size_t>(m.state)]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

UniformityReport check_uniformity(const System& alpha, const std::vector<int32_t>& h,
                                  const System& beta) {
    require_ena_system(alpha, "check_uniformity");
    require_ena_system(beta, "check_uniformity");
    if (h.size() != static_cast<size_t>(alpha.source().size()))
        throw SpaceMismatch("check_uniformity: h size mismatch");
    UniformityReport report;
    Morphism hs = unit_graph(beta, h, alpha);
    report.premise = compose(hs, alpha) == compose(beta, hs);
    if (!report.premise) return report;
    report.conclusion_checked = true;
    TraceMap ta = trace_exact(alpha);
    TraceMap tb = trace_exact(beta);
    report.conclusion = true;
    for (int32_t x = 0; x < alpha.source().size(); ++x) {
        const RegLang& lhs = tb.langs[static_cast<size_t>(h[static_cast<size_t>(x)])];
        const RegLang& rhs = ta.langs[static_cast<size_t>(x)];
        if (!equivalent(lhs, rhs)) {
            report.conclusion = false;
            break;
        }
    }
    return report;
}

UniformityReport check_uniformity(const System& alpha, const Morphism& h_free,
                                  const System& beta) {
    require_ena_system(alpha, "check_uniformity");
    require_ena_system(beta, "check_uniformity");
    if (h_free.tag() != Monad::FreeLts)
        throw WrongMonad("check_uniformity: h must be a free-lts morphism");
    if (h_free.source() != alpha.source() || h_free.target() != beta.source())
        throw SpaceMismatch("check_uniformity: h endpoints do not match");
    UniformityReport report;
    // h# is h with an empty bare part.
    std::vector<Effect> image;
    for (const Effect& e : h_free.image())
        image.push_back(Effect::ena(e.word_moves(), {}));
    Morphism hs = Morphism::make(Monad::Ena, h_free.alphabet(), h_free.source(),
                                 h_free.target(), std::move(image));
    report.premise = compose(hs, alpha) == compose(beta, hs);
    if (!report.premise) return report;
    report.conclusion_checked = true;
    TraceMap ta = trace_exact(alpha);
    TraceMap tb = trace_exact(beta);
    // tr(beta) . h# evaluated per state, compared with tr(alpha).
    std::vector<RegLang> transported = trace_step(tb.langs, hs);
    report.conclusion = true;
    for (int32_t x = 0; x < alpha.source().size(); ++x)
        if (!equivalent(transported[static_cast<size_t>(x)], ta.langs[static_cast<size_t>(x)])) {
            report.conclusion = false;
            break;
        }
    return report;
}

DaggerResult conway_dagger(const Morphism& f, int32_t x_count) {
    if (f.tag() != Monad::FreeLts)
        throw WrongMonad("conway_dagger: expected a free-lts morphism");
    const int32_t n = f.source().size();
    const int32_t t = f.target().size();
    if (x_count != n || t < x_count)
        throw BadSplit("conway_dagger: target is not X + A over the source X");
    for (int32_t i = 0; i < x_count; ++i)
        if (f.target().name(i) != f.source().name(i))
            throw BadSplit("conway_dagger: the X part of the target must equal the source");
    const int32_t exits = t - x_count;

    // Shared graph: source states, one node per exit, one fresh node per
    // interior letter of multi-letter edge words. Exit nodes are terminal.
    auto g = std::make_shared<RegLang::Graph>();
    g->nodes = n + exits;
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
    for (int32_t x = 0; x < n; ++x)
        for (const WordEdge& m : f.at(x).word_moves())
            add_chain(x, m.word, m.state);  // exits land past the X block
    std::shared_ptr<const RegLang::Graph> shared = std::move(g);

    DaggerResult out;
    out.source = f.source();
    for (int32_t a = 0; a < exits; ++a) out.exit_names.push_back(f.target().name(x_count + a));
    out.lang.resize(static_cast<size_t>(n));
    for (int32_t x = 0; x < n; ++x)
        for (int32_t a = 0; a < exits; ++a)
            out.lang[static_cast<size_t>(x)].push_back(
                RegLang::over_graph(f.alphabet(), shared, x, {x_count + a}));
    return out;
}

bool dagger_fixed_point_holds(const Morphism& f, int32_t x_count, const DaggerResult& d) {
    const int32_t n = f.source().size();
    const int32_t exits = f.target().size() - x_count;
    for (int32_t x = 0; x < n; ++x) {
        for (int32_t a = 0; a < exits; ++a) {
            RegLang expected = RegLang::none(f.alphabet());
            for (const WordEdge& m : f.at(x).word_moves()) {
                if (m.state < x_count) {
                    RegLang prefix = RegLang::from_words(f.alphabet(), {m.word});
                    expected = reg_union(
                        expected,
                        reg_concat(prefix, d.lang[static_cast<size_t>(m.state)][static_cast<size_t>(a)]));
                } else if (m.state == x_count + a) {
                    expected = reg_union(expected, RegLang::from_words(f.alphabet(), {m.word}));
                }
            }
            if (!equivalent(expected, d.lang[static_cast<size_t>(x)][static_cast<size_t>(a)]))
                return false;
        }
    }
    return true;
}

std::pair<Morphism, int32_t> ena_to_pointed(const System& underlined_ena) {
    require_ena_system(underlined_ena, "ena_to_pointed");
    const StateSpace& space = underlined_ena.source();
    std::string acc_name = "acc";
    while (space.index_of(acc_name)) acc_name += "_";
    std::vector<std::string> names = space.names();
    names.push_back(acc_name);
    StateSpace target = StateSpace::make(std::move(names));
    const int32_t acc = space.size();
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(space.size()));
    for (const Effect& e : underlined_ena.image()) {
        std::vector<WordEdge> moves = e.word_moves();
        for (const Word& w : e.bare()) moves.push_back({w, acc});
        image.push_back(Effect::free_lts(std::move(moves)));
    }
    Morphism f = Morphism::make(Monad::FreeLts, underlined_ena.alphabet(), space, target,
                                std::move(image));
    return {std::move(f), space.size()};
}

}  // namespace kleisli
