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

#include "kleisli/harness.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "kleisli/equivalence.hpp"
#include "kleisli/io.hpp"
#include "kleisli/saturation.hpp"
#include "kleisli/trace.hpp"

namespace kleisli {

using nlohmann::json;

uint64_t case_seed(uint64_t master, int case_index) {
    return Rng(master ^ (static_cast<uint64_t>(case_index + 1) * 0x9E3779B97F4A7C15ULL)).next();
}

namespace {

Alphabet gen_alphabet(int32_t size) {
    std::vector<std::string> letters;
    for (int32_t i = 0; i < size; ++i) {
        if (i < 26)
            letters.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            letters.push_back("l" + std::to_string(i));
    }
    return Alphabet::make(std::move(letters), size < 26 ? "tau" : "tau_");
}

double density_or(Rng& rng, double configured, double cap) {
    if (configured >= 0.0) return configured;
    return rng.unit() * cap;
}

System gen_lts_on(Rng& rng, const Alphabet& alphabet, const StateSpace& space,
                  double trans_density, double tau_density) {
    const int32_t n = space.size();
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(n));
    for (int32_t x = 0; x < n; ++x) {
        std::vector<LtsEdge> moves;
        for (int32_t y = 0; y < n; ++y) {
            for (int32_t a = 0; a < alphabet.size(); ++a)
                if (rng.chance(trans_density)) moves.push_back({a, y});
            if (rng.chance(tau_density)) moves.push_back({silent_label, y});
        }
        image.push_back(Effect::lts(std::move(moves)));
    }
    return Morphism::make(Monad::Lts, alphabet, space, space, std::move(image));
}

Word gen_word(Rng& rng, int32_t alphabet_size, int max_len) {
    std::vector<int32_t> letters;
    if (alphabet_size > 0) {
        int len = rng.below(max_len + 1);
        for (int i = 0; i < len; ++i) letters.push_back(rng.below(alphabet_size));
    }
    return Word{std::move(letters)};
}

Morphism gen_morphism(Rng& rng, Monad tag, const Alphabet& alphabet, const StateSpace& src,
                      const StateSpace& tgt) {
    std::vector<Effect> image;
    image.reserve(static_cast<size_t>(src.size()));
    for (int32_t x = 0; x < src.size(); ++x) {
        (void)x;
        switch (tag) {
            case Monad::Pow: {
                std::vector<int32_t> states;
                for (int32_t y = 0; y < tgt.size(); ++y)
                    if (rng.chance(0.3)) states.push_back(y);
                image.push_back(Effect::pow(std::move(states)));
                break;
            }
            case Monad::Lts: {
                std::vector<LtsEdge> moves;
                for (int32_t y = 0; y < tgt.size(); ++y) {
                    for (int32_t a = 0; a < alphabet.size(); ++a)
                        if (rng.chance(0.2)) moves.push_back({a, y});
                    if (rng.chance(0.2)) moves.push_back({silent_label, y});
                }
                image.push_back(Effect::lts(std::move(moves)));
                break;
            }
            case Monad::FreeLts:
            case Monad::Ena: {
                std::vector<WordEdge> moves;
                if (tgt.size() > 0) {
                    int edges = rng.below(4);
                    for (int i = 0; i < edges; ++i)
                        moves.push_back({gen_word(rng, alphabet.size(), 2), rng.below(tgt.size())});
                }
                if (tag == Monad::FreeLts) {
                    image.push_back(Effect::free_lts(std::move(moves)));
                } else {
                    std::vector<Word> bare;
                    if (rng.chance(0.4)) bare.push_back(gen_word(rng, alphabet.size(), 2));
                    image.push_back(Effect::ena(std::move(moves), std::move(bare)));
                }
                break;
            }
        }
    }
    return Morphism::make(tag, alphabet, src, tgt, std::move(image));
}

System top_lts(const Alphabet& alphabet, const StateSpace& space) {
    std::vector<Effect> image;
    for (int32_t x = 0; x < space.size(); ++x) {
        (void)x;
        std::vector<LtsEdge> moves;
        for (int32_t y = 0; y < space.size(); ++y) {
            moves.push_back({silent_label, y});
            for (int32_t a = 0; a < alphabet.size(); ++a) moves.push_back({a, y});
        }
        image.push_back(Effect::lts(std::move(moves)));
    }
    return Morphism::make(Monad::Lts, alphabet, space, space, std::move(image));
}

}  // namespace

System gen_lts(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    const int32_t n = 1 + rng.below(cfg.max_states);
    Alphabet alphabet = gen_alphabet(cfg.alphabet_size);
    StateSpace space = StateSpace::numbered(n);
    double td = density_or(rng, cfg.transition_density, 0.35);
    double tau = density_or(rng, cfg.tau_density, 0.35);
    return gen_lts_on(rng, alphabet, space, td, tau);
}

SurfaceEna gen_ena(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    const int32_t n = 1 + rng.below(cfg.max_states);
    Alphabet alphabet = gen_alphabet(cfg.alphabet_size);
    StateSpace space = StateSpace::numbered(n);
    double td = density_or(rng, cfg.transition_density, 0.35);
    double eps = density_or(rng, cfg.tau_density, 0.35);
    double fin = density_or(rng, cfg.final_density, 0.5);
    System moves = gen_lts_on(rng, alphabet, space, td, eps);
    std::vector<uint8_t> final_(static_cast<size_t>(n), 0);
    for (int32_t x = 0; x < n; ++x)
        if (rng.chance(fin)) final_[static_cast<size_t>(x)] = 1;
    return SurfaceEna{std::move(moves), std::move(final_)};
}

QuotientPair gen_quotient_pair(const GenConfig& cfg) {
    SurfaceEna surface = gen_ena(cfg);
    System alpha = embed_underline(surface);
    Rng rng(case_seed(cfg.seed, 7001));
    Partition p;
    if (rng.chance(0.5)) {
        p = strong_partition(alpha);
    } else {
        // Coarsest stable refinement of a random merge pattern: a randomly
        // shaped bisimulation between identity and full bisimilarity.
        const int32_t n = alpha.source().size();
        std::vector<int32_t> merged(static_cast<size_t>(n));
        int32_t groups = 1 + rng.below(std::max(1, n));
        for (int32_t x = 0; x < n; ++x) merged[static_cast<size_t>(x)] = rng.below(groups);
        p = coarsest_stable(alpha, Partition::from_block_of(alpha.source(), std::move(merged)));
    }
    QuotientPair out;
    out.beta = quotient(alpha, p);
    out.h.reserve(static_cast<size_t>(alpha.source().size()));
    for (int32_t x = 0; x < alpha.source().size(); ++x) out.h.push_back(p.block_of(x));
    out.alpha = std::move(alpha);
    return out;
}

namespace {

struct CaseOutcome {
    bool ok = true;
    std::string detail;
    json artifacts = json::object();
};

json model_artifact(const Model& m) { return json::parse(write_json(m)); }
json morphism_artifact(const Morphism& m) { return json::parse(write_morphism_json(m)); }

GenConfig sub_config(const GenConfig& cfg, uint64_t seed) {
    GenConfig out = cfg;
    out.seed = seed;
    return out;
}

CaseOutcome case_monad_laws(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    static const Monad tags[4] = {Monad::Pow, Monad::Lts, Monad::FreeLts, Monad::Ena};
    Monad tag = tags[cfg.seed % 4];
    Alphabet alphabet = gen_alphabet(cfg.alphabet_size);
    StateSpace sx = StateSpace::numbered(1 + rng.below(cfg.max_states), "x");
    StateSpace sy = StateSpace::numbered(1 + rng.below(cfg.max_states), "y");
    StateSpace sz = StateSpace::numbered(1 + rng.below(cfg.max_states), "z");
    StateSpace sw = StateSpace::numbered(1 + rng.below(cfg.max_states), "w");
    LawTriple triple{gen_morphism(rng, tag, alphabet, sx, sy),
                     gen_morphism(rng, tag, alphabet, sy, sz),
                     gen_morphism(rng, tag, alphabet, sz, sw)};
    LawReport r = check_monad_laws({triple});
    CaseOutcome out;
    if (!r.ok()) {
        out.ok = false;
        out.detail = "monad law violation on " + std::string(monad_name(tag));
        for (const std::string& d : r.details) out.detail += "; " + d;
        out.artifacts["f"] = morphism_artifact(triple.f);
        out.artifacts["g"] = morphism_artifact(triple.g);
        out.artifacts["h"] = morphism_artifact(triple.h);
    }
    return out;
}

CaseOutcome case_saturation_axioms(const GenConfig& cfg) {
    System alpha = gen_lts(cfg);
    Rng rng(case_seed(cfg.seed, 7002));
    std::vector<System> candidates;
    System closure = star(alpha);
    candidates.push_back(closure);
    candidates.push_back(top_lts(alpha.alphabet(), alpha.source()));
    System noise = gen_lts_on(rng, alpha.alphabet(), alpha.source(), rng.unit() * 0.3,
                              rng.unit() * 0.3);
    candidates.push_back(star(join(alpha, noise)));

    std::vector<StarAxiomWitness> witnesses;
    Partition p = strong_partition(alpha);
    StarAxiomWitness w;
    for (int32_t x = 0; x < alpha.source().size(); ++x) w.f.push_back(p.block_of(x));
    w.beta = quotient(alpha, p);
    witnesses.push_back(std::move(w));
    StarAxiomWitness random_w;
    StateSpace sy = StateSpace::numbered(1 + rng.below(cfg.max_states), "y");
    for (int32_t x = 0; x < alpha.source().size(); ++x) random_w.f.push_back(rng.below(sy.size()));
    random_w.beta = gen_lts_on(rng, alpha.alphabet(), sy, rng.unit() * 0.3, rng.unit() * 0.3);
    witnesses.push_back(std::move(random_w));

    StarAxiomsReport r = star_axioms_check(alpha, candidates, witnesses);
    CaseOutcome out;
    if (!r.ok()) {
        out.ok = false;
        std::ostringstream d;
        d << "saturation axiom violation: a=" << r.a_reflexive << " b=" << r.b_increasing
          << " c=" << r.c_transitive << " d_violations=" << r.d_violations
          << " e_violations=" << r.e_violations;
        out.detail = d.str();
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
    }
    return out;
}

CaseOutcome case_h_compat(const GenConfig& cfg) {
    System alpha = gen_lts(cfg);
    System via_star = star(alpha);
    System via_matrix = elim_matrix_to_lts(saturate_free(embed_underline(alpha)));
    CaseOutcome out;
    if (via_star != via_matrix) {
        out.ok = false;
        out.detail = "length<=1 projection of the word-level saturation differs from star";
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
        out.artifacts["star"] = model_artifact(model_of_lts(via_star));
        out.artifacts["projected"] = model_artifact(model_of_lts(via_matrix));
    }
    return out;
}

CaseOutcome case_weak_coincide(const GenConfig& cfg) {
    CaseOutcome out;
    System alpha = gen_lts(cfg);
    if (weak_bisimilarity_star(alpha) != weak_bisimilarity_free(embed_underline(alpha))) {
        out.ok = false;
        out.detail = "weak bisimilarity differs between the two saturations (lts)";
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
        return out;
    }
    SurfaceEna ena = gen_ena(sub_config(cfg, case_seed(cfg.seed, 7003)));
    if (weak_bisimilarity_star(ena) != weak_bisimilarity_free(embed_underline(ena))) {
        out.ok = false;
        out.detail = "weak bisimilarity differs between the two saturations (ena)";
        out.artifacts["system"] = model_artifact(model_of_surface(ena));
    }
    return out;
}

CaseOutcome case_strong_implies_weak(const GenConfig& cfg) {
    CaseOutcome out;
    System alpha = gen_lts(cfg);
    if (!strong_partition(alpha).refines(weak_bisimilarity_star(alpha))) {
        out.ok = false;
        out.detail = "strong partition does not refine the weak partition (lts)";
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
        return out;
    }
    SurfaceEna ena = gen_ena(sub_config(cfg, case_seed(cfg.seed, 7004)));
    if (!strong_partition(ena).refines(weak_bisimilarity_star(ena))) {
        out.ok = false;
        out.detail = "strong partition does not refine the weak partition (ena)";
        out.artifacts["system"] = model_artifact(model_of_surface(ena));
    }
    return out;
}

CaseOutcome case_milner(const GenConfig& cfg) {
    GenConfig capped = cfg;
    if (capped.max_states > 7) capped.max_states = 7;
    System alpha = gen_lts(capped);
    CaseOutcome out;
    if (weak_bisimilarity_star(alpha) != milner_oracle(alpha)) {
        out.ok = false;
        out.detail = "saturated bisimilarity differs from the double-arrow oracle";
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
    }
    return out;
}

CaseOutcome case_trace_lfp(const GenConfig& cfg) {
    SurfaceEna surface = gen_ena(cfg);
    System alpha = embed_underline(surface);
    TraceMap exact = trace_exact(alpha);
    CaseOutcome out;
    TraceMap prev = trace_iterate(alpha, 0);
    for (int n = 1; n <= 7; ++n) {
        TraceMap cur = trace_iterate(alpha, n);
        for (int32_t x = 0; x < alpha.source().size(); ++x) {
            const auto& lo = prev.words[static_cast<size_t>(x)];
            const auto& hi = cur.words[static_cast<size_t>(x)];
            if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) {
                out.ok = false;
                out.detail = "bounded iterates are not a chain at n=" + std::to_string(n);
            }
            for (const Word& w : hi)
                if (!exact.langs[static_cast<size_t>(x)].member(w)) {
                    out.ok = false;
                    out.detail = "bounded iterate escapes the exact language";
                }
        }
        prev = std::move(cur);
        if (!out.ok) break;
    }
    if (out.ok) {
        std::vector<RegLang> stepped = trace_step(exact.langs, alpha);
        for (int32_t x = 0; x < alpha.source().size(); ++x)
            if (!equivalent(stepped[static_cast<size_t>(x)], exact.langs[static_cast<size_t>(x)])) {
                out.ok = false;
                out.detail = "exact trace is not a fixed point of the step map";
                break;
            }
    }
    if (!out.ok) out.artifacts["system"] = model_artifact(model_of_surface(surface));
    return out;
}

CaseOutcome case_trace_uniformity(const GenConfig& cfg) {
    QuotientPair qp = gen_quotient_pair(cfg);
    CaseOutcome out;
    UniformityReport r = check_uniformity(qp.alpha, qp.h, qp.beta);
    if (!r.premise) {
        out.ok = false;
        out.detail = "generated quotient pair does not satisfy the homomorphism premise";
    } else if (!r.conclusion) {
        out.ok = false;
        out.detail = "exact traces do not transport along the quotient homomorphism";
    }
    if (!out.ok) {
        out.artifacts["alpha"] = morphism_artifact(qp.alpha);
        out.artifacts["h"] = qp.h;
        out.artifacts["beta"] = morphism_artifact(qp.beta);
    }
    return out;
}

CaseOutcome case_dagger(const GenConfig& cfg) {
    SurfaceEna surface = gen_ena(cfg);
    System alpha = embed_underline(surface);
    CaseOutcome out;
    auto [pointed, x_count] = ena_to_pointed(alpha);
    DaggerResult d = conway_dagger(pointed, x_count);
    if (!dagger_fixed_point_holds(pointed, x_count, d)) {
        out.ok = false;
        out.detail = "dagger of the pointed recast violates the fixed-point law";
    }
    if (out.ok) {
        TraceMap exact = trace_exact(alpha);
        for (int32_t x = 0; x < alpha.source().size(); ++x)
            if (!equivalent(d.lang[static_cast<size_t>(x)][0], exact.langs[static_cast<size_t>(x)])) {
                out.ok = false;
                out.detail = "dagger language differs from the exact trace";
                break;
            }
    }
    if (out.ok) {
        // A second, unrelated word-valued morphism into X + A.
        Rng rng(case_seed(cfg.seed, 7005));
        std::vector<std::string> names = alpha.source().names();
        int32_t exits = 1 + rng.below(2);
        for (int32_t a = 0; a < exits; ++a) names.push_back("exit" + std::to_string(a));
        StateSpace target = StateSpace::make(std::move(names));
        Morphism f = gen_morphism(rng, Monad::FreeLts, alpha.alphabet(), alpha.source(), target);
        DaggerResult d2 = conway_dagger(f, alpha.source().size());
        if (!dagger_fixed_point_holds(f, alpha.source().size(), d2)) {
            out.ok = false;
            out.detail = "dagger violates the fixed-point law on a random morphism";
            out.artifacts["morphism"] = morphism_artifact(f);
        }
    }
    if (!out.ok && !out.artifacts.contains("morphism"))
        out.artifacts["system"] = model_artifact(model_of_surface(surface));
    return out;
}

CaseOutcome case_weak_implies_trace(const GenConfig& cfg) {
    SurfaceEna surface = gen_ena(cfg);
    System alpha = embed_underline(surface);
    CaseOutcome out;
    Partition weak = weak_bisimilarity_star(surface);
    TraceMap exact = trace_exact(alpha);
    std::vector<std::string> keys;
    keys.reserve(static_cast<size_t>(alpha.source().size()));
    for (int32_t x = 0; x < alpha.source().size(); ++x)
        keys.push_back(dfa_key(exact.langs[static_cast<size_t>(x)].determinize()));
    for (int32_t b = 0; b < weak.block_count() && out.ok; ++b) {
        const auto& members = weak.block(b);
        for (size_t i = 1; i < members.size(); ++i)
            if (keys[static_cast<size_t>(members[i])] != keys[static_cast<size_t>(members[0])]) {
                out.ok = false;
                out.detail = "weakly bisimilar states " + alpha.source().name(members[0]) +
                             " and " + alpha.source().name(members[i]) +
                             " have different trace languages";
                break;
            }
    }
    if (out.ok) {
        // Trace semantics is blind to saturation: joining the unit changes nothing.
        System padded = join(Morphism::identity(Monad::Ena, alpha.alphabet(), alpha.source()),
                             alpha);
        TraceMap padded_traces = trace_exact(padded);
        for (int32_t x = 0; x < alpha.source().size(); ++x)
            if (!equivalent(padded_traces.langs[static_cast<size_t>(x)],
                            exact.langs[static_cast<size_t>(x)])) {
                out.ok = false;
                out.detail = "trace changed after joining the unit";
                break;
            }
    }
    if (!out.ok) out.artifacts["system"] = model_artifact(model_of_surface(surface));
    return out;
}

// Deliberately failing suite backing the counterexample replay tests.
CaseOutcome case_selftest_fail(const GenConfig& cfg) {
    System alpha = gen_lts(cfg);
    CaseOutcome out;
    if (alpha.source().size() >= 2) {
        out.ok = false;
        out.detail = "selftest: system has at least two states";
        out.artifacts["system"] = model_artifact(model_of_lts(alpha));
    }
    return out;
}

CaseOutcome run_case(const std::string& suite, const GenConfig& case_cfg) {
    if (suite == "monad-laws") return case_monad_laws(case_cfg);
    if (suite == "saturation-axioms") return case_saturation_axioms(case_cfg);
    if (suite == "h-compat") return case_h_compat(case_cfg);
    if (suite == "weak-coincide") return case_weak_coincide(case_cfg);
    if (suite == "strong-implies-weak") return case_strong_implies_weak(case_cfg);
    if (suite == "milner-oracle") return case_milner(case_cfg);
    if (suite == "trace-lfp") return case_trace_lfp(case_cfg);
    if (suite == "trace-uniformity") return case_trace_uniformity(case_cfg);
    if (suite == "dagger") return case_dagger(case_cfg);
    if (suite == "weak-implies-trace") return case_weak_implies_trace(case_cfg);
    if (suite == "selftest-fail") return case_selftest_fail(case_cfg);
    throw UnknownSuite("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "monad-laws",     "saturation-axioms",  "h-compat",
        "weak-coincide",  "strong-implies-weak", "milner-oracle",
        "trace-lfp",      "trace-uniformity",    "dagger",
        "weak-implies-trace",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const GenConfig& cfg) {
    // Validates the name up front (throws UnknownSuite) by probing the
    // dispatcher with a zero-case sentinel below.
    bool known = name == "selftest-fail";
    for (const std::string& s : suite_names())
        if (s == name) known = true;
    if (!known) throw UnknownSuite("unknown suite '" + name + "'");

    SuiteReport report;
    report.suite = name;
    auto begin = std::chrono::steady_clock::now();
    for (int i = 0; i < cfg.cases; ++i) {
        GenConfig case_cfg = cfg;
        case_cfg.seed = case_seed(cfg.seed, i);
        CaseOutcome outcome;
        try {
            outcome = run_case(name, case_cfg);
        } catch (const Error& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        ++report.cases;
        if (!outcome.ok) {
            json envelope;
            envelope["kind"] = "counterexample";
            envelope["suite"] = name;
            envelope["case"] = i;
            json cj;
            cj["seed"] = case_cfg.seed;
            cj["max_states"] = case_cfg.max_states;
            cj["alphabet_size"] = case_cfg.alphabet_size;
            cj["transition_density"] = case_cfg.transition_density;
            cj["tau_density"] = case_cfg.tau_density;
            cj["final_density"] = case_cfg.final_density;
            envelope["config"] = std::move(cj);
            envelope["detail"] = outcome.detail;
            envelope["artifacts"] = std::move(outcome.artifacts);
            report.failures.push_back(
                {case_cfg.seed, i, outcome.detail, envelope.dump(2) + "\n"});
        }
    }
    auto end = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(end - begin).count();
    return report;
}

bool recheck_counterexample(const std::string& counterexample_json) {
    json j = json::parse(counterexample_json);
    if (!j.is_object() || j.value("kind", "") != "counterexample")
        throw SchemaError("$.kind", "expected 'counterexample'");
    std::string suite = j.at("suite").get<std::string>();
    const json& cj = j.at("config");
    GenConfig cfg;
    cfg.seed = cj.at("seed").get<uint64_t>();
    cfg.max_states = cj.at("max_states").get<int32_t>();
    cfg.alphabet_size = cj.at("alphabet_size").get<int32_t>();
    cfg.transition_density = cj.at("transition_density").get<double>();
    cfg.tau_density = cj.at("tau_density").get<double>();
    cfg.final_density = cj.at("final_density").get<double>();
    return !run_case(suite, cfg).ok;
}

std::string format_report(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size()
       << (r.failures.size() == 1 ? " failure" : " failures") << "\n";
    for (const SuiteFailure& f : r.failures)
        os << "  case " << f.case_index << " seed " << f.seed << ": " << f.detail << "\n";
    return os.str();
}

std::string write_report_json(const SuiteReport& r) {
    json j;
    j["kind"] = "suite-report";
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    json failures = json::array();
    for (const SuiteFailure& f : r.failures) {
        json fj;
        fj["case"] = f.case_index;
        fj["seed"] = f.seed;
        fj["detail"] = f.detail;
        fj["counterexample"] = json::parse(f.counterexample);
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

}  // namespace kleisli
