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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kleisli/equivalence.hpp"
#include "kleisli/harness.hpp"
#include "kleisli/io.hpp"
#include "kleisli/saturation.hpp"
#include "kleisli/trace.hpp"

namespace {

using namespace kleisli;

// Exit codes are a stable contract:
// 0 ok, 1 property failure, 2 parse error, 3 capability mismatch,
// 4 unknown state name, 5 unknown suite. 10 flags an internal error.
constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapability = 3;
constexpr int kExitName = 4;
constexpr int kExitSuite = 5;
constexpr int kExitInternal = 10;

struct UnknownStateName : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& bytes) {
    if (out_path.empty() || out_path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << bytes;
}

std::string detect_format(const std::string& path, const std::string& override_fmt) {
    if (!override_fmt.empty()) return override_fmt;
    auto dot = path.rfind('.');
    if (dot != std::string::npos) {
        std::string ext = path.substr(dot + 1);
        if (ext == "json") return "json";
        if (ext == "aut") return "aut";
    }
    throw ParseError(0, "cannot infer format of '" + path + "'; pass --format");
}

Model read_model(const std::string& path, const std::string& override_fmt) {
    std::string fmt = detect_format(path, override_fmt);
    std::string bytes = slurp(path);
    if (fmt == "json") return read_json(bytes);
    if (fmt == "aut") return read_aut(bytes);
    throw ParseError(0, "unknown input format '" + fmt + "'");
}

std::string render_model(const Model& m, const std::string& fmt) {
    if (fmt == "json") return write_json(m);
    if (fmt == "aut") return write_aut(m);
    if (fmt == "dot") return write_dot(m);
    throw WrongMonad("unknown output format '" + fmt + "'");
}

int32_t state_index(const Model& m, const std::string& name) {
    auto idx = m.system.source().index_of(name);
    if (!idx) throw UnknownStateName("unknown state '" + name + "'");
    return *idx;
}

std::string format_partition(const Partition& p) {
    std::ostringstream os;
    for (int32_t b = 0; b < p.block_count(); ++b) {
        os << "block " << b << ":";
        for (int32_t x : p.block(b)) os << " " << p.space().name(x);
        os << "\n";
    }
    return os.str();
}

System to_ena_system(const Model& m) {
    if (m.kind == Model::Kind::Ena) return m.system;
    // An lts has no accepting component; its trace languages are empty.
    SurfaceEna s{m.system, std::vector<uint8_t>(static_cast<size_t>(m.system.source().size()), 0)};
    return embed_underline(s);
}

struct BisimOptions {
    std::string kind = "strong";
    std::string via = "star";
    std::vector<std::string> pairs;
    bool partition = false;
};

Partition run_bisim(const Model& a, const std::optional<Model>& b, const BisimOptions& opt) {
    const bool two = b.has_value();
    if (two && a.kind != b->kind)
        throw WrongMonad("bisim: inputs of different kinds");
    if (opt.kind == "strong") {
        if (!two) return strong_partition(a.system);
        return strong_bisimilarity(a.system, b->system);
    }
    // weak
    if (opt.via == "star") {
        if (a.kind == Model::Kind::Lts) {
            System sys = two ? disjoint_union(a.system, b->system) : a.system;
            return weak_bisimilarity_star(sys);
        }
        SurfaceEna sa = surface_from_embedded(a.system);
        if (!two) return weak_bisimilarity_star(sa);
        return weak_bisimilarity_star(disjoint_union(sa, surface_from_embedded(b->system)));
    }
    if (opt.via != "free") throw WrongMonad("bisim: unknown --via '" + opt.via + "'");
    System sys = two ? disjoint_union(a.system, b->system) : a.system;
    if (a.kind == Model::Kind::Lts) sys = embed_underline(sys);
    return weak_bisimilarity_free(sys);
}

int cmd_bisim(const std::string& input_a, const std::string& input_b,
              const std::string& fmt_in, const BisimOptions& opt, const std::string& out_path) {
    Model a = read_model(input_a, fmt_in);
    std::optional<Model> b;
    if (!input_b.empty()) b = read_model(input_b, fmt_in);
    Partition p = run_bisim(a, b, opt);
    if (opt.pairs.empty()) {
        emit(out_path, format_partition(p));
        return kExitOk;
    }
    std::ostringstream os;
    bool all_equivalent = true;
    for (const std::string& pair : opt.pairs) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw ParseError(0, "--pair expects 'state1,state2'");
        std::string n1 = pair.substr(0, comma);
        std::string n2 = pair.substr(comma + 1);
        int32_t i1, i2;
        if (b) {
            i1 = state_index(a, n1);
            i2 = a.system.source().size() + state_index(*b, n2);
        } else {
            i1 = state_index(a, n1);
            i2 = state_index(a, n2);
        }
        bool same = p.same_block(i1, i2);
        all_equivalent = all_equivalent && same;
        os << n1 << " ~ " << n2 << ": " << (same ? "yes" : "no") << "\n";
    }
    emit(out_path, os.str());
    return all_equivalent ? kExitOk : kExitProperty;
}

int cmd_saturate(const std::string& input, const std::string& fmt_in,
                 const std::string& strategy, const std::string& fmt_out,
                 const std::string& out_path) {
    Model m = read_model(input, fmt_in);
    if (strategy == "star") {
        Model out;
        if (m.kind == Model::Kind::Lts) {
            out = model_of_lts(star(m.system), m.initial);
        } else {
            out = model_of_surface(star(surface_from_embedded(m.system)), m.initial);
        }
        emit(out_path, render_model(out, fmt_out.empty() ? std::string("json") : fmt_out));
        return kExitOk;
    }
    if (strategy != "free")
        throw WrongMonad("saturate: unknown strategy '" + strategy + "'");
    System sys = m.kind == Model::Kind::Lts ? embed_underline(m.system) : m.system;
    WeakMatrix w = saturate_free(sys);
    if (fmt_out == "dot") {
        emit(out_path, write_dot(w));
    } else if (fmt_out.empty() || fmt_out == "json") {
        emit(out_path, write_matrix_summary_json(w));
    } else {
        throw WrongMonad("saturate --strategy free supports json or dot output");
    }
    return kExitOk;
}

int cmd_trace(const std::string& input, const std::string& fmt_in, const std::string& state,
              std::optional<int> max_len, bool exact, const std::string& out_path) {
    Model m = read_model(input, fmt_in);
    int32_t x = state_index(m, state);
    System sys = to_ena_system(m);
    TraceMap t = trace_exact(sys);
    const RegLang& lang = t.langs[static_cast<size_t>(x)];
    if (exact) {
        emit(out_path, describe_dfa(lang.minimal_dfa(), sys.alphabet()));
        return kExitOk;
    }
    if (!max_len) throw ParseError(0, "trace: pass --max-len or --exact");
    std::ostringstream os;
    for (const Word& w : lang.enumerate_upto(*max_len))
        os << sys.alphabet().format_word(w) << "\n";
    emit(out_path, os.str());
    return kExitOk;
}

int cmd_trace_equiv(const std::string& spec_a, const std::string& spec_b,
                    const std::string& fmt_in) {
    auto split = [](const std::string& s) {
        auto colon = s.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
            throw ParseError(0, "trace-equiv expects PATH:STATE");
        return std::pair<std::string, std::string>{s.substr(0, colon), s.substr(colon + 1)};
    };
    auto [path_a, state_a] = split(spec_a);
    auto [path_b, state_b] = split(spec_b);
    Model ma = read_model(path_a, fmt_in);
    Model mb = read_model(path_b, fmt_in);
    if (ma.system.alphabet() != mb.system.alphabet())
        throw WrongMonad("trace-equiv: inputs over different alphabets");
    System sa = to_ena_system(ma);
    System sb = to_ena_system(mb);
    TraceMap ta = trace_exact(sa);
    TraceMap tb = trace_exact(sb);
    bool same = equivalent(ta.langs[static_cast<size_t>(state_index(ma, state_a))],
                           tb.langs[static_cast<size_t>(state_index(mb, state_b))]);
    std::cout << "equivalent: " << (same ? "yes" : "no") << "\n";
    return same ? kExitOk : kExitProperty;
}

int cmd_minimize(const std::string& input, const std::string& fmt_in, const std::string& kind,
                 const std::string& fmt_out, const std::string& out_path) {
    Model m = read_model(input, fmt_in);
    Model out;
    if (m.kind == Model::Kind::Lts) {
        Partition p = kind == "weak" ? weak_bisimilarity_star(m.system)
                                     : strong_partition(m.system);
        std::optional<int32_t> initial;
        if (m.initial) initial = p.block_of(*m.initial);
        out = model_of_lts(quotient(m.system, p), initial);
    } else {
        if (kind == "weak") {
            SurfaceEna s = surface_from_embedded(m.system);
            Partition p = weak_bisimilarity_star(s);
            std::optional<int32_t> initial;
            if (m.initial) initial = p.block_of(*m.initial);
            out = model_of_surface(quotient(s, p), initial);
        } else {
            Partition p = strong_partition(m.system);
            std::optional<int32_t> initial;
            if (m.initial) initial = p.block_of(*m.initial);
            out = model_of_ena(quotient(m.system, p), initial);
        }
    }
    emit(out_path, render_model(out, fmt_out.empty() ? std::string("json") : fmt_out));
    return kExitOk;
}

int cmd_check(const std::string& suite, const GenConfig& cfg, bool as_json) {
    SuiteReport r = run_suite(suite, cfg);
    std::cout << (as_json ? write_report_json(r) : format_report(r));
    std::cerr << "# wall " << r.wall_ms << " ms\n";
    return r.pass() ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kleisli -- finite state systems with internal moves:\n"
                 "saturation, strong/weak bisimulation, and trace semantics"};
    app.require_subcommand(1);

    std::string input, input_b, out_path, fmt_in, fmt_out;

    auto* convert = app.add_subcommand("convert", "read a system and write it elsewhere");
    convert->add_option("input", input)->required();
    convert->add_option("--format", fmt_in)->description("input format (json|aut)");
    convert->add_option("--to", fmt_out)->description("output format (json|aut|dot)")->required();
    convert->add_option("-o,--output", out_path);

    auto* saturate = app.add_subcommand("saturate", "close a system under silent moves");
    std::string strategy = "star";
    saturate->add_option("input", input)->required();
    saturate->add_option("--format", fmt_in);
    saturate->add_option("--strategy", strategy)->check(CLI::IsMember({"star", "free"}));
    saturate->add_option("--to", fmt_out)->description("output format");
    saturate->add_option("-o,--output", out_path);

    auto* bisim = app.add_subcommand("bisim", "bisimulation partitions and queries");
    BisimOptions bopt;
    bisim->add_option("input", input)->required();
    bisim->add_option("input_b", input_b);
    bisim->add_option("--format", fmt_in);
    bisim->add_option("--kind", bopt.kind)->check(CLI::IsMember({"strong", "weak"}));
    bisim->add_option("--via", bopt.via)->check(CLI::IsMember({"star", "free"}));
    bisim->add_option("--pair", bopt.pairs)->description("state1,state2 (repeatable)");
    bisim->add_flag("--partition", bopt.partition, "print the full partition (default)");
    bisim->add_option("-o,--output", out_path);

    auto* trace = app.add_subcommand("trace", "accepted words of one state");
    std::string state;
    int max_len = -1;
    bool exact = false;
    trace->add_option("input", input)->required();
    trace->add_option("--format", fmt_in);
    trace->add_option("--state", state)->required();
    trace->add_option("--max-len", max_len)->description("list words up to this length");
    trace->add_flag("--exact", exact, "print the minimal dfa of the exact language");
    trace->add_option("-o,--output", out_path);

    auto* trace_equiv = app.add_subcommand("trace-equiv", "compare two trace languages");
    std::string spec_a, spec_b;
    trace_equiv->add_option("a", spec_a)->description("PATH:STATE")->required();
    trace_equiv->add_option("b", spec_b)->description("PATH:STATE")->required();
    trace_equiv->add_option("--format", fmt_in);

    auto* minimize = app.add_subcommand("minimize", "quotient by bisimilarity");
    std::string min_kind = "strong";
    minimize->add_option("input", input)->required();
    minimize->add_option("--format", fmt_in);
    minimize->add_option("--kind", min_kind)->check(CLI::IsMember({"strong", "weak"}));
    minimize->add_option("--to", fmt_out);
    minimize->add_option("-o,--output", out_path);

    auto* check = app.add_subcommand("check", "run a seeded property suite");
    std::string suite;
    GenConfig cfg;
    bool as_json = false;
    check->add_option("--suite", suite)->required();
    check->add_option("--seed", cfg.seed)->envname("KLEISLI_SEED");
    check->add_option("--cases", cfg.cases);
    check->add_option("--max-states", cfg.max_states);
    check->add_option("--alphabet-size", cfg.alphabet_size);
    check->add_option("--transition-density", cfg.transition_density);
    check->add_option("--tau-density", cfg.tau_density);
    check->add_option("--final-density", cfg.final_density);
    check->add_flag("--json", as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (convert->parsed()) {
            Model m = read_model(input, fmt_in);
            emit(out_path, render_model(m, fmt_out));
            return kExitOk;
        }
        if (saturate->parsed())
            return cmd_saturate(input, fmt_in, strategy, fmt_out, out_path);
        if (bisim->parsed())
            return cmd_bisim(input, input_b, fmt_in, bopt, out_path);
        if (trace->parsed())
            return cmd_trace(input, fmt_in, state,
                             max_len >= 0 ? std::optional<int>(max_len) : std::nullopt, exact,
                             out_path);
        if (trace_equiv->parsed())
            return cmd_trace_equiv(spec_a, spec_b, fmt_in);
        if (minimize->parsed())
            return cmd_minimize(input, fmt_in, min_kind, fmt_out, out_path);
        if (check->parsed())
            return cmd_check(suite, cfg, as_json);
    } catch (const UnknownStateName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitName;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSuite;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const HeaderMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const WrongMonad& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const MonadMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const AlphabetMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const BadSplit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
