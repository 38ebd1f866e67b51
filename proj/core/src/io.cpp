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

#include "kleisli/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kleisli {

using nlohmann::json;

namespace {

int line_of_offset(const std::string& bytes, size_t offset) {
    int line = 1;
    for (size_t i = 0; i < offset && i < bytes.size(); ++i)
        if (bytes[i] == '\n') ++line;
    return line;
}

json parse_or_throw(const std::string& bytes) {
    try {
        return json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_offset(bytes, e.byte), e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key))
        throw SchemaError(path + "." + key, "missing field");
    return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of strings");
    std::vector<std::string> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string())
            throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

int32_t state_field(const json& j, const char* key, const StateSpace& space,
                    const std::string& path) {
    std::string name = string_field(j, key, path);
    auto idx = space.index_of(name);
    if (!idx) throw SchemaError(path + "." + key, "unknown state '" + name + "'");
    return *idx;
}

Word word_of_json(const json& v, const Alphabet& alphabet, const std::string& path) {
    std::vector<std::string> letters = string_list(v, path);
    std::vector<int32_t> out;
    out.reserve(letters.size());
    for (size_t i = 0; i < letters.size(); ++i) {
        auto idx = alphabet.letter_index(letters[i]);
        if (!idx)
            throw SchemaError(path + "[" + std::to_string(i) + "]",
                              "unknown letter '" + letters[i] + "'");
        out.push_back(*idx);
    }
    return Word{std::move(out)};
}

json word_to_json(const Word& w, const Alphabet& alphabet) {
    json arr = json::array();
    for (int32_t l : w.letters()) arr.push_back(alphabet.letter(l));
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Model read_json(const std::string& bytes) {
    json j = parse_or_throw(bytes);
    if (!j.is_object()) throw SchemaError("$", "expected an object");
    std::string kind = string_field(j, "kind", "$");
    if (kind != "lts" && kind != "ena")
        throw SchemaError("$.kind", "expected 'lts' or 'ena'");
    StateSpace space = StateSpace::make(string_list(field(j, "states", "$"), "$.states"));
    Alphabet alphabet = Alphabet::make(string_list(field(j, "alphabet", "$"), "$.alphabet"),
                                       string_field(j, "silent", "$"));
    const json& trans = field(j, "transitions", "$");
    if (!trans.is_array()) throw SchemaError("$.transitions", "expected an array");

    Model m;
    m.kind = kind == "lts" ? Model::Kind::Lts : Model::Kind::Ena;
    if (j.contains("initial")) {
        std::string name = string_field(j, "initial", "$");
        auto idx = space.index_of(name);
        if (!idx) throw SchemaError("$.initial", "unknown state '" + name + "'");
        m.initial = *idx;
    }

    if (m.kind == Model::Kind::Lts) {
        if (j.contains("final")) throw SchemaError("$.final", "final list is for ena documents");
        std::vector<std::vector<LtsEdge>> moves(static_cast<size_t>(space.size()));
        std::set<std::tuple<int32_t, Label, int32_t>> seen;
        for (size_t i = 0; i < trans.size(); ++i) {
            const std::string path = "$.transitions[" + std::to_string(i) + "]";
            const json& t = trans[i];
            int32_t from = state_field(t, "from", space, path);
            int32_t to = state_field(t, "to", space, path);
            std::string label = string_field(t, "label", path);
            Label l;
            if (label == alphabet.silent()) {
                l = silent_label;
            } else {
                auto idx = alphabet.letter_index(label);
                if (!idx) throw SchemaError(path + ".label", "unknown label '" + label + "'");
                l = *idx;
            }
            if (!seen.insert({from, l, to}).second)
                throw SchemaError(path, "duplicate transition");
            moves[static_cast<size_t>(from)].push_back({l, to});
        }
        std::vector<Effect> image;
        image.reserve(moves.size());
        for (auto& ms : moves) image.push_back(Effect::lts(std::move(ms)));
        m.system = Morphism::make(Monad::Lts, alphabet, space, space, std::move(image));
        return m;
    }

    std::vector<std::vector<WordEdge>> moves(static_cast<size_t>(space.size()));
    std::set<std::tuple<int32_t, Word, int32_t>> seen;
    for (size_t i = 0; i < trans.size(); ++i) {
        const std::string path = "$.transitions[" + std::to_string(i) + "]";
        const json& t = trans[i];
        int32_t from = state_field(t, "from", space, path);
        int32_t to = state_field(t, "to", space, path);
        Word w = word_of_json(field(t, "word", path), alphabet, path + ".word");
        if (!seen.insert({from, w, to}).second)
            throw SchemaError(path, "duplicate transition");
        moves[static_cast<size_t>(from)].push_back({std::move(w), to});
    }
    std::vector<uint8_t> final_(static_cast<size_t>(space.size()), 0);
    if (j.contains("final")) {
        std::vector<std::string> names = string_list(j.at("final"), "$.final");
        for (size_t i = 0; i < names.size(); ++i) {
            auto idx = space.index_of(names[i]);
            if (!idx)
                throw SchemaError("$.final[" + std::to_string(i) + "]",
                                  "unknown state '" + names[i] + "'");
            final_[static_cast<size_t>(*idx)] = 1;
        }
    }
    std::vector<Effect> image;
    image.reserve(moves.size());
    for (int32_t x = 0; x < space.size(); ++x) {
        std::vector<Word> bare;
        if (final_[static_cast<size_t>(x)]) bare.push_back(Word::epsilon());
        image.push_back(Effect::ena(std::move(moves[static_cast<size_t>(x)]), std::move(bare)));
    }
    m.system = Morphism::make(Monad::Ena, alphabet, space, space, std::move(image));
    return m;
}

std::string write_json(const Model& m) {
    const System& s = m.system;
    json j;
    j["states"] = s.source().names();
    j["alphabet"] = s.alphabet().letters();
    j["silent"] = s.alphabet().silent();
    if (m.initial) j["initial"] = s.source().name(*m.initial);
    json trans = json::array();
    if (m.kind == Model::Kind::Lts) {
        if (s.tag() != Monad::Lts)
            throw SchemaError("$.kind", "lts document requires an lts system");
        j["kind"] = "lts";
        for (int32_t x = 0; x < s.source().size(); ++x)
            for (const LtsEdge& e : s.at(x).moves()) {
                json t;
                t["from"] = s.source().name(x);
                t["label"] = e.label == silent_label ? s.alphabet().silent()
                                                     : s.alphabet().letter(e.label);
                t["to"] = s.source().name(e.state);
                trans.push_back(std::move(t));
            }
    } else {
        if (s.tag() != Monad::Ena)
            throw SchemaError("$.kind", "ena document requires an ena system");
        j["kind"] = "ena";
        json final_list = json::array();
        for (int32_t x = 0; x < s.source().size(); ++x) {
            for (const WordEdge& e : s.at(x).word_moves()) {
                json t;
                t["from"] = s.source().name(x);
                t["word"] = word_to_json(e.word, s.alphabet());
                t["to"] = s.source().name(e.state);
                trans.push_back(std::move(t));
            }
            for (const Word& w : s.at(x).bare()) {
                if (!w.empty())
                    throw SchemaError("$.final",
                                      "bare word of length > 0 has no document form");
                final_list.push_back(s.source().name(x));
            }
        }
        j["final"] = std::move(final_list);
    }
    j["transitions"] = std::move(trans);
    return dump(j);
}

Model read_aut(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            line = line.substr(a, b - a + 1);
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "empty file");
    long first_state = 0, n_trans = 0, n_states = 0;
    {
        std::istringstream hs(line);
        std::string des;
        char c = 0;
        hs >> des;
        if (des != "des") throw ParseError(line_no, "expected 'des' header");
        hs >> c;
        if (c != '(') throw ParseError(line_no, "expected '(' in header");
        hs >> first_state >> c;
        if (c != ',') throw ParseError(line_no, "malformed header");
        hs >> n_trans >> c;
        if (c != ',') throw ParseError(line_no, "malformed header");
        hs >> n_states >> c;
        if (c != ')') throw ParseError(line_no, "malformed header");
        if (n_states < 0 || n_trans < 0 || first_state < 0 || first_state >= std::max(n_states, 1L))
            throw ParseError(line_no, "header counts out of range");
    }
    struct RawTrans {
        int32_t from;
        std::string label;
        int32_t to;
    };
    std::vector<RawTrans> raw;
    while (next_line()) {
        if (line.empty()) continue;
        if (line.front() != '(' || line.back() != ')')
            throw ParseError(line_no, "expected '(<from>, <label>, <to>)'");
        std::string body = line.substr(1, line.size() - 2);
        size_t comma1 = body.find(',');
        if (comma1 == std::string::npos) throw ParseError(line_no, "missing label field");
        size_t comma2;
        std::string label;
        size_t label_start = body.find_first_not_of(" \t", comma1 + 1);
        if (label_start == std::string::npos) throw ParseError(line_no, "missing label field");
        if (body[label_start] == '"') {
            size_t close = body.find('"', label_start + 1);
            if (close == std::string::npos) throw ParseError(line_no, "unterminated label quote");
            label = body.substr(label_start + 1, close - label_start - 1);
            comma2 = body.find(',', close + 1);
        } else {
            comma2 = body.find(',', label_start);
            if (comma2 == std::string::npos) throw ParseError(line_no, "missing target field");
            size_t label_end = body.find_last_not_of(" \t", comma2 - 1);
            label = body.substr(label_start, label_end - label_start + 1);
        }
        if (comma2 == std::string::npos) throw ParseError(line_no, "missing target field");
        long from, to;
        try {
            from = std::stol(body.substr(0, comma1));
            to = std::stol(body.substr(comma2 + 1));
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed state index");
        }
        if (from < 0 || from >= n_states || to < 0 || to >= n_states)
            throw ParseError(line_no, "state index outside header range");
        if (label.empty()) throw ParseError(line_no, "empty label");
        raw.push_back({static_cast<int32_t>(from), std::move(label), static_cast<int32_t>(to)});
    }
    if (static_cast<long>(raw.size()) != n_trans)
        throw HeaderMismatch("aut header declares " + std::to_string(n_trans) +
                             " transitions, file has " + std::to_string(raw.size()));

    std::set<std::string> letters;
    for (const RawTrans& t : raw)
        if (t.label != "i" && t.label != "tau") letters.insert(t.label);
    Alphabet alphabet =
        Alphabet::make(std::vector<std::string>(letters.begin(), letters.end()), "tau");
    StateSpace space = StateSpace::numbered(static_cast<int32_t>(n_states));
    std::vector<std::vector<LtsEdge>> moves(static_cast<size_t>(n_states));
    for (const RawTrans& t : raw) {
        Label l = (t.label == "i" || t.label == "tau") ? silent_label
                                                       : *alphabet.letter_index(t.label);
        moves[static_cast<size_t>(t.from)].push_back({l, t.to});
    }
    std::vector<Effect> image;
    image.reserve(moves.size());
    for (auto& ms : moves) image.push_back(Effect::lts(std::move(ms)));
    Model m;
    m.kind = Model::Kind::Lts;
    m.system = Morphism::make(Monad::Lts, alphabet, space, space, std::move(image));
    m.initial = static_cast<int32_t>(first_state);
    return m;
}

std::string write_aut(const Model& m) {
    if (m.kind != Model::Kind::Lts || m.system.tag() != Monad::Lts)
        throw WrongMonad("write_aut: only lts systems have an aut form");
    const System& s = m.system;
    for (const std::string& l : s.alphabet().letters())
        if (l == "i" || l == "tau")
            throw SchemaError("alphabet", "visible letter '" + l + "' collides with the aut silent label");
    size_t count = 0;
    for (const Effect& e : s.image()) count += e.moves().size();
    std::ostringstream os;
    os << "des (" << m.initial.value_or(0) << ", " << count << ", " << s.source().size() << ")\n";
    for (int32_t x = 0; x < s.source().size(); ++x)
        for (const LtsEdge& e : s.at(x).moves())
            os << "(" << x << ", \""
               << (e.label == silent_label ? "tau" : s.alphabet().letter(e.label)) << "\", "
               << e.state << ")\n";
    return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void dot_edges(std::ostringstream& os, const System& s, const std::string& indent) {
    for (int32_t x = 0; x < s.source().size(); ++x) {
        if (s.tag() == Monad::Lts) {
            for (const LtsEdge& e : s.at(x).moves())
                os << indent << "n" << x << " -> n" << e.state << " [label=\""
                   << dot_escape(e.label == silent_label ? s.alphabet().silent()
                                                         : s.alphabet().letter(e.label))
                   << "\"];\n";
        } else {
            for (const WordEdge& e : s.at(x).word_moves())
                os << indent << "n" << x << " -> n" << e.state << " [label=\""
                   << dot_escape(e.word.empty() ? s.alphabet().silent()
                                                : s.alphabet().format_word(e.word))
                   << "\"];\n";
        }
    }
}

bool is_final_state(const System& s, int32_t x) {
    if (s.tag() != Monad::Ena) return false;
    for (const Word& w : s.at(x).bare())
        if (w.empty()) return true;
    return false;
}

}  // namespace

std::string write_dot(const Model& m) {
    const System& s = m.system;
    std::ostringstream os;
    os << "digraph system {\n  rankdir=LR;\n";
    for (int32_t x = 0; x < s.source().size(); ++x)
        os << "  n" << x << " [label=\"" << dot_escape(s.source().name(x)) << "\", shape="
           << (is_final_state(s, x) ? "doublecircle" : "circle") << "];\n";
    if (m.initial) {
        os << "  start [shape=point];\n";
        os << "  start -> n" << *m.initial << ";\n";
    }
    dot_edges(os, s, "  ");
    os << "}\n";
    return os.str();
}

std::string write_dot(const System& system, const Partition& clusters) {
    if (clusters.space() != system.source())
        throw SpaceMismatch("write_dot: partition over a different space");
    std::ostringstream os;
    os << "digraph quotient {\n  rankdir=LR;\n";
    for (int32_t b = 0; b < clusters.block_count(); ++b) {
        os << "  subgraph cluster_" << b << " {\n    label=\"block " << b << "\";\n";
        for (int32_t x : clusters.block(b))
            os << "    n" << x << " [label=\"" << dot_escape(system.source().name(x))
               << "\", shape=" << (is_final_state(system, x) ? "doublecircle" : "circle")
               << "];\n";
        os << "  }\n";
    }
    dot_edges(os, system, "  ");
    os << "}\n";
    return os.str();
}

namespace {

std::string sample_words(const RegLang& l, int maxlen, int count) {
    std::vector<Word> ws = l.enumerate_upto(maxlen);
    std::string out;
    for (size_t i = 0; i < ws.size() && i < static_cast<size_t>(count); ++i) {
        if (i) out += " ";
        std::string w = l.alphabet().format_word(ws[i]);
        out += w.empty() ? "()" : w;
    }
    if (ws.size() > static_cast<size_t>(count)) out += " ...";
    return out;
}

}  // namespace

std::string write_dot(const WeakMatrix& m) {
    std::ostringstream os;
    os << "digraph saturation {\n  rankdir=LR;\n";
    for (int32_t x = 0; x < m.space.size(); ++x) {
        std::string label = m.space.name(x);
        if (m.has_bare && !m.bare[static_cast<size_t>(x)].is_empty())
            label += "\\naccepts: " + sample_words(m.bare[static_cast<size_t>(x)], 3, 3);
        os << "  n" << x << " [label=\"" << dot_escape(m.space.name(x)) << "\"";
        if (m.has_bare && !m.bare[static_cast<size_t>(x)].is_empty()) os << ", shape=doublecircle";
        os << "];\n";
        (void)label;
    }
    for (int32_t x = 0; x < m.space.size(); ++x)
        for (int32_t y = 0; y < m.space.size(); ++y) {
            const RegLang& l = m.lang[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (l.is_empty()) continue;
            os << "  n" << x << " -> n" << y << " [label=\"" << dot_escape(sample_words(l, 2, 3))
               << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

namespace {

json effect_to_json(const Effect& e, const Alphabet& alphabet, const StateSpace& target) {
    json out;
    switch (e.tag()) {
        case Monad::Pow: {
            json arr = json::array();
            for (int32_t s : e.states()) arr.push_back(target.name(s));
            out["states"] = std::move(arr);
            break;
        }
        case Monad::Lts: {
            json arr = json::array();
            for (const LtsEdge& m : e.moves()) {
                json mj;
                mj["label"] = m.label == silent_label ? alphabet.silent() : alphabet.letter(m.label);
                mj["to"] = target.name(m.state);
                arr.push_back(std::move(mj));
            }
            out["moves"] = std::move(arr);
            break;
        }
        case Monad::FreeLts:
        case Monad::Ena: {
            json arr = json::array();
            for (const WordEdge& m : e.word_moves()) {
                json mj;
                mj["word"] = word_to_json(m.word, alphabet);
                mj["to"] = target.name(m.state);
                arr.push_back(std::move(mj));
            }
            out["moves"] = std::move(arr);
            if (e.tag() == Monad::Ena) {
                json bare = json::array();
                for (const Word& w : e.bare()) bare.push_back(word_to_json(w, alphabet));
                out["bare"] = std::move(bare);
            }
            break;
        }
    }
    return out;
}

Effect effect_of_json(const json& j, Monad tag, const Alphabet& alphabet,
                      const StateSpace& target, const std::string& path) {
    switch (tag) {
        case Monad::Pow: {
            std::vector<int32_t> states;
            for (const std::string& n : string_list(field(j, "states", path), path + ".states")) {
                auto idx = target.index_of(n);
                if (!idx) throw SchemaError(path + ".states", "unknown state '" + n + "'");
                states.push_back(*idx);
            }
            return Effect::pow(std::move(states));
        }
        case Monad::Lts: {
            const json& arr = field(j, "moves", path);
            if (!arr.is_array()) throw SchemaError(path + ".moves", "expected an array");
            std::vector<LtsEdge> moves;
            for (size_t i = 0; i < arr.size(); ++i) {
                const std::string mp = path + ".moves[" + std::to_string(i) + "]";
                std::string label = string_field(arr[i], "label", mp);
                Label l;
                if (label == alphabet.silent()) {
                    l = silent_label;
                } else {
                    auto idx = alphabet.letter_index(label);
                    if (!idx) throw SchemaError(mp + ".label", "unknown label '" + label + "'");
                    l = *idx;
                }
                moves.push_back({l, state_field(arr[i], "to", target, mp)});
            }
            return Effect::lts(std::move(moves));
        }
        case Monad::FreeLts:
        case Monad::Ena: {
            const json& arr = field(j, "moves", path);
            if (!arr.is_array()) throw SchemaError(path + ".moves", "expected an array");
            std::vector<WordEdge> moves;
            for (size_t i = 0; i < arr.size(); ++i) {
                const std::string mp = path + ".moves[" + std::to_string(i) + "]";
                moves.push_back({word_of_json(field(arr[i], "word", mp), alphabet, mp + ".word"),
                                 state_field(arr[i], "to", target, mp)});
            }
            if (tag == Monad::FreeLts) return Effect::free_lts(std::move(moves));
            std::vector<Word> bare;
            const json& bj = field(j, "bare", path);
            if (!bj.is_array()) throw SchemaError(path + ".bare", "expected an array");
            for (size_t i = 0; i < bj.size(); ++i)
                bare.push_back(word_of_json(bj[i], alphabet,
                                            path + ".bare[" + std::to_string(i) + "]"));
            return Effect::ena(std::move(moves), std::move(bare));
        }
    }
    throw SchemaError(path, "unreachable");
}

}  // namespace

std::string write_morphism_json(const Morphism& m) {
    json j;
    j["kind"] = "morphism";
    j["monad"] = monad_name(m.tag());
    j["alphabet"] = m.alphabet().letters();
    j["silent"] = m.alphabet().silent();
    j["source"] = m.source().names();
    j["target"] = m.target().names();
    json effects = json::array();
    for (const Effect& e : m.image())
        effects.push_back(effect_to_json(e, m.alphabet(), m.target()));
    j["effects"] = std::move(effects);
    return dump(j);
}

Morphism read_morphism_json(const std::string& bytes) {
    json j = parse_or_throw(bytes);
    if (!j.is_object() || string_field(j, "kind", "$") != "morphism")
        throw SchemaError("$.kind", "expected 'morphism'");
    std::string monad = string_field(j, "monad", "$");
    Monad tag;
    if (monad == "pow") tag = Monad::Pow;
    else if (monad == "lts") tag = Monad::Lts;
    else if (monad == "free-lts") tag = Monad::FreeLts;
    else if (monad == "ena") tag = Monad::Ena;
    else throw SchemaError("$.monad", "unknown monad '" + monad + "'");
    Alphabet alphabet = Alphabet::make(string_list(field(j, "alphabet", "$"), "$.alphabet"),
                                       string_field(j, "silent", "$"));
    StateSpace source = StateSpace::make(string_list(field(j, "source", "$"), "$.source"));
    StateSpace target = StateSpace::make(string_list(field(j, "target", "$"), "$.target"));
    const json& effects = field(j, "effects", "$");
    if (!effects.is_array() || effects.size() != static_cast<size_t>(source.size()))
        throw SchemaError("$.effects", "expected one effect per source state");
    std::vector<Effect> image;
    for (size_t i = 0; i < effects.size(); ++i)
        image.push_back(effect_of_json(effects[i], tag, alphabet, target,
                                       "$.effects[" + std::to_string(i) + "]"));
    return Morphism::make(tag, alphabet, source, target, std::move(image));
}

namespace {

json dfa_to_json(const Dfa& d) {
    json j;
    j["states"] = d.size();
    j["start"] = d.start;
    json acc = json::array();
    for (int32_t i = 0; i < d.size(); ++i)
        if (d.accepting[static_cast<size_t>(i)]) acc.push_back(i);
    j["accepting"] = std::move(acc);
    json next = json::array();
    for (const auto& row : d.next) next.push_back(row);
    j["next"] = std::move(next);
    return j;
}

}  // namespace

std::string write_trace_json(const TraceMap& t) {
    json j;
    j["kind"] = "trace";
    j["mode"] = t.exact ? "exact" : "bounded";
    if (!t.exact) j["bound"] = t.bound;
    json states;
    for (int32_t x = 0; x < t.space.size(); ++x) {
        if (t.exact) {
            states[t.space.name(x)] = dfa_to_json(t.langs[static_cast<size_t>(x)].minimal_dfa());
        } else {
            json ws = json::array();
            for (const Word& w : t.words[static_cast<size_t>(x)])
                ws.push_back(word_to_json(w, t.alphabet));
            states[t.space.name(x)] = std::move(ws);
        }
    }
    j["states"] = std::move(states);
    return dump(j);
}

std::string write_partition_json(const Partition& p) {
    json j;
    j["kind"] = "partition";
    json blocks = json::array();
    for (int32_t b = 0; b < p.block_count(); ++b) {
        json names = json::array();
        for (int32_t x : p.block(b)) names.push_back(p.space().name(x));
        blocks.push_back(std::move(names));
    }
    j["blocks"] = std::move(blocks);
    j["states"] = p.space().names();
    return dump(j);
}

std::string write_language_json(const RegLang& l) {
    json j;
    j["kind"] = "language";
    j["alphabet"] = l.alphabet().letters();
    j["dfa"] = dfa_to_json(l.minimal_dfa());
    return dump(j);
}

std::string write_matrix_summary_json(const WeakMatrix& m, int sample_maxlen, int sample_count) {
    json j;
    j["kind"] = "weak-matrix-summary";
    j["states"] = m.space.names();
    j["alphabet"] = m.alphabet.letters();
    json pairs = json::array();
    for (int32_t x = 0; x < m.space.size(); ++x)
        for (int32_t y = 0; y < m.space.size(); ++y) {
            const RegLang& l = m.lang[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (l.is_empty()) continue;
            json p;
            p["from"] = m.space.name(x);
            p["to"] = m.space.name(y);
            Dfa d = l.minimal_dfa();
            p["dfa_states"] = d.size();
            json sample = json::array();
            std::vector<Word> ws = l.enumerate_upto(sample_maxlen);
            for (size_t i = 0; i < ws.size() && i < static_cast<size_t>(sample_count); ++i)
                sample.push_back(word_to_json(ws[i], m.alphabet));
            p["sample"] = std::move(sample);
            pairs.push_back(std::move(p));
        }
    j["pairs"] = std::move(pairs);
    if (m.has_bare) {
        json accepts = json::array();
        for (int32_t x = 0; x < m.space.size(); ++x) {
            const RegLang& l = m.bare[static_cast<size_t>(x)];
            json p;
            p["state"] = m.space.name(x);
            Dfa d = l.minimal_dfa();
            p["dfa_states"] = d.size();
            json sample = json::array();
            std::vector<Word> ws = l.enumerate_upto(sample_maxlen);
            for (size_t i = 0; i < ws.size() && i < static_cast<size_t>(sample_count); ++i)
                sample.push_back(word_to_json(ws[i], m.alphabet));
            p["sample"] = std::move(sample);
            accepts.push_back(std::move(p));
        }
        j["accepts"] = std::move(accepts);
    }
    return dump(j);
}

SurfaceEna surface_from_embedded(const System& ena) {
    if (ena.tag() != Monad::Ena)
        throw WrongMonad("surface_from_embedded: expected an ena system");
    std::vector<Effect> image;
    std::vector<uint8_t> final_(static_cast<size_t>(ena.source().size()), 0);
    for (int32_t x = 0; x < ena.source().size(); ++x) {
        const Effect& e = ena.at(x);
        std::vector<LtsEdge> moves;
        for (const WordEdge& m : e.word_moves()) {
            if (m.word.size() > 1)
                throw WrongMonad("surface_from_embedded: word of length > 1 at state " +
                                 ena.source().name(x));
            moves.push_back({m.word.empty() ? silent_label : m.word[0], m.state});
        }
        for (const Word& w : e.bare()) {
            if (!w.empty())
                throw WrongMonad("surface_from_embedded: bare word of length > 0 at state " +
                                 ena.source().name(x));
            final_[static_cast<size_t>(x)] = 1;
        }
        image.push_back(Effect::lts(std::move(moves)));
    }
    return SurfaceEna{Morphism::make(Monad::Lts, ena.alphabet(), ena.source(), ena.target(),
                                     std::move(image)),
                      std::move(final_)};
}

Model model_of_lts(System lts, std::optional<int32_t> initial) {
    if (lts.tag() != Monad::Lts) throw WrongMonad("model_of_lts: expected an lts system");
    Model m;
    m.kind = Model::Kind::Lts;
    m.system = std::move(lts);
    m.initial = initial;
    return m;
}

Model model_of_ena(System ena, std::optional<int32_t> initial) {
    if (ena.tag() != Monad::Ena) throw WrongMonad("model_of_ena: expected an ena system");
    Model m;
    m.kind = Model::Kind::Ena;
    m.system = std::move(ena);
    m.initial = initial;
    return m;
}

Model model_of_surface(const SurfaceEna& s, std::optional<int32_t> initial) {
    return model_of_ena(embed_underline(s), initial);
}

}  // namespace kleisli
