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

#include "kleisli/reglang.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "kleisli/effect.hpp"
#include "kleisli/errors.hpp"

namespace kleisli {

namespace {

void require_same_alphabet(const RegLang& a, const RegLang& b, const char* op) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetMismatch(std::string(op) + ": languages over different alphabets");
}

// Adjacency lists split into eps edges and letter edges.
struct Adjacency {
    std::vector<std::vector<int32_t>> eps;                          // node -> nodes
    std::vector<std::vector<std::pair<int32_t, int32_t>>> letter;   // node -> (letter, node)
};

Adjacency adjacency(const RegLang::Graph& g) {
    Adjacency adj;
    adj.eps.resize(static_cast<size_t>(g.nodes));
    adj.letter.resize(static_cast<size_t>(g.nodes));
    for (const auto& e : g.edges) {
        if (e.letter == silent_label)
            adj.eps[static_cast<size_t>(e.from)].push_back(e.to);
        else
            adj.letter[static_cast<size_t>(e.from)].push_back({e.letter, e.to});
    }
    return adj;
}

void close_under_eps(const Adjacency& adj, std::vector<int32_t>& set) {
    std::vector<uint8_t> seen(adj.eps.size(), 0);
    std::vector<int32_t> stack = set;
    for (int32_t s : set) seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
        int32_t s = stack.back();
        stack.pop_back();
        for (int32_t t : adj.eps[static_cast<size_t>(s)]) {
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                set.push_back(t);
                stack.push_back(t);
            }
        }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

struct UnionFind {
    std::vector<int32_t> parent;
    explicit UnionFind(int32_t n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int32_t find(int32_t x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void merge(int32_t a, int32_t b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

RegLang RegLang::over_graph(const Alphabet& alphabet, std::shared_ptr<const Graph> graph,
                            int32_t start, std::vector<int32_t> accepts) {
    RegLang l;
    l.alphabet_ = alphabet;
    l.graph_ = std::move(graph);
    l.start_ = start;
    std::sort(accepts.begin(), accepts.end());
    accepts.erase(std::unique(accepts.begin(), accepts.end()), accepts.end());
    l.accepts_ = std::move(accepts);
    const int32_t n = l.graph_->nodes;
    if (start < 0 || start >= n)
        throw Error("reglang: start node out of range");
    for (int32_t a : l.accepts_)
        if (a < 0 || a >= n) throw Error("reglang: accept node out of range");
    for (const auto& e : l.graph_->edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw Error("reglang: edge endpoint out of range");
        if (e.letter != silent_label && (e.letter < 0 || e.letter >= alphabet.size()))
            throw AlphabetMismatch("reglang: edge letter outside alphabet");
    }
    return l;
}

RegLang RegLang::none(const Alphabet& alphabet) {
    auto g = std::make_shared<Graph>();
    g->nodes = 1;
    return over_graph(alphabet, std::move(g), 0, {});
}

RegLang RegLang::from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    auto g = std::make_shared<Graph>();
    g->nodes = 1;  // node 0 = start
    std::vector<int32_t> accepts;
    for (const Word& w : words) {
        int32_t at = 0;
        for (int32_t l : w.letters()) {
            int32_t next = g->nodes++;
            g->edges.push_back({at, l, next});
            at = next;
        }
        accepts.push_back(at);
    }
    return over_graph(alphabet, std::move(g), 0, std::move(accepts));
}

bool RegLang::member(const Word& w) const {
    Adjacency adj = adjacency(*graph_);
    std::vector<int32_t> current{start_};
    close_under_eps(adj, current);
    for (int32_t l : w.letters()) {
        std::vector<int32_t> next;
        for (int32_t s : current)
            for (const auto& [letter, to] : adj.letter[static_cast<size_t>(s)])
                if (letter == l) next.push_back(to);
        close_under_eps(adj, next);
        current = std::move(next);
        if (current.empty()) return false;
    }
    for (int32_t s : current)
        if (std::binary_search(accepts_.begin(), accepts_.end(), s)) return true;
    return false;
}

bool RegLang::is_empty() const {
    if (accepts_.empty()) return true;
    std::vector<uint8_t> seen(static_cast<size_t>(graph_->nodes), 0);
    std::vector<int32_t> stack{start_};
    seen[static_cast<size_t>(start_)] = 1;
    std::vector<std::vector<int32_t>> out(static_cast<size_t>(graph_->nodes));
    for (const auto& e : graph_->edges) out[static_cast<size_t>(e.from)].push_back(e.to);
    while (!stack.empty()) {
        int32_t s = stack.back();
        stack.pop_back();
        if (std::binary_search(accepts_.begin(), accepts_.end(), s)) return false;
        for (int32_t t : out[static_cast<size_t>(s)]) {
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

Dfa RegLang::determinize() const {
    Adjacency adj = adjacency(*graph_);
    const int32_t k = alphabet_.size();
    std::map<std::vector<int32_t>, int32_t> ids;
    std::vector<std::vector<int32_t>> subsets;
    auto intern = [&](std::vector<int32_t> subset) {
        auto it = ids.find(subset);
        if (it != ids.end()) return it->second;
        int32_t id = static_cast<int32_t>(subsets.size());
        ids.emplace(subset, id);
        subsets.push_back(std::move(subset));
        return id;
    };
    std::vector<int32_t> init{start_};
    close_under_eps(adj, init);
    int32_t start_id = intern(std::move(init));
    Dfa dfa;
    dfa.letters = k;
    dfa.start = start_id;
    for (size_t done = 0; done < subsets.size(); ++done) {
        const std::vector<int32_t> current = subsets[done];
        bool acc = false;
        for (int32_t s : current)
            if (std::binary_search(accepts_.begin(), accepts_.end(), s)) acc = true;
        dfa.accepting.push_back(acc ? 1 : 0);
        dfa.next.emplace_back(static_cast<size_t>(k), 0);
        for (int32_t l = 0; l < k; ++l) {
            std::vector<int32_t> succ;
            for (int32_t s : current)
                for (const auto& [letter, to] : adj.letter[static_cast<size_t>(s)])
                    if (letter == l) succ.push_back(to);
            close_under_eps(adj, succ);
            dfa.next[done][static_cast<size_t>(l)] = intern(std::move(succ));
        }
    }
    return dfa;
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) {
    if (a.letters != b.letters) return false;
    if (a.accepting[static_cast<size_t>(a.start)] != b.accepting[static_cast<size_t>(b.start)])
        return false;
    const int32_t offset = a.size();
    UnionFind uf(a.size() + b.size());
    std::vector<std::pair<int32_t, int32_t>> stack{{a.start, b.start}};
    uf.merge(a.start, offset + b.start);
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        for (int32_t l = 0; l < a.letters; ++l) {
            int32_t p2 = a.next[static_cast<size_t>(p)][static_cast<size_t>(l)];
            int32_t q2 = b.next[static_cast<size_t>(q)][static_cast<size_t>(l)];
            if (uf.find(p2) != uf.find(offset + q2)) {
                if (a.accepting[static_cast<size_t>(p2)] != b.accepting[static_cast<size_t>(q2)])
                    return false;
                uf.merge(p2, offset + q2);
                stack.push_back({p2, q2});
            }
        }
    }
    return true;
}

Dfa minimize_dfa(const Dfa& d) {
    const int32_t n = d.size();
    const int32_t k = d.letters;
    // Keep only reachable states.
    std::vector<int32_t> order;
    std::vector<int32_t> index(static_cast<size_t>(n), -1);
    order.push_back(d.start);
    index[static_cast<size_t>(d.start)] = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (int32_t l = 0; l < k; ++l) {
            int32_t t = d.next[static_cast<size_t>(order[i])][static_cast<size_t>(l)];
            if (index[static_cast<size_t>(t)] < 0) {
                index[static_cast<size_t>(t)] = static_cast<int32_t>(order.size());
                order.push_back(t);
            }
        }
    const int32_t m = static_cast<int32_t>(order.size());
    // Moore refinement on the reachable part.
    std::vector<int32_t> block(static_cast<size_t>(m));
    for (int32_t i = 0; i < m; ++i) block[static_cast<size_t>(i)] = d.accepting[static_cast<size_t>(order[static_cast<size_t>(i)])] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int32_t>, int32_t> sig_ids;
        std::vector<int32_t> next_block(static_cast<size_t>(m));
        for (int32_t i = 0; i < m; ++i) {
            std::vector<int32_t> sig{block[static_cast<size_t>(i)]};
            for (int32_t l = 0; l < k; ++l) {
                int32_t t = d.next[static_cast<size_t>(order[static_cast<size_t>(i)])][static_cast<size_t>(l)];
                sig.push_back(block[static_cast<size_t>(index[static_cast<size_t>(t)])]);
            }
            auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int32_t>(sig_ids.size()));
            (void)fresh;
            next_block[static_cast<size_t>(i)] = it->second;
        }
        bool changed = false;
        for (int32_t i = 0; i < m; ++i)
            if (next_block[static_cast<size_t>(i)] != block[static_cast<size_t>(i)]) changed = true;
        block = std::move(next_block);
        if (!changed) break;
    }
    // Quotient, then renumber canonically by BFS from the start block.
    int32_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<int32_t> repr(static_cast<size_t>(blocks), -1);
    for (int32_t i = 0; i < m; ++i)
        if (repr[static_cast<size_t>(block[static_cast<size_t>(i)])] < 0)
            repr[static_cast<size_t>(block[static_cast<size_t>(i)])] = order[static_cast<size_t>(i)];
    std::vector<int32_t> canon(static_cast<size_t>(blocks), -1);
    std::vector<int32_t> bfs;
    int32_t start_block = block[0];  // index 0 is the start in `order`
    canon[static_cast<size_t>(start_block)] = 0;
    bfs.push_back(start_block);
    for (size_t i = 0; i < bfs.size(); ++i) {
        int32_t b = bfs[i];
        int32_t state = repr[static_cast<size_t>(b)];
        for (int32_t l = 0; l < k; ++l) {
            int32_t t = d.next[static_cast<size_t>(state)][static_cast<size_t>(l)];
            int32_t tb = block[static_cast<size_t>(index[static_cast<size_t>(t)])];
            if (canon[static_cast<size_t>(tb)] < 0) {
                canon[static_cast<size_t>(tb)] = static_cast<int32_t>(bfs.size());
                bfs.push_back(tb);
            }
        }
    }
    Dfa out;
    out.letters = k;
    out.start = 0;
    out.next.assign(bfs.size(), std::vector<int32_t>(static_cast<size_t>(k), 0));
    out.accepting.assign(bfs.size(), 0);
    for (size_t i = 0; i < bfs.size(); ++i) {
        int32_t state = repr[static_cast<size_t>(bfs[i])];
        out.accepting[i] = d.accepting[static_cast<size_t>(state)];
        for (int32_t l = 0; l < k; ++l) {
            int32_t t = d.next[static_cast<size_t>(state)][static_cast<size_t>(l)];
            out.next[i][static_cast<size_t>(l)] = canon[static_cast<size_t>(block[static_cast<size_t>(index[static_cast<size_t>(t)])])];
        }
    }
    return out;
}

Dfa RegLang::minimal_dfa() const { return minimize_dfa(determinize()); }

std::string dfa_key(const Dfa& d) {
    Dfa m = minimize_dfa(d);
    std::string key;
    key += std::to_string(m.letters) + ";" + std::to_string(m.size()) + ";";
    for (int32_t i = 0; i < m.size(); ++i) {
        key += m.accepting[static_cast<size_t>(i)] ? 'A' : '.';
        for (int32_t l = 0; l < m.letters; ++l)
            key += "," + std::to_string(m.next[static_cast<size_t>(i)][static_cast<size_t>(l)]);
        key += ";";
    }
    return key;
}

std::vector<Word> RegLang::enumerate_upto(int maxlen) const {
    Dfa dfa = determinize();
    // States that can still reach an accepting state; walks are pruned there.
    const int32_t n = dfa.size();
    std::vector<std::vector<int32_t>> rev(static_cast<size_t>(n));
    for (int32_t s = 0; s < n; ++s)
        for (int32_t l = 0; l < dfa.letters; ++l)
            rev[static_cast<size_t>(dfa.next[static_cast<size_t>(s)][static_cast<size_t>(l)])].push_back(s);
    std::vector<uint8_t> alive(static_cast<size_t>(n), 0);
    std::vector<int32_t> stack;
    for (int32_t s = 0; s < n; ++s)
        if (dfa.accepting[static_cast<size_t>(s)]) {
            alive[static_cast<size_t>(s)] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int32_t s = stack.back();
        stack.pop_back();
        for (int32_t p : rev[static_cast<size_t>(s)])
            if (!alive[static_cast<size_t>(p)]) {
                alive[static_cast<size_t>(p)] = 1;
                stack.push_back(p);
            }
    }
    std::vector<Word> out;
    std::vector<int32_t> letters;
    auto walk = [&](auto&& self, int32_t state, int depth) -> void {
        if (!alive[static_cast<size_t>(state)]) return;
        if (dfa.accepting[static_cast<size_t>(state)]) out.push_back(Word{letters});
        if (depth == maxlen) return;
        for (int32_t l = 0; l < dfa.letters; ++l) {
            letters.push_back(l);
            self(self, dfa.next[static_cast<size_t>(state)][static_cast<size_t>(l)], depth + 1);
            letters.pop_back();
        }
    };
    if (maxlen >= 0) walk(walk, dfa.start, 0);
    std::sort(out.begin(), out.end());
    return out;
}

RegLang reg_union(const RegLang& a, const RegLang& b) {
    require_same_alphabet(a, b, "union");
    // Same graph, same start: just widen the accept set.
    if (a.graph_ptr() == b.graph_ptr() && a.start() == b.start()) {
        std::vector<int32_t> accepts = a.accepts();
        accepts.insert(accepts.end(), b.accepts().begin(), b.accepts().end());
        return RegLang::over_graph(a.alphabet(), a.graph_ptr(), a.start(), std::move(accepts));
    }
    auto g = std::make_shared<RegLang::Graph>();
    const int32_t offa = 1;
    const int32_t offb = 1 + a.graph().nodes;
    g->nodes = 1 + a.graph().nodes + b.graph().nodes;
    g->edges.push_back({0, silent_label, offa + a.start()});
    g->edges.push_back({0, silent_label, offb + b.start()});
    for (const auto& e : a.graph().edges) g->edges.push_back({offa + e.from, e.letter, offa + e.to});
    for (const auto& e : b.graph().edges) g->edges.push_back({offb + e.from, e.letter, offb + e.to});
    std::vector<int32_t> accepts;
    for (int32_t s : a.accepts()) accepts.push_back(offa + s);
    for (int32_t s : b.accepts()) accepts.push_back(offb + s);
    return RegLang::over_graph(a.alphabet(), std::move(g), 0, std::move(accepts));
}

RegLang reg_concat(const RegLang& a, const RegLang& b) {
    require_same_alphabet(a, b, "concat");
    auto g = std::make_shared<RegLang::Graph>();
    const int32_t offb = a.graph().nodes;
    g->nodes = a.graph().nodes + b.graph().nodes;
    g->edges = a.graph().edges;
    for (int32_t s : a.accepts()) g->edges.push_back({s, silent_label, offb + b.start()});
    for (const auto& e : b.graph().edges) g->edges.push_back({offb + e.from, e.letter, offb + e.to});
    std::vector<int32_t> accepts;
    for (int32_t s : b.accepts()) accepts.push_back(offb + s);
    return RegLang::over_graph(a.alphabet(), std::move(g), a.start(), std::move(accepts));
}

RegLang reg_star(const RegLang& a) {
    auto g = std::make_shared<RegLang::Graph>();
    const int32_t off = 1;
    g->nodes = 1 + a.graph().nodes;
    g->edges.push_back({0, silent_label, off + a.start()});
    for (const auto& e : a.graph().edges) g->edges.push_back({off + e.from, e.letter, off + e.to});
    for (int32_t s : a.accepts()) g->edges.push_back({off + s, silent_label, 0});
    return RegLang::over_graph(a.alphabet(), std::move(g), 0, {0});
}

bool equivalent(const RegLang& a, const RegLang& b) {
    require_same_alphabet(a, b, "equivalent");
    return dfa_equivalent(a.determinize(), b.determinize());
}

bool reg_subset(const RegLang& a, const RegLang& b) {
    return equivalent(reg_union(a, b), b);
}

std::string describe_dfa(const Dfa& d, const Alphabet& alphabet) {
    std::ostringstream os;
    os << "dfa states: " << d.size() << "\n";
    os << "start: " << d.start << "\n";
    os << "accepting:";
    for (int32_t i = 0; i < d.size(); ++i)
        if (d.accepting[static_cast<size_t>(i)]) os << " " << i;
    os << "\n";
    for (int32_t i = 0; i < d.size(); ++i)
        for (int32_t l = 0; l < d.letters; ++l)
            os << i << " -" << alphabet.letter(l) << "-> "
               << d.next[static_cast<size_t>(i)][static_cast<size_t>(l)] << "\n";
    return os.str();
}

std::string RegLang::to_dot() const {
    std::ostringstream os;
    os << "digraph nfa {\n  rankdir=LR;\n";
    os << "  start [shape=point];\n";
    for (int32_t i = 0; i < graph_->nodes; ++i) {
        bool acc = std::binary_search(accepts_.begin(), accepts_.end(), i);
        os << "  n" << i << " [shape=" << (acc ? "doublecircle" : "circle") << "];\n";
    }
    os << "  start -> n" << start_ << ";\n";
    for (const auto& e : graph_->edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\""
           << (e.letter == silent_label ? std::string("eps") : alphabet_.letter(e.letter))
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace kleisli
