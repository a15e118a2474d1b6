#include "freeword/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

#include "freeword/errors.hpp"

namespace freeword {

bool WeightedDfa::accepts(const std::vector<int>& word) const {
    if (word.empty()) return false;  // null word is excluded from L
    const RunResult r = run(word);
    return r.ok && accepting[static_cast<std::size_t>(r.final_state)];
}

WeightedDfa::RunResult WeightedDfa::run(const std::vector<int>& word) const {
    int state = initial;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto next = step(state, word[i]);
        if (!next) return {false, static_cast<int>(i), -1};
        state = *next;
    }
    return {true, static_cast<int>(word.size()), state};
}

std::vector<DfaTransition> WeightedDfa::transitions() const {
    std::vector<DfaTransition> out;
    for (int q = 0; q < num_states(); ++q)
        for (const auto& [sym, to] : delta[static_cast<std::size_t>(q)])
            out.push_back({q, sym, to});
    return out;
}

int WeightedDfa::num_transitions() const {
    int n = 0;
    for (const auto& row : delta) n += static_cast<int>(row.size());
    return n;
}

namespace {

// ---------------------------------------------------------------- Thompson

struct Nfa {
    // state -> list of (symbol or -1 for epsilon, target)
    std::vector<std::vector<std::pair<int, int>>> edges;
    int start = 0;
    int accept = 0;

    int add_state() {
        edges.emplace_back();
        return static_cast<int>(edges.size()) - 1;
    }
    void add_edge(int from, int sym, int to) {
        edges[static_cast<std::size_t>(from)].push_back({sym, to});
    }
};

struct Fragment {
    int start;
    int accept;
};

Fragment build_thompson(Nfa& nfa, const RegexPtr& node) {
    switch (node->kind) {
        case RegexNode::Kind::Literal: {
            const int s = nfa.add_state();
            const int a = nfa.add_state();
            nfa.add_edge(s, node->symbol, a);
            return {s, a};
        }
        case RegexNode::Kind::Concat: {
            Fragment acc = build_thompson(nfa, node->children.front());
            for (std::size_t i = 1; i < node->children.size(); ++i) {
                Fragment next = build_thompson(nfa, node->children[i]);
                nfa.add_edge(acc.accept, -1, next.start);
                acc.accept = next.accept;
            }
            return acc;
        }
        case RegexNode::Kind::Union: {
            const int s = nfa.add_state();
            const int a = nfa.add_state();
            for (const auto& child : node->children) {
                Fragment f = build_thompson(nfa, child);
                nfa.add_edge(s, -1, f.start);
                nfa.add_edge(f.accept, -1, a);
            }
            return {s, a};
        }
        case RegexNode::Kind::Star: {
            Fragment f = build_thompson(nfa, node->children.front());
            const int s = nfa.add_state();
            const int a = nfa.add_state();
            nfa.add_edge(s, -1, f.start);
            nfa.add_edge(s, -1, a);
            nfa.add_edge(f.accept, -1, f.start);
            nfa.add_edge(f.accept, -1, a);
            return {s, a};
        }
        case RegexNode::Kind::Plus: {
            Fragment f = build_thompson(nfa, node->children.front());
            const int s = nfa.add_state();
            const int a = nfa.add_state();
            nfa.add_edge(s, -1, f.start);
            nfa.add_edge(f.accept, -1, f.start);
            nfa.add_edge(f.accept, -1, a);
            return {s, a};
        }
        case RegexNode::Kind::Optional: {
            Fragment f = build_thompson(nfa, node->children.front());
            const int s = nfa.add_state();
            const int a = nfa.add_state();
            nfa.add_edge(s, -1, f.start);
            nfa.add_edge(s, -1, a);
            nfa.add_edge(f.accept, -1, a);
            return {s, a};
        }
    }
    throw DomainError("unknown regex node kind");
}

std::set<int> epsilon_closure(const Nfa& nfa, const std::set<int>& states) {
    std::set<int> closure = states;
    std::deque<int> todo(states.begin(), states.end());
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (const auto& [sym, to] : nfa.edges[static_cast<std::size_t>(q)]) {
            if (sym == -1 && closure.insert(to).second) todo.push_back(to);
        }
    }
    return closure;
}

// ------------------------------------------------------ subset construction

struct RawDfa {
    int num_states = 0;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<std::map<int, int>> delta;
};

RawDfa subset_construction(const Nfa& nfa, int num_symbols) {
    RawDfa dfa;
    std::map<std::set<int>, int> index;
    std::vector<std::set<int>> subsets;

    auto intern = [&](const std::set<int>& subset) {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        const int id = dfa.num_states++;
        index.emplace(subset, id);
        subsets.push_back(subset);
        dfa.accepting.push_back(subset.count(nfa.accept) > 0);
        dfa.delta.emplace_back();
        return id;
    };

    const int start = intern(epsilon_closure(nfa, {nfa.start}));
    dfa.initial = start;
    for (int q = 0; q < dfa.num_states; ++q) {
        const std::set<int> subset = subsets[static_cast<std::size_t>(q)];
        for (int sym = 0; sym < num_symbols; ++sym) {
            std::set<int> moved;
            for (int s : subset)
                for (const auto& [esym, to] : nfa.edges[static_cast<std::size_t>(s)])
                    if (esym == sym) moved.insert(to);
            if (moved.empty()) continue;  // partial transition map
            const int target = intern(epsilon_closure(nfa, moved));
            dfa.delta[static_cast<std::size_t>(q)][sym] = target;
        }
    }
    return dfa;
}

// ------------------------------------------------------------ minimization

// Moore partition refinement with an implicit sink class for undefined
// transitions.
RawDfa moore_minimize(const RawDfa& dfa, int num_symbols) {
    const int n = dfa.num_states;
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) cls[static_cast<std::size_t>(q)] = dfa.accepting[static_cast<std::size_t>(q)] ? 1 : 0;

    int num_classes = 2;
    while (true) {
        // signature: own class + per-symbol class of target (-1 = undefined)
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(num_symbols) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int sym = 0; sym < num_symbols; ++sym) {
                auto it = dfa.delta[static_cast<std::size_t>(q)].find(sym);
                sig.push_back(it == dfa.delta[static_cast<std::size_t>(q)].end()
                                  ? -1
                                  : cls[static_cast<std::size_t>(it->second)]);
            }
            auto [pos, inserted] = sig_index.emplace(sig, static_cast<int>(sig_index.size()));
            (void)inserted;
            next_cls[static_cast<std::size_t>(q)] = pos->second;
        }
        const int next_count = static_cast<int>(sig_index.size());
        if (next_count == num_classes) {
            cls = next_cls;
            break;
        }
        cls = next_cls;
        num_classes = next_count;
    }

    RawDfa out;
    out.num_states = num_classes;
    out.accepting.assign(static_cast<std::size_t>(num_classes), false);
    out.delta.assign(static_cast<std::size_t>(num_classes), {});
    for (int q = 0; q < n; ++q) {
        const int c = cls[static_cast<std::size_t>(q)];
        if (dfa.accepting[static_cast<std::size_t>(q)]) out.accepting[static_cast<std::size_t>(c)] = true;
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
            out.delta[static_cast<std::size_t>(c)][sym] = cls[static_cast<std::size_t>(to)];
    }
    out.initial = cls[static_cast<std::size_t>(dfa.initial)];
    return out;
}

// ------------------------------------------------- trim and canonical order

// Keeps states reachable from the initial state and co-reachable to an
// accepting state, then renames in BFS order (symbols in name order).
RawDfa trim_and_order(const RawDfa& dfa, const std::vector<int>& sym_order,
                      bool* language_empty) {
    const int n = dfa.num_states;
    std::vector<bool> reachable(static_cast<std::size_t>(n), false);
    {
        std::deque<int> todo{dfa.initial};
        reachable[static_cast<std::size_t>(dfa.initial)] = true;
        while (!todo.empty()) {
            const int q = todo.front();
            todo.pop_front();
            for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
                if (!reachable[static_cast<std::size_t>(to)]) {
                    reachable[static_cast<std::size_t>(to)] = true;
                    todo.push_back(to);
                }
        }
    }
    std::vector<bool> coreachable(static_cast<std::size_t>(n), false);
    {
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q)
            for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
                rev[static_cast<std::size_t>(to)].push_back(q);
        std::deque<int> todo;
        for (int q = 0; q < n; ++q)
            if (dfa.accepting[static_cast<std::size_t>(q)]) {
                coreachable[static_cast<std::size_t>(q)] = true;
                todo.push_back(q);
            }
        while (!todo.empty()) {
            const int q = todo.front();
            todo.pop_front();
            for (int p : rev[static_cast<std::size_t>(q)])
                if (!coreachable[static_cast<std::size_t>(p)]) {
                    coreachable[static_cast<std::size_t>(p)] = true;
                    todo.push_back(p);
                }
        }
    }

    std::vector<bool> keep(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        keep[static_cast<std::size_t>(q)] =
            reachable[static_cast<std::size_t>(q)] && coreachable[static_cast<std::size_t>(q)];

    if (!keep[static_cast<std::size_t>(dfa.initial)]) {
        *language_empty = true;
        return {};
    }
    *language_empty = false;

    // BFS renumbering from the initial state, exploring symbols in name order.
    std::vector<int> renumber(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    std::deque<int> todo{dfa.initial};
    renumber[static_cast<std::size_t>(dfa.initial)] = 0;
    order.push_back(dfa.initial);
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (int sym : sym_order) {
            auto it = dfa.delta[static_cast<std::size_t>(q)].find(sym);
            if (it == dfa.delta[static_cast<std::size_t>(q)].end()) continue;
            const int to = it->second;
            if (!keep[static_cast<std::size_t>(to)]) continue;
            if (renumber[static_cast<std::size_t>(to)] == -1) {
                renumber[static_cast<std::size_t>(to)] = static_cast<int>(order.size());
                order.push_back(to);
                todo.push_back(to);
            }
        }
    }

    RawDfa out;
    out.num_states = static_cast<int>(order.size());
    out.initial = 0;
    out.accepting.assign(static_cast<std::size_t>(out.num_states), false);
    out.delta.assign(static_cast<std::size_t>(out.num_states), {});
    for (int new_q = 0; new_q < out.num_states; ++new_q) {
        const int old_q = order[static_cast<std::size_t>(new_q)];
        out.accepting[static_cast<std::size_t>(new_q)] = dfa.accepting[static_cast<std::size_t>(old_q)];
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(old_q)]) {
            if (!keep[static_cast<std::size_t>(to)]) continue;
            out.delta[static_cast<std::size_t>(new_q)][sym] = renumber[static_cast<std::size_t>(to)];
        }
    }
    return out;
}

WeightedDfa finish(const RawDfa& raw, const SymbolTable& symbols) {
    WeightedDfa dfa;
    dfa.symbols = symbols;
    dfa.initial = raw.initial;
    dfa.accepting = raw.accepting;
    dfa.delta = raw.delta;
    dfa.state_names.reserve(static_cast<std::size_t>(raw.num_states));
    for (int q = 0; q < raw.num_states; ++q) dfa.state_names.push_back("q" + std::to_string(q));
    return dfa;
}

}  // namespace

CompileResult compile(const RegexPtr& ast, const SymbolTable& symbols) {
    CompileResult result;

    Nfa nfa;
    const Fragment frag = build_thompson(nfa, ast);
    nfa.start = frag.start;
    nfa.accept = frag.accept;

    RawDfa subset = subset_construction(nfa, symbols.size());

    if (accepts_null_word(ast)) {
        result.warnings.push_back("null word removed from the language");
        // Acceptance requires a nonempty run, so the automaton itself needs
        // no surgery; but the language must not be exactly {null word}.
    }
    // Null-word-only check: no accepting state reachable by a nonempty run.
    subset.accepting[static_cast<std::size_t>(subset.initial)] =
        subset.accepting[static_cast<std::size_t>(subset.initial)];

    RawDfa minimal = moore_minimize(subset, symbols.size());
    bool language_empty = false;
    RawDfa trimmed = trim_and_order(minimal, symbols.ids_by_name(), &language_empty);
    if (language_empty) throw EmptyLanguageError("regex denotes the empty language");

    WeightedDfa dfa = finish(trimmed, symbols);

    // A language of exactly {null word} trims to a single accepting initial
    // state with no transitions.
    if (dfa.num_transitions() == 0)
        throw EmptyLanguageError("regex accepts only the null word");

    result.dfa = std::move(dfa);
    return result;
}

WeightedDfa minimize(const WeightedDfa& dfa) {
    RawDfa raw;
    raw.num_states = dfa.num_states();
    raw.initial = dfa.initial;
    raw.accepting = dfa.accepting;
    raw.delta = dfa.delta;
    RawDfa minimal = moore_minimize(raw, dfa.symbols.size());
    bool language_empty = false;
    RawDfa trimmed = trim_and_order(minimal, dfa.symbols.ids_by_name(), &language_empty);
    if (language_empty) throw EmptyLanguageError("automaton accepts the empty language");
    return finish(trimmed, dfa.symbols);
}

std::vector<Violation> validate(const WeightedDfa& dfa) {
    std::vector<Violation> out;
    const int n = dfa.num_states();

    for (int sym = 0; sym < dfa.symbols.size(); ++sym) {
        if (is_reserved_symbol(dfa.symbols.name(sym)))
            out.push_back({Violation::Kind::ReservedSymbol,
                           "symbol '" + dfa.symbols.name(sym) + "' uses a reserved spelling"});
        if (!std::isfinite(dfa.symbols.weight(sym)))
            out.push_back({Violation::Kind::NonFiniteWeight,
                           "symbol '" + dfa.symbols.name(sym) + "' has a non-finite weight"});
    }

    if (n == 0 || dfa.initial < 0 || dfa.initial >= n) {
        out.push_back({Violation::Kind::BadInitial, "initial state is out of range"});
        return out;
    }

    for (int q = 0; q < n; ++q)
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
            if (sym < 0 || sym >= dfa.symbols.size() || to < 0 || to >= n)
                out.push_back({Violation::Kind::BadTransition,
                               "transition from " + dfa.state_names[static_cast<std::size_t>(q)] +
                                   " references an unknown symbol or state"});

    // Reachability from initial.
    std::vector<bool> reachable(static_cast<std::size_t>(n), false);
    std::deque<int> todo{dfa.initial};
    reachable[static_cast<std::size_t>(dfa.initial)] = true;
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
            if (to >= 0 && to < n && !reachable[static_cast<std::size_t>(to)]) {
                reachable[static_cast<std::size_t>(to)] = true;
                todo.push_back(to);
            }
    }
    for (int q = 0; q < n; ++q)
        if (!reachable[static_cast<std::size_t>(q)])
            out.push_back({Violation::Kind::Unreachable,
                           "state " + dfa.state_names[static_cast<std::size_t>(q)] +
                               " is unreachable from the initial state"});

    // Co-reachability to an accepting state.
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
            if (to >= 0 && to < n) rev[static_cast<std::size_t>(to)].push_back(q);
    std::vector<bool> coreachable(static_cast<std::size_t>(n), false);
    for (int q = 0; q < n; ++q)
        if (dfa.accepting[static_cast<std::size_t>(q)]) {
            coreachable[static_cast<std::size_t>(q)] = true;
            todo.push_back(q);
        }
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (int p : rev[static_cast<std::size_t>(q)])
            if (!coreachable[static_cast<std::size_t>(p)]) {
                coreachable[static_cast<std::size_t>(p)] = true;
                todo.push_back(p);
            }
    }
    for (int q = 0; q < n; ++q)
        if (!coreachable[static_cast<std::size_t>(q)])
            out.push_back({Violation::Kind::NotCoReachable,
                           "state " + dfa.state_names[static_cast<std::size_t>(q)] +
                               " cannot reach an accepting state"});

    // Nonempty language: some accepting state reachable by a run of length
    // >= 1 (an accepting non-initial reachable state, or a reachable
    // transition into an accepting state).
    bool nonempty = false;
    for (int q = 0; q < n && !nonempty; ++q) {
        if (!reachable[static_cast<std::size_t>(q)]) continue;
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)])
            if (to >= 0 && to < n && dfa.accepting[static_cast<std::size_t>(to)]) {
                nonempty = true;
                break;
            }
    }
    if (!nonempty)
        out.push_back({Violation::Kind::EmptyLanguage,
                       "no nonempty word is accepted"});

    return out;
}

StructureFlags structure_flags(const WeightedDfa& dfa) {
    const int n = dfa.num_states();
    // Kosaraju SCC count via double BFS from every unvisited node would be
    // overkill; a simple check: strong connectivity <=> every node reachable
    // from node 0 and node 0 reachable from every node.
    auto reach = [&](bool forward) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q)
            for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)]) {
                if (forward)
                    adj[static_cast<std::size_t>(q)].push_back(to);
                else
                    adj[static_cast<std::size_t>(to)].push_back(q);
            }
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::deque<int> todo{0};
        seen[0] = true;
        while (!todo.empty()) {
            const int q = todo.front();
            todo.pop_front();
            for (int to : adj[static_cast<std::size_t>(q)])
                if (!seen[static_cast<std::size_t>(to)]) {
                    seen[static_cast<std::size_t>(to)] = true;
                    todo.push_back(to);
                }
        }
        return seen;
    };

    const auto fwd = reach(true);
    const auto bwd = reach(false);
    bool strongly_connected = n > 0;
    for (int q = 0; q < n; ++q)
        if (!fwd[static_cast<std::size_t>(q)] || !bwd[static_cast<std::size_t>(q)])
            strongly_connected = false;

    if (!strongly_connected) return {false, false};

    // gcd of cycle lengths: BFS levels; every edge (u,v) contributes
    // gcd(level[u] + 1 - level[v]).
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::deque<int> todo{0};
    level[0] = 0;
    long long g = 0;
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)]) {
            if (level[static_cast<std::size_t>(to)] == -1) {
                level[static_cast<std::size_t>(to)] = level[static_cast<std::size_t>(q)] + 1;
                todo.push_back(to);
            } else {
                const long long d =
                    level[static_cast<std::size_t>(q)] + 1 - level[static_cast<std::size_t>(to)];
                g = std::gcd(g, d < 0 ? -d : d);
            }
        }
    }
    // Edges discovered during BFS tree expansion have difference 0 and do not
    // affect the gcd; re-scan all edges now that levels are final.
    for (int q = 0; q < n; ++q)
        for (const auto& [sym, to] : dfa.delta[static_cast<std::size_t>(q)]) {
            const long long d =
                level[static_cast<std::size_t>(q)] + 1 - level[static_cast<std::size_t>(to)];
            g = std::gcd(g, d < 0 ? -d : d);
        }

    return {true, g == 1};
}

}  // namespace freeword
