#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freeword/regex.hpp"
#include "freeword/symbols.hpp"

namespace freeword {

struct DfaTransition {
    int from;
    int sym;
    int to;
};

// Weighted deterministic finite automaton. States are dense integers in BFS
// order from the initial state (symbols in name order), which makes minimal
// automata byte-identical across runs.
//
// The null word is never part of the language: acceptance requires a run of
// length >= 1 ending in an accepting state. The initial state may still be
// marked accepting (prefix-closed languages), which only affects runs that
// return to it.
struct WeightedDfa {
    SymbolTable symbols;
    std::vector<std::string> state_names;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<std::map<int, int>> delta;  // per state: symbol id -> target

    int num_states() const { return static_cast<int>(state_names.size()); }

    std::optional<int> step(int state, int sym) const {
        const auto& row = delta[static_cast<std::size_t>(state)];
        auto it = row.find(sym);
        if (it == row.end()) return std::nullopt;
        return it->second;
    }

    bool accepts(const std::vector<int>& word) const;

    // Runs the word; returns the failing position if some transition is
    // undefined, or num symbols consumed (== word length) on success.
    struct RunResult {
        bool ok;
        int position;     // first undefined-transition position when !ok
        int final_state;  // valid when ok
    };
    RunResult run(const std::vector<int>& word) const;

    std::vector<DfaTransition> transitions() const;
    int num_transitions() const;
};

struct CompileResult {
    WeightedDfa dfa;
    std::vector<std::string> warnings;
};

// Thompson construction -> subset construction -> Moore minimization -> trim
// -> BFS renaming. The resulting DFA is minimal and cleaned; if the regex
// accepts the null word it is dropped with a warning.
CompileResult compile(const RegexPtr& ast, const SymbolTable& symbols);

struct Violation {
    enum class Kind {
        Unreachable,
        NotCoReachable,
        EmptyLanguage,
        ReservedSymbol,
        NonFiniteWeight,
        BadInitial,
        BadTransition,
    };
    Kind kind;
    std::string detail;
};

std::vector<Violation> validate(const WeightedDfa& dfa);

struct StructureFlags {
    bool strongly_connected;
    bool aperiodic;
};

// Strong connectivity by SCC decomposition; aperiodicity as gcd 1 of cycle
// lengths, computed from BFS level differences. A graph that is not strongly
// connected reports aperiodic = false.
StructureFlags structure_flags(const WeightedDfa& dfa);

// Re-minimizes an already-built DFA (used by idempotence checks).
WeightedDfa minimize(const WeightedDfa& dfa);

}  // namespace freeword
