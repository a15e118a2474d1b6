#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "freeword/symbols.hpp"

namespace freeword {

// Regular-expression AST over a symbol table. `+` in the surface syntax is
// union; one-or-more is available as a node kind for programmatic callers.
struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
    enum class Kind { Literal, Concat, Union, Star, Plus, Optional };

    Kind kind;
    int symbol = -1;                 // Literal
    std::vector<RegexPtr> children;  // Concat/Union: 2+; Star/Plus/Optional: 1

    static RegexPtr literal(int symbol);
    static RegexPtr concat(std::vector<RegexPtr> children);
    static RegexPtr alternation(std::vector<RegexPtr> children);
    static RegexPtr star(RegexPtr child);
    static RegexPtr plus(RegexPtr child);
    static RegexPtr optional(RegexPtr child);
};

// Grammar:
//   expr   := term ('+' term)*
//   term   := factor+
//   factor := atom ('*' | '?')?
//   atom   := SYMBOL | '(' expr ')'
// Symbols are single non-metacharacter characters, or names in single quotes.
// Whitespace between tokens is ignored.
RegexPtr parse_regex(std::string_view text, const SymbolTable& symbols);

// True if the regex accepts the null word (needed to report its removal).
bool accepts_null_word(const RegexPtr& node);

std::string regex_to_string(const RegexPtr& node, const SymbolTable& symbols);

}  // namespace freeword
