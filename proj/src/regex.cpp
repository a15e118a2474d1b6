#include "freeword/regex.hpp"

#include <cctype>

#include "freeword/errors.hpp"

namespace freeword {

RegexPtr RegexNode::literal(int symbol) {
    auto node = std::make_shared<RegexNode>();
    node->kind = Kind::Literal;
    node->symbol = symbol;
    return node;
}

static RegexPtr make_nary(RegexNode::Kind kind, std::vector<RegexPtr> children) {
    if (children.size() == 1) return children.front();
    auto node = std::make_shared<RegexNode>();
    node->kind = kind;
    node->children = std::move(children);
    return node;
}

RegexPtr RegexNode::concat(std::vector<RegexPtr> children) {
    return make_nary(Kind::Concat, std::move(children));
}

RegexPtr RegexNode::alternation(std::vector<RegexPtr> children) {
    return make_nary(Kind::Union, std::move(children));
}

static RegexPtr make_unary(RegexNode::Kind kind, RegexPtr child) {
    auto node = std::make_shared<RegexNode>();
    node->kind = kind;
    node->children = {std::move(child)};
    return node;
}

RegexPtr RegexNode::star(RegexPtr child) { return make_unary(Kind::Star, std::move(child)); }
RegexPtr RegexNode::plus(RegexPtr child) { return make_unary(Kind::Plus, std::move(child)); }
RegexPtr RegexNode::optional(RegexPtr child) {
    return make_unary(Kind::Optional, std::move(child));
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const SymbolTable& symbols)
        : text_(text), symbols_(symbols) {}

    RegexPtr parse() {
        RegexPtr expr = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
        return expr;
    }

private:
    RegexPtr parse_expr() {
        std::vector<RegexPtr> branches;
        branches.push_back(parse_term());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                branches.push_back(parse_term());
            } else {
                break;
            }
        }
        return RegexNode::alternation(std::move(branches));
    }

    RegexPtr parse_term() {
        std::vector<RegexPtr> factors;
        factors.push_back(parse_factor());
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            const char c = text_[pos_];
            if (c == '+' || c == ')') break;
            factors.push_back(parse_factor());
        }
        return RegexNode::concat(std::move(factors));
    }

    RegexPtr parse_factor() {
        RegexPtr atom = parse_atom();
        skip_ws();
        if (pos_ < text_.size()) {
            if (text_[pos_] == '*') {
                ++pos_;
                return RegexNode::star(std::move(atom));
            }
            if (text_[pos_] == '?') {
                ++pos_;
                return RegexNode::optional(std::move(atom));
            }
        }
        return atom;
    }

    RegexPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("expected symbol or '('", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RegexPtr inner = parse_expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '\'') return parse_quoted_symbol();
        if (c == ')' || c == '*' || c == '?' || c == '+')
            throw SyntaxError("expected symbol or '('", pos_);
        ++pos_;
        return resolve(std::string(1, c), pos_ - 1);
    }

    RegexPtr parse_quoted_symbol() {
        const std::size_t start = pos_;
        ++pos_;  // opening quote
        std::string name;
        while (pos_ < text_.size() && text_[pos_] != '\'') name.push_back(text_[pos_++]);
        if (pos_ >= text_.size()) throw SyntaxError("unterminated quoted symbol", start);
        ++pos_;  // closing quote
        if (name.empty()) throw SyntaxError("empty quoted symbol", start);
        return resolve(name, start);
    }

    RegexPtr resolve(const std::string& name, std::size_t at) {
        if (is_reserved_symbol(name)) throw ReservedSymbolError(name);
        const int id = symbols_.id(name);
        if (id < 0)
            throw SyntaxError("unknown symbol '" + name + "'", at);
        return RegexNode::literal(id);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    const SymbolTable& symbols_;
    std::size_t pos_ = 0;
};

}  // namespace

RegexPtr parse_regex(std::string_view text, const SymbolTable& symbols) {
    return Parser(text, symbols).parse();
}

bool accepts_null_word(const RegexPtr& node) {
    switch (node->kind) {
        case RegexNode::Kind::Literal:
            return false;
        case RegexNode::Kind::Concat: {
            for (const auto& child : node->children)
                if (!accepts_null_word(child)) return false;
            return true;
        }
        case RegexNode::Kind::Union: {
            for (const auto& child : node->children)
                if (accepts_null_word(child)) return true;
            return false;
        }
        case RegexNode::Kind::Star:
        case RegexNode::Kind::Optional:
            return true;
        case RegexNode::Kind::Plus:
            return accepts_null_word(node->children.front());
    }
    return false;
}

std::string regex_to_string(const RegexPtr& node, const SymbolTable& symbols) {
    switch (node->kind) {
        case RegexNode::Kind::Literal: {
            const std::string& name = symbols.name(node->symbol);
            return name.size() == 1 ? name : "'" + name + "'";
        }
        case RegexNode::Kind::Concat: {
            std::string out;
            for (const auto& child : node->children) {
                const bool paren = child->kind == RegexNode::Kind::Union;
                out += paren ? "(" + regex_to_string(child, symbols) + ")"
                             : regex_to_string(child, symbols);
            }
            return out;
        }
        case RegexNode::Kind::Union: {
            std::string out;
            for (std::size_t i = 0; i < node->children.size(); ++i) {
                if (i) out += "+";
                out += regex_to_string(node->children[i], symbols);
            }
            return out;
        }
        case RegexNode::Kind::Star:
        case RegexNode::Kind::Plus:
        case RegexNode::Kind::Optional: {
            const RegexPtr& child = node->children.front();
            const bool paren = child->kind != RegexNode::Kind::Literal;
            std::string inner = paren ? "(" + regex_to_string(child, symbols) + ")"
                                      : regex_to_string(child, symbols);
            // '+' is union in this syntax, so one-or-more prints as xx*.
            if (node->kind == RegexNode::Kind::Plus) return inner + inner + "*";
            return inner + (node->kind == RegexNode::Kind::Star ? "*" : "?");
        }
    }
    return {};
}

}  // namespace freeword
