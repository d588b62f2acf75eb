#ifndef CRPQ_REGEX_HPP
#define CRPQ_REGEX_HPP

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "symbol.hpp"

namespace crpq {

struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

enum class RegexOp { Epsilon, Sym, Concat, Union, Star };

struct RegexNode {
    RegexOp op;
    Symbol sym;           // Sym only
    Regex left, right;    // Concat/Union; Star uses left
};

inline Regex rx_epsilon() {
    return std::make_shared<RegexNode>(RegexNode{RegexOp::Epsilon, {}, nullptr, nullptr});
}
inline Regex rx_sym(Symbol s) {
    return std::make_shared<RegexNode>(RegexNode{RegexOp::Sym, std::move(s), nullptr, nullptr});
}
inline Regex rx_concat(Regex a, Regex b) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexOp::Concat, {}, std::move(a), std::move(b)});
}
inline Regex rx_union(Regex a, Regex b) {
    return std::make_shared<RegexNode>(
        RegexNode{RegexOp::Union, {}, std::move(a), std::move(b)});
}
inline Regex rx_star(Regex a) {
    return std::make_shared<RegexNode>(RegexNode{RegexOp::Star, {}, std::move(a), nullptr});
}

inline bool regex_equal(const Regex& a, const Regex& b) {
    if (a->op != b->op) return false;
    switch (a->op) {
    case RegexOp::Epsilon: return true;
    case RegexOp::Sym: return a->sym == b->sym;
    case RegexOp::Star: return regex_equal(a->left, b->left);
    default: return regex_equal(a->left, b->left) && regex_equal(a->right, b->right);
    }
}

// Grammar (precedence star > concat > union):
//   union   := concat ('|' concat)*
//   concat  := postfix+
//   postfix := primary '*'*
//   primary := '(' union ')' | '%' | '~'? symbol
//   symbol  := [A-Za-z0-9_]  |  '<' [A-Za-z0-9_]+ '>'
// Loop symbols have no surface form; '<__loop_...>' is printer output only.
class RegexParser {
public:
    explicit RegexParser(const std::string& text) : text_(text) {}

    Regex parse() {
        skipWs();
        if (pos_ >= text_.size()) throw ParseError("regex: empty input");
        Regex r = parseUnion();
        skipWs();
        if (pos_ < text_.size())
            throw ParseError("regex: unexpected character '" + std::string(1, text_[pos_]) +
                             "' at position " + std::to_string(pos_));
        return r;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    static bool isWordChar(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool startsPrimary() {
        skipWs();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || c == '%' || c == '~' || c == '<' || isWordChar(c);
    }

    Regex parseUnion() {
        Regex r = parseConcat();
        skipWs();
        while (pos_ < text_.size() && text_[pos_] == '|') {
            ++pos_;
            r = rx_union(r, parseConcat());
            skipWs();
        }
        return r;
    }

    Regex parseConcat() {
        Regex r = parsePostfix();
        while (startsPrimary()) r = rx_concat(r, parsePostfix());
        return r;
    }

    Regex parsePostfix() {
        Regex r = parsePrimary();
        skipWs();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            r = rx_star(r);
            skipWs();
        }
        return r;
    }

    Regex parsePrimary() {
        skipWs();
        if (pos_ >= text_.size()) throw ParseError("regex: unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Regex r = parseUnion();
            skipWs();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("regex: missing ')' at position " + std::to_string(pos_));
            ++pos_;
            return r;
        }
        if (c == '%') {
            ++pos_;
            return rx_epsilon();
        }
        bool reversed = false;
        if (c == '~') {
            ++pos_;
            reversed = true;
            skipWs();
            if (pos_ >= text_.size())
                throw ParseError("regex: '~' with no symbol at position " + std::to_string(pos_));
            c = text_[pos_];
        }
        std::string label;
        if (c == '<') {
            ++pos_;
            while (pos_ < text_.size() && isWordChar(text_[pos_])) label += text_[pos_++];
            if (label.empty() || pos_ >= text_.size() || text_[pos_] != '>')
                throw ParseError("regex: malformed <label> at position " + std::to_string(pos_));
            ++pos_;
        } else if (isWordChar(c)) {
            label = std::string(1, c);
            ++pos_;
        } else {
            throw ParseError("regex: unexpected character '" + std::string(1, c) +
                             "' at position " + std::to_string(pos_));
        }
        return rx_sym(Symbol::data(std::move(label),
                                   reversed ? Orientation::Reversed : Orientation::Forward));
    }
};

inline Regex parse_regex(const std::string& text) { return RegexParser(text).parse(); }

namespace detail {
// prec: 0 union, 1 concat, 2 atom-like
inline void print_regex_rec(const Regex& r, int parentPrec, std::string& out) {
    switch (r->op) {
    case RegexOp::Epsilon:
        out += '%';
        return;
    case RegexOp::Sym:
        out += render_symbol(r->sym);
        return;
    case RegexOp::Star:
        print_regex_rec(r->left, 2, out);
        out += '*';
        return;
    case RegexOp::Concat: {
        bool paren = parentPrec > 1;
        if (paren) out += '(';
        print_regex_rec(r->left, 1, out);
        print_regex_rec(r->right, 2, out); // parser is left-associative
        if (paren) out += ')';
        return;
    }
    case RegexOp::Union: {
        bool paren = parentPrec > 0;
        if (paren) out += '(';
        print_regex_rec(r->left, 0, out);
        out += '|';
        print_regex_rec(r->right, 1, out); // parser is left-associative
        if (paren) out += ')';
        return;
    }
    }
}
} // namespace detail

inline std::string print_regex(const Regex& r) {
    std::string out;
    detail::print_regex_rec(r, 0, out);
    return out;
}

// L(result) = reversals of L(r).
inline Regex regex_reverse(const Regex& r) {
    switch (r->op) {
    case RegexOp::Epsilon:
    case RegexOp::Sym: return r;
    case RegexOp::Star: return rx_star(regex_reverse(r->left));
    case RegexOp::Union: return rx_union(regex_reverse(r->left), regex_reverse(r->right));
    case RegexOp::Concat: return rx_concat(regex_reverse(r->right), regex_reverse(r->left));
    }
    return r; // unreachable
}

// Flip the orientation of every symbol. Loop symbols are rejected.
inline Regex regex_hat(const Regex& r) {
    switch (r->op) {
    case RegexOp::Epsilon: return r;
    case RegexOp::Sym:
        if (r->sym.isLoop())
            throw InvalidArgumentError("regex_hat: loop symbol '" + r->sym.label + "'");
        return rx_sym(r->sym.hat());
    case RegexOp::Star: return rx_star(regex_hat(r->left));
    case RegexOp::Union: return rx_union(regex_hat(r->left), regex_hat(r->right));
    case RegexOp::Concat: return rx_concat(regex_hat(r->left), regex_hat(r->right));
    }
    return r; // unreachable
}

inline bool regex_contains_loop(const Regex& r) {
    switch (r->op) {
    case RegexOp::Epsilon: return false;
    case RegexOp::Sym: return r->sym.isLoop();
    case RegexOp::Star: return regex_contains_loop(r->left);
    default: return regex_contains_loop(r->left) || regex_contains_loop(r->right);
    }
}

inline void regex_symbols(const Regex& r, std::vector<Symbol>& out) {
    switch (r->op) {
    case RegexOp::Epsilon: return;
    case RegexOp::Sym: out.push_back(r->sym); return;
    case RegexOp::Star: regex_symbols(r->left, out); return;
    default:
        regex_symbols(r->left, out);
        regex_symbols(r->right, out);
    }
}

} // namespace crpq

#endif
