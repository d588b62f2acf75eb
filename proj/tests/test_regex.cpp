#include <catch2/catch_amalgamated.hpp>

#include "crpq/nfa.hpp"
#include "crpq/regex.hpp"
#include "support/regex_oracle.hpp"

using namespace crpq;
using namespace crpq::testsupport;

namespace {
const Symbol A = Symbol::data("a");
const Symbol B = Symbol::data("b");

std::vector<Symbol> word(const std::string& s) {
    std::vector<Symbol> w;
    for (char c : s) w.push_back(Symbol::data(std::string(1, c)));
    return w;
}
} // namespace

TEST_CASE("parse_regex shapes") {
    Regex r = parse_regex("a*aa");
    REQUIRE(r->op == RegexOp::Concat);
    REQUIRE(r->left->op == RegexOp::Concat);
    REQUIRE(r->left->left->op == RegexOp::Star);
    REQUIRE(r->left->left->left->sym == A);
    REQUIRE(r->left->right->sym == A);
    REQUIRE(r->right->sym == A);

    REQUIRE(parse_regex("%")->op == RegexOp::Epsilon);

    Regex g = parse_regex("(a|b)*c");
    REQUIRE(g->op == RegexOp::Concat);
    REQUIRE(g->left->op == RegexOp::Star);
    REQUIRE(g->left->left->op == RegexOp::Union);
    REQUIRE(g->right->sym == Symbol::data("c"));
}

TEST_CASE("parse_regex multi-char labels and reversed symbols") {
    Regex r = parse_regex("<knows>~a");
    REQUIRE(r->op == RegexOp::Concat);
    REQUIRE(r->left->sym == Symbol::data("knows"));
    REQUIRE(r->right->sym == Symbol::data("a", Orientation::Reversed));

    REQUIRE(parse_regex("~<ab>")->sym == Symbol::data("ab", Orientation::Reversed));
}

TEST_CASE("parse_regex errors") {
    REQUIRE_THROWS_AS(parse_regex(""), ParseError);
    REQUIRE_THROWS_AS(parse_regex("(a"), ParseError);
    REQUIRE_THROWS_AS(parse_regex("a)"), ParseError);
    REQUIRE_THROWS_AS(parse_regex("~"), ParseError);
    REQUIRE_THROWS_AS(parse_regex("<>"), ParseError);
    REQUIRE_THROWS_AS(parse_regex("a|"), ParseError);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(7);
    std::vector<Symbol> alpha{A, B, Symbol::data("ab"), Symbol::data("b", Orientation::Reversed)};
    for (int i = 0; i < 200; ++i) {
        Regex r = random_regex(rng, alpha, 4);
        Regex back = parse_regex(print_regex(r));
        REQUIRE(regex_equal(r, back));
    }
}

TEST_CASE("regex_reverse basics") {
    Regex r = parse_regex("ab");
    REQUIRE(regex_matches(regex_reverse(r), word("ba")));
    REQUIRE_FALSE(regex_matches(regex_reverse(r), word("ab")));
    REQUIRE(regex_reverse(rx_epsilon())->op == RegexOp::Epsilon);

    Regex s = parse_regex("a*b");
    auto words = all_words({A, B}, 4);
    for (const auto& w : words) {
        std::vector<Symbol> rev(w.rbegin(), w.rend());
        REQUIRE(regex_matches(regex_reverse(s), w) == regex_matches(s, rev));
    }
}

TEST_CASE("regex_hat basics") {
    Regex r = regex_hat(parse_regex("ab"));
    REQUIRE(r->left->sym == Symbol::data("a", Orientation::Reversed));
    REQUIRE(r->right->sym == Symbol::data("b", Orientation::Reversed));

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Regex q = random_regex(rng, {A, B}, 4);
        REQUIRE(regex_equal(regex_hat(regex_hat(q)), q));
    }

    REQUIRE(regex_hat(parse_regex("b"))->sym == Symbol::data("b", Orientation::Reversed));
    REQUIRE_THROWS_AS(regex_hat(rx_sym(Symbol::loop("X"))), InvalidArgumentError);
}

TEST_CASE("to_nfa basics") {
    Nfa eps = to_nfa(rx_epsilon());
    REQUIRE(nfa_accepts(eps, {}));
    REQUIRE_FALSE(nfa_accepts(eps, word("a")));

    Nfa n = to_nfa(parse_regex("a*aa"));
    REQUIRE(nfa_accepts(n, word("aa")));
    REQUIRE(nfa_accepts(n, word("aaa")));
    REQUIRE(nfa_accepts(n, word("aaaa")));
    REQUIRE_FALSE(nfa_accepts(n, word("a")));
    REQUIRE_FALSE(nfa_accepts(n, {}));

    REQUIRE(nfa_accepts(to_nfa(parse_regex("a*")), {}));
    REQUIRE_FALSE(nfa_accepts(to_nfa(parse_regex("a*")), word("b")));
}

TEST_CASE("NFA agrees with membership oracle on random regexes") {
    std::mt19937 rng(23);
    auto words = all_words({A, B}, 5);
    for (int i = 0; i < 50; ++i) {
        Regex r = random_regex(rng, {A, B}, 4);
        Nfa n = to_nfa(r);
        for (const auto& w : words) REQUIRE(nfa_accepts(n, w) == regex_matches(r, w));
    }
}

TEST_CASE("NFA state count stays linear in regex size") {
    // a* repeated: Thompson gives O(size) states even after closure folding
    Regex r = parse_regex("a");
    for (int i = 0; i < 20; ++i) r = rx_concat(r, rx_star(rx_sym(B)));
    Nfa n = to_nfa(r);
    REQUIRE(n.stateCount <= 4 * (2 * 20 + 1));
}
