#ifndef CRPQ_NFA_HPP
#define CRPQ_NFA_HPP

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "regex.hpp"
#include "symbol.hpp"

namespace crpq {

// Epsilon-free NFA. States are dense ints; transitions are indexed by symbol
// in both directions so product-graph searches can walk either way.
struct Nfa {
    int stateCount = 0;
    int start = 0;
    std::vector<bool> accepting;
    // per state: symbol -> successor states / predecessor states
    std::vector<std::unordered_map<Symbol, std::vector<int>, SymbolHash>> next;
    std::vector<std::unordered_map<Symbol, std::vector<int>, SymbolHash>> prev;

    bool anyAccepting() const {
        for (bool b : accepting)
            if (b) return true;
        return false;
    }
};

namespace detail {

// Thompson construction with epsilon edges; removed before returning.
struct ThompsonBuilder {
    struct Frag { int in, out; };
    std::vector<std::vector<int>> eps;
    std::vector<std::vector<std::pair<Symbol, int>>> labeled;

    int newState() {
        eps.emplace_back();
        labeled.emplace_back();
        return static_cast<int>(eps.size()) - 1;
    }

    Frag build(const Regex& r) {
        switch (r->op) {
        case RegexOp::Epsilon: {
            int s = newState(), t = newState();
            eps[s].push_back(t);
            return {s, t};
        }
        case RegexOp::Sym: {
            int s = newState(), t = newState();
            labeled[s].emplace_back(r->sym, t);
            return {s, t};
        }
        case RegexOp::Concat: {
            Frag a = build(r->left), b = build(r->right);
            eps[a.out].push_back(b.in);
            return {a.in, b.out};
        }
        case RegexOp::Union: {
            Frag a = build(r->left), b = build(r->right);
            int s = newState(), t = newState();
            eps[s].push_back(a.in);
            eps[s].push_back(b.in);
            eps[a.out].push_back(t);
            eps[b.out].push_back(t);
            return {s, t};
        }
        case RegexOp::Star: {
            Frag a = build(r->left);
            int s = newState(), t = newState();
            eps[s].push_back(a.in);
            eps[s].push_back(t);
            eps[a.out].push_back(a.in);
            eps[a.out].push_back(t);
            return {s, t};
        }
        }
        return {0, 0}; // unreachable
    }

    std::vector<int> epsClosure(int s) const {
        std::vector<int> stack{s}, out;
        std::unordered_set<int> seen{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.push_back(u);
            for (int v : eps[u])
                if (seen.insert(v).second) stack.push_back(v);
        }
        return out;
    }
};

} // namespace detail

// Compile to an epsilon-free NFA: Thompson construction, then per-state
// epsilon-closure folding, restricted to states reachable from the start.
inline Nfa to_nfa(const Regex& r) {
    detail::ThompsonBuilder tb;
    auto frag = tb.build(r);
    int n = static_cast<int>(tb.eps.size());

    std::vector<bool> accept(n, false);
    std::vector<std::vector<std::pair<Symbol, int>>> flatNext(n);
    for (int s = 0; s < n; ++s) {
        for (int c : tb.epsClosure(s)) {
            if (c == frag.out) accept[s] = true;
            for (const auto& [sym, t] : tb.labeled[c]) flatNext[s].emplace_back(sym, t);
        }
    }

    // keep only states reachable from the start via labeled transitions
    std::vector<int> remap(n, -1);
    std::vector<int> order;
    std::vector<int> stack{frag.in};
    remap[frag.in] = 0;
    order.push_back(frag.in);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [sym, t] : flatNext[u]) {
            (void)sym;
            if (remap[t] == -1) {
                remap[t] = static_cast<int>(order.size());
                order.push_back(t);
                stack.push_back(t);
            }
        }
    }

    Nfa nfa;
    nfa.stateCount = static_cast<int>(order.size());
    nfa.start = 0;
    nfa.accepting.resize(nfa.stateCount, false);
    nfa.next.resize(nfa.stateCount);
    nfa.prev.resize(nfa.stateCount);
    for (int i = 0; i < nfa.stateCount; ++i) {
        int old = order[i];
        nfa.accepting[i] = accept[old];
        for (const auto& [sym, t] : flatNext[old]) {
            nfa.next[i][sym].push_back(remap[t]);
            nfa.prev[remap[t]][sym].push_back(i);
        }
    }
    return nfa;
}

inline bool nfa_accepts(const Nfa& nfa, const std::vector<Symbol>& word) {
    std::unordered_set<int> cur{nfa.start};
    for (const auto& sym : word) {
        std::unordered_set<int> nxt;
        for (int s : cur) {
            auto it = nfa.next[s].find(sym);
            if (it == nfa.next[s].end()) continue;
            nxt.insert(it->second.begin(), it->second.end());
        }
        cur = std::move(nxt);
        if (cur.empty()) return false;
    }
    for (int s : cur)
        if (nfa.accepting[s]) return true;
    return false;
}

} // namespace crpq

#endif
