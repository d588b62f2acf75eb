#ifndef CRPQ_REWRITE_HPP
#define CRPQ_REWRITE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "query.hpp"
#include "regex.hpp"
#include "rpq.hpp"
#include "widths.hpp"

namespace crpq {

// Result of eliminating the low-degree bound variables of an acyclic query.
// `query` evaluated over `graph` has the same output as the input query over
// the input graph. Every surviving variable X carries a loop atom over a
// fresh non-join variable, and `graph` has Loop(X)-self-loops on filters[X].
struct ContractResult {
    Crpq query;
    LabeledGraph graph;
    std::map<std::string, VertexSet> filters; // final R_X, one per input variable
    std::set<std::string> promotedCandidates; // bound input vars surviving in query
};

namespace detail {

// (hat(r))^R in one pass: data symbols flip orientation, concatenation order
// reverses; loop symbols denote self-loops and stay as they are.
inline Regex regex_reverse_hat(const Regex& r) {
    switch (r->op) {
    case RegexOp::Epsilon: return r;
    case RegexOp::Sym: return r->sym.isLoop() ? r : rx_sym(r->sym.hat());
    case RegexOp::Star: return rx_star(regex_reverse_hat(r->left));
    case RegexOp::Union:
        return rx_union(regex_reverse_hat(r->left), regex_reverse_hat(r->right));
    case RegexOp::Concat:
        return rx_concat(regex_reverse_hat(r->right), regex_reverse_hat(r->left));
    }
    return r; // unreachable
}

} // namespace detail

inline ContractResult contract(const Crpq& q, const LabeledGraph& g,
                               EvalCounters& counters) {
    if (!is_acyclic(q)) throw UnsupportedQueryError("contract: query is not acyclic");
    if (g.hasReversedSymbols() || g.hasLoopSymbols())
        throw InvalidArgumentError("contract: graph already contains derived symbols");

    auto trace = contracted_query_graph(q).second;

    ContractResult res;
    res.graph = symmetric_closure(g);
    VertexSet allVertices(g.vertexNames.begin(), g.vertexNames.end());
    for (const auto& v : q.vars()) res.filters[v] = allVertices;

    std::map<int, Atom> atoms; // surviving atoms, keyed by original position
    for (std::size_t i = 0; i < q.atoms.size(); ++i)
        atoms.emplace(static_cast<int>(i), q.atoms[i]);

    auto freeSet = q.freeSet();
    std::set<std::string> loopAdded;    // vars whose loop edges are already in res.graph
    std::set<std::string> boundOrphans; // bound vars dropped as isolated neighbors

    for (const auto& st : trace) {
        const std::string& u = st.variable;
        if (st.rule == ElimRule::Degree1) {
            int id = st.removedEdges[0].atomId;
            const Atom& atom = atoms.at(id);
            bool uIsSource = atom.x == u;
            const std::string& other = uIsSource ? atom.y : atom.x;
            FilteredRpqQuery fq;
            fq.regex = atom.regex;
            fq.x = atom.x;
            fq.y = atom.y;
            fq.free = {other};
            (uIsSource ? fq.xFilters : fq.yFilters).push_back(res.filters.at(u));
            (uIsSource ? fq.yFilters : fq.xFilters).push_back(res.filters.at(other));
            Relation kept = eval_filtered(res.graph, fq, counters);
            VertexSet next;
            for (const auto& t : kept.tuples) next.insert(t[0]);
            res.filters[other] = std::move(next);
            atoms.erase(id);
            if (st.alsoRemovedNeighbor && !freeSet.count(*st.alsoRemovedNeighbor))
                boundOrphans.insert(*st.alsoRemovedNeighbor);
        } else {
            // loop edges for u must exist before the composed regex is evaluated
            res.graph = add_loop_edges(res.graph, u, res.filters.at(u));
            loopAdded.insert(u);
            int id1 = st.removedEdges[0].atomId, id2 = st.removedEdges[1].atomId;
            const Atom& a1 = atoms.at(id1);
            const Atom& a2 = atoms.at(id2);
            Regex left = a1.y == u ? a1.regex : detail::regex_reverse_hat(a1.regex);
            Regex right = a2.x == u ? a2.regex : detail::regex_reverse_hat(a2.regex);
            std::string v1 = a1.x == u ? a1.y : a1.x;
            std::string v2 = a2.x == u ? a2.y : a2.x;
            Atom composed{
                rx_concat(rx_concat(std::move(left), rx_sym(Symbol::loop(u))),
                          std::move(right)),
                std::move(v1), std::move(v2)};
            atoms.erase(id2);
            atoms.at(id1) = std::move(composed);
        }
    }

    for (const auto& v : q.vars())
        if (!loopAdded.count(v)) res.graph = add_loop_edges(res.graph, v, res.filters.at(v));

    res.query.free = q.free;
    std::set<std::string> loopVars;
    for (const auto& [id, atom] : atoms) {
        res.query.atoms.push_back(atom);
        loopVars.insert(atom.x);
        loopVars.insert(atom.y);
    }
    for (const auto& v : loopVars)
        if (!freeSet.count(v)) res.promotedCandidates.insert(v);
    loopVars.insert(freeSet.begin(), freeSet.end());
    loopVars.insert(boundOrphans.begin(), boundOrphans.end());
    int fresh = 0;
    for (const auto& v : loopVars) {
        std::string bar = v + "__bar_" + std::to_string(fresh++);
        res.query.atoms.push_back({rx_sym(Symbol::loop(v)), v, std::move(bar)});
    }
    return res;
}

inline ContractResult contract(const Crpq& q, const LabeledGraph& g) {
    EvalCounters counters;
    return contract(q, g, counters);
}

} // namespace crpq

#endif
