#ifndef CRPQ_RPQ_HPP
#define CRPQ_RPQ_HPP

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "nfa.hpp"
#include "regex.hpp"
#include "relation.hpp"

namespace crpq {

struct EvalCounters {
    std::size_t productEdgesVisited = 0;
    std::size_t productNodesVisited = 0;
    std::size_t sourcesExpanded = 0;

    void add(const EvalCounters& o) {
        productEdgesVisited += o.productEdgesVisited;
        productNodesVisited += o.productNodesVisited;
        sourcesExpanded += o.sourcesExpanded;
    }
};

// r(X, Y) ∧ ⋀ U_i(X) ∧ ⋀ W_i(Y) ∧ ⋀ Z_i(), with free ⊆ {x, y}.
struct FilteredRpqQuery {
    Regex regex;
    std::string x, y;
    std::vector<VertexSet> xFilters;
    std::vector<VertexSet> yFilters;
    std::vector<bool> nullaryFilters;
    std::set<std::string> free; // subset of {x, y}
};

namespace detail {

// The product graph is traversed implicitly: node = vertex * stateCount + state.
// Transition tables are pre-resolved against the graph's symbol interning, so
// symbols absent from the graph cost nothing.
struct ProductContext {
    const LabeledGraph& g;
    Nfa nfa;
    std::vector<std::vector<std::pair<int, int>>> fwd; // state -> (graphSymId, nextState)
    std::vector<std::vector<std::pair<int, int>>> bwd; // state -> (graphSymId, prevState)

    ProductContext(const LabeledGraph& graph, const Regex& r) : g(graph), nfa(to_nfa(r)) {
        fwd.resize(nfa.stateCount);
        bwd.resize(nfa.stateCount);
        for (int s = 0; s < nfa.stateCount; ++s) {
            for (const auto& [sym, targets] : nfa.next[s]) {
                int sid = g.symbolId(sym);
                if (sid < 0) continue;
                for (int t : targets) fwd[s].emplace_back(sid, t);
            }
            for (const auto& [sym, sources] : nfa.prev[s]) {
                int sid = g.symbolId(sym);
                if (sid < 0) continue;
                for (int t : sources) bwd[s].emplace_back(sid, t);
            }
        }
    }

    int nodeCount() const { return g.vertexCount() * nfa.stateCount; }
    int node(int v, int s) const { return v * nfa.stateCount + s; }
};

// Forward BFS from the given product nodes; marks visited[node] = stamp.
// Returns early when stopAt (if >= 0) is reached. liveOnly restricts the walk.
struct ProductSearch {
    std::vector<int> visited;
    int stamp = 0;

    explicit ProductSearch(int nodeCount) : visited(nodeCount, 0) {}

    template <bool Forward>
    bool run(const ProductContext& ctx, const std::vector<int>& seeds, EvalCounters& counters,
             const std::vector<char>* liveOnly, int stopVertexMaskState,
             const std::vector<char>* stopVertexMask, std::vector<int>* reached) {
        ++stamp;
        std::deque<int> queue;
        auto push = [&](int node) {
            if (visited[node] == stamp) return false;
            if (liveOnly && !(*liveOnly)[node]) return false;
            visited[node] = stamp;
            ++counters.productNodesVisited;
            if (reached) reached->push_back(node);
            queue.push_back(node);
            return true;
        };
        auto isStop = [&](int node) {
            if (!stopVertexMask) return false;
            int s = node % ctx.nfa.stateCount;
            if (s != stopVertexMaskState) return false;
            return (*stopVertexMask)[node / ctx.nfa.stateCount] != 0;
        };
        for (int seed : seeds)
            if (push(seed) && isStop(seed)) return true;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            int v = node / ctx.nfa.stateCount;
            int s = node % ctx.nfa.stateCount;
            const auto& steps = Forward ? ctx.fwd[s] : ctx.bwd[s];
            for (const auto& [sid, ns] : steps) {
                const std::vector<int>* targets =
                    Forward ? ctx.g.successors(v, sid) : ctx.g.predecessors(v, sid);
                if (!targets) continue;
                for (int t : *targets) {
                    ++counters.productEdgesVisited;
                    int nn = ctx.node(t, ns);
                    if (push(nn) && isStop(nn)) return true;
                }
            }
        }
        return false;
    }
};

inline std::vector<char> vertex_mask(const LabeledGraph& g, const VertexSet& s) {
    std::vector<char> mask(g.vertexCount(), 0);
    for (const auto& name : s) {
        int v = g.vertexId(name);
        if (v < 0) throw InvalidArgumentError("filter vertex '" + name + "' not in graph");
        mask[v] = 1;
    }
    return mask;
}

inline std::vector<char> intersect_masks(const LabeledGraph& g,
                                         const std::vector<VertexSet>& filters) {
    std::vector<char> mask(g.vertexCount(), 1);
    for (const auto& f : filters) {
        auto m = vertex_mask(g, f);
        for (int v = 0; v < g.vertexCount(); ++v) mask[v] = mask[v] && m[v];
    }
    return mask;
}

} // namespace detail

// All (u, v) such that some u-to-v path is labeled by a string in L(r);
// (u, u) included when ε ∈ L(r). One forward product search per source.
inline Relation eval_rpq_all_pairs(const LabeledGraph& g, const Regex& r,
                                   EvalCounters& counters,
                                   const std::string& xName = "X",
                                   const std::string& yName = "Y") {
    detail::ProductContext ctx(g, r);
    Relation out({xName, yName});
    if (!ctx.nfa.anyAccepting()) return out;
    detail::ProductSearch search(ctx.nodeCount());
    std::vector<int> reached;
    for (int u = 0; u < g.vertexCount(); ++u) {
        ++counters.sourcesExpanded;
        reached.clear();
        search.run<true>(ctx, {ctx.node(u, ctx.nfa.start)}, counters, nullptr, -1, nullptr,
                         &reached);
        for (int node : reached)
            if (ctx.nfa.accepting[node % ctx.nfa.stateCount])
                out.tuples.insert({g.vertexNames[u], g.vertexNames[node / ctx.nfa.stateCount]});
    }
    return out;
}

// Same relation as eval_rpq_all_pairs, via the live-source strategy: one
// reverse pass marks product nodes co-reachable from accepting nodes, then
// only sources whose start node is live are expanded, over live nodes only.
inline Relation eval_rpq_output_sensitive(const LabeledGraph& g, const Regex& r,
                                          EvalCounters& counters,
                                          const std::string& xName = "X",
                                          const std::string& yName = "Y") {
    detail::ProductContext ctx(g, r);
    Relation out({xName, yName});
    if (!ctx.nfa.anyAccepting()) return out;

    detail::ProductSearch reverse(ctx.nodeCount());
    std::vector<int> seeds;
    for (int s = 0; s < ctx.nfa.stateCount; ++s)
        if (ctx.nfa.accepting[s])
            for (int v = 0; v < g.vertexCount(); ++v) seeds.push_back(ctx.node(v, s));
    reverse.run<false>(ctx, seeds, counters, nullptr, -1, nullptr, nullptr);
    std::vector<char> live(ctx.nodeCount(), 0);
    for (int n = 0; n < ctx.nodeCount(); ++n) live[n] = reverse.visited[n] == reverse.stamp;

    detail::ProductSearch forward(ctx.nodeCount());
    std::vector<int> reached;
    for (int u = 0; u < g.vertexCount(); ++u) {
        if (!live[ctx.node(u, ctx.nfa.start)]) continue;
        ++counters.sourcesExpanded;
        reached.clear();
        forward.run<true>(ctx, {ctx.node(u, ctx.nfa.start)}, counters, &live, -1, nullptr,
                          &reached);
        for (int node : reached)
            if (ctx.nfa.accepting[node % ctx.nfa.stateCount])
                out.tuples.insert({g.vertexNames[u], g.vertexNames[node / ctx.nfa.stateCount]});
    }
    return out;
}

// Lemma-style filtered evaluation; dispatches on the free-variable shape.
inline Relation eval_filtered(const LabeledGraph& g, const FilteredRpqQuery& q,
                              EvalCounters& counters) {
    bool freeX = q.free.count(q.x) > 0;
    bool freeY = q.free.count(q.y) > 0;
    std::vector<std::string> schema;
    if (freeX) schema.push_back(q.x);
    if (freeY) schema.push_back(q.y);

    for (bool z : q.nullaryFilters)
        if (!z) return freeX || freeY ? Relation(schema) : Relation::nullary(false);

    auto uMask = detail::intersect_masks(g, q.xFilters);
    auto wMask = detail::intersect_masks(g, q.yFilters);

    if (freeX && freeY) {
        VertexSet uSet, wSet;
        for (int v = 0; v < g.vertexCount(); ++v) {
            if (uMask[v]) uSet.insert(g.vertexNames[v]);
            if (wMask[v]) wSet.insert(g.vertexNames[v]);
        }
        const std::string srcVar = "__filter_src", dstVar = "__filter_dst";
        LabeledGraph g2 = add_loop_edges(add_loop_edges(g, srcVar, uSet), dstVar, wSet);
        Regex wrapped =
            rx_concat(rx_concat(rx_sym(Symbol::loop(srcVar)), q.regex),
                      rx_sym(Symbol::loop(dstVar)));
        Relation pairs = eval_rpq_output_sensitive(g2, wrapped, counters, q.x, q.y);
        pairs.schema = schema;
        return pairs;
    }

    detail::ProductContext ctx(g, q.regex);
    if (!ctx.nfa.anyAccepting())
        return freeX || freeY ? Relation(schema) : Relation::nullary(false);
    detail::ProductSearch search(ctx.nodeCount());

    if (!freeX && !freeY) {
        // boolean: reverse search from accepting × W, early stop at (u ∈ U, s0)
        std::vector<int> seeds;
        for (int s = 0; s < ctx.nfa.stateCount; ++s)
            if (ctx.nfa.accepting[s])
                for (int v = 0; v < g.vertexCount(); ++v)
                    if (wMask[v]) seeds.push_back(ctx.node(v, s));
        bool hit = search.run<false>(ctx, seeds, counters, nullptr, ctx.nfa.start, &uMask,
                                     nullptr);
        return Relation::nullary(hit);
    }

    if (freeX) {
        // reverse multi-source from accepting × W; answers are U ∩ reached starts
        std::vector<int> seeds;
        for (int s = 0; s < ctx.nfa.stateCount; ++s)
            if (ctx.nfa.accepting[s])
                for (int v = 0; v < g.vertexCount(); ++v)
                    if (wMask[v]) seeds.push_back(ctx.node(v, s));
        ++counters.sourcesExpanded;
        search.run<false>(ctx, seeds, counters, nullptr, -1, nullptr, nullptr);
        Relation out(schema);
        for (int v = 0; v < g.vertexCount(); ++v)
            if (uMask[v] && search.visited[ctx.node(v, ctx.nfa.start)] == search.stamp)
                out.tuples.insert({g.vertexNames[v]});
        return out;
    }

    // free = {y}: forward multi-source from U × {s0}
    std::vector<int> seeds;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (uMask[v]) seeds.push_back(ctx.node(v, ctx.nfa.start));
    ++counters.sourcesExpanded;
    std::vector<int> reached;
    search.run<true>(ctx, seeds, counters, nullptr, -1, nullptr, &reached);
    Relation out(schema);
    for (int node : reached) {
        int v = node / ctx.nfa.stateCount;
        if (wMask[v] && ctx.nfa.accepting[node % ctx.nfa.stateCount])
            out.tuples.insert({g.vertexNames[v]});
    }
    return out;
}

} // namespace crpq

#endif
