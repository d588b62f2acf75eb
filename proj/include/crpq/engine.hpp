#ifndef CRPQ_ENGINE_HPP
#define CRPQ_ENGINE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "query.hpp"
#include "relation.hpp"
#include "rewrite.hpp"
#include "rpq.hpp"
#include "widths.hpp"

namespace crpq {

// Full acyclic conjunctive query over materialized relations: every variable
// of the relation schemas is free; `free` fixes the output column order.
struct CqAtomSet {
    std::vector<Relation> relations;
    std::vector<std::string> free;
};

namespace detail {

inline std::vector<std::string> shared_vars(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
    return out;
}

// Hash join; output schema is a.schema followed by b's remaining columns.
inline Relation relation_join(const Relation& a, const Relation& b) {
    std::vector<std::string> shared = shared_vars(a.schema, b.schema);
    std::vector<int> aKey, bKey, bRest;
    for (const auto& v : shared) {
        aKey.push_back(a.columnOf(v));
        bKey.push_back(b.columnOf(v));
    }
    std::vector<std::string> schema = a.schema;
    for (std::size_t c = 0; c < b.schema.size(); ++c)
        if (std::find(shared.begin(), shared.end(), b.schema[c]) == shared.end()) {
            bRest.push_back(static_cast<int>(c));
            schema.push_back(b.schema[c]);
        }
    std::unordered_map<Tuple, std::vector<const Tuple*>, TupleHash> index;
    for (const auto& t : b.tuples) {
        Tuple key;
        for (int c : bKey) key.push_back(t[c]);
        index[std::move(key)].push_back(&t);
    }
    Relation out(schema);
    for (const auto& t : a.tuples) {
        Tuple key;
        for (int c : aKey) key.push_back(t[c]);
        auto it = index.find(key);
        if (it == index.end()) continue;
        for (const Tuple* bt : it->second) {
            Tuple ext = t;
            for (int c : bRest) ext.push_back((*bt)[c]);
            out.tuples.insert(std::move(ext));
        }
    }
    return out;
}

struct RelationForest {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
    std::vector<int> postorder;
};

// Maximal-weight spanning forest over schema-intersection sizes; valid join
// tree iff every variable's occurrence set is connected in the forest.
inline RelationForest build_relation_forest(const std::vector<Relation>& rels) {
    int n = static_cast<int>(rels.size());
    std::vector<std::tuple<int, int, int>> cand; // (-weight, i, j)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int w = static_cast<int>(shared_vars(rels[i].schema, rels[j].schema).size());
            if (w > 0) cand.emplace_back(-w, i, j);
        }
    std::sort(cand.begin(), cand.end());
    std::vector<int> dsu(n);
    for (int i = 0; i < n; ++i) dsu[i] = i;
    std::function<int(int)> find = [&](int x) {
        return dsu[x] == x ? x : dsu[x] = find(dsu[x]);
    };
    std::vector<std::vector<int>> adj(n);
    for (const auto& [nw, i, j] : cand) {
        (void)nw;
        int a = find(i), b = find(j);
        if (a == b) continue;
        dsu[a] = b;
        adj[i].push_back(j);
        adj[j].push_back(i);
    }

    std::map<std::string, std::vector<int>> occ;
    for (int i = 0; i < n; ++i)
        for (const auto& v : rels[i].schema) occ[v].push_back(i);
    for (const auto& [v, nodes] : occ) {
        std::set<int> want(nodes.begin(), nodes.end());
        std::set<int> seen{nodes[0]};
        std::vector<int> queue{nodes[0]};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int w : adj[u])
                if (want.count(w) && seen.insert(w).second) queue.push_back(w);
        }
        if (seen.size() != want.size())
            throw InvalidArgumentError("join: relation schemas admit no join tree");
    }

    RelationForest f;
    f.parent.assign(n, -2);
    f.children.assign(n, {});
    for (int r = 0; r < n; ++r) {
        if (f.parent[r] != -2) continue;
        f.roots.push_back(r);
        f.parent[r] = -1;
        std::vector<int> queue{r};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            std::sort(adj[u].begin(), adj[u].end());
            for (int w : adj[u])
                if (f.parent[w] == -2) {
                    f.parent[w] = u;
                    f.children[u].push_back(w);
                    queue.push_back(w);
                }
        }
    }
    // post-order: children before parents
    std::function<void(int)> post = [&](int u) {
        for (int c : f.children[u]) post(c);
        f.postorder.push_back(u);
    };
    for (int r : f.roots) post(r);
    return f;
}

} // namespace detail

// Natural join of a full acyclic CQ: two-pass semijoin reduction over a join
// tree of the schemas, then joins down the tree, Cartesian across components.
inline Relation yannakakis_full(const CqAtomSet& cq) {
    if (cq.relations.empty()) {
        if (!cq.free.empty())
            throw InvalidArgumentError("join: free variables but no relations");
        return Relation::nullary(true);
    }
    detail::RelationForest f = detail::build_relation_forest(cq.relations);
    std::vector<Relation> work = cq.relations;
    for (int i : f.postorder) {
        int p = f.parent[i];
        if (p < 0) continue;
        auto shared = detail::shared_vars(work[p].schema, work[i].schema);
        work[p] = relation_semijoin(work[p], relation_project(work[i], shared));
    }
    for (auto it = f.postorder.rbegin(); it != f.postorder.rend(); ++it) {
        int p = f.parent[*it];
        if (p < 0) continue;
        auto shared = detail::shared_vars(work[p].schema, work[*it].schema);
        work[*it] = relation_semijoin(work[*it], relation_project(work[p], shared));
    }
    std::function<Relation(int)> joinDown = [&](int u) {
        Relation acc = work[u];
        for (int c : f.children[u]) acc = detail::relation_join(acc, joinDown(c));
        return acc;
    };
    Relation total = Relation::nullary(true);
    for (int r : f.roots) total = detail::relation_join(total, joinDown(r));
    return relation_project(total, cq.free);
}

// Two-pass filtered evaluation of a free-connex acyclic CRPQ over a free-top
// join tree: unary messages up, calibrated per-atom outputs down, final join.
// When `collected` is given it receives the calibrated R_i by atom index.
inline Relation eval_free_connex(const Crpq& q, const LabeledGraph& g,
                                 EvalCounters& counters,
                                 std::map<int, Relation>* collected = nullptr) {
    if (!is_free_connex(q))
        throw UnsupportedQueryError("eval: query is not free-connex");
    JoinTree jt = build_free_top_join_tree(q);
    int n = static_cast<int>(q.atoms.size());
    auto freeSet = q.freeSet();

    auto atomVars = [&](int i) {
        return std::vector<std::string>{q.atoms[i].x, q.atoms[i].y};
    };
    auto sharedVar = [&](int i, int p) {
        auto s = detail::shared_vars(atomVars(i), atomVars(p));
        return s.front();
    };
    auto freePart = [&](int i) {
        std::vector<std::string> out;
        if (freeSet.count(q.atoms[i].x)) out.push_back(q.atoms[i].x);
        if (freeSet.count(q.atoms[i].y)) out.push_back(q.atoms[i].y);
        return out;
    };
    auto addUnaryFilter = [&](FilteredRpqQuery& fq, const Relation& rel) {
        VertexSet s;
        for (const auto& t : rel.tuples) s.insert(t[0]);
        (rel.schema[0] == fq.x ? fq.xFilters : fq.yFilters).push_back(std::move(s));
    };

    std::vector<Relation> up(n); // message to the parent, unary
    std::function<void(int)> bottomUp = [&](int i) {
        for (int c : jt.children[i]) bottomUp(c);
        FilteredRpqQuery fq;
        fq.regex = q.atoms[i].regex;
        fq.x = q.atoms[i].x;
        fq.y = q.atoms[i].y;
        for (int c : jt.children[i]) addUnaryFilter(fq, up[c]);
        std::vector<std::string> out = jt.parent[i] < 0
                                           ? freePart(i)
                                           : std::vector<std::string>{sharedVar(i, jt.parent[i])};
        fq.free.insert(out.begin(), out.end());
        Relation r = eval_filtered(g, fq, counters);
        if (!out.empty() && r.schema != out) r = relation_project(r, out);
        up[i] = std::move(r);
    };

    std::vector<Relation> collectedRels;
    std::map<int, Relation> calibrated;
    std::function<void(int)> topDown = [&](int i) {
        Relation ri;
        if (jt.parent[i] < 0) {
            ri = up[i]; // the root's message already is its calibrated output
        } else {
            std::string link = sharedVar(i, jt.parent[i]);
            FilteredRpqQuery fq;
            fq.regex = q.atoms[i].regex;
            fq.x = q.atoms[i].x;
            fq.y = q.atoms[i].y;
            addUnaryFilter(fq, relation_project(calibrated.at(jt.parent[i]), {link}));
            for (int c : jt.children[i]) addUnaryFilter(fq, up[c]);
            auto out = freePart(i);
            fq.free.insert(out.begin(), out.end());
            ri = eval_filtered(g, fq, counters);
            if (ri.schema != out) ri = relation_project(ri, out);
        }
        calibrated[i] = ri;
        collectedRels.push_back(std::move(ri));
        for (int c : jt.children[i])
            if (!freePart(c).empty()) topDown(c);
    };

    for (int r : jt.roots) bottomUp(r);
    for (int r : jt.roots) topDown(r);
    if (collected) *collected = calibrated;
    return yannakakis_full({std::move(collectedRels), q.free});
}

// Materialize-and-join ground truth. The cap bounds both the product of the
// atom relation sizes and every intermediate join result.
inline Relation oracle_eval(const Crpq& q, const LabeledGraph& g,
                            std::size_t cap = 10'000'000) {
    EvalCounters counters;
    std::vector<Relation> rels;
    unsigned long long product = 1;
    for (const auto& atom : q.atoms) {
        Relation r = eval_rpq_all_pairs(g, atom.regex, counters, atom.x, atom.y);
        if (atom.x == atom.y) {
            Relation diag({atom.x});
            for (const auto& t : r.tuples)
                if (t[0] == t[1]) diag.tuples.insert({t[0]});
            r = std::move(diag);
        }
        if (r.size() > 0 && product > cap / r.size())
            throw CapExceededError("oracle: relation size product exceeds cap");
        product *= std::max<unsigned long long>(r.size(), 1);
        rels.push_back(std::move(r));
    }
    Relation cur;
    cur.tuples.insert(Tuple{});
    for (const auto& r : rels) {
        cur = detail::relation_join(cur, r);
        if (cur.size() > cap)
            throw CapExceededError("oracle: intermediate result exceeds cap");
        if (cur.empty()) break;
    }
    if (q.free.empty()) return Relation::nullary(!cur.empty());
    if (cur.empty()) return Relation(q.free);
    return relation_project(cur, q.free);
}

// Projection of the full output onto each atom's free variables; atoms with
// both variables bound get the empty relation.
inline std::map<int, Relation> calibrated_outputs(const Crpq& q, const LabeledGraph& g,
                                                  std::size_t cap = 10'000'000) {
    EvalCounters counters;
    Relation cur;
    cur.tuples.insert(Tuple{});
    unsigned long long product = 1;
    for (const auto& atom : q.atoms) {
        Relation r = eval_rpq_all_pairs(g, atom.regex, counters, atom.x, atom.y);
        if (atom.x == atom.y) {
            Relation diag({atom.x});
            for (const auto& t : r.tuples)
                if (t[0] == t[1]) diag.tuples.insert({t[0]});
            r = std::move(diag);
        }
        if (r.size() > 0 && product > cap / r.size())
            throw CapExceededError("oracle: relation size product exceeds cap");
        product *= std::max<unsigned long long>(r.size(), 1);
        cur = detail::relation_join(cur, r);
        if (cur.size() > cap)
            throw CapExceededError("oracle: intermediate result exceeds cap");
    }
    auto freeSet = q.freeSet();
    std::map<int, Relation> out;
    for (int i = 0; i < static_cast<int>(q.atoms.size()); ++i) {
        std::vector<std::string> schema;
        if (freeSet.count(q.atoms[i].x)) schema.push_back(q.atoms[i].x);
        if (freeSet.count(q.atoms[i].y)) schema.push_back(q.atoms[i].y);
        if (schema.empty())
            out.emplace(i, Relation(std::vector<std::string>{}));
        else
            out.emplace(i, relation_project(cur, schema));
    }
    return out;
}

// Per-bag contract-promote-evaluate over a free-connex decomposition, then a
// final join of the bag outputs on the shared free variables.
inline Relation eval_acyclic(const Crpq& q, const TreeDecomposition& t,
                             const LabeledGraph& g, EvalCounters& counters) {
    if (!is_acyclic(q)) throw UnsupportedQueryError("eval: query is not acyclic");
    if (!is_tree_decomposition(q, t))
        throw InvalidArgumentError("eval: invalid tree decomposition");
    if (!is_free_connex_decomposition(q, t) &&
        !(t.bags.size() == 1 && t.bags[0] == q.vars()))
        throw InvalidArgumentError("eval: decomposition is not free-connex");

    CqAtomSet finalCq;
    finalCq.free = q.free;
    for (const auto& bag : t.bags) {
        Crpq qb = induced_query(q, bag);
        ContractResult cr = contract(qb, g, counters);
        Crpq promoted = cr.query;
        for (const auto& v : cr.promotedCandidates) promoted.free.push_back(v);
        Relation r = eval_free_connex(promoted, cr.graph, counters);
        finalCq.relations.push_back(relation_project(r, qb.free));
    }
    return yannakakis_full(finalCq);
}

inline Relation eval(const Crpq& q, const LabeledGraph& g,
                     const std::optional<TreeDecomposition>& decomp,
                     EvalCounters& counters) {
    if (!is_acyclic(q)) throw UnsupportedQueryError("eval: query is not acyclic");
    if (is_free_connex(q)) return eval_free_connex(q, g, counters);
    if (decomp) return eval_acyclic(q, *decomp, g, counters);
    return eval_acyclic(q, contraction_width(q).second, g, counters);
}

inline Relation eval(const Crpq& q, const LabeledGraph& g, EvalCounters& counters) {
    return eval(q, g, std::nullopt, counters);
}

} // namespace crpq

#endif
