#ifndef CRPQ_WIDTHS_HPP
#define CRPQ_WIDTHS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "query.hpp"

namespace crpq {

// ---------------------------------------------------------------------------
// Elimination of low-degree bound variables on query graphs
// ---------------------------------------------------------------------------

enum class ElimRule { Degree1, Degree2 };

struct EliminationStep {
    std::string variable;
    ElimRule rule;
    std::vector<QGEdge> removedEdges;          // 1 or 2 edges
    QGEdge addedEdge{};                        // Degree2 only
    bool hasAddedEdge = false;
    std::optional<std::string> alsoRemovedNeighbor; // Degree1 only
};

namespace detail {

inline std::pair<QueryGraph, EliminationStep> eliminate_with_step(const QueryGraph& g,
                                                                  const std::string& u) {
    if (!g.has(u)) throw InvalidArgumentError("eliminate: unknown variable '" + u + "'");
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].a == u || g.edges[i].b == u) inc.push_back(i);
    if (inc.empty() || inc.size() > 2)
        throw InvalidArgumentError("eliminate: variable '" + u + "' has degree " +
                                   std::to_string(inc.size()));
    auto far = [&](const QGEdge& e) { return e.a == u ? e.b : e.a; };
    for (std::size_t i : inc)
        if (g.edges[i].a == g.edges[i].b)
            throw InvalidArgumentError("eliminate: self-loop on variable '" + u + "'");

    EliminationStep st;
    st.variable = u;
    QueryGraph out = g;
    if (inc.size() == 1) {
        st.rule = ElimRule::Degree1;
        st.removedEdges = {g.edges[inc[0]]};
        std::string v = far(g.edges[inc[0]]);
        out.edges.erase(out.edges.begin() + static_cast<long>(inc[0]));
        out.vertices.erase(u);
        if (out.degree(v) == 0) {
            out.vertices.erase(v);
            st.alsoRemovedNeighbor = v;
        }
    } else {
        if (g.edges[inc[0]].atomId > g.edges[inc[1]].atomId) std::swap(inc[0], inc[1]);
        std::string v1 = far(g.edges[inc[0]]), v2 = far(g.edges[inc[1]]);
        if (v1 == v2)
            throw InvalidArgumentError("eliminate: degree-2 variable '" + u +
                                       "' has coinciding neighbors");
        st.rule = ElimRule::Degree2;
        st.removedEdges = {g.edges[inc[0]], g.edges[inc[1]]};
        st.addedEdge = {v1, v2, g.edges[inc[0]].atomId};
        st.hasAddedEdge = true;
        out.edges.erase(out.edges.begin() + static_cast<long>(std::max(inc[0], inc[1])));
        out.edges.erase(out.edges.begin() + static_cast<long>(std::min(inc[0], inc[1])));
        out.vertices.erase(u);
        out.edges.push_back(st.addedEdge);
    }
    return {out, st};
}

// Repeatedly eliminate an eligible (degree <= 2) bound variable chosen by
// `pick` until every remaining bound variable has degree >= 3.
template <typename Picker>
std::pair<QueryGraph, std::vector<EliminationStep>> contract_graph_impl(const Crpq& q,
                                                                        Picker pick) {
    if (!is_acyclic(q))
        throw UnsupportedQueryError("contracted query graph: query is not acyclic");
    QueryGraph g = build_query_graph(q);
    auto freeSet = q.freeSet();
    std::vector<EliminationStep> trace;
    for (;;) {
        std::vector<std::string> eligible;
        for (const auto& v : g.vertices) {
            if (freeSet.count(v)) continue;
            int d = g.degree(v);
            if (d >= 1 && d <= 2) eligible.push_back(v);
        }
        if (eligible.empty()) break;
        auto [ng, st] = eliminate_with_step(g, pick(eligible));
        g = std::move(ng);
        trace.push_back(std::move(st));
    }
    return {g, trace};
}

} // namespace detail

inline QueryGraph eliminate_vertex(const QueryGraph& g, const std::string& u) {
    return detail::eliminate_with_step(g, u).first;
}

// The result is independent of the elimination order; the smallest eligible
// variable is chosen at each step for determinism.
inline std::pair<QueryGraph, std::vector<EliminationStep>> contracted_query_graph(
    const Crpq& q) {
    return detail::contract_graph_impl(
        q, [](const std::vector<std::string>& eligible) { return eligible.front(); });
}

// ---------------------------------------------------------------------------
// Tree decompositions
// ---------------------------------------------------------------------------

struct TreeDecomposition {
    std::vector<std::set<std::string>> bags;
    std::vector<std::pair<int, int>> edges; // tree edges between bag indices
};

inline bool is_tree_decomposition(const Crpq& q, const TreeDecomposition& t) {
    int n = static_cast<int>(t.bags.size());
    if (n == 0) return false;
    if (static_cast<int>(t.edges.size()) != n - 1) return false;
    // connected + |E| = n-1  =>  tree
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : t.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    // coverage
    for (const auto& atom : q.atoms) {
        bool covered = false;
        for (const auto& bag : t.bags)
            if (bag.count(atom.x) && bag.count(atom.y)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    // running intersection: the bags holding any given variable are connected
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<std::string> allVars;
    for (const auto& bag : t.bags) allVars.insert(bag.begin(), bag.end());
    for (const auto& v : allVars) {
        int start = -1, holders = 0;
        for (int i = 0; i < n; ++i)
            if (t.bags[i].count(v)) {
                if (start < 0) start = i;
                ++holders;
            }
        std::vector<int> stack{start};
        std::set<int> seen{start};
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int w : adj[b])
                if (t.bags[w].count(v) && seen.insert(w).second) stack.push_back(w);
        }
        if (static_cast<int>(seen.size()) != holders) return false;
    }
    return true;
}

namespace detail {

inline TreeDecomposition trivial_decomposition(const Crpq& q) {
    return {{q.vars()}, {}};
}

inline bool is_trivial_decomposition(const Crpq& q, const TreeDecomposition& t) {
    return t.bags.size() == 1 && t.bags[0] == q.vars();
}

} // namespace detail

// True iff some connected subtree consists of bags of free variables only and
// their union is exactly free(q). Vacuously true for Boolean queries.
inline bool is_free_connex_decomposition(const Crpq& q, const TreeDecomposition& t) {
    if (!is_tree_decomposition(q, t))
        throw InvalidArgumentError("free-connex check: not a valid tree decomposition");
    auto freeSet = q.freeSet();
    if (freeSet.empty()) return true;
    int n = static_cast<int>(t.bags.size());
    std::vector<bool> pure(n);
    for (int i = 0; i < n; ++i)
        pure[i] = std::includes(freeSet.begin(), freeSet.end(), t.bags[i].begin(),
                                t.bags[i].end());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // a maximal pure component has the largest union any of its subtrees can have
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (!pure[i] || seen[i]) continue;
        std::set<std::string> unionOf;
        std::vector<int> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            unionOf.insert(t.bags[b].begin(), t.bags[b].end());
            for (int w : adj[b])
                if (pure[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        if (unionOf == freeSet) return true;
    }
    return false;
}

// Same body, free variables restricted to the bag (declared order preserved).
inline Crpq induced_query(const Crpq& q, const std::set<std::string>& bag) {
    Crpq out;
    out.atoms = q.atoms;
    for (const auto& f : q.free)
        if (bag.count(f)) out.free.push_back(f);
    return out;
}

inline int cw_of_decomposition(const Crpq& q, const TreeDecomposition& t) {
    if (!is_free_connex_decomposition(q, t) && !detail::is_trivial_decomposition(q, t))
        throw InvalidArgumentError("cw: decomposition is not free-connex");
    int cw = 0;
    for (const auto& bag : t.bags) {
        Crpq sub = induced_query(q, bag);
        auto freeSet = sub.freeSet();
        auto [g, trace] = contracted_query_graph(sub);
        int bound = 0;
        for (const auto& v : g.vertices)
            if (!freeSet.count(v)) ++bound;
        cw = std::max(cw, bound);
    }
    return cw;
}

// ---------------------------------------------------------------------------
// Contraction width
// ---------------------------------------------------------------------------

namespace detail {

// The query graph contracted at its bound connected components: components of
// the subgraph induced on bound variables, each with its free neighborhood.
struct CanonicalParts {
    std::vector<std::set<std::string>> components;
    std::vector<std::set<std::string>> freeNeighborhood; // aligned with components
    std::vector<std::pair<std::string, std::string>> freePairs; // atoms on two free vars
};

inline CanonicalParts canonical_parts(const Crpq& q) {
    CanonicalParts parts;
    auto freeSet = q.freeSet();
    std::map<std::string, std::set<std::string>> boundAdj;
    std::set<std::string> boundVars;
    for (const auto& a : q.atoms) {
        bool fx = freeSet.count(a.x) > 0, fy = freeSet.count(a.y) > 0;
        if (fx && fy) {
            parts.freePairs.emplace_back(std::min(a.x, a.y), std::max(a.x, a.y));
            continue;
        }
        if (!fx) boundVars.insert(a.x);
        if (!fy) boundVars.insert(a.y);
        if (!fx && !fy) {
            boundAdj[a.x].insert(a.y);
            boundAdj[a.y].insert(a.x);
        }
    }
    std::set<std::string> unvisited = boundVars;
    while (!unvisited.empty()) {
        std::vector<std::string> stack{*unvisited.begin()};
        std::set<std::string> comp{stack[0]};
        unvisited.erase(stack[0]);
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            for (const auto& v : boundAdj[u])
                if (unvisited.erase(v)) {
                    comp.insert(v);
                    stack.push_back(v);
                }
        }
        std::set<std::string> nf;
        for (const auto& a : q.atoms) {
            if (comp.count(a.x) && freeSet.count(a.y)) nf.insert(a.y);
            if (comp.count(a.y) && freeSet.count(a.x)) nf.insert(a.x);
        }
        parts.components.push_back(std::move(comp));
        parts.freeNeighborhood.push_back(std::move(nf));
    }
    return parts;
}

// Witness decomposition: a pure-free skeleton (one singleton bag per free
// variable, one bag per free-free atom, one bag per bound component's free
// neighborhood) plus one fat bag per bound component holding the component
// together with its free neighborhood.
inline TreeDecomposition canonical_witness(const Crpq& q) {
    auto freeSet = q.freeSet();
    if (freeSet.empty()) return trivial_decomposition(q);
    TreeDecomposition t;
    std::map<std::string, int> singleton;
    for (const auto& v : freeSet) {
        singleton[v] = static_cast<int>(t.bags.size());
        t.bags.push_back({v});
    }
    CanonicalParts parts = canonical_parts(q);
    for (const auto& [u, v] : parts.freePairs) {
        int b = static_cast<int>(t.bags.size());
        t.bags.push_back({u, v});
        t.edges.emplace_back(b, singleton[u]);
        t.edges.emplace_back(b, singleton[v]);
    }
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
        const auto& nf = parts.freeNeighborhood[i];
        std::set<std::string> fat = parts.components[i];
        fat.insert(nf.begin(), nf.end());
        int fatBag = -1;
        if (!nf.empty()) {
            int nb = static_cast<int>(t.bags.size());
            t.bags.push_back(nf);
            for (const auto& v : nf) t.edges.emplace_back(nb, singleton[v]);
            fatBag = static_cast<int>(t.bags.size());
            t.bags.push_back(std::move(fat));
            t.edges.emplace_back(fatBag, nb);
        } else {
            fatBag = static_cast<int>(t.bags.size());
            t.bags.push_back(std::move(fat));
        }
    }
    // stitch the forest into a single tree (linked bags share no variables)
    int n = static_cast<int>(t.bags.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : t.edges) parent[find(a)] = find(b);
    int root = singleton[*freeSet.begin()];
    // connect each remaining tree via a pure-free bag when it has one, so the
    // pure-free skeleton stays connected
    std::vector<int> rep(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        bool pureI = std::includes(freeSet.begin(), freeSet.end(), t.bags[i].begin(),
                                   t.bags[i].end());
        if (rep[r] < 0 || (pureI && !std::includes(freeSet.begin(), freeSet.end(),
                                                   t.bags[rep[r]].begin(),
                                                   t.bags[rep[r]].end())))
            rep[r] = i;
    }
    for (int i = 0; i < n; ++i) {
        if (rep[i] < 0 || find(i) == find(root)) continue;
        t.edges.emplace_back(root, rep[i]);
        parent[find(rep[i])] = find(root);
    }
    return t;
}

} // namespace detail

inline void check_width_preconditions(const Crpq& q) {
    if (q.vars().size() > 12)
        throw CapExceededError("width analysis: query has more than 12 variables");
    if (!is_acyclic(q))
        throw UnsupportedQueryError("width analysis: query is not acyclic");
}

inline std::pair<int, TreeDecomposition> contraction_width(const Crpq& q) {
    check_width_preconditions(q);
    TreeDecomposition trivial = detail::trivial_decomposition(q);
    int cwTrivial = cw_of_decomposition(q, trivial);
    TreeDecomposition witness = detail::canonical_witness(q);
    int cwWitness = cw_of_decomposition(q, witness);
    if (cwTrivial < cwWitness) return {cwTrivial, trivial};
    return {cwWitness, witness};
}

// ---------------------------------------------------------------------------
// Fractional edge covers and fhtw
// ---------------------------------------------------------------------------

struct Rational {
    long long num = 0, den = 1;
    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw InvalidArgumentError("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw InvalidArgumentError("rational: division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Optimal value of:  min sum(lambda)  s.t. per v in f, sum over atoms touching
// v of lambda >= 1, lambda in [0,1].  The LP is over graph edges, so it has a
// half-integral optimum; enumerate lambda in {0, 1/2, 1} over relevant atoms.
inline Rational fractional_edge_cover(const Crpq& q, const std::set<std::string>& f) {
    if (f.empty()) return Rational(0);
    auto vars = q.vars();
    for (const auto& v : f)
        if (!vars.count(v))
            throw InvalidArgumentError("fractional edge cover: unknown variable '" + v + "'");
    std::vector<const Atom*> atoms;
    for (const auto& a : q.atoms)
        if (f.count(a.x) || f.count(a.y)) atoms.push_back(&a);
    int m = static_cast<int>(atoms.size());
    std::vector<std::string> target(f.begin(), f.end());
    int k = static_cast<int>(target.size());
    std::vector<std::vector<int>> covers(m, std::vector<int>(k, 0)); // atom x var
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            covers[i][j] = (atoms[i]->x == target[j]) + (atoms[i]->y == target[j] &&
                                                         atoms[i]->x != atoms[i]->y);
    long long best = -1; // objective in half units
    std::vector<int> w(m, 0); // 2*lambda per atom
    for (;;) {
        std::vector<int> cov(k, 0);
        long long total = 0;
        for (int i = 0; i < m; ++i) {
            total += w[i];
            for (int j = 0; j < k; ++j) cov[j] += w[i] * covers[i][j];
        }
        bool ok = true;
        for (int j = 0; j < k; ++j)
            if (cov[j] < 2) ok = false;
        if (ok && (best < 0 || total < best)) best = total;
        int i = 0;
        while (i < m && w[i] == 2) w[i++] = 0;
        if (i == m) break;
        ++w[i];
    }
    if (best < 0)
        throw InvalidArgumentError("fractional edge cover: uncoverable variable set");
    return Rational(best, 2);
}

namespace detail {

// Minimum over tree decompositions of the subgraph on comp + its free
// neighborhood -- with some bag required to contain the whole neighborhood --
// of the maximal per-bag fractional edge cover number. The requirement is
// encoded by adding a clique on the neighborhood; the search runs over vertex
// elimination orders (bag = vertex + its neighbors in the fill-in graph),
// which realize the optimum for any cover cost that is monotone in the bag.
inline Rational component_cover_width(const Crpq& q, const std::set<std::string>& comp,
                                      const std::set<std::string>& nf) {
    std::vector<std::string> verts(comp.begin(), comp.end());
    verts.insert(verts.end(), nf.begin(), nf.end());
    int n = static_cast<int>(verts.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    std::vector<unsigned> adj(n, 0);
    for (const auto& a : q.atoms) {
        auto ix = idx.find(a.x), iy = idx.find(a.y);
        if (ix == idx.end() || iy == idx.end() || ix->second == iy->second) continue;
        adj[ix->second] |= 1u << iy->second;
        adj[iy->second] |= 1u << ix->second;
    }
    for (const auto& u : nf)
        for (const auto& v : nf)
            if (u != v) adj[idx[u]] |= 1u << idx[v];

    std::map<unsigned, Rational> coverCache;
    auto bagCost = [&](unsigned bag) {
        auto it = coverCache.find(bag);
        if (it != coverCache.end()) return it->second;
        std::set<std::string> vs;
        for (int i = 0; i < n; ++i)
            if (bag & (1u << i)) vs.insert(verts[i]);
        Rational r = fractional_edge_cover(q, vs);
        coverCache.emplace(bag, r);
        return r;
    };
    // neighbors of v in the graph where eliminated vertices are contracted
    auto fillBag = [&](unsigned eliminated, int v) {
        unsigned frontier = 1u << v, seen = 1u << v, bag = 1u << v;
        while (frontier) {
            unsigned next = 0;
            for (int i = 0; i < n; ++i)
                if (frontier & (1u << i)) next |= adj[i] & ~seen;
            seen |= next;
            bag |= next & ~eliminated;
            frontier = next & eliminated;
        }
        return bag;
    };
    unsigned full = n >= 32 ? ~0u : (1u << n) - 1;
    std::map<unsigned, Rational> best{{0u, Rational(0)}};
    std::vector<unsigned> layer{0u};
    for (int step = 0; step < n; ++step) {
        std::map<unsigned, Rational> nextBest;
        for (unsigned s : layer) {
            Rational sofar = best[s];
            for (int v = 0; v < n; ++v) {
                if (s & (1u << v)) continue;
                Rational cost = bagCost(fillBag(s, v));
                if (cost < sofar) cost = sofar;
                unsigned t = s | (1u << v);
                auto it = nextBest.find(t);
                if (it == nextBest.end() || cost < it->second) nextBest[t] = cost;
            }
        }
        best = std::move(nextBest);
        layer.clear();
        for (const auto& [s, r] : best) layer.push_back(s);
    }
    return best[full];
}

} // namespace detail

// Minimum over free-connex decompositions of the maximal per-bag fractional
// edge cover number: a pure-free skeleton (cover number 1 per bag beyond the
// forced neighborhood bags) plus, per bound component, the best decomposition
// of the component region that exposes the component's free neighborhood in
// one bag.
inline Rational fhtw(const Crpq& q) {
    check_width_preconditions(q);
    Rational trivial = fractional_edge_cover(q, q.vars());
    detail::CanonicalParts parts = detail::canonical_parts(q);
    Rational canonical(q.atoms.empty() ? 0 : 1);
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
        Rational r = detail::component_cover_width(q, parts.components[i],
                                                   parts.freeNeighborhood[i]);
        if (canonical < r) canonical = r;
    }
    return canonical < trivial ? canonical : trivial;
}

struct WidthReport {
    QueryGraph contractedGraph;
    int cw = 0;
    TreeDecomposition witness;
    std::optional<Rational> fhtw;
};

inline WidthReport make_width_report(const Crpq& q, bool withFhtw = false) {
    WidthReport r;
    r.contractedGraph = contracted_query_graph(q).first;
    auto [cw, witness] = contraction_width(q);
    r.cw = cw;
    r.witness = std::move(witness);
    if (withFhtw) r.fhtw = fhtw(q);
    return r;
}

// ---------------------------------------------------------------------------
// Decomposition files:  `bag: <id> X Y Z`  and  `edge: <id> <id>` lines
// ---------------------------------------------------------------------------

inline TreeDecomposition parse_decomposition(const std::string& text) {
    TreeDecomposition t;
    std::map<std::string, int> idOf;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("bag:", 0) == 0) {
            std::istringstream bs(trimmed.substr(4));
            std::string id;
            if (!(bs >> id))
                throw ParseError("decomposition line " + std::to_string(lineNo) +
                                 ": expected 'bag: <id> X Y ...'");
            if (!idOf.emplace(id, static_cast<int>(t.bags.size())).second)
                throw ParseError("decomposition line " + std::to_string(lineNo) +
                                 ": duplicate bag id '" + id + "'");
            std::set<std::string> bag;
            std::string v;
            while (bs >> v) bag.insert(v);
            t.bags.push_back(std::move(bag));
        } else if (trimmed.rfind("edge:", 0) == 0) {
            std::istringstream es(trimmed.substr(5));
            std::string a, b;
            if (!(es >> a >> b))
                throw ParseError("decomposition line " + std::to_string(lineNo) +
                                 ": expected 'edge: <id> <id>'");
            auto ia = idOf.find(a), ib = idOf.find(b);
            if (ia == idOf.end() || ib == idOf.end())
                throw ParseError("decomposition line " + std::to_string(lineNo) +
                                 ": unknown bag id");
            t.edges.emplace_back(ia->second, ib->second);
        } else {
            throw ParseError("decomposition line " + std::to_string(lineNo) +
                             ": unrecognized line");
        }
    }
    if (t.bags.empty()) throw ParseError("decomposition: no bags");
    return t;
}

} // namespace crpq

#endif
