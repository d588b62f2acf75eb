#ifndef CRPQ_QUERY_HPP
#define CRPQ_QUERY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "regex.hpp"

namespace crpq {

struct Atom {
    Regex regex;
    std::string x, y;
};

// Q(F) = r_1(X_1,Y_1) ∧ ... ∧ r_n(X_n,Y_n); free is the declared output order.
struct Crpq {
    std::vector<Atom> atoms;
    std::vector<std::string> free;

    std::set<std::string> vars() const {
        std::set<std::string> v;
        for (const auto& a : atoms) {
            v.insert(a.x);
            v.insert(a.y);
        }
        return v;
    }
    std::set<std::string> freeSet() const { return {free.begin(), free.end()}; }
    std::set<std::string> boundVars() const {
        std::set<std::string> b = vars();
        for (const auto& f : free) b.erase(f);
        return b;
    }
    bool isFree(const std::string& v) const {
        return std::find(free.begin(), free.end(), v) != free.end();
    }
};

// Undirected multigraph on variables; one edge per atom ({X} when X = Y).
struct QGEdge {
    std::string a, b; // a == b encodes a singleton (self-loop) edge
    int atomId;       // originating atom index, or negative synthetic ids
};

struct QueryGraph {
    std::set<std::string> vertices;
    std::vector<QGEdge> edges;

    bool has(const std::string& v) const { return vertices.count(v) > 0; }

    std::set<std::string> neighbors(const std::string& v) const {
        std::set<std::string> out;
        for (const auto& e : edges) {
            if (e.a == v && e.b != v) out.insert(e.b);
            if (e.b == v && e.a != v) out.insert(e.a);
        }
        return out;
    }
    // Degree = number of incident edges (self-loop counts once); for forests
    // this equals the neighbor count, which is what the elimination rules use.
    int degree(const std::string& v) const {
        int d = 0;
        for (const auto& e : edges)
            if (e.a == v || e.b == v) ++d;
        return d;
    }

    // Order-insensitive normal form for equality checks.
    std::multiset<std::pair<std::string, std::string>> edgeMultiset() const {
        std::multiset<std::pair<std::string, std::string>> out;
        for (const auto& e : edges)
            out.insert(e.a <= e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a));
        return out;
    }
    bool sameGraph(const QueryGraph& o) const {
        return vertices == o.vertices && edgeMultiset() == o.edgeMultiset();
    }
};

inline QueryGraph build_query_graph(const Crpq& q) {
    QueryGraph g;
    for (int i = 0; i < static_cast<int>(q.atoms.size()); ++i) {
        g.vertices.insert(q.atoms[i].x);
        g.vertices.insert(q.atoms[i].y);
        g.edges.push_back({q.atoms[i].x, q.atoms[i].y, i});
    }
    return g;
}

// Cycle-free per the multigraph reading: no self-loops, no parallel edges,
// and the underlying simple graph is a forest.
inline bool is_acyclic(const Crpq& q) {
    std::set<std::pair<std::string, std::string>> seen;
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        std::string r = v;
        while (parent[r] != r) r = parent[r];
        std::string c = v;
        while (parent[c] != c) {
            std::string nxt = parent[c];
            parent[c] = r;
            c = nxt;
        }
        return r;
    };
    for (const auto& a : q.atoms) {
        if (a.x == a.y) return false;
        auto key = a.x < a.y ? std::make_pair(a.x, a.y) : std::make_pair(a.y, a.x);
        if (!seen.insert(key).second) return false;
        if (!parent.count(a.x)) parent[a.x] = a.x;
        if (!parent.count(a.y)) parent[a.y] = a.y;
        std::string rx = find(a.x), ry = find(a.y);
        if (rx == ry) return false;
        parent[rx] = ry;
    }
    return true;
}

// Free variables induce a connected subgraph in each tree of the forest
// (vacuous for trees with <= 1 free variable, and for Boolean queries).
inline bool is_free_connex(const Crpq& q) {
    if (!is_acyclic(q)) throw UnsupportedQueryError("is_free_connex: query is not acyclic");
    // variable adjacency
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& a : q.atoms) {
        adj[a.x].insert(a.y);
        adj[a.y].insert(a.x);
    }
    auto freeSet = q.freeSet();
    std::set<std::string> unvisited = q.vars();
    while (!unvisited.empty()) {
        // collect one component
        std::string s = *unvisited.begin();
        std::vector<std::string> stack{s};
        std::set<std::string> comp;
        unvisited.erase(s);
        comp.insert(s);
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            for (const auto& v : adj[u])
                if (unvisited.erase(v)) {
                    comp.insert(v);
                    stack.push_back(v);
                }
        }
        std::vector<std::string> compFree;
        for (const auto& v : comp)
            if (freeSet.count(v)) compFree.push_back(v);
        if (compFree.size() <= 1) continue;
        // connectivity within the free-induced subgraph
        std::set<std::string> freeComp{compFree[0]};
        std::vector<std::string> fstack{compFree[0]};
        while (!fstack.empty()) {
            std::string u = fstack.back();
            fstack.pop_back();
            for (const auto& v : adj[u])
                if (freeSet.count(v) && freeComp.insert(v).second) fstack.push_back(v);
        }
        for (const auto& v : compFree)
            if (!freeComp.count(v)) return false;
    }
    return true;
}

// Atom tree (forest with one root per connected component; semantics of the
// implicit synthetic root is Cartesian product).
struct JoinTree {
    std::vector<int> parent; // per atom; -1 for component roots
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
};

namespace detail {

// Root every variable tree, then turn each edge {parentVar, v} into an atom
// node whose parent is the edge above. rootChoice picks the root variable of
// a component (given its sorted variable list).
template <typename RootChoice>
JoinTree build_join_tree_impl(const Crpq& q, RootChoice rootChoice) {
    if (!is_acyclic(q)) throw UnsupportedQueryError("join tree: query is not acyclic");
    int n = static_cast<int>(q.atoms.size());
    JoinTree jt;
    jt.parent.assign(n, -1);
    jt.children.assign(n, {});

    std::map<std::string, std::vector<std::pair<std::string, int>>> adj; // var -> (var, atom)
    for (int i = 0; i < n; ++i) {
        adj[q.atoms[i].x].emplace_back(q.atoms[i].y, i);
        adj[q.atoms[i].y].emplace_back(q.atoms[i].x, i);
    }

    std::set<std::string> unvisited;
    for (const auto& [v, _] : adj) unvisited.insert(v);

    while (!unvisited.empty()) {
        // gather component variables (sorted; std::set iteration)
        std::vector<std::string> comp{*unvisited.begin()};
        std::set<std::string> compSet{comp[0]};
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (const auto& [w, _] : adj[comp[i]])
                if (compSet.insert(w).second) comp.push_back(w);
        std::sort(comp.begin(), comp.end());
        for (const auto& v : comp) unvisited.erase(v);

        std::string rootVar = rootChoice(comp);
        // BFS over variables; atomOf[v] = atom of the edge entering v
        std::map<std::string, int> atomOf;
        std::vector<std::string> queue{rootVar};
        std::set<std::string> seen{rootVar};
        std::vector<int> rootAtoms;
        while (!queue.empty()) {
            std::string u = queue.front();
            queue.erase(queue.begin());
            auto edges = adj[u];
            std::sort(edges.begin(), edges.end());
            for (const auto& [v, atomId] : edges) {
                if (!seen.insert(v).second) continue;
                atomOf[v] = atomId;
                if (u == rootVar)
                    rootAtoms.push_back(atomId);
                else
                    jt.parent[atomId] = atomOf[u];
                queue.push_back(v);
            }
        }
        std::sort(rootAtoms.begin(), rootAtoms.end());
        int rootAtom = rootAtoms.front();
        jt.roots.push_back(rootAtom);
        for (std::size_t i = 1; i < rootAtoms.size(); ++i) jt.parent[rootAtoms[i]] = rootAtom;
    }

    for (int i = 0; i < n; ++i)
        if (jt.parent[i] >= 0) jt.children[jt.parent[i]].push_back(i);
    for (auto& c : jt.children) std::sort(c.begin(), c.end());
    std::sort(jt.roots.begin(), jt.roots.end());
    return jt;
}

} // namespace detail

inline JoinTree build_join_tree(const Crpq& q) {
    return detail::build_join_tree_impl(
        q, [](const std::vector<std::string>& comp) { return comp.front(); });
}

// Roots each component at its smallest free variable (if any), which makes the
// atoms containing free variables a connected prefix including the root.
inline JoinTree build_free_top_join_tree(const Crpq& q) {
    if (!is_free_connex(q))
        throw UnsupportedQueryError("free-top join tree: query is not free-connex");
    auto freeSet = q.freeSet();
    return detail::build_join_tree_impl(q, [&](const std::vector<std::string>& comp) {
        for (const auto& v : comp)
            if (freeSet.count(v)) return v;
        return comp.front();
    });
}

// Query file: one `free: ...` line, then `atom: X Y <regex>` lines.
inline Crpq parse_query(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    Crpq q;
    bool sawFree = false;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    std::set<std::pair<std::string, std::pair<std::string, std::string>>> seenAtoms;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("free:", 0) == 0) {
            if (sawFree)
                throw ParseError("query line " + std::to_string(lineNo) +
                                 ": duplicate free: line");
            sawFree = true;
            std::istringstream fs(trimmed.substr(5));
            std::string v;
            while (fs >> v) q.free.push_back(v);
        } else if (trimmed.rfind("atom:", 0) == 0) {
            std::istringstream as(trimmed.substr(5));
            std::string x, y;
            if (!(as >> x >> y))
                throw ParseError("query line " + std::to_string(lineNo) +
                                 ": expected 'atom: X Y <regex>'");
            std::string rest;
            std::getline(as, rest);
            Regex r;
            try {
                r = parse_regex(rest);
            } catch (const ParseError& e) {
                throw ParseError("query line " + std::to_string(lineNo) + ": " + e.what());
            }
            auto key = std::make_pair(print_regex(r), std::make_pair(x, y));
            if (!seenAtoms.insert(key).second) {
                if (warnings)
                    warnings->push_back("query line " + std::to_string(lineNo) +
                                       ": duplicate atom dropped");
                continue;
            }
            q.atoms.push_back({std::move(r), std::move(x), std::move(y)});
        } else {
            throw ParseError("query line " + std::to_string(lineNo) + ": unrecognized line");
        }
    }
    if (!sawFree) throw ParseError("query: missing free: line");
    if (q.atoms.empty()) throw ParseError("query: no atoms");
    auto vars = q.vars();
    std::set<std::string> seenFree;
    for (const auto& f : q.free) {
        if (!vars.count(f))
            throw ParseError("query: free variable '" + f + "' does not occur in any atom");
        if (!seenFree.insert(f).second)
            throw ParseError("query: free variable '" + f + "' listed twice");
    }
    return q;
}

inline std::string print_query(const Crpq& q) {
    std::string out = "free:";
    for (const auto& f : q.free) out += " " + f;
    out += "\n";
    for (const auto& a : q.atoms)
        out += "atom: " + a.x + " " + a.y + " " + print_regex(a.regex) + "\n";
    return out;
}

} // namespace crpq

#endif
