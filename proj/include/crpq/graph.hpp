#ifndef CRPQ_GRAPH_HPP
#define CRPQ_GRAPH_HPP

#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "symbol.hpp"

namespace crpq {

// Unary filter over vertices (the R_X relations of the contraction pass).
using VertexSet = std::unordered_set<std::string>;

// Directed edge-labeled graph. Vertex names and symbols are interned to dense
// ints; adjacency is indexed per (vertex, symbol) in both directions.
struct LabeledGraph {
    std::vector<std::string> vertexNames;
    std::unordered_map<std::string, int> vertexIds;
    std::vector<Symbol> symbolList;
    std::unordered_map<Symbol, int, SymbolHash> symbolIds;
    // vertex -> symbol id -> neighbor vertex ids
    std::vector<std::unordered_map<int, std::vector<int>>> adj;
    std::vector<std::unordered_map<int, std::vector<int>>> radj;
    std::set<std::tuple<int, int, int>> edgeSet; // (src, sym, dst), set semantics

    int vertexCount() const { return static_cast<int>(vertexNames.size()); }
    std::size_t edgeCount() const { return edgeSet.size(); }

    int internVertex(const std::string& name) {
        auto it = vertexIds.find(name);
        if (it != vertexIds.end()) return it->second;
        int id = vertexCount();
        vertexIds.emplace(name, id);
        vertexNames.push_back(name);
        adj.emplace_back();
        radj.emplace_back();
        return id;
    }

    int internSymbol(const Symbol& s) {
        auto it = symbolIds.find(s);
        if (it != symbolIds.end()) return it->second;
        int id = static_cast<int>(symbolList.size());
        symbolIds.emplace(s, id);
        symbolList.push_back(s);
        return id;
    }

    int vertexId(const std::string& name) const {
        auto it = vertexIds.find(name);
        return it == vertexIds.end() ? -1 : it->second;
    }

    int symbolId(const Symbol& s) const {
        auto it = symbolIds.find(s);
        return it == symbolIds.end() ? -1 : it->second;
    }

    // Returns false when the edge was already present.
    bool addEdge(int src, const Symbol& sym, int dst) {
        int sid = internSymbol(sym);
        if (!edgeSet.emplace(src, sid, dst).second) return false;
        adj[src][sid].push_back(dst);
        radj[dst][sid].push_back(src);
        return true;
    }

    bool addEdge(const std::string& src, const Symbol& sym, const std::string& dst) {
        return addEdge(internVertex(src), sym, internVertex(dst));
    }

    const std::vector<int>* successors(int v, int symId) const {
        if (symId < 0) return nullptr;
        auto it = adj[v].find(symId);
        return it == adj[v].end() ? nullptr : &it->second;
    }
    const std::vector<int>* predecessors(int v, int symId) const {
        if (symId < 0) return nullptr;
        auto it = radj[v].find(symId);
        return it == radj[v].end() ? nullptr : &it->second;
    }

    bool hasReversedSymbols() const {
        for (const auto& s : symbolList)
            if (s.orientation == Orientation::Reversed) return true;
        return false;
    }
    bool hasLoopSymbols() const {
        for (const auto& s : symbolList)
            if (s.isLoop()) return true;
        return false;
    }
};

namespace detail {
inline bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Edge-list label field: bare identifier or <identifier>.
inline std::string parse_label_field(const std::string& field, int lineNo) {
    std::string label = field;
    if (!label.empty() && label.front() == '<' && label.back() == '>')
        label = label.substr(1, label.size() - 2);
    if (!valid_label(label))
        throw ParseError("graph line " + std::to_string(lineNo) + ": bad label '" + field + "'");
    return label;
}
} // namespace detail

// Format: one `src<TAB>label<TAB>dst` per line; '#' lines and blank lines skipped.
inline LabeledGraph load_graph(std::istream& in) {
    LabeledGraph g;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos ||
            line.find('\t', t2 + 1) != std::string::npos)
            throw ParseError("graph line " + std::to_string(lineNo) +
                             ": expected src<TAB>label<TAB>dst");
        std::string src = line.substr(0, t1);
        std::string labelField = line.substr(t1 + 1, t2 - t1 - 1);
        std::string dst = line.substr(t2 + 1);
        if (src.empty() || dst.empty())
            throw ParseError("graph line " + std::to_string(lineNo) + ": empty vertex id");
        g.addEdge(src, Symbol::data(detail::parse_label_field(labelField, lineNo)), dst);
    }
    if (g.edgeCount() == 0) throw ParseError("graph: no edges");
    return g;
}

inline void serialize_graph(const LabeledGraph& g, std::ostream& out) {
    for (const auto& [src, sid, dst] : g.edgeSet) {
        const Symbol& s = g.symbolList[sid];
        out << g.vertexNames[src] << '\t' << render_symbol(s) << '\t' << g.vertexNames[dst]
            << '\n';
    }
}

// Add a reversed copy of every edge under the hatted symbol.
inline LabeledGraph symmetric_closure(const LabeledGraph& g) {
    if (g.hasReversedSymbols())
        throw InvalidArgumentError("symmetric_closure: graph already has reversed symbols");
    LabeledGraph out = g;
    for (const auto& [src, sid, dst] : g.edgeSet)
        out.addEdge(dst, g.symbolList[sid].hat(), src);
    return out;
}

// Self-loops (u, Loop(var), u) for every u in s.
inline LabeledGraph add_loop_edges(const LabeledGraph& g, const std::string& var,
                                   const VertexSet& s) {
    Symbol loop = Symbol::loop(var);
    if (g.symbolId(loop) >= 0)
        throw InvalidArgumentError("add_loop_edges: loop symbol for '" + var +
                                   "' already present");
    LabeledGraph out = g;
    out.internSymbol(loop);
    for (const auto& name : s) {
        int v = out.vertexId(name);
        if (v < 0)
            throw InvalidArgumentError("add_loop_edges: unknown vertex '" + name + "'");
        out.addEdge(v, loop, v);
    }
    return out;
}

} // namespace crpq

#endif
