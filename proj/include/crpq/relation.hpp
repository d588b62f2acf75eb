#ifndef CRPQ_RELATION_HPP
#define CRPQ_RELATION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace crpq {

using Tuple = std::vector<std::string>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& s : t) {
            h ^= std::hash<std::string>{}(s);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

using TupleSet = std::unordered_set<Tuple, TupleHash>;

// Materialized k-ary relation over vertex ids, k >= 0. The nullary relation
// encodes a boolean: {()} is true, {} is false.
struct Relation {
    std::vector<std::string> schema;
    TupleSet tuples;

    Relation() = default;
    explicit Relation(std::vector<std::string> s) : schema(std::move(s)) {}

    static Relation nullary(bool value) {
        Relation r;
        if (value) r.tuples.insert(Tuple{});
        return r;
    }

    std::size_t arity() const { return schema.size(); }
    std::size_t size() const { return tuples.size(); }
    bool empty() const { return tuples.empty(); }
    bool asBool() const { return !tuples.empty(); } // meaningful for nullary

    void insert(Tuple t) {
        if (t.size() != schema.size())
            throw InvalidArgumentError("relation insert: arity mismatch");
        tuples.insert(std::move(t));
    }
    bool contains(const Tuple& t) const { return tuples.count(t) > 0; }

    int columnOf(const std::string& var) const {
        auto it = std::find(schema.begin(), schema.end(), var);
        return it == schema.end() ? -1 : static_cast<int>(it - schema.begin());
    }

    bool operator==(const Relation& o) const {
        return schema == o.schema && tuples == o.tuples;
    }
};

inline Relation relation_project(const Relation& r, const std::vector<std::string>& vars) {
    std::vector<int> cols;
    for (const auto& v : vars) {
        int c = r.columnOf(v);
        if (c < 0) throw InvalidArgumentError("project: variable '" + v + "' not in schema");
        cols.push_back(c);
    }
    Relation out(vars);
    for (const auto& t : r.tuples) {
        Tuple p;
        p.reserve(cols.size());
        for (int c : cols) p.push_back(t[c]);
        out.tuples.insert(std::move(p));
    }
    return out;
}

// Keep the tuples of r whose projection onto filter.schema lies in filter.
inline Relation relation_semijoin(const Relation& r, const Relation& filter) {
    std::vector<int> cols;
    for (const auto& v : filter.schema) {
        int c = r.columnOf(v);
        if (c < 0)
            throw InvalidArgumentError("semijoin: variable '" + v + "' not in left schema");
        cols.push_back(c);
    }
    Relation out(r.schema);
    for (const auto& t : r.tuples) {
        Tuple key;
        key.reserve(cols.size());
        for (int c : cols) key.push_back(t[c]);
        if (filter.contains(key)) out.tuples.insert(t);
    }
    return out;
}

inline std::vector<Tuple> sorted_tuples(const Relation& r) {
    std::vector<Tuple> out(r.tuples.begin(), r.tuples.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace crpq

#endif
