#ifndef CRPQ_BENCH_HPP
#define CRPQ_BENCH_HPP

#include <string>

#include "errors.hpp"
#include "graph.hpp"
#include "query.hpp"

namespace crpq {

// Adversarial benchmark families: each instance pairs a fixed query shape
// with a size-n graph whose RPQ outputs are large while the query output is
// small (or empty), so output-sensitive evaluation is separable from
// materialize-then-join strategies.
struct BenchInstance {
    Crpq query;
    LabeledGraph graph;
};

namespace detail {

inline std::string bv(const std::string& prefix, int i) {
    return prefix + std::to_string(i);
}

} // namespace detail

// Two RPQs sharing the middle variable; both RPQ outputs have n^2 pairs but
// the join is empty. |V| = 2n+1, |E| = 4n.
inline BenchInstance bench_fc_pair(int n) {
    BenchInstance b;
    b.query = parse_query("free: X Y Z\natom: X Y a*aa\natom: Y Z b*bb\n");
    Symbol a = Symbol::data("a"), bb = Symbol::data("b");
    for (int i = 1; i <= n; ++i) {
        b.graph.addEdge(detail::bv("u", i), a, "v");
        b.graph.addEdge("v", a, detail::bv("w", i));
        b.graph.addEdge(detail::bv("u", i), bb, "v");
        b.graph.addEdge("v", bb, detail::bv("w", i));
    }
    return b;
}

// 2-path with a bound middle; only u0 reaches the single b-source w1 via
// a*aa, giving exactly n output tuples. |V| = 3n+3, |E| = 3n+2.
inline BenchInstance bench_kpath2(int n) {
    BenchInstance b;
    b.query = parse_query("free: X Z\natom: X Y a*aa\natom: Y Z b\n");
    Symbol a = Symbol::data("a"), bb = Symbol::data("b");
    for (int i = 1; i <= n; ++i) {
        b.graph.addEdge(detail::bv("w", i), a, "v");
        b.graph.addEdge("v", a, detail::bv("u", i));
        b.graph.addEdge("w1", bb, detail::bv("z", i));
    }
    b.graph.addEdge("u0", a, "v0");
    b.graph.addEdge("v0", a, "w1");
    return b;
}

// 3-star with a bound center; output is the single tuple (u0, z1, z2).
// |V| = 2n+5, |E| = 2n+4.
inline BenchInstance bench_star3(int n) {
    BenchInstance b;
    b.query = parse_query("free: X1 X2 X3\n"
                          "atom: X1 X a*aa\natom: X2 X b\natom: X3 X c\n");
    Symbol a = Symbol::data("a");
    for (int i = 1; i <= n; ++i) {
        b.graph.addEdge(detail::bv("w", i), a, "v");
        b.graph.addEdge("v", a, detail::bv("u", i));
    }
    b.graph.addEdge("u0", a, "v0");
    b.graph.addEdge("v0", a, "w1");
    b.graph.addEdge("z1", Symbol::data("b"), "w1");
    b.graph.addEdge("z2", Symbol::data("c"), "w1");
    return b;
}

// Single-symbol 3-star where the output reaches its worst case n^3.
// |V| = 3n+1, |E| = 3n.
inline BenchInstance bench_star_worst(int n) {
    BenchInstance b;
    b.query = parse_query("free: X1 X2 X3\n"
                          "atom: X1 X a\natom: X2 X b\natom: X3 X c\n");
    for (int i = 1; i <= n; ++i) {
        b.graph.addEdge(detail::bv("u", i), Symbol::data("a"), "v");
        b.graph.addEdge(detail::bv("w", i), Symbol::data("b"), "v");
        b.graph.addEdge(detail::bv("z", i), Symbol::data("c"), "v");
    }
    return b;
}

inline BenchInstance bench_generate(const std::string& family, int n) {
    if (n < 1) throw InvalidArgumentError("bench: n must be positive");
    if (family == "fc-pair") return bench_fc_pair(n);
    if (family == "kpath2") return bench_kpath2(n);
    if (family == "star3") return bench_star3(n);
    if (family == "star-worst") return bench_star_worst(n);
    throw InvalidArgumentError("bench: unknown family '" + family + "'");
}

} // namespace crpq

#endif
