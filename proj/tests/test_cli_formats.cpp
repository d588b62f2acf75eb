#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "crpq/bench.hpp"
#include "crpq/engine.hpp"

using namespace crpq;

namespace {

std::set<std::tuple<std::string, std::string, std::string>> edge_triples(
    const LabeledGraph& g) {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& [src, sid, dst] : g.edgeSet)
        out.emplace(g.vertexNames[src], render_symbol(g.symbolList[sid]),
                    g.vertexNames[dst]);
    return out;
}

} // namespace

TEST_CASE("bench families match their closed-form sizes") {
    for (int n : {1, 2, 3, 8, 17, 64, 256}) {
        BenchInstance fc = bench_fc_pair(n);
        REQUIRE(fc.graph.vertexCount() == 2 * n + 1);
        REQUIRE(fc.graph.edgeCount() == static_cast<std::size_t>(4 * n));
        BenchInstance kp = bench_kpath2(n);
        REQUIRE(kp.graph.vertexCount() == 3 * n + 3);
        REQUIRE(kp.graph.edgeCount() == static_cast<std::size_t>(3 * n + 2));
        BenchInstance s3 = bench_star3(n);
        REQUIRE(s3.graph.vertexCount() == 2 * n + 5);
        REQUIRE(s3.graph.edgeCount() == static_cast<std::size_t>(2 * n + 4));
        BenchInstance sw = bench_star_worst(n);
        REQUIRE(sw.graph.vertexCount() == 3 * n + 1);
        REQUIRE(sw.graph.edgeCount() == static_cast<std::size_t>(3 * n));
    }
}

TEST_CASE("bench family outputs at desk scale") {
    SECTION("fc-pair: large RPQ outputs, empty join") {
        BenchInstance b = bench_fc_pair(4);
        EvalCounters counters;
        for (const auto& atom : b.query.atoms)
            REQUIRE(eval_rpq_all_pairs(b.graph, atom.regex, counters).size() == 16);
        REQUIRE(eval(b.query, b.graph, counters).empty());
    }
    SECTION("kpath2: exactly n tuples from u0") {
        for (int n : {1, 4, 9}) {
            BenchInstance b = bench_kpath2(n);
            EvalCounters counters;
            Relation out = eval(b.query, b.graph, counters);
            REQUIRE(out.size() == static_cast<std::size_t>(n));
            for (const auto& t : out.tuples) REQUIRE(t[0] == "u0");
        }
    }
    SECTION("star3: the single planted tuple") {
        BenchInstance b = bench_star3(5);
        EvalCounters counters;
        REQUIRE(sorted_tuples(eval(b.query, b.graph, counters)) ==
                std::vector<Tuple>{{"u0", "z1", "z2"}});
    }
    SECTION("star-worst: full cubic output") {
        BenchInstance b = bench_star_worst(3);
        EvalCounters counters;
        REQUIRE(eval(b.query, b.graph, counters).size() == 27);
    }
    SECTION("pipeline equals oracle on every family") {
        for (const char* family : {"fc-pair", "kpath2", "star3", "star-worst"}) {
            for (int n : {1, 2, 5}) {
                BenchInstance b = bench_generate(family, n);
                EvalCounters counters;
                REQUIRE(eval(b.query, b.graph, counters) ==
                        oracle_eval(b.query, b.graph));
            }
        }
    }
}

TEST_CASE("bench_generate dispatch") {
    REQUIRE(bench_generate("fc-pair", 2).graph.vertexCount() == 5);
    REQUIRE_THROWS_AS(bench_generate("nope", 2), InvalidArgumentError);
    REQUIRE_THROWS_AS(bench_generate("star3", 0), InvalidArgumentError);
}

TEST_CASE("generated files round-trip through the parsers") {
    BenchInstance b = bench_generate("kpath2", 6);
    std::ostringstream gs;
    serialize_graph(b.graph, gs);
    std::istringstream in(gs.str());
    LabeledGraph reloaded = load_graph(in);
    REQUIRE(edge_triples(reloaded) == edge_triples(b.graph));

    Crpq q = parse_query(print_query(b.query));
    REQUIRE(q.free == b.query.free);
    REQUIRE(q.atoms.size() == b.query.atoms.size());
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        REQUIRE(q.atoms[i].x == b.query.atoms[i].x);
        REQUIRE(q.atoms[i].y == b.query.atoms[i].y);
        REQUIRE(regex_equal(q.atoms[i].regex, b.query.atoms[i].regex));
    }
}
