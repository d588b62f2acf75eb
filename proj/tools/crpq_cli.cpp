#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crpq/bench.hpp"
#include "crpq/engine.hpp"
#include "crpq/rewrite.hpp"
#include "crpq/widths.hpp"

namespace {

using namespace crpq;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitCap = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LabeledGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    return load_graph(in);
}

void print_relation(const Relation& r, bool countOnly, bool unsorted, bool boolean) {
    if (countOnly) {
        std::cout << r.size() << "\n";
        return;
    }
    if (boolean) {
        std::cout << (r.asBool() ? "true" : "false") << "\n";
        return;
    }
    auto emit = [](const Tuple& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) std::cout << '\t';
            std::cout << t[i];
        }
        std::cout << '\n';
    };
    if (unsorted) {
        for (const auto& t : r.tuples) emit(t);
    } else {
        for (const auto& t : sorted_tuples(r)) emit(t);
    }
}

void print_stats(const EvalCounters& c) {
    std::cerr << "productEdgesVisited=" << c.productEdgesVisited << "\n"
              << "productNodesVisited=" << c.productNodesVisited << "\n"
              << "sourcesExpanded=" << c.sourcesExpanded << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"output-sensitive evaluation of acyclic conjunctive regular path queries"};
    app.require_subcommand(1);

    std::string queryFile, graphFile, decompFile, family, outPrefix;
    bool stats = false, countOnly = false, unsorted = false, withFhtw = false;
    long long oracleCap = 10'000'000;
    long long delta = 0; // accepted for interface compatibility; unused
    int benchN = 1;

    auto* evalCmd = app.add_subcommand("eval", "evaluate a query over a graph");
    evalCmd->add_option("query", queryFile)->required();
    evalCmd->add_option("graph", graphFile)->required();
    evalCmd->add_option("--decomp", decompFile, "free-connex tree decomposition file");
    evalCmd->add_flag("--stats", stats, "dump counters as key=value lines on stderr");
    evalCmd->add_flag("--count-only", countOnly, "print the output cardinality only");
    evalCmd->add_flag("--unsorted", unsorted, "skip the final lexicographic sort");
    evalCmd->add_option("--delta", delta, "search threshold hint (accepted, unused)");

    auto* analyzeCmd = app.add_subcommand("analyze", "report query widths as JSON");
    analyzeCmd->add_option("query", queryFile)->required();
    analyzeCmd->add_flag("--fhtw", withFhtw, "also compute the fractional width");

    auto* contractCmd = app.add_subcommand("contract", "show the contracted rewriting");
    contractCmd->add_option("query", queryFile)->required();
    contractCmd->add_option("graph", graphFile)->required();

    auto* oracleCmd = app.add_subcommand("oracle", "brute-force reference evaluation");
    oracleCmd->add_option("query", queryFile)->required();
    oracleCmd->add_option("graph", graphFile)->required();
    oracleCmd->add_option("--oracle-cap", oracleCap, "intermediate tuple cap");
    oracleCmd->add_flag("--count-only", countOnly);
    oracleCmd->add_flag("--unsorted", unsorted);

    auto* benchCmd = app.add_subcommand("bench-gen", "generate a benchmark instance");
    benchCmd->add_option("family", family, "fc-pair | kpath2 | star3 | star-worst")
        ->required();
    benchCmd->add_option("n", benchN)->required();
    benchCmd->add_option("out", outPrefix, "output prefix (<out>.query, <out>.graph)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (evalCmd->parsed()) {
        Crpq q = parse_query(read_file(queryFile));
        LabeledGraph g = load_graph_file(graphFile);
        std::optional<TreeDecomposition> decomp;
        if (!decompFile.empty()) decomp = parse_decomposition(read_file(decompFile));
        EvalCounters counters;
        Relation out = eval(q, g, decomp, counters);
        print_relation(out, countOnly, unsorted, q.free.empty());
        if (stats) print_stats(counters);
    } else if (analyzeCmd->parsed()) {
        Crpq q = parse_query(read_file(queryFile));
        WidthReport r = make_width_report(q, withFhtw);
        nlohmann::json j;
        j["variables"] = q.vars().size();
        j["atoms"] = q.atoms.size();
        j["freeConnex"] = is_free_connex(q);
        j["cw"] = r.cw;
        j["contractedGraph"]["vertices"] = r.contractedGraph.vertices;
        auto& edges = j["contractedGraph"]["edges"];
        edges = nlohmann::json::array();
        for (const auto& e : r.contractedGraph.edges)
            edges.push_back({e.a, e.b, e.atomId});
        auto& bags = j["witness"]["bags"];
        bags = nlohmann::json::array();
        for (const auto& bag : r.witness.bags) bags.push_back(bag);
        j["witness"]["edges"] = r.witness.edges;
        if (r.fhtw) j["fhtw"] = r.fhtw->str();
        std::cout << j.dump(2) << "\n";
    } else if (contractCmd->parsed()) {
        Crpq q = parse_query(read_file(queryFile));
        LabeledGraph g = load_graph_file(graphFile);
        ContractResult res = contract(q, g);
        std::cout << print_query(res.query);
        for (const auto& [v, s] : res.filters)
            std::cout << "# filter " << v << " " << s.size() << "\n";
        std::cout << "# graph-edges " << res.graph.edgeCount() << "\n";
    } else if (oracleCmd->parsed()) {
        Crpq q = parse_query(read_file(queryFile));
        LabeledGraph g = load_graph_file(graphFile);
        Relation out = oracle_eval(q, g, static_cast<std::size_t>(oracleCap));
        print_relation(out, countOnly, unsorted, q.free.empty());
    } else if (benchCmd->parsed()) {
        BenchInstance b = bench_generate(family, benchN);
        std::ofstream qf(outPrefix + ".query");
        std::ofstream gf(outPrefix + ".graph");
        if (!qf || !gf)
            throw InvalidArgumentError("cannot write output files at '" + outPrefix + "'");
        qf << print_query(b.query);
        serialize_graph(b.graph, gf);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const UnsupportedQueryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
}
