#include "doctest.h"

#include "mwc/io.hpp"
#include "support/gen.hpp"

#include <cmath>
#include <sstream>

using namespace mwc;

namespace {

ParsedInstance parse_str(const std::string& text, InstanceFormat fmt) {
    std::istringstream in(text);
    return parse_instance(in, fmt);
}

} // namespace

TEST_CASE("dimacs parsing") {
    auto k3 = parse_str("c a triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n",
                        InstanceFormat::dimacs_clique);
    CHECK(k3.graph.n() == 3);
    CHECK(k3.graph.m() == 3);
    CHECK_FALSE(k3.has_weights);
    CHECK(k3.graph.weight(0) == 1);

    auto weighted = parse_str(
        "p edge 3 3\nn 1 10\nn 2 20\nn 3 5\ne 1 2\ne 1 3\ne 2 3\n",
        InstanceFormat::dimacs_clique);
    CHECK(weighted.has_weights);
    CHECK(weighted.graph.weight(0) == 10);
    CHECK(weighted.graph.weight(1) == 20);
    CHECK(weighted.graph.weight(2) == 5);

    // "v" weight lines are accepted too
    auto v_lines = parse_str("p edge 2 1\nv 2 7\ne 1 2\n", InstanceFormat::dimacs_clique);
    CHECK(v_lines.graph.weight(1) == 7);
}

TEST_CASE("dimacs parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_str(text, InstanceFormat::dimacs_clique);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line_number == line);
        }
    };
    expect_error("p edge 2 1\ne 1 1\n", 2);                  // self-loop
    expect_error("p edge 2 2\ne 1 2\ne 2 1\n", 3);           // duplicate edge
    expect_error("p edge 2 1\ne 1 3\n", 2);                  // dangling endpoint
    expect_error("p edge 2 1\nn 1 0\ne 1 2\n", 2);           // weight <= 0
    expect_error("p clique 2 1\ne 1 2\n", 1);                // malformed header
    expect_error("p edge 2 2\ne 1 2\n", 2);                  // edge count mismatch
}

TEST_CASE("metis parsing") {
    // 1-2, 2-3 path with weights
    auto w = parse_str("3 2 10\n4 2\n5 1 3\n6 2\n", InstanceFormat::metis);
    CHECK(w.has_weights);
    CHECK(w.graph.n() == 3);
    CHECK(w.graph.m() == 2);
    CHECK(w.graph.weight(0) == 4);
    CHECK(w.graph.weight(1) == 5);
    CHECK(w.graph.is_adjacent(0, 1));
    CHECK_FALSE(w.graph.is_adjacent(0, 2));

    auto unweighted = parse_str("% comment\n3 2\n2\n1 3\n2\n", InstanceFormat::metis);
    CHECK_FALSE(unweighted.has_weights);
    CHECK(unweighted.graph.m() == 2);

    CHECK_THROWS_AS(parse_str("3 2 1\n2\n1 3\n2\n", InstanceFormat::metis), ParseError);
    // asymmetric adjacency
    CHECK_THROWS_AS(parse_str("3 2\n2 3\n1\n\n", InstanceFormat::metis), ParseError);
}

TEST_CASE("edge list parsing") {
    auto g = parse_str("# comment\n1 2\n2 3\n", InstanceFormat::edge_list);
    CHECK(g.graph.n() == 3);
    CHECK(g.graph.m() == 2);
    CHECK_FALSE(g.has_weights);
    CHECK_THROWS_AS(parse_str("1 1\n", InstanceFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_str("1 2\n2 1\n", InstanceFormat::edge_list), ParseError);
}

TEST_CASE("format detection by extension") {
    CHECK(detect_format("foo.clq") == InstanceFormat::dimacs_clique);
    CHECK(detect_format("FOO.WCLQ") == InstanceFormat::dimacs_clique);
    CHECK(detect_format("a/b.graph") == InstanceFormat::metis);
    CHECK(detect_format("x.edges") == InstanceFormat::edge_list);
}

TEST_CASE("serialize/parse round trip") {
    Xoshiro256ss rng(12);
    for (int round = 0; round < 10; ++round) {
        WeightedGraph g = testgen::gnp(20, 0.3, rng);
        std::ostringstream out;
        serialize_dimacs(g, out);
        auto back = parse_str(out.str(), InstanceFormat::dimacs_clique);
        CHECK(back.graph == g);
        CHECK(back.has_weights);
    }
}

TEST_CASE("assign_weights is deterministic and in range") {
    WeightedGraph a(500, 1), b(500, 1);
    assign_weights(a, 99);
    assign_weights(b, 99);
    for (VertexId v = 0; v < 500; ++v) {
        CHECK(a.weight(v) == b.weight(v));
        CHECK(a.weight(v) >= 1);
        CHECK(a.weight(v) <= 200);
    }
    WeightedGraph c(500, 1);
    assign_weights(c, 100);
    int diff = 0;
    for (VertexId v = 0; v < 500; ++v) diff += a.weight(v) != c.weight(v);
    CHECK(diff > 400); // different seeds give different draws
}

TEST_CASE("assigned weights pass a chi-square uniformity check") {
    // 199 degrees of freedom; 265 is beyond the 0.001 quantile
    for (std::uint64_t seed : {7ull, 1234567ull}) {
        WeightedGraph g(100000, 1);
        assign_weights(g, seed);
        std::vector<int> counts(201, 0);
        for (VertexId v = 0; v < 100000; ++v) ++counts[static_cast<int>(g.weight(v))];
        double expected = 100000.0 / 200.0;
        double chi2 = 0.0;
        for (int w = 1; w <= 200; ++w) {
            double d = counts[w] - expected;
            chi2 += d * d / expected;
        }
        CHECK(chi2 < 265.0);
    }
}
