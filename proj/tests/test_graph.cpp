#include "doctest.h"

#include "mwc/graph.hpp"
#include "mwc/oracle.hpp"
#include "support/gen.hpp"

using namespace mwc;
using testgen::from_edges;

TEST_CASE("adjacency basics on triangle and path") {
    WeightedGraph tri = from_edges({1, 1, 1}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(tri.is_adjacent(0, 1));
    CHECK(tri.is_adjacent(1, 0));
    CHECK_FALSE(tri.is_adjacent(0, 0));

    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    CHECK_FALSE(path.is_adjacent(0, 2));
    CHECK(path.n() == 3);
    CHECK(path.m() == 2);
}

TEST_CASE("adjacency queries reject dead and out-of-range vertices") {
    WeightedGraph g = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    g.remove_vertex(2);
    CHECK_THROWS_AS(g.is_adjacent(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(7), std::invalid_argument);
    CHECK_THROWS_AS(g.neighborhood_intersection(2, 0), std::invalid_argument);
}

TEST_CASE("neighborhood intersection") {
    WeightedGraph tri = from_edges({1, 1, 1}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(tri.neighborhood_intersection(0, 1) == std::vector<VertexId>{2});

    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    CHECK(path.neighborhood_intersection(0, 2) == std::vector<VertexId>{1});

    WeightedGraph k4 = from_edges({1, 1, 1, 1},
                                  {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(k4.neighborhood_intersection(0, 1) == std::vector<VertexId>{2, 3});
}

TEST_CASE("twin contraction keeps weight and adjacency") {
    WeightedGraph tri = from_edges({10, 20, 5}, {{1, 2}, {1, 3}, {2, 3}});
    VertexId survivor = tri.contract_twins(0, 1);
    CHECK(survivor == 0);
    CHECK(tri.weight(0) == 30);
    CHECK(tri.n() == 2);
    CHECK(tri.is_adjacent(0, 2));
    CHECK(tri.check_consistency());
    CHECK(brute_force_opt(tri).weight == 35);
}

TEST_CASE("contract_twins rejects non-twins") {
    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    CHECK_THROWS_AS(path.contract_twins(0, 1), std::invalid_argument);
}

TEST_CASE("edge and vertex removal update caches") {
    WeightedGraph tri = from_edges({10, 20, 5}, {{1, 2}, {1, 3}, {2, 3}});
    Weight n3_before = tri.neighborhood_weight(2);
    tri.remove_edge(0, 1);
    CHECK(tri.m() == 2);
    CHECK(tri.neighborhood_weight(2) == n3_before);
    CHECK(tri.neighborhood_weight(0) == 15); // lost w(2)=20
    CHECK(tri.check_consistency());

    WeightedGraph iso = from_edges({3, 4}, {});
    iso.remove_vertex(0);
    CHECK(iso.n() == 1);
    CHECK(iso.m() == 0);
}

TEST_CASE("degeneracy ordering follows min degree with id ties") {
    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    CHECK(degeneracy_ordering(path) == std::vector<VertexId>{0, 1, 2});

    WeightedGraph k3 = from_edges({1, 1, 1}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(degeneracy_ordering(k3) == std::vector<VertexId>{0, 1, 2});

    // star: leaves peel first until the center's degree drops to 1; from
    // there the id tie-break puts the center before the last leaf
    WeightedGraph star = from_edges({1, 1, 1, 1}, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(degeneracy_ordering(star) == std::vector<VertexId>{1, 2, 0, 3});
}

TEST_CASE("degeneracy ordering is a min-degree peeling permutation") {
    Xoshiro256ss rng(7);
    for (int round = 0; round < 30; ++round) {
        WeightedGraph g = testgen::gnp(12, 0.4, rng);
        auto order = degeneracy_ordering(g);
        REQUIRE(order.size() == g.n());
        // replay: each prefix head must have minimum degree among the rest,
        // with the smallest id among the minima
        WeightedGraph scratch = g;
        for (VertexId v : order) {
            std::size_t dmin = scratch.n();
            VertexId arg = v;
            for (VertexId u : scratch.alive_vertices()) {
                if (scratch.degree(u) < dmin) {
                    dmin = scratch.degree(u);
                    arg = u;
                }
            }
            CHECK(scratch.degree(v) == dmin);
            CHECK(v == arg);
            scratch.remove_vertex(v);
        }
    }
}

TEST_CASE("validate_clique") {
    WeightedGraph k3 = from_edges({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(k3.validate_clique(make_clique(k3, {0, 1, 2})));

    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    CHECK_FALSE(path.validate_clique(make_clique(path, {0, 2})));

    Clique wrong = make_clique(k3, {0, 1, 2});
    wrong.weight += 1;
    CHECK_FALSE(k3.validate_clique(wrong));
}

TEST_CASE("caches survive random mutation sequences") {
    Xoshiro256ss rng(42);
    for (int round = 0; round < 40; ++round) {
        WeightedGraph g = testgen::gnp(14, 0.5, rng);
        for (int step = 0; step < 12 && g.n() > 1; ++step) {
            auto alive = g.alive_vertices();
            VertexId v = alive[rng.below(alive.size())];
            switch (rng.below(3)) {
            case 0:
                g.remove_vertex(v);
                break;
            case 1:
                if (g.degree(v) > 0) {
                    auto nb = g.neighbors(v);
                    g.remove_edge(v, nb[rng.below(nb.size())]);
                }
                break;
            default:
                g.add_weight(v, static_cast<Weight>(rng.range(1, 50)));
                break;
            }
            REQUIRE(g.check_consistency());
        }
    }
}

TEST_CASE("twin contraction preserves the brute-force optimum") {
    Xoshiro256ss rng(11);
    for (int round = 0; round < 40; ++round) {
        // random graph on 0..8, then vertex 9 planted as a twin of vertex 0
        WeightedGraph base = testgen::gnp(9, 0.5, rng);
        std::vector<Weight> w;
        for (VertexId v = 0; v < 9; ++v) w.push_back(base.weight(v));
        w.push_back(rng.range(1, 200));
        WeightedGraph g(std::move(w));
        for (VertexId v = 0; v < 9; ++v)
            for (VertexId u : base.neighbors(v))
                if (v < u) g.add_edge(v, u);
        for (VertexId u : base.neighbors(0)) g.add_edge(9, u);
        g.add_edge(0, 9);

        Weight before = brute_force_opt(g).weight;
        Weight w0 = g.weight(0), w9 = g.weight(9);
        g.contract_twins(0, 9);
        CHECK(g.weight(0) == w0 + w9);
        CHECK(g.check_consistency());
        // the merged vertex stands for both twins, so the optimum is kept
        CHECK(brute_force_opt(g).weight == before);
    }
}

TEST_CASE("compact renumbers densely and keeps structure") {
    WeightedGraph g = from_edges({5, 6, 7, 8}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    g.remove_vertex(1);
    auto [kernel, orig] = g.compact();
    CHECK(kernel.n() == 3);
    CHECK(kernel.num_slots() == 3);
    CHECK(orig == std::vector<VertexId>{0, 2, 3});
    CHECK(kernel.weight(0) == 5);
    CHECK(kernel.weight(1) == 7);
    CHECK(kernel.is_adjacent(1, 2));
    CHECK(kernel.is_adjacent(0, 2));
    CHECK_FALSE(kernel.is_adjacent(0, 1));
    CHECK(kernel.check_consistency());
}
