#include "doctest.h"

#include "mwc/bounds.hpp"
#include "mwc/oracle.hpp"
#include "mwc/reductions.hpp"
#include "support/gen.hpp"

#include <functional>

using namespace mwc;
using testgen::from_edges;

namespace {

// Fires the rule at every vertex once (ascending id). Returns fire count.
int sweep(WeightedGraph& g, const std::function<bool(WeightedGraph&, VertexId)>& rule) {
    int fired = 0;
    for (VertexId v = 0; v < g.num_slots(); ++v)
        if (g.alive(v) && rule(g, v)) ++fired;
    return fired;
}

// Soundness harness: after the rule fired, the optimum must be preserved
// under the trace accounting; bound-based rules only preserve
// max(w(best), kernel optimum).
void check_sound(const WeightedGraph& pristine, WeightedGraph& kernel,
                 const ReductionTrace& trace, Weight best_weight, bool bound_rule) {
    Weight input_opt = brute_force_opt(pristine).weight;
    Clique kernel_opt = brute_force_opt(kernel);
    if (bound_rule) {
        CHECK(std::max(best_weight, kernel_opt.weight) == input_opt);
    } else {
        CHECK(kernel_opt.weight == input_opt);
    }
    Clique lifted = reconstruct(trace, kernel_opt, kernel);
    CHECK(pristine.validate_clique(lifted)); // recomputed weight must agree
}

} // namespace

TEST_CASE("rule 1: neighborhood weight") {
    // star: center 5, leaves 3 and 4; best = {center, leaf2} = 9
    WeightedGraph g = from_edges({5, 3, 4}, {{1, 2}, {1, 3}});
    BestClique best{make_clique(g, {0, 2})};
    REQUIRE(best.weight() == 9);
    ReductionTrace trace;
    CHECK(reduce_neighborhood_weight(g, trace, 1, best)); // w(N[l1]) = 8 <= 9
    CHECK_FALSE(g.alive(1));
    // on the untouched graph the center survives: 12 > 9
    WeightedGraph g2 = from_edges({5, 3, 4}, {{1, 2}, {1, 3}});
    ReductionTrace t2;
    CHECK_FALSE(reduce_neighborhood_weight(g2, t2, 0, best));

    // isolated vertex at the <= boundary goes
    WeightedGraph iso = from_edges({9, 5, 4}, {{2, 3}});
    BestClique b2{make_clique(iso, {1, 2})};
    ReductionTrace t3;
    CHECK(reduce_neighborhood_weight(iso, t3, 0, b2));
}

TEST_CASE("rule 2: largest-weight neighbor") {
    // v=1(w1) adjacent to u*=2(w10) and x=3(w2), u* and x non-adjacent;
    // separate clique {4,5} provides the bound
    auto build = [](Weight w4, Weight w5) {
        return from_edges({1, 10, 2, w4, w5}, {{1, 2}, {1, 3}, {4, 5}});
    };
    WeightedGraph g = build(5, 6);
    BestClique best{make_clique(g, {3, 4})};
    REQUIRE(best.weight() == 11);
    ReductionTrace trace;
    CHECK(reduce_largest_weight_neighbor(g, trace, 0, best)); // max(3, 11) <= 11
    CHECK_FALSE(g.alive(0));

    WeightedGraph g2 = build(5, 5);
    BestClique weaker{make_clique(g2, {3, 4})};
    ReductionTrace t2;
    CHECK_FALSE(reduce_largest_weight_neighbor(g2, t2, 0, weaker)); // 11 > 10

    // degree-0 precondition
    WeightedGraph iso = from_edges({1, 2, 3}, {{2, 3}});
    BestClique b{make_clique(iso, {1, 2})};
    ReductionTrace t3;
    CHECK_FALSE(reduce_largest_weight_neighbor(iso, t3, 0, b));
}

TEST_CASE("rule 2 never removes members of the best clique") {
    WeightedGraph g = from_edges({1, 1}, {{1, 2}});
    BestClique best{make_clique(g, {0, 1})};
    ReductionTrace trace;
    CHECK_FALSE(reduce_largest_weight_neighbor(g, trace, 0, best));
    CHECK_FALSE(reduce_largest_weight_neighbor(g, trace, 1, best));
}

TEST_CASE("rule 3: twin contraction") {
    WeightedGraph tri = from_edges({10, 20, 5}, {{1, 2}, {1, 3}, {2, 3}});
    ReductionTrace trace;
    CHECK(reduce_twin(tri, trace, 0));
    CHECK(tri.weight(0) == 30);
    CHECK(tri.is_adjacent(0, 2));
    CHECK(trace.back() == ReductionEvent{ReductionEvent::Kind::twin_contracted, 0, 1});
    CHECK(brute_force_opt(tri).weight == 35);

    WeightedGraph path = from_edges({1, 1, 1}, {{1, 2}, {2, 3}});
    ReductionTrace t2;
    CHECK_FALSE(reduce_twin(path, t2, 0));

    // unit K4 collapses into one vertex of weight 4
    WeightedGraph k4 = from_edges({1, 1, 1, 1},
                                  {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    ReductionTrace t3;
    while (sweep(k4, [&](WeightedGraph& g, VertexId v) { return reduce_twin(g, t3, v); }) > 0) {
    }
    CHECK(k4.n() == 1);
    CHECK(k4.weight(k4.alive_vertices().front()) == 4);
}

TEST_CASE("rule 4: non-adjacent domination") {
    // v=1 - x=2, u=3 - x, u - y=4; v and u non-adjacent
    WeightedGraph g = from_edges({1, 5, 2, 5}, {{1, 2}, {3, 2}, {3, 4}});
    ReductionTrace trace;
    CHECK(reduce_domination_nonadjacent(g, trace, 0));
    CHECK_FALSE(g.alive(0));

    WeightedGraph g2 = from_edges({3, 5, 2, 5}, {{1, 2}, {3, 2}, {3, 4}});
    ReductionTrace t2;
    CHECK_FALSE(reduce_domination_nonadjacent(g2, t2, 0)); // w(v)=3 > w(u)=2

    // fully symmetric pair: the larger id dies
    WeightedGraph sym = from_edges({4, 9, 4}, {{1, 2}, {3, 2}});
    ReductionTrace t3;
    CHECK_FALSE(reduce_domination_nonadjacent(sym, t3, 0)); // 0 is the smaller id
    CHECK(reduce_domination_nonadjacent(sym, t3, 2));
    CHECK(sym.alive(0));
    CHECK_FALSE(sym.alive(2));
    CHECK(brute_force_opt(sym).weight == 13);
}

TEST_CASE("rule 5: adjacent domination transfers weight and cuts the edge") {
    // triangle u=1,v=2,x=3 plus pendant y=4 on u
    WeightedGraph g = from_edges({2, 1, 4, 8}, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    WeightedGraph pristine = g;
    ReductionTrace trace;
    CHECK(reduce_domination_adjacent(g, trace, 0, 1));
    CHECK(g.weight(1) == 3);
    CHECK_FALSE(g.is_adjacent(0, 1));
    REQUIRE(trace.size() == 2);
    CHECK(trace[0] == ReductionEvent{ReductionEvent::Kind::weight_transferred, 1, 0});
    CHECK(trace[1] == ReductionEvent{ReductionEvent::Kind::edge_removed, 0, 1});
    // optimum preserved under the transfer accounting
    CHECK(brute_force_opt(g).weight == brute_force_opt(pristine).weight);
    // the kernel clique {v,x} lifts to {u,v,x}
    Clique vx = make_clique(g, {1, 2});
    CHECK(vx.weight == 7);
    Clique lifted = reconstruct(trace, vx, g);
    CHECK(lifted.members == std::vector<VertexId>{0, 1, 2});
    CHECK(pristine.validate_clique(lifted));

    // K2: transfer and detach
    WeightedGraph k2 = from_edges({3, 4}, {{1, 2}});
    ReductionTrace t2;
    CHECK(reduce_domination_adjacent(k2, t2, 0, 1));
    CHECK(k2.weight(1) == 7);
    CHECK(k2.m() == 0);
    CHECK(brute_force_opt(k2).weight == 7);
}

TEST_CASE("rule 6: edge bounding uses a strict bound") {
    // a-b with no common neighbor; clique {3,4} supplies the bound
    WeightedGraph g = from_edges({1, 2, 2, 2}, {{1, 2}, {3, 4}});
    BestClique best4{make_clique(g, {2, 3})};
    REQUIRE(best4.weight() == 4);
    ReductionTrace trace;
    CHECK(reduce_edge_bounding(g, trace, 0, best4) == 1); // ub_inc = 3 < 4
    CHECK(g.m() == 1);

    WeightedGraph g2 = from_edges({1, 2, 1, 2}, {{1, 2}, {3, 4}});
    BestClique best3{make_clique(g2, {2, 3})};
    REQUIRE(best3.weight() == 3);
    ReductionTrace t2;
    CHECK(reduce_edge_bounding(g2, t2, 0, best3) == 0); // 3 not < 3

    WeightedGraph k4 = from_edges({1, 1, 1, 1},
                                  {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    BestClique bestk{make_clique(k4, {0, 1, 2, 3})};
    ReductionTrace t3;
    CHECK(reduce_edge_bounding(k4, t3, 0, bestk) == 0); // every ub_inc = 4
}

TEST_CASE("rule 7: simplicial removal updates the best clique") {
    WeightedGraph tri = from_edges({1, 1, 1}, {{1, 2}, {1, 3}, {2, 3}});
    BestClique best;
    ReductionTrace trace;
    CHECK(reduce_simplicial(tri, trace, 0, best));
    CHECK(best.weight() == 3);
    CHECK(best.clique.members == std::vector<VertexId>{0, 1, 2});
    CHECK_FALSE(tri.alive(0));

    WeightedGraph cycle = from_edges({1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    BestClique b2;
    ReductionTrace t2;
    for (VertexId v = 0; v < 4; ++v) CHECK_FALSE(reduce_simplicial(cycle, t2, v, b2));

    // lift through an earlier twin contraction
    WeightedGraph tri2 = from_edges({10, 20, 5}, {{1, 2}, {1, 3}, {2, 3}});
    ReductionTrace t3;
    BestClique b3;
    REQUIRE(reduce_twin(tri2, t3, 0));
    CHECK(reduce_simplicial(tri2, t3, 2, b3));
    CHECK(b3.weight() == 35);
    CHECK(b3.clique.members == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("rules that do not fire leave the graph bit-identical") {
    Xoshiro256ss rng(23);
    for (int round = 0; round < 25; ++round) {
        WeightedGraph g = testgen::gnp(10, 0.35, rng);
        BestClique best{initial_clique(g)};
        ReductionTrace trace;
        for (VertexId v = 0; v < g.num_slots(); ++v) {
            if (!g.alive(v)) continue;
            WeightedGraph before = g;
            bool fired = false;
            switch (round % 4) {
            case 0: fired = reduce_twin(g, trace, v); break;
            case 1: fired = reduce_domination_nonadjacent(g, trace, v); break;
            case 2: fired = reduce_simplicial(g, trace, v, best); break;
            default: fired = reduce_largest_weight_neighbor(g, trace, v, best); break;
            }
            if (!fired) CHECK(g == before);
        }
    }
}

TEST_CASE("per-rule soundness fuzz against the oracle") {
    Xoshiro256ss rng(71);

    auto fuzz = [&](const char* name, bool bound_rule, bool plant_twin,
                    const std::function<bool(WeightedGraph&, ReductionTrace&, VertexId,
                                             BestClique&)>& rule) {
        CAPTURE(name);
        int fired_instances = 0;
        for (int round = 0; round < 400 && fired_instances < 40; ++round) {
            double p = 0.15 + 0.06 * (round % 12);
            WeightedGraph g = testgen::gnp(plant_twin ? 12 : 13, p, rng);
            if (plant_twin) {
                std::vector<Weight> w;
                for (VertexId v = 0; v < 12; ++v) w.push_back(g.weight(v));
                w.push_back(rng.range(1, 200));
                WeightedGraph h(std::move(w));
                for (VertexId v = 0; v < 12; ++v)
                    for (VertexId u : g.neighbors(v))
                        if (v < u) h.add_edge(v, u);
                for (VertexId u : g.neighbors(0)) h.add_edge(12, u);
                h.add_edge(0, 12);
                g = std::move(h);
            }
            WeightedGraph pristine = g;
            BestClique best{initial_clique(g)};
            ReductionTrace trace;
            int fired = 0;
            for (VertexId v = 0; v < g.num_slots(); ++v)
                if (g.alive(v) && rule(g, trace, v, best)) ++fired;
            if (fired == 0) continue;
            ++fired_instances;
            check_sound(pristine, g, trace, best.weight(), bound_rule);
        }
        CHECK(fired_instances >= 40);
    };

    fuzz("neighborhood_weight", true, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique& b) {
             return reduce_neighborhood_weight(g, t, v, b);
         });
    fuzz("largest_weight_neighbor", true, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique& b) {
             return reduce_largest_weight_neighbor(g, t, v, b);
         });
    fuzz("edge_bounding", true, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique& b) {
             return reduce_edge_bounding(g, t, v, b) > 0;
         });
    fuzz("twin", false, true,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique&) {
             return reduce_twin(g, t, v);
         });
    fuzz("domination_nonadjacent", false, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique&) {
             return reduce_domination_nonadjacent(g, t, v);
         });
    fuzz("domination_adjacent", false, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique&) {
             return reduce_domination_adjacent_at(g, t, v);
         });
    // simplicial may delete the only optimum witness, but only after Ĉ has
    // adopted it, so the max() guarantee is the right one here too
    fuzz("simplicial", true, false,
         [](WeightedGraph& g, ReductionTrace& t, VertexId v, BestClique& b) {
             return reduce_simplicial(g, t, v, b);
         });
}
