#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mgc/bounds.hpp"
#include "mgc/oracle.hpp"
#include "mgc/structure.hpp"
#include "mgc/vertex_color.hpp"
#include "test_util.hpp"

using mgc::Multigraph;
using mgc::VertexColoring;
using namespace test_util;

namespace {

bool same_graph(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && edge_multiset(a) == edge_multiset(b);
}

int cover_count(const VertexColoring& f, int v) {
    int count = 0;
    for (const auto& s : f.stable_sets)
        count += std::count(s.begin(), s.end(), v) > 0 ? 1 : 0;
    return count;
}

}  // namespace

TEST_CASE("verify_vertex_coloring") {
    Multigraph c5 = cycle_graph(5);
    VertexColoring good{{{0, 2}, {1, 3}, {4}}};
    CHECK(mgc::verify_vertex_coloring(c5, {1, 1, 1, 1, 1}, good).ok);

    VertexColoring adjacent{{{0, 1}}};
    auto bad = mgc::verify_vertex_coloring(c5, {0, 0, 0, 0, 0}, adjacent);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("adjacent") != std::string::npos);

    auto under = mgc::verify_vertex_coloring(c5, {1, 1, 1, 1, 1}, VertexColoring{{{0, 2}}});
    CHECK_FALSE(under.ok);
    CHECK(under.violation.find("vertex 1") != std::string::npos);
}

TEST_CASE("root_graph on fixed instances") {
    auto c5_root = mgc::root_graph(cycle_graph(5));
    REQUIRE(c5_root.has_value());
    CHECK(are_isomorphic(c5_root->graph, cycle_graph(5)));
    CHECK(same_graph(mgc::line_graph(c5_root->graph), cycle_graph(5)));

    // the triangle's root is the 3-star (largest-clique-first resolution)
    auto k3_root = mgc::root_graph(complete_graph(3));
    REQUIRE(k3_root.has_value());
    CHECK(are_isomorphic(k3_root->graph, star_graph(3)));

    CHECK_FALSE(mgc::root_graph(star_graph(3)).has_value());
    CHECK_FALSE(mgc::root_graph(odd_diamond_gadget()).has_value());

    // an isolated vertex is the line graph of a lone edge
    auto lone = mgc::root_graph(Multigraph(1));
    REQUIRE(lone.has_value());
    CHECK(lone->graph.vertex_count() == 2);
    CHECK(lone->graph.edge_count() == 1);
}

TEST_CASE("root_graph round trip over the corpus") {
    std::vector<Multigraph> corpus = line_root_corpus();
    corpus.push_back(complete_graph(3));
    corpus.push_back(complete_graph(4));
    corpus.push_back(star_graph(4));
    corpus.push_back(bull_graph());
    corpus.push_back(triangle_with_tail());
    corpus.push_back(bowtie_bridge());
    corpus.push_back(mgc::c5_plus());
    corpus.push_back(mgc::h_m(1));
    for (const Multigraph& h : corpus) {
        REQUIRE(h.edge_count() <= 8);
        Multigraph l = mgc::line_graph(h);
        auto root = mgc::root_graph(l);
        REQUIRE(root.has_value());
        CHECK(same_graph(mgc::line_graph(root->graph), l));
    }
}

TEST_CASE("line graphs of large claw-free survivors exist") {
    // operational restatement: a connected claw-free graph with max degree 4,
    // clique number 3, only large diamonds, and no square-of-circuit shape is a
    // line graph
    Rng rng(89);
    int accepted = 0;
    std::vector<Multigraph> pool;
    for (int trial = 0; trial < 120; ++trial) pool.push_back(random_simple_graph(rng, 7, 40));
    for (const auto& root : line_root_corpus()) pool.push_back(mgc::line_graph(root));
    for (const Multigraph& g : pool) {
        if (g.max_degree() > 4) continue;
        if (mgc::find_claw(g) || mgc::find_k4(g)) continue;
        if (mgc::connected_components(g).size() != 1) continue;
        bool all_large = true;
        for (const auto& d : mgc::find_diamonds(g))
            if (d.small) all_large = false;
        if (!all_large) continue;
        if (mgc::recognize_square_of_circuit(g)) continue;
        ++accepted;
        CHECK(mgc::root_graph(g).has_value());
    }
    CHECK(accepted >= 10);
}

TEST_CASE("color_line_graph_weighted") {
    auto claw_case = mgc::color_line_graph_weighted(star_graph(3), {1, 1, 1});
    CHECK(claw_case.palette == 3);
    for (const auto& s : claw_case.coloring.stable_sets) CHECK(s.size() == 1);
    CHECK(claw_case.optimal);

    auto c5_case = mgc::color_line_graph_weighted(cycle_graph(5), {1, 1, 1, 1, 1});
    CHECK(c5_case.palette == 3);
    std::multiset<size_t> sizes;
    for (const auto& s : c5_case.coloring.stable_sets) sizes.insert(s.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 2});

    auto doubled = mgc::color_line_graph_weighted(cycle_graph(5), {2, 2, 2, 2, 2});
    CHECK(doubled.palette == 5);
    CHECK(doubled.optimal);

    // coverage is exact: line-graph vertex e sits in exactly weight(e) sets
    Multigraph l = mgc::line_graph(cycle_graph(5));
    mgc::WeightVector w{2, 0, 1, 3, 2};
    auto mixed = mgc::color_line_graph_weighted(cycle_graph(5), w);
    CHECK(mgc::verify_vertex_coloring(l, w, mixed.coloring).ok);
    for (int e = 0; e < 5; ++e) CHECK(cover_count(mixed.coloring, e) == w[static_cast<size_t>(e)]);
}

TEST_CASE("reinsert_small_diamond handles the bare diamond") {
    Multigraph d = diamond_graph();  // centrals 1 and 2
    VertexColoring partial{{{0, 3}, {2}}};  // exact for weights (1,0,1,1)
    auto out = mgc::reinsert_small_diamond(d, {1, 1, 1, 1}, 1, partial);
    REQUIRE(out.ok);
    CHECK(out.swaps == 0);
    CHECK_FALSE(out.used_free_set);  // a new singleton {1}
    CHECK(out.coloring.stable_sets.size() == 3);
    CHECK(mgc::verify_vertex_coloring(d, {1, 1, 1, 1}, out.coloring).ok);
}

TEST_CASE("reinsert_small_diamond absorbs into a free set") {
    // diamond plus a lone far vertex: some set avoids the whole neighborhood
    Multigraph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    VertexColoring partial{{{3, 4}, {0}, {2}}};  // exact for weights (1,0,1,1,1)
    auto out = mgc::reinsert_small_diamond(g, {1, 1, 1, 1, 1}, 1, partial);
    REQUIRE(out.ok);
    CHECK(out.swaps == 1);
    CHECK(out.used_free_set);
    CHECK(out.coloring.stable_sets.size() == 3);
    CHECK(mgc::verify_vertex_coloring(g, {1, 1, 1, 1, 1}, out.coloring).ok);
}

TEST_CASE("reinsert_small_diamond surfaces the odd-hole witness") {
    // diamond v=0, x=1, y=2, w=3 plus the path 1-4-5-2 around the back
    Multigraph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}});
    REQUIRE_FALSE(mgc::find_claw(g).has_value());
    REQUIRE_FALSE(mgc::find_k4(g).has_value());
    VertexColoring partial{{{1, 5}, {2, 4}, {3}}};  // exact for weights (0,1,1,1,1,1)
    auto out = mgc::reinsert_small_diamond(g, {1, 1, 1, 1, 1, 1}, 0, partial);
    CHECK_FALSE(out.ok);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->vertex == 3);
    CHECK(out.witness->count >= 3);
    CHECK(out.witness->hole.size() == 5);
}

TEST_CASE("color_tperfect_clawfree on fixed instances") {
    auto c5 = mgc::color_tperfect_clawfree(cycle_graph(5), {1, 1, 1, 1, 1});
    REQUIRE(c5.ok);
    CHECK(c5.coloring.stable_sets.size() == 3);
    CHECK(c5.optimal);
    CHECK(c5.formula == 3);

    auto dia = mgc::color_tperfect_clawfree(diamond_graph(), {1, 1, 1, 1});
    REQUIRE(dia.ok);
    CHECK(dia.coloring.stable_sets.size() == 3);
    CHECK(dia.optimal);

    auto square7 = mgc::color_tperfect_clawfree(mgc::square_of_circuit(7),
                                                mgc::WeightVector(7, 1));
    CHECK_FALSE(square7.ok);
    REQUIRE(square7.witnesses.size() == 1);
    CHECK(square7.witnesses[0].kind == mgc::Witness::Kind::SquareOfCircuit);
    CHECK(square7.witnesses[0].parameter == 7);

    auto claw = mgc::color_tperfect_clawfree(star_graph(3), {1, 1, 1, 1});
    CHECK_FALSE(claw.ok);
    REQUIRE(!claw.witnesses.empty());
    CHECK(claw.witnesses[0].kind == mgc::Witness::Kind::Claw);

    auto k4 = mgc::color_tperfect_clawfree(complete_graph(4), {1, 1, 1, 1});
    CHECK_FALSE(k4.ok);
    REQUIRE(!k4.witnesses.empty());
    CHECK(k4.witnesses[0].kind == mgc::Witness::Kind::K4);
}

TEST_CASE("the diamond run records its reduction trace") {
    auto dia = mgc::color_tperfect_clawfree(diamond_graph(), {1, 1, 1, 1});
    REQUIRE(dia.ok);
    REQUIRE(dia.trace.steps.size() == 2);
    CHECK(std::holds_alternative<mgc::ReductionTrace::LineGraphStep>(dia.trace.steps[0]));
    auto* step = std::get_if<mgc::ReductionTrace::DiamondStep>(&dia.trace.steps[1]);
    REQUIRE(step != nullptr);
    CHECK(step->vertex == 1);
    std::string text = dia.trace.format();
    CHECK(text.find("diamond v=1") != std::string::npos);
    CHECK(text.find("line-graph") != std::string::npos);
}

TEST_CASE("zero weights and disconnected inputs") {
    auto none = mgc::color_tperfect_clawfree(cycle_graph(5), {0, 0, 0, 0, 0});
    REQUIRE(none.ok);
    CHECK(none.coloring.stable_sets.empty());

    auto partial = mgc::color_tperfect_clawfree(cycle_graph(5), {2, 0, 1, 0, 1});
    REQUIRE(partial.ok);
    CHECK(static_cast<long long>(partial.coloring.stable_sets.size()) == partial.formula);
    CHECK(mgc::oracle::brute_chi_weighted(cycle_graph(5), {2, 0, 1, 0, 1}) ==
          partial.formula);

    // two disjoint 5-circuits: palettes are shared, not summed
    Multigraph pair(10);
    for (int i = 0; i < 5; ++i) pair.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) pair.add_edge(5 + i, 5 + (i + 1) % 5);
    auto both = mgc::color_tperfect_clawfree(pair, mgc::WeightVector(10, 1));
    REQUIRE(both.ok);
    CHECK(both.coloring.stable_sets.size() == 3);
    CHECK(mgc::verify_vertex_coloring(pair, mgc::WeightVector(10, 1), both.coloring).ok);
}

TEST_CASE("gadget corpus agrees with the formula and the oracle") {
    Rng rng(97);
    std::vector<Multigraph> corpus = small_diamond_gadgets();
    corpus.push_back(cycle_graph(5));
    corpus.push_back(mgc::square_of_circuit(6));
    corpus.push_back(diamond_graph());
    for (const Multigraph& g : corpus) {
        bool has_small = false;
        for (const auto& d : mgc::find_diamonds(g)) has_small |= d.small;
        for (int trial = 0; trial < 12; ++trial) {
            mgc::WeightVector c;
            for (int v = 0; v < g.vertex_count(); ++v) c.push_back(rng.next(0, 3));
            auto run = mgc::color_tperfect_clawfree(g, c);
            REQUIRE(run.ok);
            long long exact = mgc::oracle::brute_chi_weighted(g, c);
            CHECK(static_cast<long long>(run.coloring.stable_sets.size()) == run.formula);
            CHECK(run.formula == exact);
            CHECK(run.optimal);
        }
    }
    // the gadgets really exercise the reduction branch
    for (const Multigraph& g : small_diamond_gadgets()) {
        bool has_small = false;
        for (const auto& d : mgc::find_diamonds(g)) has_small |= d.small;
        CHECK(has_small);
    }
}

TEST_CASE("validate_tperfect_clawfree_input") {
    auto sq10 = mgc::validate_tperfect_clawfree_input(mgc::square_of_circuit(10));
    bool square_flagged = false;
    for (const auto& w : sq10)
        if (w.kind == mgc::Witness::Kind::SquareOfCircuit && w.parameter == 10)
            square_flagged = true;
    CHECK(square_flagged);

    auto ico = mgc::validate_tperfect_clawfree_input(icosahedron());
    bool degree_flagged = false;
    for (const auto& w : ico)
        if (w.kind == mgc::Witness::Kind::HighDegree && w.parameter == 5) degree_flagged = true;
    CHECK(degree_flagged);

    CHECK(mgc::validate_tperfect_clawfree_input(mgc::square_of_circuit(6)).empty());
    CHECK(mgc::validate_tperfect_clawfree_input(mgc::square_of_circuit(3)).empty());
    CHECK(mgc::validate_tperfect_clawfree_input(cycle_graph(5)).empty());

    // the petersen graph trips only the claw check
    auto pet = mgc::validate_tperfect_clawfree_input(mgc::petersen());
    REQUIRE(!pet.empty());
    for (const auto& w : pet) CHECK(w.kind == mgc::Witness::Kind::Claw);

    // apex over three circuit vertices: the odd-hole neighbor check fires
    Multigraph apex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}});
    bool hole_flagged = false;
    for (const auto& w : mgc::validate_tperfect_clawfree_input(apex))
        if (w.kind == mgc::Witness::Kind::OddHoleNeighbors) hole_flagged = true;
    CHECK(hole_flagged);
}

TEST_CASE("witness text forms") {
    mgc::Witness w;
    w.kind = mgc::Witness::Kind::SquareOfCircuit;
    w.parameter = 7;
    CHECK(w.format() == "witness square_of_circuit k=7");
    w.kind = mgc::Witness::Kind::Claw;
    w.vertices = {0, 1, 2, 3};
    CHECK(w.format() == "witness claw 0 1 2 3");
    w.kind = mgc::Witness::Kind::HighDegree;
    w.vertices = {4};
    w.parameter = 5;
    CHECK(w.format() == "witness degree vertex=4 d=5");
}

TEST_CASE("icosahedron fixture shape") {
    Multigraph ico = icosahedron();
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    CHECK_FALSE(mgc::find_claw(ico).has_value());
    CHECK_FALSE(mgc::find_k4(ico).has_value());
}
