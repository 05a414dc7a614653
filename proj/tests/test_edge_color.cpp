#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mgc/bounds.hpp"
#include "mgc/edge_color.hpp"
#include "mgc/oracle.hpp"
#include "mgc/structure.hpp"
#include "test_util.hpp"

using mgc::EdgeColoring;
using mgc::Multigraph;
using namespace test_util;

namespace {

EdgeColoring make_coloring(const Multigraph& h, int palette,
                           const std::vector<std::pair<int, int>>& assignments) {
    EdgeColoring col(h.vertex_count(), h.edge_count());
    for (int c = 0; c < palette; ++c) col.add_class();
    for (auto [e, c] : assignments) col.assign(h, e, c);
    return col;
}

}  // namespace

TEST_CASE("kempe_swap exchanges the classes along a path") {
    Multigraph path = path_graph(2);  // edges (0,1), (1,2)
    EdgeColoring col = make_coloring(path, 2, {{0, 0}, {1, 1}});
    auto comp = mgc::kempe_component(path, col, 0, 0, 1);
    CHECK(comp.vertices == std::vector<int>{0, 1, 2});
    CHECK(comp.edges == std::vector<int>{0, 1});
    mgc::kempe_swap(path, col, 0, 1, comp);
    CHECK(col.color_of(0) == 1);
    CHECK(col.color_of(1) == 0);
    CHECK(mgc::verify_edge_coloring(path, col).ok);
}

TEST_CASE("kempe_swap moves an isolated single-class edge") {
    Multigraph two(4, {{0, 1}, {2, 3}});
    EdgeColoring col = make_coloring(two, 2, {{0, 0}, {1, 1}});
    auto comp = mgc::kempe_component(two, col, 0, 0, 1);
    CHECK(comp.edges == std::vector<int>{0});
    mgc::kempe_swap(two, col, 0, 1, comp);
    CHECK(col.color_of(0) == 1);
    CHECK(mgc::verify_edge_coloring(two, col).ok);
}

TEST_CASE("kempe_swap walks an alternating even cycle") {
    Multigraph c4 = cycle_graph(4);
    EdgeColoring col = make_coloring(c4, 2, {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
    auto comp = mgc::kempe_component(c4, col, 2, 0, 1);
    CHECK(comp.vertices.size() == 4);
    CHECK(comp.edges.size() == 4);
    mgc::kempe_swap(c4, col, 0, 1, comp);
    CHECK(col.color_of(0) == 1);
    CHECK(col.color_of(1) == 0);
    CHECK(col.color_of(2) == 1);
    CHECK(col.color_of(3) == 0);
    CHECK(mgc::verify_edge_coloring(c4, col).ok);
}

TEST_CASE("kempe_swap rejects a non-component") {
    Multigraph path = path_graph(2);
    EdgeColoring col = make_coloring(path, 2, {{0, 0}, {1, 1}});
    mgc::KempeComponent half;
    half.vertices = {0, 1};
    half.edges = {0};  // a genuine component continues through edge 1
    CHECK_THROWS_AS(mgc::kempe_swap(path, col, 0, 1, half), std::invalid_argument);
}

TEST_CASE("kempe swaps preserve validity and palette on random colorings") {
    Rng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        Multigraph h = random_multigraph(rng, 7, 10, 3);
        auto result = mgc::color_edges(h);
        EdgeColoring col = result.coloring;
        int k = col.palette_size();
        if (k < 2) continue;
        for (int swap = 0; swap < 20; ++swap) {
            int a = rng.next(0, k - 1);
            int b = rng.next(0, k - 1);
            if (a == b) continue;
            int seed = rng.next(0, h.vertex_count() - 1);
            auto comp = mgc::kempe_component(h, col, seed, a, b);
            mgc::kempe_swap(h, col, a, b, comp);
            CHECK(col.palette_size() == k);
            auto check = mgc::verify_edge_coloring(h, col);
            if (!check.ok) FAIL(check.violation);
        }
    }
}

TEST_CASE("find_ab_pair") {
    // two-colored path; the closing edge's ends are covered by opposite classes
    Multigraph closed(3, {{0, 1}, {1, 2}, {0, 2}});
    EdgeColoring col = make_coloring(closed, 2, {{0, 0}, {1, 1}});
    auto pair = mgc::find_ab_pair(col, 0, 2);
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0);   // covers 0, misses 2
    CHECK(pair->second == 1);  // covers 2, misses 0

    // every class misses both ends: no pair, the free class is found upstream
    Multigraph sparse(4, {{0, 1}, {2, 3}});
    EdgeColoring free_col = make_coloring(sparse, 1, {{0, 0}});
    CHECK_FALSE(mgc::find_ab_pair(free_col, 2, 3).has_value());

    // star: every class covers the center, none covers the new leaf
    Multigraph star = star_graph(4);
    EdgeColoring star_col = make_coloring(star, 3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK_FALSE(mgc::find_ab_pair(star_col, 0, 4).has_value());
}

TEST_CASE("insert_edge free-class step") {
    Multigraph three(6, {{0, 1}, {2, 3}, {4, 5}});
    EdgeColoring col = make_coloring(three, 1, {{0, 0}, {1, 0}});
    auto outcome = mgc::insert_edge(three, col, 2);
    auto* done = std::get_if<mgc::Colored>(&outcome);
    REQUIRE(done != nullptr);
    CHECK(done->coloring.color_of(2) == 0);
}

TEST_CASE("insert_edge closing an alternating 5-circuit yields the ring certificate") {
    Multigraph c5 = cycle_graph(5);
    EdgeColoring col = make_coloring(c5, 2, {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
    auto outcome = mgc::insert_edge(c5, col, 4);
    auto* need = std::get_if<mgc::NewColorNeeded>(&outcome);
    REQUIRE(need != nullptr);
    auto* ring = std::get_if<mgc::OddRingCertificate>(&need->certificate);
    REQUIRE(ring != nullptr);
    CHECK(ring->palette == 2);
    CHECK(ring->ring.vertices.size() == 5);
    CHECK(ring->ring.edges.size() == 5);
    CHECK(static_cast<int>(ring->ring.edges.size()) == ring->palette * ring->ring.r() + 1);
}

TEST_CASE("insert_edge emits a degree certificate at a saturated endpoint") {
    Multigraph star = star_graph(4);
    EdgeColoring col = make_coloring(star, 3, {{0, 0}, {1, 1}, {2, 2}});
    auto outcome = mgc::insert_edge(star, col, 3);
    auto* need = std::get_if<mgc::NewColorNeeded>(&outcome);
    REQUIRE(need != nullptr);
    auto* deg = std::get_if<mgc::DegreeCertificate>(&need->certificate);
    REQUIRE(deg != nullptr);
    CHECK(deg->vertex == 0);
    CHECK(deg->degree == 4);
    CHECK(deg->palette == 3);
}

TEST_CASE("insert_edge finds the chord witness on the house") {
    Multigraph house = mgc::c5_plus();  // edges 01,12,23,34,04,14
    EdgeColoring col = make_coloring(house, 3, {{1, 0}, {3, 0}, {2, 1}, {4, 1}, {5, 2}});
    REQUIRE(mgc::verify_edge_coloring(house, col).violation == "edge 0 is uncolored");
    auto outcome = mgc::insert_edge(house, col, 0);
    auto* found = std::get_if<mgc::OddC5PlusFound>(&outcome);
    REQUIRE(found != nullptr);
    CHECK(mgc::verify_odd_c5p(house, found->certificate));
    CHECK(found->certificate.ear.size() == 2);  // the chord 1-4
    std::set<int> ends(found->certificate.ear.begin(), found->certificate.ear.end());
    CHECK(ends == std::set<int>{1, 4});
}

TEST_CASE("insert_edge swaps the chain away when the ends are separated") {
    // path 0-1-2-3 colored alternately; inserting 0-3 keeps two colors
    Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EdgeColoring col = make_coloring(p4, 2, {{0, 0}, {1, 1}, {2, 0}});
    auto outcome = mgc::insert_edge(p4, col, 3);
    auto* done = std::get_if<mgc::Colored>(&outcome);
    REQUIRE(done != nullptr);
    CHECK(done->coloring.palette_size() == 2);
    CHECK(mgc::verify_edge_coloring(p4, done->coloring).ok);
}

TEST_CASE("color_edges on fixed instances") {
    CHECK(mgc::color_edges(cycle_graph(5)).coloring.palette_size() == 3);
    CHECK(mgc::color_edges(star_graph(4)).coloring.palette_size() == 4);
    CHECK(mgc::color_edges(mgc::h_m(1)).coloring.palette_size() == 3);
    CHECK(mgc::color_edges(mgc::h_m(3)).coloring.palette_size() == 8);
    CHECK(mgc::color_edges(Multigraph(3)).coloring.palette_size() == 0);

    auto c5_run = mgc::color_edges(cycle_graph(5));
    CHECK(c5_run.ring_certificates.size() == 1);
    CHECK(c5_run.c5p_certificates.empty());
}

TEST_CASE("color_edges is deterministic") {
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        Multigraph h = random_multigraph(rng, 7, 10, 3);
        auto first = mgc::color_edges(h);
        auto second = mgc::color_edges(h);
        CHECK(first.coloring.palette_size() == second.coloring.palette_size());
        for (int e = 0; e < h.edge_count(); ++e)
            CHECK(first.coloring.color_of(e) == second.coloring.color_of(e));
    }
}

TEST_CASE("palette stays below the insertion count and the greedy ceiling") {
    Rng rng(73);
    for (int trial = 0; trial < 80; ++trial) {
        Multigraph h = random_multigraph(rng, 7, 10, 3);
        if (h.edge_count() == 0) continue;
        auto result = mgc::color_edges(h);
        int k = result.coloring.palette_size();
        CHECK(k <= h.edge_count());
        CHECK(k <= std::max(1, 2 * h.max_degree() - 1));
        CHECK(mgc::verify_edge_coloring(h, result.coloring).ok);
    }
}

TEST_CASE("ring certificates satisfy the counting identity") {
    Rng rng(79);
    int seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Multigraph h = random_multigraph(rng, 7, 10, 3);
        for (const auto& cert : mgc::color_edges(h).ring_certificates) {
            ++seen;
            CHECK(static_cast<int>(cert.ring.edges.size()) ==
                  cert.palette * cert.ring.r() + 1);
            // the ring's own bound rounds up to exactly one more color
            mgc::Rational bound(2 * static_cast<long long>(cert.ring.edges.size()),
                                static_cast<long long>(cert.ring.vertices.size()) - 1);
            CHECK(mgc::rational_ceil(bound) == cert.palette + 1);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("every edge order reaches the exact palette on subdivision-free graphs") {
    std::vector<Multigraph> fixtures = {
        cycle_graph(5),
        Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}),
        diamond_graph(),
        Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {1, 3}}),
    };
    for (const Multigraph& h : fixtures) {
        REQUIRE(h.edge_count() <= 6);
        REQUIRE(mgc::find_odd_c5p(h).status == mgc::SearchStatus::Absent);
        const int expected = mgc::oracle::brute_chi_prime(h);
        std::vector<int> order(static_cast<size_t>(h.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        do {
            auto result = mgc::color_edges(h, order);
            CHECK(result.coloring.palette_size() == expected);
            CHECK(result.c5p_certificates.empty());
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("random subdivision-free multigraphs get the exact palette") {
    Rng rng(83);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 60; ++trial) {
        Multigraph h = random_multigraph(rng, 7, 10, 3);
        if (mgc::find_odd_c5p(h).status != mgc::SearchStatus::Absent) continue;
        ++tested;
        const int exact = mgc::oracle::brute_chi_prime(h);
        auto result = mgc::color_edges(h);
        CHECK(result.c5p_certificates.empty());
        CHECK(result.coloring.palette_size() == mgc::kappa_edge(h));
        CHECK(result.coloring.palette_size() == exact);

        // shuffled insertion orders land on the same palette size
        std::vector<int> order(static_cast<size_t>(h.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1],
                          order[static_cast<size_t>(rng.next(0, static_cast<int>(i) - 1))]);
            CHECK(mgc::color_edges(h, order).coloring.palette_size() == exact);
        }
    }
    CHECK(tested >= 60);
}

TEST_CASE("graphs with odd subdivisions still get valid colorings") {
    auto house = mgc::color_edges(mgc::c5_plus());
    CHECK(mgc::verify_edge_coloring(mgc::c5_plus(), house.coloring).ok);
    auto pet = mgc::color_edges(mgc::petersen());
    CHECK(mgc::verify_edge_coloring(mgc::petersen(), pet.coloring).ok);
    CHECK(pet.coloring.palette_size() >= 4);
    CHECK(pet.coloring.palette_size() <= 5);  // greedy ceiling
}

TEST_CASE("verify_edge_coloring reports the first violation") {
    Multigraph path = path_graph(2);
    EdgeColoring missing = make_coloring(path, 2, {{0, 0}});
    auto report = mgc::verify_edge_coloring(path, missing);
    CHECK_FALSE(report.ok);
    CHECK(report.violation == "edge 1 is uncolored");

    EdgeColoring ok = make_coloring(path, 2, {{0, 0}, {1, 1}});
    CHECK(mgc::verify_edge_coloring(path, ok).ok);
}

TEST_CASE("is_r_matching") {
    auto rings = mgc::enumerate_odd_rings(cycle_graph(5));
    REQUIRE(rings.size() == 1);
    const auto& ring = rings[0];
    CHECK(mgc::is_r_matching(cycle_graph(5), {0, 2}, ring));
    CHECK_FALSE(mgc::is_r_matching(cycle_graph(5), {0}, ring));

    auto k3_rings = mgc::enumerate_odd_rings(complete_graph(3));
    REQUIRE(k3_rings.size() == 1);
    CHECK_FALSE(mgc::is_r_matching(complete_graph(3), {}, k3_rings[0]));
    CHECK(mgc::is_r_matching(complete_graph(3), {0}, k3_rings[0]));
}

TEST_CASE("certificate text forms") {
    mgc::OddRingCertificate cert;
    cert.ring.vertices = {0, 1, 2, 3, 4};
    cert.ring.edges = {0, 1, 2, 3, 4};
    cert.palette = 2;
    CHECK(mgc::format_ring_certificate(cert) == "ring: 0 1 2 3 4 ; edges: 0 1 2 3 4\nk: 2");

    mgc::DegreeCertificate deg{0, 4, 3};
    CHECK(mgc::format_degree_certificate(deg) == "degree-vertex: 0 ; d: 4\nk: 3");
}
