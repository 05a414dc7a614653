#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgc/bounds.hpp"
#include "mgc/oracle.hpp"
#include "mgc/structure.hpp"
#include "test_util.hpp"

using mgc::Multigraph;
using mgc::Rational;
using namespace test_util;

TEST_CASE("gamma_prime") {
    CHECK(mgc::gamma_prime(complete_graph(3)) == Rational(3));
    CHECK(mgc::gamma_prime(cycle_graph(5)) == Rational(5, 2));
    CHECK(mgc::gamma_prime(mgc::h_m(3)) == Rational(15, 2));
    CHECK(mgc::gamma_prime(cycle_graph(4)) == Rational(0));  // no odd ring
    CHECK(mgc::gamma_prime(Multigraph(3)) == Rational(0));
}

TEST_CASE("omega_weighted") {
    CHECK(mgc::omega_weighted(complete_graph(3), {1, 2, 3}) == 6);
    CHECK(mgc::omega_weighted(Multigraph(1), {5}) == 5);
    CHECK(mgc::omega_weighted(cycle_graph(5), {1, 1, 1, 1, 1}) == 2);
    CHECK(mgc::omega_weighted(Multigraph(0), {}) == 0);
    CHECK(mgc::omega_weighted(complete_graph(3), {0, 0, 0}) == 0);
}

TEST_CASE("gamma_weighted") {
    CHECK(mgc::gamma_weighted(cycle_graph(5), {1, 1, 1, 1, 1}) == Rational(5, 2));
    CHECK(mgc::gamma_weighted(diamond_graph(), {3, 1, 4, 1}) == Rational(0));
    CHECK(mgc::gamma_weighted(cycle_graph(5), {2, 1, 1, 1, 1}) == Rational(3));
}

TEST_CASE("kappa_edge") {
    CHECK(mgc::kappa_edge(mgc::h_m(3)) == 8);
    CHECK(mgc::kappa_edge(cycle_graph(5)) == 3);
    CHECK(mgc::kappa_edge(Multigraph(4)) == 0);
    CHECK(mgc::kappa_edge(mgc::petersen()) == 3);
}

TEST_CASE("chi_weighted_formula") {
    CHECK(mgc::chi_weighted_formula(cycle_graph(5), {1, 1, 1, 1, 1}) == 3);
    CHECK(mgc::chi_weighted_formula(complete_graph(3), {2, 2, 2}) == 6);
    CHECK(mgc::chi_weighted_formula(diamond_graph(), {1, 1, 1, 1}) == 3);
}

TEST_CASE("rational formatting and ceiling") {
    CHECK(mgc::format_rational(Rational(15, 2)) == "15/2");
    CHECK(mgc::format_rational(Rational(3)) == "3");
    CHECK(mgc::format_rational(Rational(6, 3)) == "2");  // reduced form
    CHECK(mgc::rational_ceil(Rational(5, 2)) == 3);
    CHECK(mgc::rational_ceil(Rational(4, 2)) == 2);
    CHECK(mgc::rational_ceil(Rational(0)) == 0);
    CHECK(mgc::rational_ceil(Rational(-5, 2)) == -2);
}

TEST_CASE("kappa_edge is a sound lower bound on the chromatic index") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        Multigraph h = random_multigraph(rng, 6, 8, 3);
        CHECK(mgc::kappa_edge(h) <= mgc::oracle::brute_chi_prime(h));
    }
}

TEST_CASE("kappa_edge is monotone under edge deletion") {
    Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph h = random_multigraph(rng, 6, 9, 3);
        if (h.edge_count() == 0) continue;
        int e = rng.next(0, h.edge_count() - 1);
        CHECK(mgc::kappa_edge(h.delete_edge(e)) <= mgc::kappa_edge(h));
    }
}

TEST_CASE("gamma_prime scales under uniform edge replication") {
    for (int m = 1; m <= 4; ++m) {
        Multigraph c5m = mgc::replicate_edges(cycle_graph(5), mgc::WeightVector(5, m));
        CHECK(mgc::gamma_prime(c5m) == Rational(5 * m, 2));
        Multigraph k3m = mgc::replicate_edges(complete_graph(3), mgc::WeightVector(3, m));
        CHECK(mgc::gamma_prime(k3m) == Rational(3 * m));
    }
}

TEST_CASE("all-1 formula stays at 3 on triangle-bounded fixtures") {
    std::vector<Multigraph> fixtures = {cycle_graph(5), mgc::square_of_circuit(6),
                                        diamond_graph()};
    for (const Multigraph& g : fixtures) {
        mgc::WeightVector ones(static_cast<size_t>(g.vertex_count()), 1);
        CHECK(mgc::omega_weighted(g, ones) <= 3);
        CHECK(mgc::chi_weighted_formula(g, ones) <= 3);
    }
}

TEST_CASE("the weighted formula is monotone under unit weight reduction") {
    Rng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_simple_graph(rng, 6, 50);
        mgc::WeightVector c;
        for (int v = 0; v < 6; ++v) c.push_back(rng.next(0, 3));
        for (int v = 0; v < 6; ++v) {
            if (c[static_cast<size_t>(v)] == 0) continue;
            mgc::WeightVector reduced = c;
            --reduced[static_cast<size_t>(v)];
            CHECK(mgc::chi_weighted_formula(g, reduced) <= mgc::chi_weighted_formula(g, c));
        }
    }
}

TEST_CASE("maximal cliques") {
    auto cliques = mgc::maximal_cliques(diamond_graph());
    CHECK(cliques.size() == 2);  // the two triangles
    auto single = mgc::maximal_cliques(Multigraph(1));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<int>{0});
    CHECK(mgc::maximal_cliques(Multigraph(0)).empty());
}
