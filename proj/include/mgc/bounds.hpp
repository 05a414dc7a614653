#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "mgc/multigraph.hpp"

namespace mgc {

// Exact arithmetic only in this module; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt rational_ceil(const Rational& r);
/// Prints `p/q`, or just `p` when the denominator is 1.
std::string format_rational(const Rational& r);

/// max over odd rings R of 2|E(R)| / (|V(R)|-1); 0 when no odd ring exists.
Rational gamma_prime(const Multigraph& h);

/// Maximum clique weight; 0 on the empty graph.
long long omega_weighted(const Multigraph& g, const WeightVector& c);

/// max over odd holes C of 2 * weight(C) / (|V(C)|-1); 0 when no odd hole exists.
Rational gamma_weighted(const Multigraph& g, const WeightVector& c);

/// max(Delta, ceil(gamma_prime)). A lower bound on the chromatic index of any
/// multigraph; equal to it when the graph has no totally odd subdivision of the
/// 5-circuit-with-a-chord.
long long kappa_edge(const Multigraph& h);

/// max(omega(g,c), ceil(gamma(g,c))). A lower bound on the weighted chromatic
/// number; equal to it on t-perfect claw-free graphs and h-perfect line graphs.
long long chi_weighted_formula(const Multigraph& g, const WeightVector& c);

/// Maximal cliques of a simple graph (Bron-Kerbosch), deterministic order.
std::vector<std::vector<VertexId>> maximal_cliques(const Multigraph& g);

}  // namespace mgc
