#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mgc/multigraph.hpp"

namespace mgc::oracle {

// Ground truth for property tests. Deliberately self-contained: nothing here
// uses the solver or bound modules, so a bug there cannot leak into expected
// values. Pruning relies only on locally computed, trivially sound bounds
// (degrees, pairwise-incident edge sets, clique weights).

struct SearchBudget {
    long long node_limit = 50'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError() : std::runtime_error("oracle search budget exceeded") {}
};

/// Exact chromatic index by branch and bound over edge color assignments.
/// Intended for |E| <= ~17; throws BudgetExceededError rather than guessing.
int brute_chi_prime(const Multigraph& h, const SearchBudget& budget = {});

/// Exact weighted chromatic number: minimum multiset of stable sets covering
/// each vertex v at least c[v] times. DFS over maximal stable sets of the
/// positive-demand support with memoized residual demands.
int brute_chi_weighted(const Multigraph& g, const WeightVector& c,
                       const SearchBudget& budget = {});

/// All matchings (or only maximal ones), deterministic lexicographic order.
std::vector<std::vector<EdgeId>> enumerate_matchings(const Multigraph& h,
                                                     bool maximal_only = false);

/// All stable sets (or only maximal ones), deterministic lexicographic order.
std::vector<std::vector<VertexId>> enumerate_stable_sets(const Multigraph& g,
                                                         bool maximal_only = false);

}  // namespace mgc::oracle
