#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgc/edge_color.hpp"
#include "mgc/multigraph.hpp"
#include "mgc/structure.hpp"

namespace mgc {

/// Multiset of stable sets; vertex v must lie in at least c[v] of them.
struct VertexColoring {
    std::vector<std::vector<VertexId>> stable_sets;
};

VerifyReport verify_vertex_coloring(const Multigraph& g, const WeightVector& c,
                                    const VertexColoring& coloring);

struct Witness {
    enum class Kind { Claw, K4, HighDegree, OddHoleNeighbors, SquareOfCircuit };
    Kind kind;
    std::vector<VertexId> vertices;  // claw: center + leaves; hole case: vertex then hole
    int parameter = 0;               // degree, neighbor count, or circuit length k
    std::string format() const;
};

/// Cheap necessary conditions for t-perfection plus claw-freeness: claws, 4-cliques,
/// degrees >= 5, vertices with >= 3 neighbors on an odd hole, components isomorphic
/// to the square of a k-circuit for k outside {3,6}. An empty result is not a
/// t-perfection certificate.
std::vector<Witness> validate_tperfect_clawfree_input(const Multigraph& g);

/// Simple root graph with line_graph(root) equal to g (same ids: edge i of the
/// root corresponds to vertex i of g). Built from an edge partition into cliques
/// with every vertex in at most two cliques; absent when g is not a line graph
/// of a simple graph.
struct RootGraph {
    Multigraph graph;
};
std::optional<RootGraph> root_graph(const Multigraph& g);

struct LineColorResult {
    VertexColoring coloring;  // stable sets of the line graph of h
    int palette = 0;
    bool optimal = false;  // certified: palette equals the replicated graph's lower bound
    std::vector<OddC5PlusCertificate> certificates;
};

/// Color the line graph of h under edge weights c by edge-coloring the
/// c-fold replication of h. Vertex e of L(h) lands in exactly c[e] sets.
LineColorResult color_line_graph_weighted(const Multigraph& h, const WeightVector& edge_weights);

struct ReinsertOutcome {
    bool ok = false;
    VertexColoring coloring;
    std::optional<OddHoleNeighborWitness> witness;  // non-t-perfection evidence
    int swaps = 0;
    bool used_free_set = false;  // otherwise a new singleton {v} was appended
};

/// Extend a coloring of (g, c - unit(v)) to one of (g, c), where v is a small
/// central vertex of a diamond: either some set can absorb v, or a singleton is
/// justified by the clique {v,w,y}, after zero or more exchanges along
/// components of the two-set symmetric difference.
ReinsertOutcome reinsert_small_diamond(const Multigraph& g, const WeightVector& c, VertexId v,
                                       const VertexColoring& coloring);

/// Replay log of the reduction. Diamond steps name vertices in the graph of
/// the stage that performed them (zero-weight vertices may already have been
/// dropped); line-graph steps are self-contained (root plus edge weights).
struct ReductionTrace {
    struct DiamondStep {
        VertexId vertex;
        int swaps;
        bool used_free_set;
    };
    struct LineGraphStep {
        Multigraph root;
        WeightVector edge_weights;
    };
    std::vector<std::variant<DiamondStep, LineGraphStep>> steps;
    std::string format() const;
};

struct TColorResult {
    bool ok = false;
    VertexColoring coloring;
    ReductionTrace trace;
    std::vector<Witness> witnesses;  // nonempty iff rejected
    bool optimal = false;            // certified: |sets| == max(omega, ceil(gamma))
    long long formula = 0;
};

/// Weighted coloring of a claw-free K4-free graph intended to be t-perfect:
/// peel small-diamond centrals off the weight vector, then color the line-graph
/// base case through the root graph. Rejections carry structural witnesses.
TColorResult color_tperfect_clawfree(const Multigraph& g, const WeightVector& c);

std::string format_vertex_coloring(const VertexColoring& coloring);

}  // namespace mgc
