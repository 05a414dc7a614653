#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mgc {

using VertexId = int;
using EdgeId = int;

// Nonnegative integer weights, indexed by vertex or edge id depending on context.
using WeightVector = std::vector<int>;

struct Endpoints {
    VertexId u;
    VertexId v;
};

/// Undirected multigraph: parallel edges allowed, loops rejected.
/// Vertex ids are dense 0..n-1, edge ids dense 0..m-1 and stable until a
/// structural operation (delete_edge, induced_subgraph, ...) renumbers them.
/// Treat values as immutable once built; structural operations return new graphs.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return static_cast<int>(incidence_.size()); }
    int edge_count() const { return static_cast<int>(endpoints_.size()); }

    EdgeId add_edge(VertexId u, VertexId v);

    Endpoints endpoints(EdgeId e) const;
    VertexId opposite(EdgeId e, VertexId v) const;

    /// Number of incident edges, parallel edges counted with multiplicity.
    int degree(VertexId v) const;
    /// Largest degree; 0 for an edgeless graph.
    int max_degree() const;
    /// Number of edges sharing this edge's endpoint pair (including itself); >= 1.
    int multiplicity(EdgeId e) const;

    const std::vector<EdgeId>& incident_edges(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    /// Distinct neighbors, ascending.
    std::vector<VertexId> neighbors(VertexId v) const;
    bool is_simple() const;

    /// Remove exactly one edge; parallel copies stay. Edge ids above e shift down.
    Multigraph delete_edge(EdgeId e) const;

private:
    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;

    std::vector<Endpoints> endpoints_;
    std::vector<std::vector<EdgeId>> incidence_;
};

struct InducedSubgraph {
    Multigraph graph;
    std::vector<VertexId> vertex_to_old;  // new id -> old id
    std::vector<VertexId> vertex_to_new;  // old id -> new id, -1 if dropped
    std::vector<EdgeId> edge_to_old;      // new id -> old id
};

/// Subgraph on `keep`, retaining every parallel copy between retained vertices.
InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep);

/// One edge per adjacent pair; vertex ids unchanged. Idempotent.
Multigraph underlying_simple(const Multigraph& g);

struct SimpleProjection {
    Multigraph graph;                    // the underlying simple graph
    std::vector<EdgeId> representative;  // per simple edge, one witnessing edge of g
};
SimpleProjection simple_projection(const Multigraph& g);

/// Replace edge e by edge_weights[e] parallel copies (0 deletes it).
/// Copies of edge e are emitted consecutively, in edge-id order.
Multigraph replicate_edges(const Multigraph& h, const WeightVector& edge_weights);

/// Blow up each vertex v of a simple graph into a clique of size vertex_weights[v]
/// (0 deletes it), with full joins across original edges. Copies of vertex v are
/// emitted consecutively, in vertex-id order.
Multigraph replicate_vertices(const Multigraph& g, const WeightVector& vertex_weights);

/// Line graph: vertex i of the result corresponds to edge i of h; two vertices
/// are adjacent iff the edges share an endpoint (parallel edges are adjacent).
Multigraph line_graph(const Multigraph& h);

/// Connected components as vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

}  // namespace mgc
