#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mgc/multigraph.hpp"

namespace mgc {

struct Claw {
    VertexId center;
    std::array<VertexId, 3> leaves;  // pairwise non-adjacent neighbors of center
};

/// Induced K4-minus-an-edge. The centrals are the two vertices of degree 3
/// inside the diamond; `small` means some central has degree 3 in the host graph.
struct Diamond {
    std::array<VertexId, 4> vertices;
    std::array<VertexId, 2> centrals;
    bool small = false;
};

/// Induced subgraph whose underlying simple graph is an odd circuit (length >= 3
/// allowed). `edges` holds every edge of the host between ring vertices, so
/// parallel copies are included.
struct OddRing {
    std::vector<VertexId> vertices;  // cyclic order
    std::vector<EdgeId> edges;
    int r() const { return (static_cast<int>(vertices.size()) - 1) / 2; }
};

/// Induced odd circuit with at least 5 vertices, in a simple graph.
struct OddHole {
    std::vector<VertexId> vertices;  // cyclic order
};

/// Witness of an odd circuit plus an odd ear whose union is a totally odd
/// subdivision of the 5-circuit-with-a-chord. The ear runs between two distinct
/// circuit vertices with its interior outside the circuit; a length-1 ear must
/// join vertices at circuit distance >= 2.
struct OddC5PlusCertificate {
    std::vector<VertexId> circuit;       // cyclic order, odd length >= 3
    std::vector<EdgeId> circuit_edges;   // circuit_edges[i] joins circuit[i], circuit[i+1 mod]
    std::vector<VertexId> ear;           // path order; both ends on the circuit
    std::vector<EdgeId> ear_edges;
};

enum class SearchStatus { Found, Absent, Unknown };

struct OddC5PlusSearch {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<OddC5PlusCertificate> certificate;
    long long nodes_used = 0;
};

std::optional<Claw> find_claw(const Multigraph& g);
std::optional<std::array<VertexId, 4>> find_k4(const Multigraph& g);
std::vector<Diamond> find_diamonds(const Multigraph& g);

bool is_odd_triangle(const Multigraph& g, const std::array<VertexId, 3>& triangle);
bool is_odd_diamond(const Multigraph& g, const Diamond& d);

std::vector<OddRing> enumerate_odd_rings(const Multigraph& h,
                                         std::optional<int> max_len = std::nullopt);
std::vector<OddHole> enumerate_odd_holes(const Multigraph& g,
                                         std::optional<int> max_len = std::nullopt);

/// Exhaustive budgeted search for an odd circuit + odd ear. `Absent` is an
/// exhaustiveness guarantee; `Unknown` means the node budget ran out.
OddC5PlusSearch find_odd_c5p(const Multigraph& h, long long node_budget = 4'000'000);

/// Independent check of a certificate against the host graph.
bool verify_odd_c5p(const Multigraph& h, const OddC5PlusCertificate& cert,
                    std::string* reason = nullptr);

struct OddHoleNeighborWitness {
    VertexId vertex;
    std::vector<VertexId> hole;
    int count;
};

struct NeighborCountResult {
    int count;
    std::optional<OddHoleNeighborWitness> witness;  // present when count >= 3
};

NeighborCountResult count_neighbors_in_odd_hole(const Multigraph& g, VertexId v,
                                                const OddHole& hole);

/// Square of the n-circuit: vertices 0..n-1, edges between cyclic distance <= 2.
Multigraph square_of_circuit(int n);
/// Returns k when g is isomorphic to the square of the k-circuit.
std::optional<int> recognize_square_of_circuit(const Multigraph& g);

// Named construction families.
Multigraph petersen();
Multigraph c5_plus();
/// 5-circuit with every edge m-plicated plus one extra vertex joined to two
/// non-adjacent circuit vertices.
Multigraph h_m(int m);
Multigraph odd_ring_graph(int length, int mult);

std::string format_certificate(const OddC5PlusCertificate& cert);
std::string format_ring(const OddRing& ring);

}  // namespace mgc
