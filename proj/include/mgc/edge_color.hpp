#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgc/multigraph.hpp"
#include "mgc/structure.hpp"

namespace mgc {

/// Partition of the colored edges into indexed matchings. Edges may be
/// uncolored (-1) while a graph is being built up incrementally.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int vertex_count, int edge_count);

    int palette_size() const { return palette_; }
    int color_of(EdgeId e) const;
    int colored_count() const { return colored_; }

    /// Edge of the given class at vertex v, or -1 when the class misses v.
    EdgeId class_edge_at(int color, VertexId v) const;
    bool class_covers(int color, VertexId v) const { return class_edge_at(color, v) >= 0; }

    int add_class();
    void assign(const Multigraph& h, EdgeId e, int color);
    void unassign(const Multigraph& h, EdgeId e);

    /// Per-color edge lists, derived from the assignment.
    std::vector<std::vector<EdgeId>> classes() const;

private:
    int palette_ = 0;
    int colored_ = 0;
    std::vector<int> color_of_;
    std::vector<std::vector<EdgeId>> slot_;  // slot_[v][color] = incident edge or -1
};

/// Connected component of the two-class symmetric difference subgraph,
/// as an ordered walk (a path or an even cycle).
struct KempeComponent {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

KempeComponent kempe_component(const Multigraph& h, const EdgeColoring& col, VertexId seed,
                               int color_a, int color_b);

/// Exchange the two classes along a component; palette size and validity are
/// preserved. Throws if the argument is not a genuine component.
void kempe_swap(const Multigraph& h, EdgeColoring& col, int color_a, int color_b,
                const KempeComponent& component);

/// A class covering u and missing v paired with a class covering v and missing
/// u, lowest indices first.
std::optional<std::pair<int, int>> find_ab_pair(const EdgeColoring& col, VertexId u, VertexId v);

/// Lower-bound witness: a ring of the current subgraph with
/// |E(ring)| == palette * r + 1, forcing palette + 1 colors.
struct OddRingCertificate {
    OddRing ring;
    int palette;
};

/// Witness that an endpoint has degree palette + 1 in the current subgraph,
/// forcing palette + 1 colors. Emitted when the palette is still below the
/// maximum degree.
struct DegreeCertificate {
    VertexId vertex;
    int degree;
    int palette;
};

struct Colored {
    EdgeColoring coloring;
};
struct NewColorNeeded {
    std::variant<OddRingCertificate, DegreeCertificate> certificate;
};
struct OddC5PlusFound {
    OddC5PlusCertificate certificate;
};
using InsertOutcome = std::variant<Colored, NewColorNeeded, OddC5PlusFound>;

/// Try to color edge e with the existing palette by cascading Kempe swaps.
/// The "current subgraph" consists of the colored edges plus e itself.
/// Returns the recolored extension, or a certificate that a new color is
/// needed, or an odd circuit-plus-ear witness through e.
InsertOutcome insert_edge(const Multigraph& h, const EdgeColoring& col, EdgeId e);

struct EdgeColorResult {
    EdgeColoring coloring;
    std::vector<OddRingCertificate> ring_certificates;
    std::vector<DegreeCertificate> degree_certificates;
    std::vector<OddC5PlusCertificate> c5p_certificates;
};

/// Color all edges by incremental insertion (edge-id order unless an explicit
/// order is given). When no circuit-plus-ear witness is emitted, the palette
/// size equals max(Delta, ceil(gamma_prime)); otherwise the coloring is valid
/// but optimality is not claimed.
EdgeColorResult color_edges(const Multigraph& h);
EdgeColorResult color_edges(const Multigraph& h, const std::vector<EdgeId>& order);

struct VerifyReport {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

/// Checks the matching property per class, total coverage, and consistency.
VerifyReport verify_edge_coloring(const Multigraph& h, const EdgeColoring& col);

/// Matching with r ring edges missing exactly one ring vertex entirely.
bool is_r_matching(const Multigraph& h, const std::vector<EdgeId>& matching, const OddRing& ring);

std::string format_ring_certificate(const OddRingCertificate& cert);
std::string format_degree_certificate(const DegreeCertificate& cert);

}  // namespace mgc
