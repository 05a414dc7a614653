#include "mgc/edge_color.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mgc {

EdgeColoring::EdgeColoring(int vertex_count, int edge_count)
    : color_of_(static_cast<size_t>(edge_count), -1),
      slot_(static_cast<size_t>(vertex_count)) {}

int EdgeColoring::color_of(EdgeId e) const {
    if (e < 0 || e >= static_cast<int>(color_of_.size()))
        throw std::out_of_range("edge id out of range");
    return color_of_[static_cast<size_t>(e)];
}

EdgeId EdgeColoring::class_edge_at(int color, VertexId v) const {
    if (color < 0 || color >= palette_) throw std::out_of_range("color out of range");
    if (v < 0 || v >= static_cast<int>(slot_.size()))
        throw std::out_of_range("vertex id out of range");
    return slot_[static_cast<size_t>(v)][static_cast<size_t>(color)];
}

int EdgeColoring::add_class() {
    for (auto& row : slot_) row.push_back(-1);
    return palette_++;
}

void EdgeColoring::assign(const Multigraph& h, EdgeId e, int color) {
    if (color < 0 || color >= palette_) throw std::out_of_range("color out of range");
    if (color_of(e) != -1) throw std::logic_error("edge already colored");
    auto [u, v] = h.endpoints(e);
    auto& su = slot_[static_cast<size_t>(u)][static_cast<size_t>(color)];
    auto& sv = slot_[static_cast<size_t>(v)][static_cast<size_t>(color)];
    if (su != -1 || sv != -1) throw std::logic_error("class already covers an endpoint");
    su = e;
    sv = e;
    color_of_[static_cast<size_t>(e)] = color;
    ++colored_;
}

void EdgeColoring::unassign(const Multigraph& h, EdgeId e) {
    int c = color_of(e);
    if (c == -1) throw std::logic_error("edge not colored");
    auto [u, v] = h.endpoints(e);
    slot_[static_cast<size_t>(u)][static_cast<size_t>(c)] = -1;
    slot_[static_cast<size_t>(v)][static_cast<size_t>(c)] = -1;
    color_of_[static_cast<size_t>(e)] = -1;
    --colored_;
}

std::vector<std::vector<EdgeId>> EdgeColoring::classes() const {
    std::vector<std::vector<EdgeId>> out(static_cast<size_t>(palette_));
    for (EdgeId e = 0; e < static_cast<int>(color_of_.size()); ++e)
        if (color_of_[static_cast<size_t>(e)] >= 0)
            out[static_cast<size_t>(color_of_[static_cast<size_t>(e)])].push_back(e);
    return out;
}

KempeComponent kempe_component(const Multigraph& h, const EdgeColoring& col, VertexId seed,
                               int color_a, int color_b) {
    if (color_a == color_b) throw std::invalid_argument("colors must differ");
    std::set<EdgeId> used;
    auto walk = [&](int first_color) {
        std::vector<VertexId> verts;
        std::vector<EdgeId> edges;
        VertexId v = seed;
        int c = first_color;
        while (true) {
            EdgeId e = col.class_edge_at(c, v);
            if (e < 0 || used.count(e)) break;
            used.insert(e);
            v = h.opposite(e, v);
            edges.push_back(e);
            verts.push_back(v);
            c = c == color_a ? color_b : color_a;
        }
        return std::pair(verts, edges);
    };
    auto [fwd_v, fwd_e] = walk(color_a);
    auto [bwd_v, bwd_e] = walk(color_b);

    KempeComponent out;
    out.vertices.assign(bwd_v.rbegin(), bwd_v.rend());
    out.vertices.push_back(seed);
    out.vertices.insert(out.vertices.end(), fwd_v.begin(), fwd_v.end());
    out.edges.assign(bwd_e.rbegin(), bwd_e.rend());
    out.edges.insert(out.edges.end(), fwd_e.begin(), fwd_e.end());
    if (out.vertices.size() > 1 && out.vertices.front() == out.vertices.back())
        out.vertices.pop_back();  // even cycle closed on the seed
    return out;
}

void kempe_swap(const Multigraph& h, EdgeColoring& col, int color_a, int color_b,
                const KempeComponent& component) {
    if (component.vertices.empty()) throw std::invalid_argument("empty component");
    KempeComponent recomputed =
        kempe_component(h, col, component.vertices.front(), color_a, color_b);
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(recomputed.vertices) != sorted(component.vertices) ||
        sorted(recomputed.edges) != sorted(component.edges))
        throw std::invalid_argument("argument is not a component of the two-class subgraph");

    std::vector<int> original(component.edges.size());
    for (size_t i = 0; i < component.edges.size(); ++i)
        original[i] = col.color_of(component.edges[i]);
    for (EdgeId e : component.edges) col.unassign(h, e);
    for (size_t i = 0; i < component.edges.size(); ++i)
        col.assign(h, component.edges[i], original[i] == color_a ? color_b : color_a);
}

std::optional<std::pair<int, int>> find_ab_pair(const EdgeColoring& col, VertexId u, VertexId v) {
    int a = -1, b = -1;
    for (int c = 0; c < col.palette_size() && (a < 0 || b < 0); ++c) {
        bool at_u = col.class_covers(c, u);
        bool at_v = col.class_covers(c, v);
        if (a < 0 && at_u && !at_v) a = c;
        if (b < 0 && at_v && !at_u) b = c;
    }
    if (a < 0 || b < 0) return std::nullopt;
    return std::pair(a, b);
}

namespace {

bool class_misses_both(const EdgeColoring& col, int c, VertexId u, VertexId v) {
    return !col.class_covers(c, u) && !col.class_covers(c, v);
}

// Edges of the current subgraph: colored edges plus the one being inserted.
bool edge_current(const EdgeColoring& col, EdgeId f, EdgeId inserting) {
    return f == inserting || col.color_of(f) >= 0;
}

// Scans an ordered component walk for a stretch that leaves the circuit and
// comes back: both ends on the circuit, interior strictly outside. Such a
// stretch is an odd ear (its end edges both avoid the ring-covering class).
struct Segment {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

std::optional<Segment> outside_segment(const KempeComponent& walk, const std::vector<char>& in_l) {
    int prev = -1;
    for (int i = 0; i < static_cast<int>(walk.vertices.size()); ++i) {
        if (!in_l[static_cast<size_t>(walk.vertices[static_cast<size_t>(i)])]) continue;
        if (prev >= 0 && i - prev >= 2) {
            Segment seg;
            seg.vertices.assign(walk.vertices.begin() + prev, walk.vertices.begin() + i + 1);
            seg.edges.assign(walk.edges.begin() + prev, walk.edges.begin() + i);
            if (seg.edges.size() % 2 == 0)
                throw std::logic_error("internal error: even detour off an induced ring");
            return seg;
        }
        prev = i;
    }
    return std::nullopt;
}

OddC5PlusCertificate make_certificate(const std::vector<VertexId>& circuit,
                                      const std::vector<EdgeId>& circuit_edges,
                                      const std::vector<VertexId>& ear_vertices,
                                      const std::vector<EdgeId>& ear_edges) {
    OddC5PlusCertificate cert;
    cert.circuit = circuit;
    cert.circuit_edges = circuit_edges;
    cert.ear = ear_vertices;
    cert.ear_edges = ear_edges;
    return cert;
}

#ifndef NDEBUG
std::vector<EdgeId> class_edges(const EdgeColoring& col, int c, int edge_count) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count; ++e)
        if (col.color_of(e) == c) out.push_back(e);
    return out;
}
#endif

}  // namespace

InsertOutcome insert_edge(const Multigraph& h, const EdgeColoring& col, EdgeId e) {
    if (col.color_of(e) != -1) throw std::invalid_argument("edge already colored");
    auto [u, v] = h.endpoints(e);
    const int k = col.palette_size();

    // free class
    for (int c = 0; c < k; ++c)
        if (class_misses_both(col, c, u, v)) {
            EdgeColoring next = col;
            next.assign(h, e, c);
            return Colored{std::move(next)};
        }

    // a class at u avoiding v, and one at v avoiding u
    auto ab = find_ab_pair(col, u, v);
    if (!ab) {
        // one endpoint is covered by every class, so its current degree is k+1
        auto covered_by_all = [&](VertexId w) {
            for (int c = 0; c < k; ++c)
                if (!col.class_covers(c, w)) return false;
            return true;
        };
        VertexId w = covered_by_all(u) ? u : v;
        int deg = 1;
        for (EdgeId f : h.incident_edges(w))
            if (col.color_of(f) >= 0) ++deg;
        if (deg != k + 1)
            throw std::logic_error("internal error: degree certificate arithmetic broken");
        return NewColorNeeded{DegreeCertificate{w, deg, k}};
    }
    const auto [a, b] = *ab;

    // walk the (a,b)-chain from u
    KempeComponent chain = kempe_component(h, col, u, a, b);
    if (std::find(chain.vertices.begin(), chain.vertices.end(), v) == chain.vertices.end()) {
        EdgeColoring next = col;
        kempe_swap(h, next, a, b, chain);
        next.assign(h, e, a);
        return Colored{std::move(next)};
    }

    // the chain plus e closes an odd circuit
    const std::vector<VertexId>& cyc = chain.vertices;
    if (cyc.size() % 2 == 0 || cyc.front() != u || cyc.back() != v)
        throw std::logic_error("internal error: chain between the endpoints is not even");
    std::vector<EdgeId> circuit_edges = chain.edges;
    circuit_edges.push_back(e);

    std::vector<char> in_l(static_cast<size_t>(h.vertex_count()), 0);
    std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t i = 0; i < cyc.size(); ++i) {
        in_l[static_cast<size_t>(cyc[i])] = 1;
        pos[static_cast<size_t>(cyc[i])] = static_cast<int>(i);
    }
    const int len = static_cast<int>(cyc.size());

    // chord in the current subgraph -> circuit + single-edge ear
    for (EdgeId f = 0; f < h.edge_count(); ++f) {
        if (!edge_current(col, f, e)) continue;
        auto [x, y] = h.endpoints(f);
        if (!in_l[static_cast<size_t>(x)] || !in_l[static_cast<size_t>(y)]) continue;
        int diff = std::abs(pos[static_cast<size_t>(x)] - pos[static_cast<size_t>(y)]);
        int dist = std::min(diff, len - diff);
        if (dist >= 2)
            return OddC5PlusFound{make_certificate(cyc, circuit_edges, {x, y}, {f})};
    }

    // chordless: the circuit's vertex set induces an odd ring
    OddRing ring;
    ring.vertices = cyc;
    for (EdgeId f = 0; f < h.edge_count(); ++f) {
        if (!edge_current(col, f, e)) continue;
        auto [x, y] = h.endpoints(f);
        if (in_l[static_cast<size_t>(x)] && in_l[static_cast<size_t>(y)]) ring.edges.push_back(f);
    }
    const int r = ring.r();
#ifndef NDEBUG
    assert(is_r_matching(h, class_edges(col, a, h.edge_count()), ring));
    assert(is_r_matching(h, class_edges(col, b, h.edge_count()), ring));
#endif

    // cascade over the remaining classes, each attempt on a scratch copy
    for (int m = 0; m < k; ++m) {
        if (m == a || m == b) continue;
        const bool at_u = col.class_covers(m, u);
        const bool at_v = col.class_covers(m, v);
        if (!at_u && !at_v)
            throw std::logic_error("internal error: class misses both ends after free scan");
        const VertexId u0 = at_u ? u : v;
        const VertexId v0 = at_u ? v : u;
        const int a0 = at_u ? a : b;
        const int b0 = at_u ? b : a;

        EdgeColoring scratch = col;
        KempeComponent walk1 = kempe_component(h, scratch, u0, m, b0);
        if (auto seg = outside_segment(walk1, in_l))
            return OddC5PlusFound{make_certificate(cyc, circuit_edges, seg->vertices, seg->edges)};
        kempe_swap(h, scratch, m, b0, walk1);
        if (!scratch.class_covers(m, v0)) {
            scratch.assign(h, e, m);
            return Colored{std::move(scratch)};
        }
        KempeComponent walk2 = kempe_component(h, scratch, v0, m, a0);
        if (std::find(walk2.vertices.begin(), walk2.vertices.end(), u0) == walk2.vertices.end()) {
            kempe_swap(h, scratch, m, a0, walk2);
            scratch.assign(h, e, m);
            return Colored{std::move(scratch)};
        }
        if (auto seg = outside_segment(walk2, in_l))
            return OddC5PlusFound{make_certificate(cyc, circuit_edges, seg->vertices, seg->edges)};
        // this class is pinned to r ring edges; try the next one
    }

    if (static_cast<int>(ring.edges.size()) != k * r + 1)
        throw std::logic_error("internal error: ring certificate identity broken");
    return NewColorNeeded{OddRingCertificate{std::move(ring), k}};
}

EdgeColorResult color_edges(const Multigraph& h) {
    std::vector<EdgeId> order(static_cast<size_t>(h.edge_count()));
    for (EdgeId e = 0; e < h.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
    return color_edges(h, order);
}

EdgeColorResult color_edges(const Multigraph& h, const std::vector<EdgeId>& order) {
    {
        std::vector<char> seen(static_cast<size_t>(h.edge_count()), 0);
        if (static_cast<int>(order.size()) != h.edge_count())
            throw std::invalid_argument("order must be a permutation of the edges");
        for (EdgeId e : order) {
            if (e < 0 || e >= h.edge_count() || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("order must be a permutation of the edges");
            seen[static_cast<size_t>(e)] = 1;
        }
    }
    EdgeColorResult result;
    EdgeColoring col(h.vertex_count(), h.edge_count());
    for (EdgeId e : order) {
        InsertOutcome outcome = insert_edge(h, col, e);
        if (auto* done = std::get_if<Colored>(&outcome)) {
            col = std::move(done->coloring);
        } else if (auto* need = std::get_if<NewColorNeeded>(&outcome)) {
            if (auto* ring = std::get_if<OddRingCertificate>(&need->certificate))
                result.ring_certificates.push_back(*ring);
            else
                result.degree_certificates.push_back(std::get<DegreeCertificate>(need->certificate));
            int c = col.add_class();
            col.assign(h, e, c);
        } else {
            auto& found = std::get<OddC5PlusFound>(outcome);
            std::string why;
            if (!verify_odd_c5p(h, found.certificate, &why))
                throw std::logic_error("internal error: bad circuit-plus-ear witness: " + why);
            result.c5p_certificates.push_back(found.certificate);
            int c = col.add_class();
            col.assign(h, e, c);
        }
    }
    assert(verify_edge_coloring(h, col).ok);
    result.coloring = std::move(col);
    return result;
}

VerifyReport verify_edge_coloring(const Multigraph& h, const EdgeColoring& col) {
    VerifyReport report;
    auto fail = [&](const std::string& why) {
        report.ok = false;
        report.violation = why;
        return report;
    };
    const int k = col.palette_size();
    std::vector<std::vector<EdgeId>> at(static_cast<size_t>(h.vertex_count()),
                                        std::vector<EdgeId>(static_cast<size_t>(k), -1));
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        int c = col.color_of(e);
        if (c < 0) return fail("edge " + std::to_string(e) + " is uncolored");
        if (c >= k) return fail("edge " + std::to_string(e) + " has color outside the palette");
        auto [u, v] = h.endpoints(e);
        for (VertexId w : {u, v}) {
            EdgeId& cell = at[static_cast<size_t>(w)][static_cast<size_t>(c)];
            if (cell != -1)
                return fail("edges " + std::to_string(cell) + " and " + std::to_string(e) +
                            " share vertex " + std::to_string(w) + " in class " +
                            std::to_string(c));
            cell = e;
        }
    }
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        for (int c = 0; c < k; ++c)
            if (col.class_edge_at(c, v) != at[static_cast<size_t>(v)][static_cast<size_t>(c)])
                return fail("slot table inconsistent at vertex " + std::to_string(v) +
                            " class " + std::to_string(c));
    return report;
}

bool is_r_matching(const Multigraph& h, const std::vector<EdgeId>& matching, const OddRing& ring) {
    std::set<EdgeId> ring_edges(ring.edges.begin(), ring.edges.end());
    int inside = 0;
    std::set<VertexId> covered;
    for (EdgeId e : matching) {
        if (ring_edges.count(e)) ++inside;
        auto [x, y] = h.endpoints(e);
        covered.insert(x);
        covered.insert(y);
    }
    if (inside != ring.r()) return false;
    int missed = 0;
    for (VertexId v : ring.vertices)
        if (!covered.count(v)) ++missed;
    return missed == 1;
}

std::string format_ring_certificate(const OddRingCertificate& cert) {
    std::ostringstream out;
    out << format_ring(cert.ring) << "\nk: " << cert.palette;
    return out.str();
}

std::string format_degree_certificate(const DegreeCertificate& cert) {
    std::ostringstream out;
    out << "degree-vertex: " << cert.vertex << " ; d: " << cert.degree << "\nk: " << cert.palette;
    return out.str();
}

}  // namespace mgc
