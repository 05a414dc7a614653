#include "mgc/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mgc {

Multigraph::Multigraph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    incidence_.resize(static_cast<size_t>(vertex_count));
}

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
    : Multigraph(vertex_count) {
    for (const auto& [u, v] : edge_list) add_edge(u, v);
}

void Multigraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id out of range");
}

void Multigraph::check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("edge id out of range");
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    EdgeId e = edge_count();
    endpoints_.push_back({u, v});
    incidence_[static_cast<size_t>(u)].push_back(e);
    incidence_[static_cast<size_t>(v)].push_back(e);
    return e;
}

Endpoints Multigraph::endpoints(EdgeId e) const {
    check_edge(e);
    return endpoints_[static_cast<size_t>(e)];
}

VertexId Multigraph::opposite(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw std::invalid_argument("vertex is not an endpoint of the edge");
}

int Multigraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(incidence_[static_cast<size_t>(v)].size());
}

int Multigraph::max_degree() const {
    int best = 0;
    for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

int Multigraph::multiplicity(EdgeId e) const {
    auto [u, v] = endpoints(e);
    int count = 0;
    for (EdgeId f : incident_edges(u)) {
        auto [a, b] = endpoints_[static_cast<size_t>(f)];
        if ((a == u && b == v) || (a == v && b == u)) ++count;
    }
    return count;
}

const std::vector<EdgeId>& Multigraph::incident_edges(VertexId v) const {
    check_vertex(v);
    return incidence_[static_cast<size_t>(v)];
}

bool Multigraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& inc = degree(u) <= degree(v) ? incidence_[static_cast<size_t>(u)]
                                             : incidence_[static_cast<size_t>(v)];
    VertexId a = degree(u) <= degree(v) ? u : v;
    VertexId b = a == u ? v : u;
    for (EdgeId e : inc)
        if (opposite(e, a) == b) return true;
    return false;
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident_edges(v)) out.push_back(opposite(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Multigraph::is_simple() const {
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (multiplicity(e) > 1) return false;
    return true;
}

Multigraph Multigraph::delete_edge(EdgeId e) const {
    check_edge(e);
    Multigraph out(vertex_count());
    for (EdgeId f = 0; f < edge_count(); ++f) {
        if (f == e) continue;
        auto [u, v] = endpoints_[static_cast<size_t>(f)];
        out.add_edge(u, v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep) {
    InducedSubgraph out;
    out.vertex_to_new.assign(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
        out.vertex_to_new[static_cast<size_t>(v)] = static_cast<VertexId>(out.vertex_to_old.size());
        out.vertex_to_old.push_back(v);
    }
    out.graph = Multigraph(static_cast<int>(out.vertex_to_old.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        VertexId nu = out.vertex_to_new[static_cast<size_t>(u)];
        VertexId nv = out.vertex_to_new[static_cast<size_t>(v)];
        if (nu >= 0 && nv >= 0) {
            out.graph.add_edge(nu, nv);
            out.edge_to_old.push_back(e);
        }
    }
    return out;
}

SimpleProjection simple_projection(const Multigraph& g) {
    SimpleProjection out;
    out.graph = Multigraph(g.vertex_count());
    std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        auto key = std::minmax(u, v);
        if (seen.emplace(std::pair<VertexId, VertexId>(key), e).second) {
            out.graph.add_edge(u, v);
            out.representative.push_back(e);
        }
    }
    return out;
}

Multigraph underlying_simple(const Multigraph& g) { return simple_projection(g).graph; }

Multigraph replicate_edges(const Multigraph& h, const WeightVector& edge_weights) {
    if (static_cast<int>(edge_weights.size()) != h.edge_count())
        throw std::invalid_argument("edge weight vector size mismatch");
    Multigraph out(h.vertex_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        int w = edge_weights[static_cast<size_t>(e)];
        if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
        auto [u, v] = h.endpoints(e);
        for (int i = 0; i < w; ++i) out.add_edge(u, v);
    }
    return out;
}

Multigraph replicate_vertices(const Multigraph& g, const WeightVector& vertex_weights) {
    if (!g.is_simple()) throw std::invalid_argument("replicate_vertices requires a simple graph");
    if (static_cast<int>(vertex_weights.size()) != g.vertex_count())
        throw std::invalid_argument("vertex weight vector size mismatch");
    std::vector<int> offset(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int w = vertex_weights[static_cast<size_t>(v)];
        if (w < 0) throw std::invalid_argument("vertex weights must be nonnegative");
        offset[static_cast<size_t>(v) + 1] = offset[static_cast<size_t>(v)] + w;
    }
    Multigraph out(offset.back());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int w = vertex_weights[static_cast<size_t>(v)];
        for (int i = 0; i < w; ++i)
            for (int j = i + 1; j < w; ++j)
                out.add_edge(offset[static_cast<size_t>(v)] + i, offset[static_cast<size_t>(v)] + j);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        for (int i = 0; i < vertex_weights[static_cast<size_t>(u)]; ++i)
            for (int j = 0; j < vertex_weights[static_cast<size_t>(v)]; ++j)
                out.add_edge(offset[static_cast<size_t>(u)] + i, offset[static_cast<size_t>(v)] + j);
    }
    return out;
}

Multigraph line_graph(const Multigraph& h) {
    Multigraph out(h.edge_count());
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        auto [a, b] = h.endpoints(i);
        for (EdgeId j = i + 1; j < h.edge_count(); ++j) {
            auto [c, d] = h.endpoints(j);
            if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<VertexId> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.opposite(e, v);
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

}  // namespace mgc
