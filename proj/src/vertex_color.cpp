#include "mgc/vertex_color.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mgc/bounds.hpp"

namespace mgc {

VerifyReport verify_vertex_coloring(const Multigraph& g, const WeightVector& c,
                                    const VertexColoring& coloring) {
    VerifyReport report;
    auto fail = [&](const std::string& why) {
        report.ok = false;
        report.violation = why;
        return report;
    };
    if (static_cast<int>(c.size()) != g.vertex_count()) return fail("weight vector size mismatch");
    std::vector<int> cover(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; i < coloring.stable_sets.size(); ++i) {
        const auto& s = coloring.stable_sets[i];
        for (VertexId v : s) {
            if (v < 0 || v >= g.vertex_count())
                return fail("set " + std::to_string(i) + " contains an invalid vertex id");
            ++cover[static_cast<size_t>(v)];
        }
        std::set<VertexId> members(s.begin(), s.end());
        if (members.size() != s.size())
            return fail("set " + std::to_string(i) + " repeats a vertex");
        for (size_t a = 0; a < s.size(); ++a)
            for (size_t b = a + 1; b < s.size(); ++b)
                if (g.adjacent(s[a], s[b]))
                    return fail("set " + std::to_string(i) + " contains adjacent vertices " +
                                std::to_string(s[a]) + " and " + std::to_string(s[b]));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (cover[static_cast<size_t>(v)] < c[static_cast<size_t>(v)])
            return fail("vertex " + std::to_string(v) + " covered " +
                        std::to_string(cover[static_cast<size_t>(v)]) + " < " +
                        std::to_string(c[static_cast<size_t>(v)]) + " times");
    return report;
}

std::string Witness::format() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Claw:
            out << "witness claw";
            for (VertexId v : vertices) out << ' ' << v;
            break;
        case Kind::K4:
            out << "witness k4";
            for (VertexId v : vertices) out << ' ' << v;
            break;
        case Kind::HighDegree:
            out << "witness degree vertex=" << vertices.front() << " d=" << parameter;
            break;
        case Kind::OddHoleNeighbors:
            out << "witness odd_hole_neighbors vertex=" << vertices.front()
                << " count=" << parameter << " hole=";
            for (size_t i = 1; i < vertices.size(); ++i) out << ' ' << vertices[i];
            break;
        case Kind::SquareOfCircuit:
            out << "witness square_of_circuit k=" << parameter;
            break;
    }
    return out.str();
}

std::vector<Witness> validate_tperfect_clawfree_input(const Multigraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("validate_tperfect_clawfree_input requires a simple graph");
    std::vector<Witness> out;
    if (auto claw = find_claw(g)) {
        Witness w;
        w.kind = Witness::Kind::Claw;
        w.vertices = {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]};
        out.push_back(w);
    }
    if (auto k4 = find_k4(g)) {
        Witness w;
        w.kind = Witness::Kind::K4;
        w.vertices.assign(k4->begin(), k4->end());
        out.push_back(w);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 5) {
            Witness w;
            w.kind = Witness::Kind::HighDegree;
            w.vertices = {v};
            w.parameter = g.degree(v);
            out.push_back(w);
        }
    {
        const auto holes = enumerate_odd_holes(g);
        std::vector<char> flagged(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& hole : holes) {
            std::set<VertexId> members(hole.vertices.begin(), hole.vertices.end());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (members.count(v) || flagged[static_cast<size_t>(v)]) continue;
                auto res = count_neighbors_in_odd_hole(g, v, hole);
                if (res.witness) {
                    flagged[static_cast<size_t>(v)] = 1;  // one hole witness per vertex
                    Witness w;
                    w.kind = Witness::Kind::OddHoleNeighbors;
                    w.vertices = {v};
                    w.vertices.insert(w.vertices.end(), hole.vertices.begin(),
                                      hole.vertices.end());
                    w.parameter = res.count;
                    out.push_back(w);
                }
            }
        }
    }
    for (const auto& component : connected_components(g)) {
        auto sub = induced_subgraph(g, component);
        if (auto k = recognize_square_of_circuit(sub.graph)) {
            if (*k != 3 && *k != 6) {
                Witness w;
                w.kind = Witness::Kind::SquareOfCircuit;
                w.vertices = component;
                w.parameter = *k;
                out.push_back(w);
            }
        }
    }
    return out;
}

namespace {

// Backtracking edge partition into cliques with every vertex in at most two of
// them. Candidate cliques for the lowest uncovered edge are tried largest
// first, so for a triangle the single-clique partition wins.
struct KrauszSearch {
    const Multigraph& g;
    std::vector<std::vector<char>> adj;
    std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
    std::vector<char> covered;
    std::vector<int> clique_count;
    std::vector<std::vector<VertexId>> cliques;

    explicit KrauszSearch(const Multigraph& graph)
        : g(graph),
          adj(static_cast<size_t>(graph.vertex_count()),
              std::vector<char>(static_cast<size_t>(graph.vertex_count()), 0)),
          covered(static_cast<size_t>(graph.edge_count()), 0),
          clique_count(static_cast<size_t>(graph.vertex_count()), 0) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
            edge_id[std::minmax(u, v)] = e;
        }
    }

    bool vertex_stuck(VertexId v) const {
        if (clique_count[static_cast<size_t>(v)] < 2) return false;
        for (EdgeId e : g.incident_edges(v))
            if (!covered[static_cast<size_t>(e)]) return true;
        return false;
    }

    bool search() {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!covered[static_cast<size_t>(e)]) {
                pick = e;
                break;
            }
        if (pick < 0) return true;
        auto [u, v] = g.endpoints(pick);
        if (clique_count[static_cast<size_t>(u)] >= 2 || clique_count[static_cast<size_t>(v)] >= 2)
            return false;

        std::vector<VertexId> common;
        for (VertexId w = 0; w < g.vertex_count(); ++w)
            if (w != u && w != v && clique_count[static_cast<size_t>(w)] < 2 &&
                adj[static_cast<size_t>(w)][static_cast<size_t>(u)] &&
                adj[static_cast<size_t>(w)][static_cast<size_t>(v)] &&
                !covered[static_cast<size_t>(edge_id.at(std::minmax(w, u)))] &&
                !covered[static_cast<size_t>(edge_id.at(std::minmax(w, v)))])
                common.push_back(w);

        // subsets of the common neighborhood that stay cliques on uncovered edges
        std::vector<std::vector<VertexId>> candidates;
        std::vector<VertexId> chosen;
        auto enumerate = [&](auto&& self, size_t idx) -> void {
            candidates.push_back(chosen);
            for (size_t i = idx; i < common.size(); ++i) {
                bool fits = true;
                for (VertexId w : chosen) {
                    if (!adj[static_cast<size_t>(w)][static_cast<size_t>(common[i])] ||
                        covered[static_cast<size_t>(edge_id.at(std::minmax(w, common[i])))]) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) continue;
                chosen.push_back(common[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        enumerate(enumerate, 0);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& lhs, const auto& rhs) { return lhs.size() > rhs.size(); });

        for (const auto& extension : candidates) {
            std::vector<VertexId> clique{u, v};
            clique.insert(clique.end(), extension.begin(), extension.end());
            std::sort(clique.begin(), clique.end());
            std::vector<EdgeId> newly;
            for (size_t i = 0; i < clique.size(); ++i)
                for (size_t j = i + 1; j < clique.size(); ++j)
                    newly.push_back(edge_id.at(std::minmax(clique[i], clique[j])));
            for (EdgeId e : newly) covered[static_cast<size_t>(e)] = 1;
            for (VertexId w : clique) ++clique_count[static_cast<size_t>(w)];
            cliques.push_back(clique);

            bool stuck = false;
            for (VertexId w : clique)
                if (vertex_stuck(w)) {
                    stuck = true;
                    break;
                }
            if (!stuck && search()) return true;

            cliques.pop_back();
            for (VertexId w : clique) --clique_count[static_cast<size_t>(w)];
            for (EdgeId e : newly) covered[static_cast<size_t>(e)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<RootGraph> root_graph(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("root_graph requires a simple graph");
    KrauszSearch search(g);
    if (!search.search()) return std::nullopt;

    // cliques become root vertices; give every vertex a second (private) clique
    // as needed so that each g-vertex corresponds to one root edge
    std::vector<std::array<int, 2>> membership(static_cast<size_t>(g.vertex_count()),
                                               {-1, -1});
    for (size_t i = 0; i < search.cliques.size(); ++i)
        for (VertexId v : search.cliques[i]) {
            auto& slots = membership[static_cast<size_t>(v)];
            (slots[0] < 0 ? slots[0] : slots[1]) = static_cast<int>(i);
        }
    int next = static_cast<int>(search.cliques.size());
    for (auto& slots : membership) {
        if (slots[0] < 0) slots[0] = next++;
        if (slots[1] < 0) slots[1] = next++;
    }
    Multigraph root(next);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        root.add_edge(membership[static_cast<size_t>(v)][0],
                      membership[static_cast<size_t>(v)][1]);
    assert(root.is_simple());
    return RootGraph{std::move(root)};
}

LineColorResult color_line_graph_weighted(const Multigraph& h, const WeightVector& edge_weights) {
    if (static_cast<int>(edge_weights.size()) != h.edge_count())
        throw std::invalid_argument("edge weight vector size mismatch");
    Multigraph replicated = replicate_edges(h, edge_weights);
    std::vector<EdgeId> origin;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        for (int i = 0; i < edge_weights[static_cast<size_t>(e)]; ++i) origin.push_back(e);

    EdgeColorResult run = color_edges(replicated);
    LineColorResult out;
    out.palette = run.coloring.palette_size();
    out.certificates = run.c5p_certificates;
    out.coloring.stable_sets.resize(static_cast<size_t>(out.palette));
    for (EdgeId e = 0; e < replicated.edge_count(); ++e)
        out.coloring.stable_sets[static_cast<size_t>(run.coloring.color_of(e))].push_back(
            origin[static_cast<size_t>(e)]);
    for (auto& s : out.coloring.stable_sets) std::sort(s.begin(), s.end());
    out.optimal = out.palette == kappa_edge(replicated);
    return out;
}

namespace {

struct DiamondShape {
    VertexId x, y;  // the non-adjacent pair
    VertexId w;     // the other central vertex
};

DiamondShape diamond_shape_at(const Multigraph& g, VertexId v) {
    auto nbrs = g.neighbors(v);
    if (g.degree(v) != 3 || nbrs.size() != 3)
        throw std::invalid_argument("vertex is not a degree-3 diamond central");
    std::vector<std::pair<VertexId, VertexId>> non_edges;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (!g.adjacent(nbrs[i], nbrs[j])) non_edges.emplace_back(nbrs[i], nbrs[j]);
    if (non_edges.size() != 1)
        throw std::invalid_argument("vertex neighborhood is not a diamond");
    DiamondShape shape;
    shape.x = non_edges[0].first;
    shape.y = non_edges[0].second;
    for (VertexId w : nbrs)
        if (w != shape.x && w != shape.y) shape.w = w;
    return shape;
}

std::vector<VertexId> symmetric_difference(const std::vector<VertexId>& s,
                                           const std::vector<VertexId>& t) {
    std::vector<VertexId> out;
    std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

ReinsertOutcome reinsert_small_diamond(const Multigraph& g, const WeightVector& c, VertexId v,
                                       const VertexColoring& coloring) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size mismatch");
    if (c[static_cast<size_t>(v)] < 1)
        throw std::invalid_argument("central vertex must have positive weight");
    const DiamondShape shape = diamond_shape_at(g, v);

    ReinsertOutcome out;
    out.coloring = coloring;
    auto& sets = out.coloring.stable_sets;
    for (auto& s : sets) std::sort(s.begin(), s.end());

    std::vector<VertexId> closed = {v, shape.x, shape.y, shape.w};
    const int max_rounds = 2 * static_cast<int>(sets.size()) + 2;
    for (int round = 0; round <= max_rounds; ++round) {
        // a set avoiding the closed neighborhood of v absorbs it
        for (auto& s : sets) {
            bool clear = true;
            for (VertexId u : closed)
                if (std::binary_search(s.begin(), s.end(), u)) {
                    clear = false;
                    break;
                }
            if (clear) {
                s.insert(std::lower_bound(s.begin(), s.end(), v), v);
                out.ok = true;
                out.used_free_set = true;
                return out;
            }
        }
        std::vector<size_t> only_x, only_y;
        std::vector<char> has_x(sets.size(), 0), has_y(sets.size(), 0);
        for (size_t i = 0; i < sets.size(); ++i) {
            has_x[i] = std::binary_search(sets[i].begin(), sets[i].end(), shape.x);
            has_y[i] = std::binary_search(sets[i].begin(), sets[i].end(), shape.y);
            if (has_x[i] && !has_y[i]) only_x.push_back(i);
            if (has_y[i] && !has_x[i]) only_y.push_back(i);
        }
        if (only_x.empty() || only_y.empty()) {
            // one side's sets all contain the other vertex: the clique {v,w,y}
            // (or {v,w,x}) bounds the count, so a new singleton is safe
            sets.push_back({v});
            out.ok = true;
            out.used_free_set = false;
            return out;
        }
        const size_t si = only_x.front();
        const size_t ti = only_y.front();
        std::vector<VertexId> diff = symmetric_difference(sets[si], sets[ti]);
        auto sub = induced_subgraph(g, diff);
        VertexId sx = sub.vertex_to_new[static_cast<size_t>(shape.x)];
        std::vector<VertexId> comp;
        for (const auto& component : connected_components(sub.graph))
            if (std::find(component.begin(), component.end(), sx) != component.end()) {
                comp = component;
                break;
            }
        std::vector<char> in_comp(static_cast<size_t>(g.vertex_count()), 0);
        for (VertexId u : comp) in_comp[static_cast<size_t>(sub.vertex_to_old[static_cast<size_t>(u)])] = 1;

        if (in_comp[static_cast<size_t>(shape.y)]) {
            // shortest x-y path inside the component is induced; with v it closes
            // an odd hole on which w has three neighbors
            std::vector<VertexId> parent(static_cast<size_t>(sub.graph.vertex_count()), -1);
            std::vector<VertexId> queue{sx};
            std::vector<char> seen(static_cast<size_t>(sub.graph.vertex_count()), 0);
            seen[static_cast<size_t>(sx)] = 1;
            VertexId sy = sub.vertex_to_new[static_cast<size_t>(shape.y)];
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                VertexId cur = queue[qi];
                if (cur == sy) break;
                for (VertexId nb : sub.graph.neighbors(cur))
                    if (!seen[static_cast<size_t>(nb)]) {
                        seen[static_cast<size_t>(nb)] = 1;
                        parent[static_cast<size_t>(nb)] = cur;
                        queue.push_back(nb);
                    }
            }
            std::vector<VertexId> path;
            for (VertexId cur = sy; cur != -1; cur = parent[static_cast<size_t>(cur)])
                path.push_back(sub.vertex_to_old[static_cast<size_t>(cur)]);
            std::reverse(path.begin(), path.end());
            OddHole hole;
            hole.vertices = {v};
            hole.vertices.insert(hole.vertices.end(), path.begin(), path.end());
            auto res = count_neighbors_in_odd_hole(g, shape.w, hole);
            if (!res.witness)
                throw std::logic_error("internal error: expected a dense odd-hole neighbor");
            out.ok = false;
            out.witness = res.witness;
            return out;
        }

        // exchange the two sets along the component; x's set leaves the x-side
        std::vector<VertexId> s_new, t_new;
        for (VertexId u : sets[si])
            if (!in_comp[static_cast<size_t>(u)]) s_new.push_back(u);
        for (VertexId u : sets[ti])
            if (in_comp[static_cast<size_t>(u)]) s_new.push_back(u);
        for (VertexId u : sets[ti])
            if (!in_comp[static_cast<size_t>(u)]) t_new.push_back(u);
        for (VertexId u : sets[si])
            if (in_comp[static_cast<size_t>(u)]) t_new.push_back(u);
        std::sort(s_new.begin(), s_new.end());
        std::sort(t_new.begin(), t_new.end());
        sets[si] = std::move(s_new);
        sets[ti] = std::move(t_new);
        ++out.swaps;
    }
    throw std::logic_error("internal error: diamond reinsertion did not terminate");
}

namespace {

Witness lift_witness(Witness w, const std::vector<VertexId>& to_old) {
    for (VertexId& v : w.vertices) v = to_old[static_cast<size_t>(v)];
    return w;
}

struct SolveResult {
    bool ok = false;
    VertexColoring coloring;
    std::vector<Witness> witnesses;
};

SolveResult solve(const Multigraph& g, const WeightVector& c, ReductionTrace& trace);

SolveResult solve_connected(const Multigraph& g, const WeightVector& c, ReductionTrace& trace) {
    // all weights >= 1 here
    std::vector<VertexId> small_centrals;
    for (const Diamond& d : find_diamonds(g))
        for (VertexId u : d.centrals)
            if (g.degree(u) == 3) small_centrals.push_back(u);
    std::sort(small_centrals.begin(), small_centrals.end());
    small_centrals.erase(std::unique(small_centrals.begin(), small_centrals.end()),
                         small_centrals.end());

    if (!small_centrals.empty()) {
        VertexId v = small_centrals.front();
        WeightVector reduced = c;
        --reduced[static_cast<size_t>(v)];
        SolveResult inner = solve(g, reduced, trace);
        if (!inner.ok) return inner;
        ReinsertOutcome re = reinsert_small_diamond(g, c, v, inner.coloring);
        if (!re.ok) {
            SolveResult out;
            Witness w;
            w.kind = Witness::Kind::OddHoleNeighbors;
            w.vertices = {re.witness->vertex};
            w.vertices.insert(w.vertices.end(), re.witness->hole.begin(), re.witness->hole.end());
            w.parameter = re.witness->count;
            out.witnesses.push_back(w);
            return out;
        }
        trace.steps.push_back(
            ReductionTrace::DiamondStep{v, re.swaps, re.used_free_set});
        SolveResult out;
        out.ok = true;
        out.coloring = std::move(re.coloring);
        return out;
    }

    auto root = root_graph(g);
    if (!root) {
        SolveResult out;
        if (g.max_degree() >= 5) {
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) >= 5) {
                    Witness w;
                    w.kind = Witness::Kind::HighDegree;
                    w.vertices = {v};
                    w.parameter = g.degree(v);
                    out.witnesses.push_back(w);
                    break;
                }
            return out;
        }
        auto k = recognize_square_of_circuit(g);
        if (!k)
            throw std::logic_error(
                "internal error: connected claw-free K4-free graph with large diamonds and "
                "max degree 4 must be a line graph or a square of a circuit");
        Witness w;
        w.kind = Witness::Kind::SquareOfCircuit;
        for (VertexId v = 0; v < g.vertex_count(); ++v) w.vertices.push_back(v);
        w.parameter = *k;
        out.witnesses.push_back(w);
        return out;
    }

    // root edge i corresponds to vertex i of g, so c transfers directly
    LineColorResult base = color_line_graph_weighted(root->graph, c);
    trace.steps.push_back(ReductionTrace::LineGraphStep{root->graph, c});
    SolveResult out;
    out.ok = true;
    out.coloring = std::move(base.coloring);
    return out;
}

SolveResult solve(const Multigraph& g, const WeightVector& c, ReductionTrace& trace) {
    bool any_positive = false, any_zero = false;
    for (int w : c) {
        if (w > 0) any_positive = true;
        if (w == 0) any_zero = true;
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    }
    if (!any_positive) return SolveResult{true, {}, {}};

    if (any_zero) {
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (c[static_cast<size_t>(v)] > 0) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        WeightVector cc;
        for (VertexId v : sub.vertex_to_old) cc.push_back(c[static_cast<size_t>(v)]);
        SolveResult inner = solve(sub.graph, cc, trace);
        SolveResult out;
        out.ok = inner.ok;
        for (auto& w : inner.witnesses)
            out.witnesses.push_back(lift_witness(w, sub.vertex_to_old));
        for (auto& s : inner.coloring.stable_sets) {
            std::vector<VertexId> lifted;
            for (VertexId v : s) lifted.push_back(sub.vertex_to_old[static_cast<size_t>(v)]);
            std::sort(lifted.begin(), lifted.end());
            out.coloring.stable_sets.push_back(std::move(lifted));
        }
        // lift diamond-step ids recorded by the inner call
        return out;
    }

    auto components = connected_components(g);
    if (components.size() == 1) return solve_connected(g, c, trace);

    SolveResult out;
    out.ok = true;
    for (const auto& component : components) {
        auto sub = induced_subgraph(g, component);
        WeightVector cc;
        for (VertexId v : sub.vertex_to_old) cc.push_back(c[static_cast<size_t>(v)]);
        SolveResult inner = solve(sub.graph, cc, trace);
        if (!inner.ok) {
            out.ok = false;
            out.coloring.stable_sets.clear();
            for (auto& w : inner.witnesses)
                out.witnesses.push_back(lift_witness(w, sub.vertex_to_old));
            return out;
        }
        // union component palettes positionally, padding the shorter one
        if (inner.coloring.stable_sets.size() > out.coloring.stable_sets.size())
            out.coloring.stable_sets.resize(inner.coloring.stable_sets.size());
        for (size_t i = 0; i < inner.coloring.stable_sets.size(); ++i) {
            for (VertexId v : inner.coloring.stable_sets[i])
                out.coloring.stable_sets[i].push_back(
                    sub.vertex_to_old[static_cast<size_t>(v)]);
            std::sort(out.coloring.stable_sets[i].begin(), out.coloring.stable_sets[i].end());
        }
    }
    return out;
}

}  // namespace

TColorResult color_tperfect_clawfree(const Multigraph& g, const WeightVector& c) {
    if (!g.is_simple())
        throw std::invalid_argument("color_tperfect_clawfree requires a simple graph");
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size mismatch");

    TColorResult out;
    if (auto claw = find_claw(g)) {
        Witness w;
        w.kind = Witness::Kind::Claw;
        w.vertices = {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]};
        out.witnesses.push_back(w);
        return out;
    }
    if (auto k4 = find_k4(g)) {
        Witness w;
        w.kind = Witness::Kind::K4;
        w.vertices.assign(k4->begin(), k4->end());
        out.witnesses.push_back(w);
        return out;
    }

    SolveResult solved = solve(g, c, out.trace);
    if (!solved.ok) {
        out.witnesses = std::move(solved.witnesses);
        return out;
    }
    out.ok = true;
    out.coloring = std::move(solved.coloring);
    auto check = verify_vertex_coloring(g, c, out.coloring);
    if (!check.ok)
        throw std::logic_error("internal error: produced coloring fails verification: " +
                               check.violation);
#ifndef NDEBUG
    {
        // the whole reduction maintains exact coverage, not just sufficient
        std::vector<int> cover(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& s : out.coloring.stable_sets)
            for (VertexId v : s) ++cover[static_cast<size_t>(v)];
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            assert(cover[static_cast<size_t>(v)] == c[static_cast<size_t>(v)]);
    }
#endif
    out.formula = chi_weighted_formula(g, c);
    out.optimal = static_cast<long long>(out.coloring.stable_sets.size()) == out.formula;
    return out;
}

std::string ReductionTrace::format() const {
    std::ostringstream out;
    for (const auto& step : steps) {
        if (const auto* d = std::get_if<DiamondStep>(&step)) {
            out << "diamond v=" << d->vertex << " swaps=" << d->swaps
                << " mode=" << (d->used_free_set ? "free-set" : "new-singleton") << '\n';
        } else {
            const auto& l = std::get<LineGraphStep>(step);
            out << "line-graph n=" << l.root.vertex_count() << " m=" << l.root.edge_count()
                << " weights=";
            for (int w : l.edge_weights) out << ' ' << w;
            out << '\n';
        }
    }
    return out.str();
}

std::string format_vertex_coloring(const VertexColoring& coloring) {
    std::ostringstream out;
    out << coloring.stable_sets.size() << '\n';
    for (const auto& s : coloring.stable_sets) {
        for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace mgc
