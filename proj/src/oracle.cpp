#include "mgc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace mgc::oracle {

namespace {

struct Ticker {
    long long remaining;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    long long count = 0;

    explicit Ticker(const SearchBudget& budget) : remaining(budget.node_limit) {
        if (budget.time_limit) deadline = std::chrono::steady_clock::now() + *budget.time_limit;
    }

    void tick() {
        if (--remaining < 0) throw BudgetExceededError();
        if (deadline && (++count & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            throw BudgetExceededError();
    }
};

int greedy_edge_coloring(const Multigraph& h) {
    std::vector<int> color(static_cast<size_t>(h.edge_count()), -1);
    int used = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.endpoints(e);
        std::uint64_t taken = 0;
        for (EdgeId f : h.incident_edges(u))
            if (color[static_cast<size_t>(f)] >= 0) taken |= 1ull << color[static_cast<size_t>(f)];
        for (EdgeId f : h.incident_edges(v))
            if (color[static_cast<size_t>(f)] >= 0) taken |= 1ull << color[static_cast<size_t>(f)];
        int c = 0;
        while (taken & (1ull << c)) ++c;
        color[static_cast<size_t>(e)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Trivially sound lower bounds: max degree, and for each triangle the total
// multiplicity of its three sides (those edges are pairwise incident).
int chi_prime_lower_bound(const Multigraph& h) {
    int lb = h.max_degree();
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.endpoints(e);
        ++mult[std::minmax(u, v)];
    }
    for (VertexId a = 0; a < h.vertex_count(); ++a)
        for (VertexId b = a + 1; b < h.vertex_count(); ++b) {
            auto ab = mult.find({a, b});
            if (ab == mult.end()) continue;
            for (VertexId c = b + 1; c < h.vertex_count(); ++c) {
                auto bc = mult.find({b, c});
                auto ac = mult.find({a, c});
                if (bc == mult.end() || ac == mult.end()) continue;
                lb = std::max(lb, ab->second + bc->second + ac->second);
            }
        }
    return lb;
}

struct EdgeColorDecider {
    const Multigraph& h;
    int k;
    Ticker& ticker;
    std::vector<std::uint64_t> free;  // per vertex, bitmask of colors unused there
    std::vector<int> color;
    int uncolored;

    EdgeColorDecider(const Multigraph& graph, int palette, Ticker& t)
        : h(graph), k(palette), ticker(t),
          free(static_cast<size_t>(graph.vertex_count()),
               palette >= 64 ? ~0ull : (1ull << palette) - 1),
          color(static_cast<size_t>(graph.edge_count()), -1),
          uncolored(graph.edge_count()) {}

    bool solve(int max_used) {
        ticker.tick();
        if (uncolored == 0) return true;
        // most constrained edge first
        EdgeId pick = -1;
        int best = 65;
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            if (color[static_cast<size_t>(e)] >= 0) continue;
            auto [u, v] = h.endpoints(e);
            int options = __builtin_popcountll(free[static_cast<size_t>(u)] &
                                               free[static_cast<size_t>(v)]);
            if (options < best) {
                best = options;
                pick = e;
                if (best == 0) return false;
            }
        }
        auto [u, v] = h.endpoints(pick);
        std::uint64_t avail = free[static_cast<size_t>(u)] & free[static_cast<size_t>(v)];
        // symmetry break: existing colors plus at most one fresh color
        int cap = std::min(k, max_used + 1);
        for (int c = 0; c < cap; ++c) {
            if (!(avail & (1ull << c))) continue;
            color[static_cast<size_t>(pick)] = c;
            free[static_cast<size_t>(u)] &= ~(1ull << c);
            free[static_cast<size_t>(v)] &= ~(1ull << c);
            --uncolored;
            if (solve(std::max(max_used, c + 1))) return true;
            ++uncolored;
            free[static_cast<size_t>(u)] |= 1ull << c;
            free[static_cast<size_t>(v)] |= 1ull << c;
            color[static_cast<size_t>(pick)] = -1;
        }
        return false;
    }
};

}  // namespace

int brute_chi_prime(const Multigraph& h, const SearchBudget& budget) {
    if (h.edge_count() == 0) return 0;
    Ticker ticker(budget);
    const int lb = chi_prime_lower_bound(h);
    const int ub = greedy_edge_coloring(h);
    if (ub > 63) throw std::invalid_argument("instance too large for the exact oracle");
    for (int k = lb; k < ub; ++k) {
        EdgeColorDecider decider(h, k, ticker);
        if (decider.solve(0)) return k;
    }
    return ub;
}

namespace {

struct StableCoverSolver {
    const Multigraph& g;
    Ticker& ticker;
    std::vector<std::vector<char>> adj;
    std::map<std::vector<int>, int> memo;

    StableCoverSolver(const Multigraph& graph, Ticker& t) : g(graph), ticker(t) {
        adj.assign(static_cast<size_t>(g.vertex_count()),
                   std::vector<char>(static_cast<size_t>(g.vertex_count()), 0));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        }
    }

    // maximal independent sets of g[pool], lexicographically by construction
    void mis(std::vector<VertexId> pool, std::vector<VertexId>& current,
             std::vector<VertexId> excluded, std::vector<std::vector<VertexId>>& out) {
        ticker.tick();
        // a skipped vertex with no pool neighbor can never be dominated
        for (VertexId x : excluded) {
            bool dominatable = false;
            for (VertexId w : pool)
                if (adj[static_cast<size_t>(x)][static_cast<size_t>(w)]) {
                    dominatable = true;
                    break;
                }
            if (!dominatable) return;
        }
        if (pool.empty()) {
            if (excluded.empty()) out.push_back(current);
            return;
        }
        VertexId u = pool.front();
        // branch 1: take u
        std::vector<VertexId> np, nx;
        for (VertexId w : pool)
            if (w != u && !adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) np.push_back(w);
        for (VertexId w : excluded)
            if (!adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) nx.push_back(w);
        current.push_back(u);
        mis(np, current, nx, out);
        current.pop_back();
        // branch 2: skip u (it may only be skipped if some chosen neighbor later covers it)
        pool.erase(pool.begin());
        excluded.push_back(u);
        mis(pool, current, excluded, out);
    }

    int solve(const std::vector<int>& demands) {
        ticker.tick();
        bool done = true;
        for (int d : demands)
            if (d > 0) {
                done = false;
                break;
            }
        if (done) return 0;
        auto it = memo.find(demands);
        if (it != memo.end()) return it->second;

        VertexId pivot = -1;
        for (VertexId v = 0; v < static_cast<VertexId>(demands.size()); ++v)
            if (demands[static_cast<size_t>(v)] > 0) {
                pivot = v;
                break;
            }
        std::vector<VertexId> pool;
        for (VertexId v = pivot + 1; v < static_cast<VertexId>(demands.size()); ++v)
            if (demands[static_cast<size_t>(v)] > 0 &&
                !adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)])
                pool.push_back(v);
        std::vector<std::vector<VertexId>> sets;
        std::vector<VertexId> current;
        mis(pool, current, {}, sets);

        int best = -1;
        for (const auto& extension : sets) {
            std::vector<int> next = demands;
            --next[static_cast<size_t>(pivot)];
            for (VertexId v : extension) --next[static_cast<size_t>(v)];
            for (int& d : next) d = std::max(d, 0);
            int sub = solve(next);
            if (best < 0 || sub + 1 < best) best = sub + 1;
        }
        memo.emplace(demands, best);
        return best;
    }
};

}  // namespace

int brute_chi_weighted(const Multigraph& g, const WeightVector& c, const SearchBudget& budget) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size mismatch");
    if (!g.is_simple()) throw std::invalid_argument("brute_chi_weighted requires a simple graph");
    for (int w : c)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    Ticker ticker(budget);
    StableCoverSolver solver(g, ticker);
    return solver.solve(std::vector<int>(c.begin(), c.end()));
}

std::vector<std::vector<EdgeId>> enumerate_matchings(const Multigraph& h, bool maximal_only) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<char> covered(static_cast<size_t>(h.vertex_count()), 0);
    std::vector<EdgeId> current;

    auto compatible = [&](EdgeId e) {
        auto [u, v] = h.endpoints(e);
        return !covered[static_cast<size_t>(u)] && !covered[static_cast<size_t>(v)];
    };
    auto dfs = [&](auto&& self, EdgeId start) -> void {
        if (!maximal_only) {
            out.push_back(current);
        } else {
            bool maximal = true;
            for (EdgeId e = 0; e < h.edge_count(); ++e)
                if (std::find(current.begin(), current.end(), e) == current.end() &&
                    compatible(e)) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(current);
        }
        for (EdgeId e = start; e < h.edge_count(); ++e) {
            if (!compatible(e)) continue;
            auto [u, v] = h.endpoints(e);
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<std::vector<VertexId>> enumerate_stable_sets(const Multigraph& g, bool maximal_only) {
    std::vector<std::vector<char>> adj(static_cast<size_t>(g.vertex_count()),
                                       std::vector<char>(static_cast<size_t>(g.vertex_count()), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> current;
    auto compatible = [&](VertexId v) {
        for (VertexId u : current)
            if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) return false;
        return true;
    };
    auto dfs = [&](auto&& self, VertexId start) -> void {
        if (!maximal_only) {
            out.push_back(current);
        } else {
            bool maximal = true;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (std::find(current.begin(), current.end(), v) == current.end() &&
                    compatible(v)) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(current);
        }
        for (VertexId v = start; v < g.vertex_count(); ++v) {
            if (!compatible(v)) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace mgc::oracle
