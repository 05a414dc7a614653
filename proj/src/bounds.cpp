#include "mgc/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mgc/structure.hpp"

namespace mgc {

BigInt rational_ceil(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num > q * den) ++q;
    return q;
}

std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        out << '/' << boost::multiprecision::denominator(r);
    return out.str();
}

Rational gamma_prime(const Multigraph& h) {
    Rational best = 0;
    for (const auto& ring : enumerate_odd_rings(h)) {
        Rational value(2 * static_cast<long long>(ring.edges.size()),
                       static_cast<long long>(ring.vertices.size()) - 1);
        best = std::max(best, value);
    }
    return best;
}

std::vector<std::vector<VertexId>> maximal_cliques(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("maximal_cliques requires a simple graph");
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(n), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> r, p, x;
    for (VertexId v = 0; v < n; ++v) p.push_back(v);

    auto bk = [&](auto&& self, std::vector<VertexId>& R, std::vector<VertexId> P,
                  std::vector<VertexId> X) -> void {
        if (P.empty() && X.empty()) {
            out.push_back(R);
            return;
        }
        // pivot on the vertex dominating the most of P
        VertexId pivot = -1;
        size_t best = 0;
        for (VertexId u : P) {
            size_t count = 0;
            for (VertexId w : P)
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) ++count;
            if (pivot < 0 || count > best) {
                pivot = u;
                best = count;
            }
        }
        for (VertexId u : X) {
            size_t count = 0;
            for (VertexId w : P)
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) ++count;
            if (count > best) {
                pivot = u;
                best = count;
            }
        }
        std::vector<VertexId> candidates;
        for (VertexId u : P)
            if (pivot < 0 || !adj[static_cast<size_t>(pivot)][static_cast<size_t>(u)])
                candidates.push_back(u);
        for (VertexId u : candidates) {
            std::vector<VertexId> np, nx;
            for (VertexId w : P)
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) np.push_back(w);
            for (VertexId w : X)
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)]) nx.push_back(w);
            R.push_back(u);
            self(self, R, np, nx);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), u));
            X.push_back(u);
        }
    };
    bk(bk, r, p, x);
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long omega_weighted(const Multigraph& g, const WeightVector& c) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size mismatch");
    long long best = 0;
    for (const auto& clique : maximal_cliques(g)) {
        long long total = 0;
        for (VertexId v : clique) total += c[static_cast<size_t>(v)];
        best = std::max(best, total);
    }
    return best;
}

Rational gamma_weighted(const Multigraph& g, const WeightVector& c) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size mismatch");
    Rational best = 0;
    for (const auto& hole : enumerate_odd_holes(g)) {
        long long total = 0;
        for (VertexId v : hole.vertices) total += c[static_cast<size_t>(v)];
        Rational value(2 * total, static_cast<long long>(hole.vertices.size()) - 1);
        best = std::max(best, value);
    }
    return best;
}

long long kappa_edge(const Multigraph& h) {
    BigInt gamma_up = rational_ceil(gamma_prime(h));
    long long delta = h.max_degree();
    return std::max<long long>(delta, gamma_up.convert_to<long long>());
}

long long chi_weighted_formula(const Multigraph& g, const WeightVector& c) {
    BigInt gamma_up = rational_ceil(gamma_weighted(g, c));
    return std::max<long long>(omega_weighted(g, c), gamma_up.convert_to<long long>());
}

}  // namespace mgc
