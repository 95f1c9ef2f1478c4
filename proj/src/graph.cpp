#include "epc/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace epc {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    for (Edge& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) throw std::invalid_argument("Graph: self-loop");
        if (e.second >= n) throw std::invalid_argument("Graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adjacency_[u].emplace_back(e, v);
        adjacency_[v].emplace_back(e, u);
    }
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    std::size_t d = degree(0);
    for (std::uint32_t v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (auto [e, w] : adjacency_[u]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<std::uint32_t>((v + 1) % n));
    return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
    if (n < 2) throw std::invalid_argument("complete_graph: need n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n * d % 2 != 0 || d >= n)
        throw std::invalid_argument("random_regular: infeasible degree (need n*d even, d < n)");
    std::mt19937_64 rng(seed);
    // Pairing model: d stubs per vertex, uniformly matched; reject until
    // the multigraph is simple and connected. Simplicity succeeds with
    // probability about exp(-(d*d - 1)/4) per attempt, roughly 1.6e-4 at
    // d = 6, so the budget has to be generous.
    constexpr int kMaxTries = 1000000;
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        std::vector<std::uint32_t> stubs(n * d);
        for (std::size_t i = 0; i < stubs.size(); ++i)
            stubs[i] = static_cast<std::uint32_t>(i / d);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        edges.reserve(n * d / 2);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            std::uint32_t u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g(n, std::move(edges));
        if (!g.connected()) continue;
        return g;
    }
    throw std::runtime_error("random_regular: retry budget exhausted");
}

SpectralReport spectral_report(const Graph& g) {
    auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("spectral_report: graph is not regular");
    const std::size_t n = g.num_vertices();
    if (n > 2048) throw std::length_error("spectral_report: n > 2048");
    if (n < 2) throw std::invalid_argument("spectral_report: need n >= 2");

    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    for (const Edge& e : g.edges()) {
        adj(e.first, e.second) = 1.0;
        adj(e.second, e.first) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectral_report: eigensolver failed");
    // Eigenvalues come back sorted ascending.
    const double lambda2 = solver.eigenvalues()(static_cast<Eigen::Index>(n) - 2);

    SpectralReport rep;
    rep.degree = *d;
    rep.lambda2 = lambda2;
    rep.cheeger_lb = (static_cast<double>(*d) - lambda2) / 2.0;
    rep.is_ramanujan = lambda2 <= 2.0 * std::sqrt(static_cast<double>(*d) - 1.0) + 1e-9;
    return rep;
}

double cheeger_exhaustive(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 20) throw std::length_error("cheeger_exhaustive: n > 20");
    if (n == 0) throw std::invalid_argument("cheeger_exhaustive: empty graph");

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const Edge& e : g.edges()) {
        adj_mask[e.first] |= 1u << e.second;
        adj_mask[e.second] |= 1u << e.first;
    }
    double best = std::numeric_limits<double>::infinity();
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const unsigned size = static_cast<unsigned>(std::popcount(s));
        if (2 * size > n) continue;
        std::uint32_t comp = full & ~s;
        std::size_t boundary = 0;
        std::uint32_t rest = s;
        while (rest) {
            unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            boundary += static_cast<std::size_t>(std::popcount(adj_mask[v] & comp));
        }
        best = std::min(best, static_cast<double>(boundary) / size);
    }
    return best;
}

ResidualGraph maximal_connected_residual(const Graph& g, const std::vector<bool>& kept_vertices,
                                         const std::vector<bool>& kept_edges) {
    const std::size_t n = g.num_vertices();
    if (kept_vertices.size() != n || kept_edges.size() != g.num_edges())
        throw std::invalid_argument("maximal_connected_residual: kept-set size mismatch");
    if (std::find(kept_vertices.begin(), kept_vertices.end(), true) == kept_vertices.end())
        throw std::runtime_error("maximal_connected_residual: empty residual");

    // Union-find over kept vertices through surviving edges.
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::uint32_t> live_edges;
    for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (kept_edges[e] && kept_vertices[u] && kept_vertices[v]) {
            live_edges.push_back(e);
            parent[find(u)] = find(v);
        }
    }

    // Pick the largest component; tie-break on smallest member index
    // (roots are path-compressed, so compare by minimum vertex).
    std::vector<std::size_t> comp_size(n, 0);
    std::vector<std::uint32_t> comp_min(n, static_cast<std::uint32_t>(n));
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!kept_vertices[v]) continue;
        std::uint32_t r = find(v);
        ++comp_size[r];
        comp_min[r] = std::min(comp_min[r], v);
    }
    std::uint32_t best_root = static_cast<std::uint32_t>(n);
    for (std::uint32_t r = 0; r < n; ++r) {
        if (comp_size[r] == 0) continue;
        if (best_root == n || comp_size[r] > comp_size[best_root] ||
            (comp_size[r] == comp_size[best_root] && comp_min[r] < comp_min[best_root]))
            best_root = r;
    }

    ResidualGraph out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (kept_vertices[v] && find(v) == best_root) out.vertices.push_back(v);
    for (std::uint32_t e : live_edges)
        if (find(g.edge(e).first) == best_root) out.edge_ids.push_back(e);
    out.v_fraction = static_cast<double>(out.vertices.size()) / static_cast<double>(n);
    out.e_fraction = g.num_edges() == 0
                         ? 1.0
                         : static_cast<double>(out.edge_ids.size()) / static_cast<double>(g.num_edges());
    return out;
}

ResidualEmbedding residual_subgraph(const Graph& g, const ResidualGraph& r) {
    std::vector<std::uint32_t> to_child(g.num_vertices(), static_cast<std::uint32_t>(-1));
    for (std::uint32_t i = 0; i < r.vertices.size(); ++i) to_child[r.vertices[i]] = i;

    std::vector<Edge> child_edges;
    child_edges.reserve(r.edge_ids.size());
    for (std::uint32_t e : r.edge_ids) {
        auto [u, v] = g.edge(e);
        child_edges.emplace_back(to_child[u], to_child[v]);
    }
    ResidualEmbedding emb;
    emb.graph = Graph(r.vertices.size(), std::move(child_edges));
    emb.vertex_to_parent = r.vertices;
    // Child edges were re-sorted under child labels; recover the parent
    // edge ids by mapping endpoints back.
    emb.edge_to_parent.resize(emb.graph.num_edges());
    for (std::uint32_t ce = 0; ce < emb.graph.num_edges(); ++ce) {
        auto [cu, cv] = emb.graph.edge(ce);
        Edge pe{emb.vertex_to_parent[cu], emb.vertex_to_parent[cv]};
        if (pe.first > pe.second) std::swap(pe.first, pe.second);
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), pe);
        emb.edge_to_parent[ce] = static_cast<std::uint32_t>(it - g.edges().begin());
    }
    return emb;
}

double residual_eps_prime(double eps, std::size_t d) {
    if (d < 3) throw std::invalid_argument("residual_eps_prime: need d >= 3");
    const double dd = static_cast<double>(d);
    return eps * (dd + 1.0) / (1.0 - 2.0 * std::sqrt(dd - 1.0) / dd);
}

ResidualEdgeBounds residual_edge_bounds(double eps, std::size_t d) {
    const double ep = residual_eps_prime(eps, d);
    return {1.0 - 2.0 * ep, 1.0 - ep - eps * (static_cast<double>(d) + 1.0)};
}

BitMatrix incidence(const Graph& g) {
    BitMatrix m(g.num_edges(), g.num_vertices());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        m.set(e, g.edge(e).first, true);
        m.set(e, g.edge(e).second, true);
    }
    return m;
}

} // namespace epc
