#pragma once

// Simple undirected graphs: generators (cycles, cliques, random regular
// via the pairing model), spectral certification of expansion, exact
// Cheeger constants by cut enumeration, residual-graph extraction, and
// the edge-vertex incidence operator over GF(2).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "epc/gf2.hpp"

namespace epc {

using Edge = std::pair<std::uint32_t, std::uint32_t>; // stored with first < second

class Graph {
public:
    Graph() = default;
    // Edges are normalized (u < v), sorted, and checked for self-loops
    // and duplicates so that edge indices are deterministic.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }

    std::size_t degree(std::uint32_t v) const { return adjacency_[v].size(); }
    // Neighbor list of v as (edge index, other endpoint) pairs.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& incident(std::uint32_t v) const {
        return adjacency_[v];
    }

    // Degree when the graph is regular, nullopt otherwise.
    std::optional<std::size_t> regular_degree() const;

    bool connected() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Pairing-model random d-regular graph, resampled until simple and
// connected; deterministic per seed. Throws when n*d is odd or d >= n.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

struct SpectralReport {
    std::size_t degree = 0;
    double lambda2 = 0.0;     // second-largest adjacency eigenvalue
    double cheeger_lb = 0.0;  // (d - lambda2) / 2
    bool is_ramanujan = false; // lambda2 <= 2*sqrt(d-1) + tol
};

// Dense symmetric eigensolve; requires a regular graph with n <= 2048.
SpectralReport spectral_report(const Graph& g);

// Exact min over 0 < |S| <= n/2 of |boundary(S)|/|S|; requires n <= 20.
double cheeger_exhaustive(const Graph& g);

struct ResidualGraph {
    std::vector<std::uint32_t> vertices; // V': the chosen connected component, sorted
    std::vector<std::uint32_t> edge_ids; // E': parent edge indices inside the component
    double v_fraction = 0.0;             // |V'| / |V|
    double e_fraction = 0.0;             // |E'| / |E|
};

// Largest connected component of (kept_vertices, kept_edges restricted
// to kept vertices); ties broken by smallest minimum vertex index.
ResidualGraph maximal_connected_residual(const Graph& g, const std::vector<bool>& kept_vertices,
                                         const std::vector<bool>& kept_edges);

// Child graph on the residual component plus the vertex/edge relabeling
// maps back into the parent.
struct ResidualEmbedding {
    Graph graph;
    std::vector<std::uint32_t> vertex_to_parent; // child v -> parent vertex
    std::vector<std::uint32_t> edge_to_parent;   // child e -> parent edge index
};

ResidualEmbedding residual_subgraph(const Graph& g, const ResidualGraph& r);

// eps' = eps*(d+1) / (1 - 2*sqrt(d-1)/d); the removal amplification
// factor of the residual-graph bound. Requires d >= 3.
double residual_eps_prime(double eps, std::size_t d);

// The two lower bounds on |E'|/|E| that the residual analysis yields:
// the coarser 1 - 2*eps' and the sharper 1 - eps' - eps*(d+1).
struct ResidualEdgeBounds {
    double coarse;
    double sharp;
};
ResidualEdgeBounds residual_edge_bounds(double eps, std::size_t d);

// |E| x |V| incidence matrix; row e has ones at e's endpoints.
BitMatrix incidence(const Graph& g);

} // namespace epc
