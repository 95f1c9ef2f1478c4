#pragma once

// Hypergraph product of a graph repetition code with itself: qubit
// indexing, CSS matrices, generator and logical constructions, the
// fractal subcode of a residual subgraph, and the exhaustive
// heavy-column audit of the designated logical coset.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "epc/css.hpp"
#include "epc/gf2.hpp"
#include "epc/graph.hpp"

namespace epc {

// Layout: V x V block row-major first, then E x E block row-major.
struct HgpIndex {
    std::size_t n = 0; // |V|
    std::size_t m = 0; // |E|

    std::size_t num_qubits() const { return n * n + m * m; }
    std::size_t vv(std::size_t u, std::size_t v) const { return u * n + v; }
    std::size_t ee(std::size_t e, std::size_t f) const { return n * n + e * m + f; }
    bool is_vv(std::size_t q) const { return q < n * n; }
    std::pair<std::size_t, std::size_t> decode_vv(std::size_t q) const {
        return {q / n, q % n};
    }
    std::pair<std::size_t, std::size_t> decode_ee(std::size_t q) const {
        const std::size_t r = q - n * n;
        return {r / m, r % m};
    }
    // Check rows: X-checks indexed by (e, v), Z-checks by (v, e).
    std::size_t x_check(std::size_t e, std::size_t v) const { return e * n + v; }
    std::size_t z_check(std::size_t v, std::size_t e) const { return v * m + e; }
};

struct HgpCode {
    CssCode code;
    HgpIndex index;
    Graph graph;
};

HgpCode hypergraph_product(const Graph& g);

BitVector stabilizer_generator(const HgpCode& h, Basis kind, std::size_t v, std::size_t e);

// Z-kind: indicator of column V x {v1}; X-kind: indicator of row {v1} x V.
// Verified to have zero syndrome and to avoid the opposing row span.
BitVector column_logical(const HgpCode& h, Basis kind, std::size_t v1);

struct SpanningSetReport {
    std::size_t k_rank;       // N - rank hx - rank hz
    std::size_t k_formula;    // 1 + (m - n + 1)^2
    std::size_t cycle_dim;    // m - n + 1
    std::size_t span_rank;    // rank of {column logical} + {edge row x cycle} + hz rows
    std::size_t expected_dim; // N - rank hx
    bool spans;
};

// Rank test that the column logical, the single-edge-row by cycle tensor
// words and the hz rows together span the zero-syndrome space of hx.
SpanningSetReport spanning_set_check(const HgpCode& h);

struct FractalSubcode {
    HgpCode child;
    ResidualGraph residual;
    ResidualEmbedding embedding;
    std::vector<std::size_t> qubit_to_parent; // child qubit -> parent qubit
    bool checks_inherited; // every child check is a parent check restricted
};

FractalSubcode fractal_subcode(const HgpCode& h, const std::vector<bool>& v_keep,
                               const std::vector<bool>& e_keep);

// Exhaustive audit of the coset of words with zero hx-syndrome pairing to
// 1 with the row logical of the pivot vertex. Walks the coset, tracking
// for each word its maximum column weight on the V x V block and on the
// E x E block; the table keeps, per V-column maximum, the least E-column
// maximum seen, which suffices for any monotone two-sided threshold.
struct LocalizedDistanceReport {
    std::size_t pivot_vertex = 0;
    std::size_t coset_dim = 0;
    bool cycle_logicals_included = false;
    std::uint64_t words = 0;
    std::uint32_t min_max_v_col = 0;
    std::uint32_t min_max_e_col = 0;
    std::vector<std::uint32_t> min_e_for_v; // [maxV] -> min maxE, UINT32_MAX when empty

    bool disjunction_holds(double v_threshold, double e_threshold) const;
    double partition_margin(double v_sub, double e_sub) const;
};

LocalizedDistanceReport localized_distance_check(const HgpCode& h, std::size_t max_dim = 24,
                                                 std::size_t pivot_vertex = 0);

} // namespace epc
