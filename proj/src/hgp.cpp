#include "epc/hgp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace epc {

namespace {

BitVector build_x_row(const Graph& g, const HgpIndex& idx, std::size_t e, std::size_t v) {
    BitVector row(idx.num_qubits());
    const Edge& ed = g.edges()[e];
    row.set(idx.vv(ed.first, v), true);
    row.set(idx.vv(ed.second, v), true);
    for (const auto& [eid, nb] : g.incident(v)) row.set(idx.ee(e, eid), true);
    return row;
}

BitVector build_z_row(const Graph& g, const HgpIndex& idx, std::size_t v, std::size_t e) {
    BitVector row(idx.num_qubits());
    const Edge& ed = g.edges()[e];
    row.set(idx.vv(v, ed.first), true);
    row.set(idx.vv(v, ed.second), true);
    for (const auto& [eid, nb] : g.incident(v)) row.set(idx.ee(eid, e), true);
    return row;
}

} // namespace

HgpCode hypergraph_product(const Graph& g) {
    if (!g.connected())
        throw std::invalid_argument("hypergraph_product: graph is disconnected");
    HgpIndex idx{g.num_vertices(), g.num_edges()};
    const std::size_t n = idx.n;
    const std::size_t m = idx.m;
    BitMatrix hx(m * n, idx.num_qubits());
    BitMatrix hz(n * m, idx.num_qubits());
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t v = 0; v < n; ++v)
            hx.row(idx.x_check(e, v)) = build_x_row(g, idx, e, v);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t e = 0; e < m; ++e)
            hz.row(idx.z_check(v, e)) = build_z_row(g, idx, v, e);
    return HgpCode{make_css(std::move(hx), std::move(hz)), idx, g};
}

BitVector stabilizer_generator(const HgpCode& h, Basis kind, std::size_t v, std::size_t e) {
    if (v >= h.index.n || e >= h.index.m)
        throw std::out_of_range("stabilizer_generator: vertex or edge index out of range");
    return kind == Basis::X ? build_x_row(h.graph, h.index, e, v)
                            : build_z_row(h.graph, h.index, v, e);
}

BitVector column_logical(const HgpCode& h, Basis kind, std::size_t v1) {
    const HgpIndex& idx = h.index;
    if (v1 >= idx.n) throw std::out_of_range("column_logical: vertex index out of range");
    BitVector w(idx.num_qubits());
    for (std::size_t u = 0; u < idx.n; ++u)
        w.set(kind == Basis::Z ? idx.vv(u, v1) : idx.vv(v1, u), true);
    const BitMatrix& syn = kind == Basis::Z ? h.code.hx() : h.code.hz();
    for (std::size_t i = 0; i < syn.rows(); ++i)
        if (syn.row(i).dot(w))
            throw std::runtime_error("column_logical: not-logical (nonzero syndrome)");
    const BitMatrix& span = kind == Basis::Z ? h.code.hz() : h.code.hx();
    RowEchelon ech(idx.num_qubits());
    for (std::size_t i = 0; i < span.rows(); ++i) ech.absorb(span.row(i));
    if (ech.contains(w))
        throw std::runtime_error("column_logical: not-logical (inside stabilizer span)");
    return w;
}

namespace {

std::vector<BitVector> cycle_space_basis(const Graph& g) {
    return nullspace_basis(incidence(g).transposed());
}

// Embeds the tensor of a single edge row with a cycle c into the E x E
// block: the word with row e equal to c and every other row zero.
BitVector edge_cycle_tensor(const HgpIndex& idx, std::size_t e, const BitVector& c) {
    BitVector w(idx.num_qubits());
    c.for_each_set_bit([&](std::size_t f) { w.set(idx.ee(e, f), true); });
    return w;
}

} // namespace

SpanningSetReport spanning_set_check(const HgpCode& h) {
    const HgpIndex& idx = h.index;
    if (idx.num_qubits() > 2500)
        throw std::length_error("spanning_set_check: too-large code with " +
                                std::to_string(idx.num_qubits()) + " qubits");
    SpanningSetReport rep;
    rep.k_rank = h.code.k();
    const std::vector<BitVector> cyc = cycle_space_basis(h.graph);
    rep.cycle_dim = cyc.size();
    rep.k_formula = 1 + rep.cycle_dim * rep.cycle_dim;
    rep.expected_dim = idx.num_qubits() - h.code.rank_x();

    RowEchelon ech(idx.num_qubits());
    for (std::size_t i = 0; i < h.code.hz().rows(); ++i) ech.absorb(h.code.hz().row(i));
    for (std::size_t e = 0; e < idx.m; ++e)
        for (const BitVector& c : cyc) ech.absorb(edge_cycle_tensor(idx, e, c));
    ech.absorb(column_logical(h, Basis::Z, 0));
    rep.span_rank = ech.rank();
    rep.spans = rep.span_rank == rep.expected_dim;
    return rep;
}

FractalSubcode fractal_subcode(const HgpCode& h, const std::vector<bool>& v_keep,
                               const std::vector<bool>& e_keep) {
    const ResidualGraph res = maximal_connected_residual(h.graph, v_keep, e_keep);
    if (res.vertices.empty()) throw std::runtime_error("fractal_subcode: empty-residual");
    ResidualEmbedding emb = residual_subgraph(h.graph, res);

    FractalSubcode out;
    out.child = hypergraph_product(emb.graph);
    out.residual = res;
    const HgpIndex& ci = out.child.index;
    const HgpIndex& pi = h.index;
    out.qubit_to_parent.assign(ci.num_qubits(), 0);
    for (std::size_t u = 0; u < ci.n; ++u)
        for (std::size_t v = 0; v < ci.n; ++v)
            out.qubit_to_parent[ci.vv(u, v)] =
                pi.vv(emb.vertex_to_parent[u], emb.vertex_to_parent[v]);
    for (std::size_t e = 0; e < ci.m; ++e)
        for (std::size_t f = 0; f < ci.m; ++f)
            out.qubit_to_parent[ci.ee(e, f)] =
                pi.ee(emb.edge_to_parent[e], emb.edge_to_parent[f]);

    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent_to_child(pi.num_qubits(), npos);
    for (std::size_t q = 0; q < ci.num_qubits(); ++q)
        parent_to_child[out.qubit_to_parent[q]] = q;

    const auto restricted_equal = [&](const BitVector& child_row, const BitVector& parent_row) {
        std::size_t embedded = 0;
        bool ok = true;
        parent_row.for_each_set_bit([&](std::size_t pq) {
            const std::size_t cq = parent_to_child[pq];
            if (cq == npos) return;
            ++embedded;
            if (!child_row.get(cq)) ok = false;
        });
        return ok && embedded == child_row.weight();
    };

    out.checks_inherited = true;
    for (std::size_t e = 0; e < ci.m && out.checks_inherited; ++e)
        for (std::size_t v = 0; v < ci.n && out.checks_inherited; ++v) {
            const BitVector& crow = out.child.code.hx().row(ci.x_check(e, v));
            const BitVector& prow =
                h.code.hx().row(pi.x_check(emb.edge_to_parent[e], emb.vertex_to_parent[v]));
            if (!restricted_equal(crow, prow)) out.checks_inherited = false;
        }
    for (std::size_t v = 0; v < ci.n && out.checks_inherited; ++v)
        for (std::size_t e = 0; e < ci.m && out.checks_inherited; ++e) {
            const BitVector& crow = out.child.code.hz().row(ci.z_check(v, e));
            const BitVector& prow =
                h.code.hz().row(pi.z_check(emb.vertex_to_parent[v], emb.edge_to_parent[e]));
            if (!restricted_equal(crow, prow)) out.checks_inherited = false;
        }
    out.embedding = std::move(emb);
    return out;
}

bool LocalizedDistanceReport::disjunction_holds(double v_threshold, double e_threshold) const {
    for (std::size_t v = 0; v < min_e_for_v.size(); ++v) {
        if (min_e_for_v[v] == std::numeric_limits<std::uint32_t>::max()) continue;
        if (static_cast<double>(v) < v_threshold &&
            static_cast<double>(min_e_for_v[v]) < e_threshold)
            return false;
    }
    return true;
}

double LocalizedDistanceReport::partition_margin(double v_sub, double e_sub) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < min_e_for_v.size(); ++v) {
        if (min_e_for_v[v] == std::numeric_limits<std::uint32_t>::max()) continue;
        const double value = std::max(static_cast<double>(v) - v_sub,
                                      static_cast<double>(min_e_for_v[v]) - e_sub);
        best = std::min(best, value);
    }
    return best;
}

LocalizedDistanceReport localized_distance_check(const HgpCode& h, std::size_t max_dim,
                                                 std::size_t pivot_vertex) {
    const HgpIndex& idx = h.index;
    const std::size_t n = idx.n;
    const std::size_t m = idx.m;
    LocalizedDistanceReport rep;
    rep.pivot_vertex = pivot_vertex;

    const BitVector b1z = column_logical(h, Basis::Z, pivot_vertex);

    RowEchelon ech(idx.num_qubits());
    for (std::size_t i = 0; i < h.code.hz().rows(); ++i) ech.absorb(h.code.hz().row(i));
    std::vector<BitVector> basis = ech.rows();
    const std::size_t stab_dim = basis.size();

    std::vector<BitVector> extras;
    const std::vector<BitVector> cyc = cycle_space_basis(h.graph);
    for (std::size_t e = 0; e < idx.m; ++e)
        for (const BitVector& c : cyc) {
            BitVector t = edge_cycle_tensor(idx, e, c);
            if (ech.absorb(t)) extras.push_back(std::move(t));
        }
    if (extras.size() != cyc.size() * cyc.size())
        throw std::runtime_error("localized_distance_check: cycle tensor rank mismatch");

    if (stab_dim + extras.size() <= max_dim) {
        basis.insert(basis.end(), extras.begin(), extras.end());
        rep.cycle_logicals_included = true;
    } else if (stab_dim <= max_dim) {
        rep.cycle_logicals_included = false;
    } else {
        throw std::length_error("localized_distance_check: too-large coset dimension " +
                                std::to_string(stab_dim) + " (cap " +
                                std::to_string(max_dim) + ")");
    }
    rep.coset_dim = basis.size();
    rep.words = std::uint64_t{1} << rep.coset_dim;

    std::vector<BitVector> vmask(n, BitVector(idx.num_qubits()));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) vmask[v].set(idx.vv(u, v), true);
    std::vector<BitVector> emask(m, BitVector(idx.num_qubits()));
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t e = 0; e < m; ++e) emask[f].set(idx.ee(e, f), true);

    rep.min_e_for_v.assign(n + 1, std::numeric_limits<std::uint32_t>::max());
    rep.min_max_v_col = std::numeric_limits<std::uint32_t>::max();
    rep.min_max_e_col = std::numeric_limits<std::uint32_t>::max();

    BitVector cur = b1z;
    const auto record = [&](const BitVector& w) {
        std::uint32_t max_v = 0;
        for (std::size_t v = 0; v < n; ++v)
            max_v = std::max(max_v, static_cast<std::uint32_t>(w.weight_masked(vmask[v])));
        std::uint32_t max_e = 0;
        for (std::size_t f = 0; f < m; ++f)
            max_e = std::max(max_e, static_cast<std::uint32_t>(w.weight_masked(emask[f])));
        rep.min_max_v_col = std::min(rep.min_max_v_col, max_v);
        rep.min_max_e_col = std::min(rep.min_max_e_col, max_e);
        rep.min_e_for_v[max_v] = std::min(rep.min_e_for_v[max_v], max_e);
    };
    record(cur);
    for (std::uint64_t i = 1; i < rep.words; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        record(cur);
    }
    return rep;
}

} // namespace epc
