#include "epc/tanner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace epc {

namespace {

// Packs a vector over at most 32 bits into a mask.
std::uint32_t low_mask(const BitVector& v) {
    std::uint32_t out = 0;
    v.for_each_set_bit([&](std::size_t b) { out |= std::uint32_t{1} << b; });
    return out;
}

} // namespace

TannerCode tanner_from_checks(BitMatrix checks) {
    TannerCode c;
    c.check_rank = rank(checks);
    c.kernel = nullspace_basis(checks);
    c.checks = std::move(checks);
    return c;
}

TannerCode transpose_code(const TannerCode& c) {
    return tanner_from_checks(c.checks.transposed());
}

TannerCode repetition_from_graph(const Graph& g) {
    if (!g.connected())
        throw std::invalid_argument("repetition_from_graph: graph is disconnected");
    return tanner_from_checks(incidence(g));
}

double violated_fraction(const TannerCode& c, const BitVector& w) {
    if (w.size() != c.n())
        throw std::invalid_argument("violated_fraction: word length mismatch");
    if (c.m() == 0) return 0.0;
    std::size_t violated = 0;
    for (std::size_t i = 0; i < c.m(); ++i)
        violated += c.checks.row(i).dot(w);
    return static_cast<double>(violated) / static_cast<double>(c.m());
}

std::size_t distance_exhaustive(const TannerCode& c) {
    const std::size_t dim = c.kernel.size();
    if (dim == 0) return kInfiniteDistance;
    if (dim > 26)
        throw std::length_error("distance_exhaustive: codeword space dimension " +
                                std::to_string(dim) + " exceeds 26");
    BitVector cur(c.n());
    std::size_t best = kInfiniteDistance;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= c.kernel[static_cast<std::size_t>(std::countr_zero(i))];
        const std::size_t w = cur.weight();
        if (w < best) {
            best = w;
            if (best == 1) break;
        }
    }
    return best;
}

SoundnessReport ltc_soundness_exhaustive(const TannerCode& c) {
    const std::size_t n = c.n();
    const std::size_t m = c.m();
    if (n > 22)
        throw std::length_error("ltc_soundness_exhaustive: n = " + std::to_string(n) +
                                " exceeds 22");
    if (m == 0)
        throw std::invalid_argument("ltc_soundness_exhaustive: no checks");
    const std::size_t space = std::size_t{1} << n;

    // Distance to the code for every word, via breadth-first search on the
    // hypercube seeded with all codewords.
    std::vector<std::uint8_t> dist(space, 0xff);
    std::vector<std::uint32_t> frontier;
    {
        std::uint32_t cw = 0;
        dist[0] = 0;
        frontier.push_back(0);
        std::vector<std::uint32_t> basis;
        basis.reserve(c.kernel.size());
        for (const BitVector& v : c.kernel) basis.push_back(low_mask(v));
        const std::uint64_t total = std::uint64_t{1} << basis.size();
        for (std::uint64_t i = 1; i < total; ++i) {
            cw ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
            dist[cw] = 0;
            frontier.push_back(cw);
        }
    }
    for (std::uint8_t level = 0; !frontier.empty(); ++level) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t w : frontier) {
            for (std::size_t b = 0; b < n; ++b) {
                const std::uint32_t u = w ^ (std::uint32_t{1} << b);
                if (dist[u] == 0xff) {
                    dist[u] = static_cast<std::uint8_t>(level + 1);
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }

    // Per-bit syndrome columns packed into masks; m <= n*(n-1)/2 can exceed
    // 64 only for dense check sets, so keep a generic BitVector syndrome.
    std::vector<BitVector> col(n, BitVector(m));
    for (std::size_t i = 0; i < m; ++i) {
        c.checks.row(i).for_each_set_bit([&](std::size_t b) { col[b].set(i, true); });
    }

    SoundnessReport rep;
    rep.rho = std::numeric_limits<double>::infinity();
    rep.argmin_word = BitVector(n);
    rep.argmin_violated_fraction = 0.0;
    rep.argmin_distance = 0;

    BitVector syndrome(m);
    std::uint32_t cur = 0;
    for (std::size_t step = 1; step < space; ++step) {
        const std::size_t b = static_cast<std::size_t>(std::countr_zero(step));
        cur ^= std::uint32_t{1} << b;
        syndrome ^= col[b];
        if (dist[cur] == 0) continue;
        const double viol = static_cast<double>(syndrome.weight()) / static_cast<double>(m);
        const double ratio = viol * static_cast<double>(n) / static_cast<double>(dist[cur]);
        if (ratio < rep.rho) {
            rep.rho = ratio;
            rep.argmin_violated_fraction = viol;
            rep.argmin_distance = dist[cur];
            BitVector w(n);
            for (std::size_t i = 0; i < n; ++i)
                if ((cur >> i) & 1u) w.set(i, true);
            rep.argmin_word = w;
        }
    }
    if (!std::isfinite(rep.rho))
        throw std::runtime_error("ltc_soundness_exhaustive: every word is a codeword");
    return rep;
}

double cluster_radius(double eps, double rho) {
    if (rho <= 0.0)
        throw std::invalid_argument("cluster_radius: soundness must be positive");
    return eps / rho;
}

ResidualWordChecks residual_word_checks(const Graph& parent, const ResidualGraph& r) {
    const auto deg = parent.regular_degree();
    if (!deg)
        throw std::invalid_argument("residual_word_checks: parent graph is not regular");
    const std::size_t d = *deg;
    const ResidualEmbedding emb = residual_subgraph(parent, r);
    const std::size_t np = emb.graph.num_vertices();
    const std::size_t mp = emb.graph.num_edges();
    if (np > 16)
        throw std::length_error("residual_word_checks: residual has " + std::to_string(np) +
                                " vertices, limit 16");

    ResidualWordChecks out;
    out.eps = std::max(1.0 - r.v_fraction, 1.0 - r.e_fraction);
    out.eps_prime = residual_eps_prime(out.eps, d);
    const double spectral_gap = 1.0 - 2.0 * std::sqrt(static_cast<double>(d - 1)) /
                                          static_cast<double>(d);
    const double denom = spectral_gap * (1.0 - out.eps_prime);

    std::vector<std::uint32_t> adj(np, 0);
    for (const Edge& e : emb.graph.edges()) {
        adj[e.first] |= std::uint32_t{1} << e.second;
        adj[e.second] |= std::uint32_t{1} << e.first;
    }

    out.subgraph_holds = true;
    out.subgraph_worst_slack = std::numeric_limits<double>::infinity();
    out.band_nonempty = false;
    out.band_words = 0;
    out.expansion_holds = true;

    const double band_lo = 100.0 * out.eps_prime * static_cast<double>(np);
    const std::uint32_t full = (np == 32) ? ~std::uint32_t{0}
                                          : ((std::uint32_t{1} << np) - 1);
    for (std::uint32_t w = 0; w <= full; ++w) {
        const std::size_t wt = static_cast<std::size_t>(std::popcount(w));
        std::size_t boundary = 0;
        for (std::size_t v = 0; v < np; ++v)
            if ((w >> v) & 1u)
                boundary += static_cast<std::size_t>(std::popcount(adj[v] & ~w));

        const double viol = mp == 0 ? 0.0
                                    : static_cast<double>(boundary) / static_cast<double>(mp);
        const double dist_frac = static_cast<double>(std::min(wt, np - wt)) /
                                 static_cast<double>(np);
        if (denom > 0.0) {
            const double bound = (viol + 2.0 * out.eps_prime) / denom;
            const double slack = bound - dist_frac;
            out.subgraph_worst_slack = std::min(out.subgraph_worst_slack, slack);
            if (slack < 0.0) out.subgraph_holds = false;
        }

        const double wtf = static_cast<double>(wt);
        if (wtf >= band_lo && wt <= np / 2) {
            out.band_nonempty = true;
            ++out.band_words;
            if (boundary < 3 * wt) out.expansion_holds = false;
        }
        if (w == full) break;
    }
    return out;
}

} // namespace epc
