#pragma once

// Tanner-style linear codes given by parity-check matrices, the graph
// repetition code, exact distances, and exhaustive local-testability
// soundness via coset-leader tables.

#include <cstddef>
#include <limits>

#include "epc/gf2.hpp"
#include "epc/graph.hpp"

namespace epc {

struct TannerCode {
    BitMatrix checks;               // m checks x n bits
    std::size_t check_rank = 0;     // rank(checks)
    std::vector<BitVector> kernel;  // codeword basis, dim = n - rank

    std::size_t n() const { return checks.cols(); }
    std::size_t m() const { return checks.rows(); }
    std::size_t dim() const { return kernel.size(); }
};

TannerCode tanner_from_checks(BitMatrix checks);

// Check matrix transposed: the "transpose code" (cycle space when the
// source is a graph incidence matrix).
TannerCode transpose_code(const TannerCode& c);

// Repetition code with edge-equality checks; requires g connected so
// the codewords are exactly {0^n, 1^n}.
TannerCode repetition_from_graph(const Graph& g);

double violated_fraction(const TannerCode& c, const BitVector& w);

// Marker for the trivial code {0} whose minimum is over an empty set.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

// Exact minimum weight of a nonzero codeword; kernel dim <= 26.
std::size_t distance_exhaustive(const TannerCode& c);

struct SoundnessReport {
    double rho;            // min over w not in C of violated_fraction * n / dist(w, C)
    BitVector argmin_word;
    double argmin_violated_fraction;
    std::size_t argmin_distance;
};

// Exhaustive soundness over all 2^n words; requires n <= 22.
SoundnessReport ltc_soundness_exhaustive(const TannerCode& c);

double cluster_radius(double eps, double rho);

// Word-level checks on a residual subgraph of a d-regular parent:
// every word's distance to the constant words against the robust-LTC
// bound, and the boundary-expansion inequality |d(w)| >= 3|w| inside
// the prescribed weight band. Requires |V'| <= 16.
struct ResidualWordChecks {
    double eps;              // measured removal fraction fed to the bound
    double eps_prime;        // amplification eps*(d+1)/(1 - 2*sqrt(d-1)/d)
    bool subgraph_holds;     // robust-LTC inequality for every word
    double subgraph_worst_slack; // min over words of (bound - achieved distance fraction)
    bool band_nonempty;      // some achievable |w| lies in [100*eps'*|V'|, |V'|/2]
    std::size_t band_words;  // words whose weight falls in the band
    bool expansion_holds;    // |boundary(w)| >= 3|w| for every band word
};

ResidualWordChecks residual_word_checks(const Graph& parent, const ResidualGraph& r);

} // namespace epc
