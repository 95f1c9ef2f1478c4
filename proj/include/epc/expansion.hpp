#pragma once

// Vertex expansion of output distributions at Hamming radius ell,
// closed-form bound calculators (expansion lower bound, partition
// distance, depth), the Chebyshev gap profile, and the randomized
// empirical check of the expansion lower bound over candidate sets.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "epc/circuit.hpp"
#include "epc/gf2.hpp"

namespace epc {

struct SetSpec {
    enum class Kind { Explicit, Ball };

    Kind kind = Kind::Explicit;
    std::vector<BitVector> members; // Explicit: distinct strings of length n
    BitVector center;               // Ball
    std::size_t radius = 0;         // Ball: members are within this distance

    static SetSpec explicit_set(std::vector<BitVector> members);
    static SetSpec ball(BitVector center, std::size_t radius);
};

double set_mass(const Distribution& p, const SetSpec& s);

// Mass of the two-sided boundary: points of S within floor(ell) of the
// complement plus points of the complement within floor(ell) of S.
double boundary_mass(const Distribution& p, const SetSpec& s, double ell);

// Min over candidates of boundary/mass; candidates with mass outside
// (0, 1/2] are skipped; throws no-valid-candidate when none remain.
double expansion_upper(const Distribution& p, const std::vector<SetSpec>& candidates,
                       double ell);

// Exact h_ell by full power-set sweep; requires p.n <= 4.
double expansion_exhaustive(const Distribution& p, double ell);

struct VertexBound {
    double ell;         // 1/4 * B * (B*n)^(1/2 - gamma)
    double lower_bound; // 1/8 * (n*B)^(-2*gamma)
};

VertexBound theorem_vertex_bound(double n, double B, double gamma);

double partition_distance_bound(double mu, double B, double n);
double depth_lower_bound(double mu, double D, double n);

// Plain Chebyshev value T_m(x).
double chebyshev(std::size_t m, double x);

std::size_t chebyshev_degree_for(double n, double B, double gamma);

struct ChebProfile {
    std::size_t m = 0;
    double L = 0.0;
    double gamma = 0.0;
    double c_at_zero = 0.0;
    double value_at_inv_L = 0.0;
    double min_on_gap = 0.0;   // min over sampled x in [1/L, 1]
    double max_on_range = 0.0; // max over sampled x in [0, 1]
    double min_on_range = 0.0;
    double gap_bound = 0.0;    // 1/4 * (n*B)^(-2*gamma)
    bool zero_exact = false;
    bool range_ok = false;     // 0 <= C <= 2 at all samples
    bool gap_ok = false;       // min_on_gap >= gap_bound
};

// C_m(x) = 1 - T_m(f(x)) / T_m(f(0)) with f(x) = (1 + 1/L - 2x)/(1 - 1/L),
// evaluated on a uniform grid over [0, 1] plus the point x = 1/L.
ChebProfile cheb_operatorless_profile(std::size_t m, double L_size, double n, double B,
                                      double gamma, std::size_t samples = 10000);

Circuit random_circuit(std::size_t n, std::size_t depth, std::mt19937_64& rng);

struct VertexTrialConfig {
    std::size_t trials = 100;
    std::size_t min_n = 4;
    std::size_t max_n = 12;
    std::size_t max_depth = 3;
    std::vector<double> gammas = {0.0, 0.125, 0.25, 0.375, 0.5};
    std::uint64_t seed = 1;
    std::size_t max_explicit_members = 512; // cap on explicit candidate size
};

struct VertexTrialEntry {
    std::size_t trial = 0;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::size_t blow_up = 1;
    double gamma = 0.0;
    double ell_raw = 0.0;     // 1/4 * B * (B*n)^(1/2 - gamma)
    std::size_t ell_eff = 1;  // max(1, floor(ell_raw)); radius actually used
    double bound = 0.0;
    double min_ratio = 0.0;   // min over candidates of boundary/mass
    std::size_t candidates = 0;
    bool exhaustive = false;  // full power-set sweep (n = 4)
    std::size_t violations = 0;
};

struct VertexTrialReport {
    std::vector<VertexTrialEntry> entries;
    std::size_t total_violations = 0;
    double min_margin = 0.0; // min over entries of (min_ratio - bound)
};

// Simulates seeded random circuits, builds candidate sets (Hamming
// balls around heavy support points, greedy mass-accretion prefixes,
// random support subsets; full power set at n = 4) and checks the
// boundary/mass ratio of every candidate against the closed-form lower
// bound at the effective radius.
VertexTrialReport empirical_vertex_theorem(const VertexTrialConfig& cfg);

} // namespace epc
