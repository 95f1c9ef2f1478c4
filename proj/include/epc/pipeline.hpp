#pragma once

// Experiment drivers: the exact-enumeration warmup on a small code, the
// structural audit of a hypergraph product, and the three-part run on a
// corrupted product code (residual extraction, uniform-error
// certification with a distance bound, cell masses with depth bounds),
// plus JSON serialization of every report.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "epc/css.hpp"
#include "epc/expansion.hpp"
#include "epc/graph.hpp"
#include "epc/hgp.hpp"
#include "epc/states.hpp"

namespace epc {

// [[7, 1, 3]] self-dual code; hx = hz = the parity checks whose columns
// are the nonzero 3-bit words.
CssCode steane_code();

struct ExperimentConfig {
    std::string graph_kind = "cycle"; // cycle | complete | random-regular | file
    std::size_t graph_n = 3;
    std::size_t graph_d = 3;          // random-regular only
    std::string graph_file;           // file only
    double epsilon = 0.0;             // corrupted-qubit fraction target
    double nu = 0.0;                  // per-line budget floor; the run raises it
                                      // to the sampled error's profile when needed
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};
    std::size_t logical_index = 0;
    std::uint64_t seed = 1;
    std::size_t audit_max_dim = 24;
    std::size_t distance_max_dim = 26;
    std::size_t enumeration_budget = std::size_t{1} << 22;
};

void validate_config(const ExperimentConfig& cfg);
Graph build_graph(const ExperimentConfig& cfg);

struct WarmupReport {
    std::size_t n_bits = 0;
    std::size_t k = 0;
    std::complex<double> alpha, beta; // normalized
    double mass_z0 = 0.0, mass_z1 = 0.0;
    double mass_x0 = 0.0, mass_x1 = 0.0;
    Basis basis = Basis::Z;  // basis with the larger smaller-mass
    double mass0 = 0.0, mass1 = 0.0;
    double mu = 0.0;         // min of the two certified masses
    std::size_t delta_min = 0; // exact distance between the two outcome sets
    double mu_floor = 0.0;     // 1/2 - 1/(2*sqrt 2)
    bool certified = false;    // mu reaches mu_floor
    std::optional<double> depth_bound;              // (2/3)*log2(mu*D/(4*sqrt(n)))
    std::optional<double> depth_bound_after_budget; // same at mu - 0.14
};

// Exact masses in both bases, the separating distance of the better
// basis, and the resulting depth bounds. Enumeration cap errors
// propagate.
WarmupReport run_warmup(const CssCode& code, std::complex<double> alpha,
                        std::complex<double> beta, std::size_t logical_index = 0);

struct StructuralAuditReport {
    std::size_t base_n = 0, base_m = 0;
    bool graph_connected = false;
    std::size_t num_qubits = 0;
    std::size_t x_checks = 0, z_checks = 0;
    std::size_t max_check_weight = 0;
    std::size_t k_rank = 0;
    std::size_t k_formula = 0; // 1 + (m - n + 1)^2, meaningful when connected
    bool k_match = false;
    std::optional<SpanningSetReport> spanning;       // absent beyond the size cap
    std::optional<std::size_t> distance;             // absent beyond the cap
    std::optional<LocalizedDistanceReport> audit;    // absent beyond the cap
};

StructuralAuditReport run_structural_audit(const Graph& g, std::size_t distance_max_dim = 26,
                                           std::size_t audit_max_dim = 24);

struct ResidualSummary {
    std::size_t error_size = 0;          // sampled support size
    std::size_t kept_v = 0, kept_e = 0;  // lines below the error threshold
    double kept_v_fraction = 0.0, kept_e_fraction = 0.0;
    double v_fraction = 0.0, e_fraction = 0.0; // maximal connected residual
    bool bound_applicable = false;       // degree >= 3 and Ramanujan base
    double eps_used = 0.0;               // deletion fraction fed to the bound
    double eps_prime = 0.0;
    double v_bound = 0.0;                // 1 - eps'
    double e_bound = 0.0;                // coarse edge bound
    double e_bound_sharp = 0.0;
    bool bounds_hold = false;
};

struct CertificationSummary {
    double nu_config = 0.0;
    double nu_measured = 0.0; // union-support directional maximum
    double nu_used = 0.0;
    bool in_families = false; // error certified uniform in all four directions
    std::size_t audit_coset_dim = 0;
    std::uint64_t audit_words = 0;
    bool audit_full = false;  // cycle logicals included in the walk
    std::uint32_t audit_min_max_v_col = 0;
    std::uint32_t audit_min_max_e_col = 0;
    double distance_lb = 0.0;       // margin at the measured directional profile
    double distance_lb_at_nu = 0.0; // margin at the declared nu for both blocks
    bool distance_lb_positive = false;
};

struct MassSummary {
    Basis basis = Basis::Z;
    double mass0 = 0.0, mass1 = 0.0;
    double mu = 0.0;
    double c0 = 0.0; // cell-mass floor
    bool ok = false;
};

struct GammaDepthEntry {
    double gamma = 0.0;
    double ell = 0.0;             // expansion radius at the reference blow-up
    double expansion_bound = 0.0; // expansion floor at the reference blow-up
    bool radius_within_gap = false; // ell <= distance_lb / 2
};

// Asymptotic operating point the desk-scale run stands in for; recorded
// verbatim in reports next to the measured constants.
struct ReferenceTargets {
    std::size_t degree = 14;
    double impostor_fraction = 1e-9;
    std::size_t check_locality = 16;
};

struct NletsReport {
    ExperimentConfig config;
    std::size_t parent_n = 0, parent_m = 0, parent_qubits = 0;
    ResidualSummary residual;
    std::size_t child_n = 0, child_m = 0, child_qubits = 0, child_k = 0;
    CertificationSummary certification;
    MassSummary masses;
    std::optional<double> depth_bound; // (2/3)*log2(mu*D/(4*sqrt(child_qubits)))
    double reference_blow_up = 1.0;    // 2^max(depth_bound, 0)
    std::vector<GammaDepthEntry> gamma_grid;
    ReferenceTargets targets;
    bool falsified = false;
    std::string falsification; // empty when clean
};

// One seeded run: sample the error, extract the residual subcode,
// certify the restricted error and the cell partition, emit bounds.
// Structural contradictions set `falsified`; operational failures throw.
NletsReport run_nlets(const ExperimentConfig& cfg);

struct NletsSweepResult {
    std::size_t runs = 0;
    std::size_t falsifications = 0;
    std::vector<NletsReport> reports;
};

// Consecutive seeds starting at cfg.seed; the localized-distance audit
// is cached per distinct child graph.
NletsSweepResult run_nlets_sweep(const ExperimentConfig& cfg, std::size_t seeds);

nlohmann::json to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WarmupReport& r);
nlohmann::json to_json(const StructuralAuditReport& r);
nlohmann::json to_json(const NletsReport& r);
nlohmann::json to_json(const NletsSweepResult& r);
nlohmann::json to_json(const VertexTrialReport& r);

} // namespace epc
