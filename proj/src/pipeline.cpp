#include "epc/pipeline.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "epc/io.hpp"

namespace epc {

CssCode steane_code() {
    BitMatrix h(3, 7);
    for (std::size_t col = 0; col < 7; ++col) {
        const std::size_t label = col + 1;
        for (std::size_t row = 0; row < 3; ++row)
            if ((label >> row) & 1u) h.set(row, col, true);
    }
    BitMatrix hz = h;
    return make_css(std::move(h), std::move(hz));
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.graph_kind != "cycle" && cfg.graph_kind != "complete" &&
        cfg.graph_kind != "random-regular" && cfg.graph_kind != "file")
        throw std::invalid_argument("config: unknown graph kind '" + cfg.graph_kind + "'");
    if (cfg.graph_kind == "file" && cfg.graph_file.empty())
        throw std::invalid_argument("config: graph kind 'file' needs graph_file");
    if (!(cfg.epsilon >= 0.0) || !(cfg.epsilon < 1.0))
        throw std::invalid_argument("config: epsilon must lie in [0, 1)");
    if (!(cfg.nu >= 0.0) || !(cfg.nu < 1.0))
        throw std::invalid_argument("config: nu must lie in [0, 1)");
    if (std::norm(cfg.alpha) + std::norm(cfg.beta) == 0.0)
        throw std::invalid_argument("config: amplitudes must not both vanish");
    if (cfg.audit_max_dim == 0 || cfg.distance_max_dim == 0 || cfg.enumeration_budget == 0)
        throw std::invalid_argument("config: caps must be positive");
}

Graph build_graph(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.graph_kind == "cycle") return cycle_graph(cfg.graph_n);
    if (cfg.graph_kind == "complete") return complete_graph(cfg.graph_n);
    if (cfg.graph_kind == "random-regular")
        return random_regular(cfg.graph_n, cfg.graph_d, cfg.seed);
    return load_edge_list(cfg.graph_file);
}

namespace {

// Minimum weight over offset + span(basis) by a Gray-code walk; with a
// pairing vector only words pairing to 1 count.
std::size_t min_weight_over(const std::vector<BitVector>& basis, const BitVector& offset,
                            const BitVector* pairing, std::size_t max_dim) {
    if (basis.size() > max_dim)
        throw std::length_error("pipeline: enumeration dimension " +
                                std::to_string(basis.size()) + " exceeds cap " +
                                std::to_string(max_dim));
    BitVector cur = offset;
    bool par = pairing != nullptr && cur.dot(*pairing);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto see = [&] {
        if (pairing == nullptr || par) best = std::min(best, cur.weight());
    };
    see();
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::size_t b = static_cast<std::size_t>(std::countr_zero(i));
        cur ^= basis[b];
        if (pairing != nullptr) par = par != basis[b].dot(*pairing);
        see();
    }
    return best;
}

std::vector<BitVector> independent_rows(const BitMatrix& m) {
    RowEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.absorb(m.row(r));
    return ech.rows();
}

std::complex<double> normalized_pair(std::complex<double>& alpha, std::complex<double>& beta) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (norm == 0.0) throw std::invalid_argument("pipeline: amplitudes must not both vanish");
    alpha /= norm;
    beta /= norm;
    return {alpha.real(), beta.real()};
}

} // namespace

WarmupReport run_warmup(const CssCode& code, std::complex<double> alpha,
                        std::complex<double> beta, std::size_t logical_index) {
    normalized_pair(alpha, beta);
    const LogicalBasis lb = logical_basis(code);
    if (logical_index >= lb.bx.size())
        throw std::invalid_argument("warmup: logical index " + std::to_string(logical_index) +
                                    " out of range for k = " + std::to_string(lb.bx.size()));
    const LogicalStateSpec s = make_logical_state(code, lb, logical_index, alpha, beta);
    const PartitionSets sets(code, lb, logical_index);
    const PauliError none = PauliError::none(code.num_qubits());

    WarmupReport r;
    r.n_bits = code.num_qubits();
    r.k = code.k();
    r.alpha = alpha;
    r.beta = beta;
    const BasisMasses z = zbasis_masses(s, none, sets);
    const BasisMasses x = xbasis_masses(s, none, sets);
    r.mass_z0 = z.in0;
    r.mass_z1 = z.in1;
    r.mass_x0 = x.in0;
    r.mass_x1 = x.in1;
    r.basis = z.min_mass() >= x.min_mass() ? Basis::Z : Basis::X;
    if (r.basis == Basis::Z) {
        r.mass0 = z.in0;
        r.mass1 = z.in1;
        r.delta_min = min_weight_over(independent_rows(code.hx()), lb.bx[logical_index],
                                      nullptr, 26);
    } else {
        r.mass0 = x.in0;
        r.mass1 = x.in1;
        const BitVector zero(code.num_qubits());
        r.delta_min = min_weight_over(nullspace_basis(code.hx()), zero,
                                      &lb.bx[logical_index], 26);
    }
    r.mu = std::min(r.mass0, r.mass1);
    r.mu_floor = uncertainty_interval_lo();
    r.certified = r.mu >= r.mu_floor - 1e-12;
    if (r.mu > 0.0 && r.delta_min != std::numeric_limits<std::size_t>::max()) {
        r.depth_bound = depth_lower_bound(r.mu, static_cast<double>(r.delta_min),
                                          static_cast<double>(r.n_bits));
        const double budgeted = r.mu - 0.14;
        if (budgeted > 0.0)
            r.depth_bound_after_budget = depth_lower_bound(
                budgeted, static_cast<double>(r.delta_min), static_cast<double>(r.n_bits));
    }
    return r;
}

StructuralAuditReport run_structural_audit(const Graph& g, std::size_t distance_max_dim,
                                           std::size_t audit_max_dim) {
    const HgpCode h = hypergraph_product(g);
    StructuralAuditReport r;
    r.base_n = g.num_vertices();
    r.base_m = g.num_edges();
    r.graph_connected = g.connected();
    r.num_qubits = h.index.num_qubits();
    r.x_checks = h.code.hx().rows();
    r.z_checks = h.code.hz().rows();
    for (std::size_t i = 0; i < r.x_checks; ++i)
        r.max_check_weight = std::max(r.max_check_weight, h.code.hx().row(i).weight());
    for (std::size_t i = 0; i < r.z_checks; ++i)
        r.max_check_weight = std::max(r.max_check_weight, h.code.hz().row(i).weight());
    r.k_rank = h.code.k();
    const std::size_t cycle_dim = r.base_m + 1 - r.base_n;
    r.k_formula = 1 + cycle_dim * cycle_dim;
    r.k_match = r.k_rank == r.k_formula;
    try {
        r.spanning = spanning_set_check(h);
    } catch (const std::length_error&) {
    }
    try {
        r.distance = css_distance_exhaustive(h.code, distance_max_dim);
    } catch (const std::length_error&) {
    }
    try {
        r.audit = localized_distance_check(h, audit_max_dim);
    } catch (const std::length_error&) {
    }
    return r;
}

namespace {

std::string graph_key(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

NletsReport run_nlets_impl(const ExperimentConfig& cfg,
                           std::map<std::string, LocalizedDistanceReport>* audit_cache) {
    validate_config(cfg);
    const Graph g = build_graph(cfg);
    const auto degree = g.regular_degree();
    if (!degree) throw std::invalid_argument("nlets: base graph must be regular");
    const std::size_t d = *degree;
    const HgpCode parent = hypergraph_product(g);
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    const std::size_t N = parent.index.num_qubits();

    NletsReport rep;
    rep.config = cfg;
    rep.parent_n = n;
    rep.parent_m = m;
    rep.parent_qubits = N;
    auto fail = [&rep](const std::string& why) {
        rep.falsified = true;
        if (!rep.falsification.empty()) rep.falsification += "; ";
        rep.falsification += why;
    };

    // Error sample: a uniform support of exact size floor(eps*N), each
    // chosen qubit corrupted by X, Z, or both with equal probability.
    std::mt19937_64 rng(cfg.seed);
    const std::size_t error_size =
        static_cast<std::size_t>(std::floor(cfg.epsilon * static_cast<double>(N) + 1e-12));
    PauliError err = PauliError::none(N);
    std::vector<std::size_t> qubits(N);
    std::iota(qubits.begin(), qubits.end(), 0);
    for (std::size_t i = 0; i < error_size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, N - 1);
        std::swap(qubits[i], qubits[pick(rng)]);
        std::uniform_int_distribution<int> kind(0, 2);
        const int t = kind(rng);
        if (t != 1) err.ex.set(qubits[i], true);
        if (t != 0) err.ez.set(qubits[i], true);
    }
    const BitVector support = err.support();

    // Part 1: keep the lines whose error count stays below the d*sqrt(eps)
    // fraction, then take the maximal connected residual.
    std::vector<std::size_t> v_col(n, 0), v_row(n, 0), e_col(m, 0), e_row(m, 0);
    support.for_each_set_bit([&](std::size_t q) {
        if (parent.index.is_vv(q)) {
            const auto [u, v] = parent.index.decode_vv(q);
            ++v_row[u];
            ++v_col[v];
        } else {
            const auto [e, f] = parent.index.decode_ee(q);
            ++e_row[e];
            ++e_col[f];
        }
    });
    const double thr_v = static_cast<double>(d) * std::sqrt(cfg.epsilon) * static_cast<double>(n);
    const double thr_e = static_cast<double>(d) * std::sqrt(cfg.epsilon) * static_cast<double>(m);
    std::vector<bool> v_keep(n, false), e_keep(m, false);
    for (std::size_t v = 0; v < n; ++v)
        v_keep[v] = static_cast<double>(v_col[v]) <= thr_v + 1e-12 &&
                    static_cast<double>(v_row[v]) <= thr_v + 1e-12;
    for (std::size_t e = 0; e < m; ++e)
        e_keep[e] = static_cast<double>(e_col[e]) <= thr_e + 1e-12 &&
                    static_cast<double>(e_row[e]) <= thr_e + 1e-12;

    ResidualSummary& res = rep.residual;
    res.error_size = error_size;
    res.kept_v = static_cast<std::size_t>(std::count(v_keep.begin(), v_keep.end(), true));
    res.kept_e = static_cast<std::size_t>(std::count(e_keep.begin(), e_keep.end(), true));
    res.kept_v_fraction = static_cast<double>(res.kept_v) / static_cast<double>(n);
    res.kept_e_fraction = static_cast<double>(res.kept_e) / static_cast<double>(m);

    const FractalSubcode fs = fractal_subcode(parent, v_keep, e_keep);
    res.v_fraction = fs.residual.v_fraction;
    res.e_fraction = fs.residual.e_fraction;
    res.bound_applicable = d >= 3 && spectral_report(g).is_ramanujan;
    if (res.bound_applicable) {
        res.eps_used = std::max(1.0 - res.kept_v_fraction, 1.0 - res.kept_e_fraction);
        res.eps_prime = residual_eps_prime(res.eps_used, d);
        const ResidualEdgeBounds eb = residual_edge_bounds(res.eps_used, d);
        res.v_bound = 1.0 - res.eps_prime;
        res.e_bound = eb.coarse;
        res.e_bound_sharp = eb.sharp;
        res.bounds_hold = res.v_fraction >= res.v_bound - 1e-12 &&
                          res.e_fraction >= res.e_bound - 1e-12;
    } else if (error_size == 0) {
        res.bounds_hold = res.v_fraction == 1.0 && res.e_fraction == 1.0;
    } else {
        res.bounds_hold = res.v_fraction > 0.0 && res.e_fraction > 0.0;
    }
    if (!res.bounds_hold) fail("residual fractions below the applicable bound");

    // Part 2: restrict the error to the child, certify it uniform, and
    // bound the separating distance from the child's audit table.
    const HgpCode& child = fs.child;
    rep.child_n = child.index.n;
    rep.child_m = child.index.m;
    rep.child_qubits = child.index.num_qubits();
    rep.child_k = child.code.k();
    PauliError child_err = PauliError::none(rep.child_qubits);
    for (std::size_t q = 0; q < rep.child_qubits; ++q) {
        const std::size_t pq = fs.qubit_to_parent[q];
        if (err.ex.get(pq)) child_err.ex.set(q, true);
        if (err.ez.get(pq)) child_err.ez.set(q, true);
    }

    CertificationSummary& cert = rep.certification;
    cert.nu_config = cfg.nu;
    cert.nu_measured = measure_profile(child_err.support(), child.index).max_frac;
    cert.nu_used = std::max(cfg.nu, cert.nu_measured);

    const std::string key = graph_key(child.graph);
    LocalizedDistanceReport audit;
    if (audit_cache != nullptr) {
        auto it = audit_cache->find(key);
        if (it == audit_cache->end())
            it = audit_cache->emplace(key, localized_distance_check(child, cfg.audit_max_dim))
                     .first;
        audit = it->second;
    } else {
        audit = localized_distance_check(child, cfg.audit_max_dim);
    }
    cert.audit_coset_dim = audit.coset_dim;
    cert.audit_words = audit.words;
    cert.audit_full = audit.cycle_logicals_included;
    cert.audit_min_max_v_col = audit.min_max_v_col;
    cert.audit_min_max_e_col = audit.min_max_e_col;

    std::complex<double> alpha = cfg.alpha;
    std::complex<double> beta = cfg.beta;
    normalized_pair(alpha, beta);
    LogicalBasis pivot_pair;
    pivot_pair.bx.push_back(column_logical(child, Basis::X, audit.pivot_vertex));
    pivot_pair.bz.push_back(column_logical(child, Basis::Z, audit.pivot_vertex));
    const LogicalStateSpec state =
        make_logical_state(child.code, pivot_pair, 0, alpha, beta);

    MassSummary& mass = rep.masses;
    mass.c0 = cell_mass_floor();
    try {
        const PartitionWitness w =
            partition_witness(state, child_err, child.index, cert.nu_used, audit);
        cert.in_families = true;
        cert.distance_lb = w.min_distance_lb;
        cert.distance_lb_at_nu = w.min_distance_lb_at_nu;
        cert.distance_lb_positive = cert.distance_lb > 0.0;
        mass.basis = w.basis;
        mass.mass0 = w.mass0;
        mass.mass1 = w.mass1;
        mass.mu = std::min(w.mass0, w.mass1);
        mass.ok = w.ok;
    } catch (const std::runtime_error& e) {
        fail(std::string("partition witness: ") + e.what());
    }
    if (!cert.in_families) fail("error not certified inside the uniform families");
    if (!cert.distance_lb_positive) fail("distance lower bound not positive");
    if (!mass.ok) fail("a cell mass fell below the floor");

    // Part 3: depth bound from the certified (mu, D) pair, plus the
    // reference grid of expansion radii and floors at the implied
    // blow-up. No gamma is selected; the grid is reported whole.
    if (mass.mu > 0.0 && cert.distance_lb > 0.0) {
        rep.depth_bound = depth_lower_bound(mass.mu, cert.distance_lb,
                                            static_cast<double>(rep.child_qubits));
        rep.reference_blow_up = std::exp2(std::max(*rep.depth_bound, 0.0));
    }
    for (const double gamma : {0.0, 0.125, 0.25, 0.375, 0.5}) {
        const VertexBound vb = theorem_vertex_bound(static_cast<double>(rep.child_qubits),
                                                    rep.reference_blow_up, gamma);
        GammaDepthEntry entry;
        entry.gamma = gamma;
        entry.ell = vb.ell;
        entry.expansion_bound = vb.lower_bound;
        entry.radius_within_gap = vb.ell <= cert.distance_lb / 2.0;
        rep.gamma_grid.push_back(entry);
    }
    return rep;
}

} // namespace

NletsReport run_nlets(const ExperimentConfig& cfg) { return run_nlets_impl(cfg, nullptr); }

NletsSweepResult run_nlets_sweep(const ExperimentConfig& cfg, std::size_t seeds) {
    NletsSweepResult out;
    std::map<std::string, LocalizedDistanceReport> cache;
    for (std::size_t i = 0; i < seeds; ++i) {
        ExperimentConfig c = cfg;
        c.seed = cfg.seed + i;
        out.reports.push_back(run_nlets_impl(c, &cache));
        if (out.reports.back().falsified) ++out.falsifications;
    }
    out.runs = seeds;
    return out;
}

namespace {

nlohmann::json complex_to_json(const std::complex<double>& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("config: complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::json audit_to_json(const LocalizedDistanceReport& a) {
    nlohmann::json j;
    j["pivot_vertex"] = a.pivot_vertex;
    j["coset_dim"] = a.coset_dim;
    j["cycle_logicals_included"] = a.cycle_logicals_included;
    j["words"] = a.words;
    j["min_max_v_col"] = a.min_max_v_col;
    j["min_max_e_col"] = a.min_max_e_col;
    nlohmann::json table = nlohmann::json::array();
    for (const std::uint32_t v : a.min_e_for_v) {
        if (v == std::numeric_limits<std::uint32_t>::max())
            table.push_back(nullptr);
        else
            table.push_back(v);
    }
    j["min_e_for_v"] = std::move(table);
    return j;
}

} // namespace

nlohmann::json to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["graph_kind"] = cfg.graph_kind;
    j["graph_n"] = cfg.graph_n;
    j["graph_d"] = cfg.graph_d;
    j["graph_file"] = cfg.graph_file;
    j["epsilon"] = cfg.epsilon;
    j["nu"] = cfg.nu;
    j["alpha"] = complex_to_json(cfg.alpha);
    j["beta"] = complex_to_json(cfg.beta);
    j["logical_index"] = cfg.logical_index;
    j["seed"] = cfg.seed;
    j["audit_max_dim"] = cfg.audit_max_dim;
    j["distance_max_dim"] = cfg.distance_max_dim;
    j["enumeration_budget"] = cfg.enumeration_budget;
    return j;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.graph_kind = j.value("graph_kind", cfg.graph_kind);
    cfg.graph_n = j.value("graph_n", cfg.graph_n);
    cfg.graph_d = j.value("graph_d", cfg.graph_d);
    cfg.graph_file = j.value("graph_file", cfg.graph_file);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.nu = j.value("nu", cfg.nu);
    if (j.contains("alpha")) cfg.alpha = complex_from_json(j.at("alpha"));
    if (j.contains("beta")) cfg.beta = complex_from_json(j.at("beta"));
    cfg.logical_index = j.value("logical_index", cfg.logical_index);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.audit_max_dim = j.value("audit_max_dim", cfg.audit_max_dim);
    cfg.distance_max_dim = j.value("distance_max_dim", cfg.distance_max_dim);
    cfg.enumeration_budget = j.value("enumeration_budget", cfg.enumeration_budget);
    validate_config(cfg);
    return cfg;
}

nlohmann::json to_json(const WarmupReport& r) {
    nlohmann::json j;
    j["n_bits"] = r.n_bits;
    j["k"] = r.k;
    j["alpha"] = complex_to_json(r.alpha);
    j["beta"] = complex_to_json(r.beta);
    j["mass_z"] = {r.mass_z0, r.mass_z1};
    j["mass_x"] = {r.mass_x0, r.mass_x1};
    j["basis"] = basis_name(r.basis);
    j["mass0"] = r.mass0;
    j["mass1"] = r.mass1;
    j["mu"] = r.mu;
    j["delta_min"] = r.delta_min;
    j["mu_floor"] = r.mu_floor;
    j["certified"] = r.certified;
    j["depth_bound"] = optional_to_json(r.depth_bound);
    j["depth_bound_after_budget"] = optional_to_json(r.depth_bound_after_budget);
    return j;
}

nlohmann::json to_json(const StructuralAuditReport& r) {
    nlohmann::json j;
    j["base_n"] = r.base_n;
    j["base_m"] = r.base_m;
    j["graph_connected"] = r.graph_connected;
    j["num_qubits"] = r.num_qubits;
    j["x_checks"] = r.x_checks;
    j["z_checks"] = r.z_checks;
    j["max_check_weight"] = r.max_check_weight;
    j["k_rank"] = r.k_rank;
    j["k_formula"] = r.k_formula;
    j["k_match"] = r.k_match;
    if (r.spanning) {
        nlohmann::json s;
        s["k_rank"] = r.spanning->k_rank;
        s["k_formula"] = r.spanning->k_formula;
        s["cycle_dim"] = r.spanning->cycle_dim;
        s["span_rank"] = r.spanning->span_rank;
        s["expected_dim"] = r.spanning->expected_dim;
        s["spans"] = r.spanning->spans;
        j["spanning"] = std::move(s);
    } else {
        j["spanning"] = nullptr;
    }
    if (r.distance)
        j["distance"] = *r.distance;
    else
        j["distance"] = nullptr;
    if (r.audit)
        j["audit"] = audit_to_json(*r.audit);
    else
        j["audit"] = nullptr;
    return j;
}

nlohmann::json to_json(const NletsReport& r) {
    nlohmann::json j;
    j["config"] = to_json(r.config);
    j["parent"] = {{"n", r.parent_n}, {"m", r.parent_m}, {"qubits", r.parent_qubits}};
    nlohmann::json res;
    res["error_size"] = r.residual.error_size;
    res["kept_v"] = r.residual.kept_v;
    res["kept_e"] = r.residual.kept_e;
    res["kept_v_fraction"] = r.residual.kept_v_fraction;
    res["kept_e_fraction"] = r.residual.kept_e_fraction;
    res["v_fraction"] = r.residual.v_fraction;
    res["e_fraction"] = r.residual.e_fraction;
    res["bound_applicable"] = r.residual.bound_applicable;
    res["eps_used"] = r.residual.eps_used;
    res["eps_prime"] = r.residual.eps_prime;
    res["v_bound"] = r.residual.v_bound;
    res["e_bound"] = r.residual.e_bound;
    res["e_bound_sharp"] = r.residual.e_bound_sharp;
    res["bounds_hold"] = r.residual.bounds_hold;
    j["residual"] = std::move(res);
    j["child"] = {{"n", r.child_n},
                  {"m", r.child_m},
                  {"qubits", r.child_qubits},
                  {"k", r.child_k}};
    nlohmann::json cert;
    cert["nu_config"] = r.certification.nu_config;
    cert["nu_measured"] = r.certification.nu_measured;
    cert["nu_used"] = r.certification.nu_used;
    cert["in_families"] = r.certification.in_families;
    cert["audit_coset_dim"] = r.certification.audit_coset_dim;
    cert["audit_words"] = r.certification.audit_words;
    cert["audit_full"] = r.certification.audit_full;
    cert["audit_min_max_v_col"] = r.certification.audit_min_max_v_col;
    cert["audit_min_max_e_col"] = r.certification.audit_min_max_e_col;
    cert["distance_lb"] = r.certification.distance_lb;
    cert["distance_lb_at_nu"] = r.certification.distance_lb_at_nu;
    cert["distance_lb_positive"] = r.certification.distance_lb_positive;
    j["certification"] = std::move(cert);
    j["masses"] = {{"basis", basis_name(r.masses.basis)}, {"mass0", r.masses.mass0},
                   {"mass1", r.masses.mass1},             {"mu", r.masses.mu},
                   {"c0", r.masses.c0},                   {"ok", r.masses.ok}};
    j["depth_bound"] = optional_to_json(r.depth_bound);
    j["reference_blow_up"] = r.reference_blow_up;
    nlohmann::json grid = nlohmann::json::array();
    for (const GammaDepthEntry& e : r.gamma_grid)
        grid.push_back({{"gamma", e.gamma},
                        {"ell", e.ell},
                        {"expansion_bound", e.expansion_bound},
                        {"radius_within_gap", e.radius_within_gap}});
    j["gamma_grid"] = std::move(grid);
    j["targets"] = {{"degree", r.targets.degree},
                    {"impostor_fraction", r.targets.impostor_fraction},
                    {"check_locality", r.targets.check_locality}};
    j["falsified"] = r.falsified;
    j["falsification"] = r.falsification;
    return j;
}

nlohmann::json to_json(const NletsSweepResult& r) {
    nlohmann::json j;
    j["runs"] = r.runs;
    j["falsifications"] = r.falsifications;
    nlohmann::json reports = nlohmann::json::array();
    for (const NletsReport& rep : r.reports) reports.push_back(to_json(rep));
    j["reports"] = std::move(reports);
    return j;
}

nlohmann::json to_json(const VertexTrialReport& r) {
    nlohmann::json j;
    j["total_violations"] = r.total_violations;
    if (std::isfinite(r.min_margin))
        j["min_margin"] = r.min_margin;
    else
        j["min_margin"] = nullptr;
    nlohmann::json entries = nlohmann::json::array();
    for (const VertexTrialEntry& e : r.entries) {
        nlohmann::json je;
        je["trial"] = e.trial;
        je["n"] = e.n;
        je["depth"] = e.depth;
        je["blow_up"] = e.blow_up;
        je["gamma"] = e.gamma;
        je["ell_raw"] = e.ell_raw;
        je["ell_eff"] = e.ell_eff;
        je["bound"] = e.bound;
        je["min_ratio"] = e.min_ratio;
        je["candidates"] = e.candidates;
        je["exhaustive"] = e.exhaustive;
        je["violations"] = e.violations;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace epc
