// Acceptance gate: twelve timed structural and statistical criteria over
// the whole library, one pass/fail line each. Exit status 0 only when
// every selected criterion passes inside its time limit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "epc/css.hpp"
#include "epc/expansion.hpp"
#include "epc/gf2.hpp"
#include "epc/graph.hpp"
#include "epc/hgp.hpp"
#include "epc/pipeline.hpp"
#include "epc/states.hpp"
#include "epc/tanner.hpp"

using namespace epc;

namespace {

struct Check {
    std::vector<std::string> problems;

    void expect(bool cond, const std::string& msg) {
        if (!cond) problems.push_back(msg);
    }
};

// 50 connected regular graphs spanning degrees 2, 3 and 6 up to n = 30;
// deterministic seeds so every criterion sees the same corpus.
std::vector<Graph> random_product_corpus() {
    std::vector<Graph> out;
    std::uint64_t seed = 1000;
    for (std::size_t n = 3; n <= 22; ++n) out.push_back(random_regular(n, 2, seed++));
    for (std::size_t n = 4; n <= 30; n += 2) out.push_back(random_regular(n, 3, seed++));
    for (std::size_t n = 7; n <= 22; ++n) out.push_back(random_regular(n, 6, seed++));
    return out;
}

// Small regular graphs (n <= 14) where exhaustive cut and soundness
// sweeps stay cheap.
std::vector<Graph> small_regular_corpus() {
    std::vector<Graph> out;
    for (std::size_t n = 3; n <= 14; ++n) out.push_back(cycle_graph(n));
    for (std::size_t n = 4; n <= 10; ++n) out.push_back(complete_graph(n));
    const std::array<std::pair<std::size_t, std::size_t>, 11> rr = {
        {{6, 3}, {8, 3}, {10, 3}, {12, 3}, {14, 3}, {8, 4}, {10, 4}, {12, 4}, {7, 6}, {10, 6}, {14, 6}}};
    std::uint64_t seed = 2000;
    for (const auto& [n, d] : rr) out.push_back(random_regular(n, d, seed++));
    return out;
}

std::string graph_tag(const Graph& g) {
    return "n=" + std::to_string(g.num_vertices()) + " d=" +
           std::to_string(g.regular_degree().value_or(0));
}

std::complex<double> unit_pair(std::mt19937_64& rng, std::complex<double>& beta) {
    std::normal_distribution<double> nd;
    while (true) {
        std::complex<double> a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
        const double nrm = std::sqrt(std::norm(a) + std::norm(b));
        if (nrm < 1e-6) continue;
        beta = b / nrm;
        return a / nrm;
    }
}

// Random support of the requested size whose directional profile stays
// inside the per-line budget.
BitVector random_inside_family(std::mt19937_64& rng, std::size_t n, std::size_t bits,
                               const HgpIndex& index, double nu) {
    while (true) {
        BitVector v(n);
        for (std::size_t i = 0; i < bits; ++i) v.set(rng() % n, true);
        if (measure_profile(v, index).max_frac <= nu) return v;
    }
}

void criterion_css_orthogonality(Check& c) {
    const std::vector<Graph> corpus = random_product_corpus();
    c.expect(corpus.size() == 50, "corpus size is " + std::to_string(corpus.size()));
    for (const Graph& g : corpus) {
        const HgpCode h = hypergraph_product(g);
        std::vector<BitVector> zrows;
        zrows.reserve(h.code.hz().rows());
        for (std::size_t j = 0; j < h.code.hz().rows(); ++j) zrows.push_back(h.code.hz().row(j));
        std::size_t bad = 0;
        for (std::size_t i = 0; i < h.code.hx().rows(); ++i) {
            const BitVector xi = h.code.hx().row(i);
            for (const BitVector& zj : zrows)
                if (xi.dot(zj)) ++bad;
        }
        c.expect(bad == 0, graph_tag(g) + ": " + std::to_string(bad) + " non-orthogonal check pairs");
    }
}

void criterion_parameter_formulas(Check& c) {
    for (const Graph& g : random_product_corpus()) {
        const HgpCode h = hypergraph_product(g);
        const std::size_t n = g.num_vertices();
        const std::size_t m = g.num_edges();
        const std::size_t d = *g.regular_degree();
        const std::string tag = graph_tag(g);

        c.expect(h.code.num_qubits() == n * n + m * m, tag + ": qubit count mismatch");

        std::size_t max_weight = 0;
        for (std::size_t i = 0; i < h.code.hx().rows(); ++i)
            max_weight = std::max(max_weight, h.code.hx().row(i).weight());
        for (std::size_t i = 0; i < h.code.hz().rows(); ++i)
            max_weight = std::max(max_weight, h.code.hz().row(i).weight());
        c.expect(max_weight <= d + 2, tag + ": check weight " + std::to_string(max_weight) +
                                          " exceeds d + 2");

        const std::size_t k_formula = 1 + (m - n + 1) * (m - n + 1);
        const std::size_t k_rank =
            h.code.num_qubits() - rank(h.code.hx()) - rank(h.code.hz());
        c.expect(k_rank == k_formula, tag + ": k by rank " + std::to_string(k_rank) +
                                          " vs formula " + std::to_string(k_formula));
        c.expect(h.code.k() == k_formula, tag + ": cached k disagrees with formula");
    }
}

void criterion_toric_parameters(Check& c) {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    c.expect(h.code.num_qubits() == 18, "qubit count is not 18");
    c.expect(h.code.k() == 2, "k is not 2");
    c.expect(css_distance_exhaustive(h.code) == 3, "exhaustive distance is not 3");
}

void criterion_cheeger_vs_spectral(Check& c) {
    for (const Graph& g : small_regular_corpus()) {
        const SpectralReport sr = spectral_report(g);
        const double h = cheeger_exhaustive(g);
        c.expect(h >= sr.cheeger_lb - 1e-9,
                 graph_tag(g) + ": cheeger " + std::to_string(h) + " below spectral bound " +
                     std::to_string(sr.cheeger_lb));
    }
}

void criterion_repetition_soundness(Check& c) {
    for (const Graph& g : small_regular_corpus()) {
        const double h = cheeger_exhaustive(g);
        const double d = static_cast<double>(*g.regular_degree());
        const double rho = ltc_soundness_exhaustive(repetition_from_graph(g)).rho;
        c.expect(rho >= 2.0 * h / d - 1e-12,
                 graph_tag(g) + ": soundness " + std::to_string(rho) + " below 2h/d = " +
                     std::to_string(2.0 * h / d));
    }
}

void criterion_uncertainty_random_states(Check& c) {
    std::mt19937_64 rng(606);
    const CssCode steane = steane_code();
    const HgpCode toric = hypergraph_product(cycle_graph(3));
    for (int which = 0; which < 2; ++which) {
        const CssCode& code = which == 0 ? steane : toric.code;
        const std::string tag = which == 0 ? "steane" : "toric";
        const LogicalBasis lb = logical_basis(code);
        std::size_t bad_interval = 0, bad_norm = 0;
        for (int t = 0; t < 1000; ++t) {
            std::complex<double> beta;
            const std::complex<double> alpha = unit_pair(rng, beta);
            const std::size_t idx = rng() % code.k();
            const LogicalStateSpec s = make_logical_state(code, lb, idx, alpha, beta);
            if (!uncertainty_check(s).ok) ++bad_interval;
            const LogicalExpectations e =
                logical_expectations(s, PauliError::none(code.num_qubits()));
            if (e.exp_z * e.exp_z + e.exp_x * e.exp_x > 1.0 + 1e-10) ++bad_norm;
        }
        c.expect(bad_interval == 0,
                 tag + ": " + std::to_string(bad_interval) + " states missed the mass interval");
        c.expect(bad_norm == 0,
                 tag + ": " + std::to_string(bad_norm) + " states broke expZ^2 + expX^2 <= 1");
    }
}

void impostor_trials(Check& c, const HgpCode& h, double nu, std::uint64_t seed,
                     const std::string& tag) {
    const LocalizedDistanceReport audit = localized_distance_check(h);
    const LogicalBasis lb = logical_basis(h.code);
    const std::size_t n = h.code.num_qubits();
    std::mt19937_64 rng(seed);
    std::size_t double_cert = 0, not_ok = 0, low_mass = 0;
    for (int t = 0; t < 100; ++t) {
        std::complex<double> beta;
        const std::complex<double> alpha = unit_pair(rng, beta);
        PauliError err = PauliError::none(n);
        while (true) {
            err.ex = random_inside_family(rng, n, 1 + rng() % 2, h.index, nu);
            err.ez = random_inside_family(rng, n, 1 + rng() % 2, h.index, nu);
            if (measure_profile(err.support(), h.index).max_frac <= nu) break;
        }
        const LogicalStateSpec s =
            make_logical_state(h.code, lb, rng() % h.code.k(), alpha, beta);
        try {
            const PartitionWitness w = partition_witness(s, err, h.index, nu, audit);
            if (!w.ok) ++not_ok;
            if (!(w.mass0 >= 0.0732 && w.mass1 >= 0.0732)) ++low_mass;
        } catch (const std::runtime_error&) {
            ++double_cert;
        }
    }
    c.expect(double_cert == 0,
             tag + ": " + std::to_string(double_cert) + " double certifications");
    c.expect(not_ok == 0, tag + ": " + std::to_string(not_ok) + " witnesses below the floor");
    c.expect(low_mass == 0, tag + ": " + std::to_string(low_mass) + " witnesses under 0.0732");
}

void criterion_partition_witness(Check& c) {
    impostor_trials(c, hypergraph_product(cycle_graph(3)), 0.4, 707, "cycle3");
    impostor_trials(c, hypergraph_product(complete_graph(4)), 0.3, 708, "complete4");
}

void criterion_chebyshev_profile(Check& c) {
    const std::array<double, 9> ns = {2, 4, 16, 52, 100, 400, 1024, 5000, 10000};
    const std::array<double, 3> bs = {1, 2, 8};
    const std::array<double, 3> gammas = {0.0, 0.25, 0.5};
    for (const double n : ns)
        for (const double b : bs) {
            if (n * b > 1e4) continue;
            for (const double gamma : gammas) {
                const std::size_t m = chebyshev_degree_for(n, b, gamma);
                const ChebProfile p = cheb_operatorless_profile(m, n * b, n, b, gamma);
                const std::string tag = "n=" + std::to_string(n) + " B=" + std::to_string(b) +
                                        " gamma=" + std::to_string(gamma);
                c.expect(p.zero_exact, tag + ": C(0) is not exactly 0");
                c.expect(p.range_ok, tag + ": profile left [0, 2]");
                c.expect(p.gap_ok, tag + ": gap minimum " + std::to_string(p.min_on_gap) +
                                       " below " + std::to_string(p.gap_bound));
            }
        }
}

void criterion_vertex_expansion_trials(Check& c) {
    VertexTrialConfig cfg;
    cfg.trials = 100;
    cfg.min_n = 4;
    cfg.max_n = 12;
    cfg.max_depth = 3;
    cfg.seed = 909;
    const VertexTrialReport rep = empirical_vertex_theorem(cfg);
    c.expect(rep.total_violations == 0,
             std::to_string(rep.total_violations) + " candidate sets violated the bound");
    c.expect(rep.min_margin >= -1e-12, "worst margin " + std::to_string(rep.min_margin));
    std::size_t n4 = 0;
    for (const VertexTrialEntry& e : rep.entries) {
        if (e.n == 4) {
            ++n4;
            c.expect(e.exhaustive, "n = 4 entry skipped the power-set sweep");
        }
    }

    // Force full-power-set coverage in case the sampled sizes missed 4.
    VertexTrialConfig small = cfg;
    small.trials = 5;
    small.max_n = 4;
    small.seed = 910;
    const VertexTrialReport rep4 = empirical_vertex_theorem(small);
    c.expect(rep4.total_violations == 0, "power-set sweep found violations");
    for (const VertexTrialEntry& e : rep4.entries)
        c.expect(e.exhaustive, "n = 4 entry skipped the power-set sweep");
    c.expect(n4 + rep4.entries.size() > 0, "no exhaustive entries ran");
}

void criterion_closed_form_bounds(Check& c) {
    c.expect(depth_lower_bound(0.5, 1024.0, 1024.0) == 4.0 / 3.0,
             "depth bound at (1/2, 1024, 1024) is not exactly 4/3");
    c.expect(partition_distance_bound(0.5, 1.0, 64.0) == 64.0,
             "partition distance at (1/2, 1, 64) is not exactly 64");
}

void corruption_sweep(Check& c, const ExperimentConfig& cfg, double base_margin,
                      const std::string& tag) {
    const NletsSweepResult sweep = run_nlets_sweep(cfg, 100);
    c.expect(sweep.falsifications == 0,
             tag + ": " + std::to_string(sweep.falsifications) + " falsifications");
    std::size_t bad_residual = 0, bad_mass = 0, bad_distance = 0, bad_depth = 0;
    for (const NletsReport& r : sweep.reports) {
        if (!r.residual.bounds_hold) ++bad_residual;
        if (!r.masses.ok) ++bad_mass;
        if (!r.certification.distance_lb_positive ||
            r.certification.distance_lb > base_margin + 1e-12)
            ++bad_distance;
        if (!r.depth_bound.has_value() ||
            *r.depth_bound != depth_lower_bound(r.masses.mu, r.certification.distance_lb,
                                                static_cast<double>(r.child_qubits)))
            ++bad_depth;
    }
    c.expect(bad_residual == 0, tag + ": residual bounds failed " + std::to_string(bad_residual));
    c.expect(bad_mass == 0, tag + ": cell masses failed " + std::to_string(bad_mass));
    c.expect(bad_distance == 0,
             tag + ": distance bound inconsistent " + std::to_string(bad_distance));
    c.expect(bad_depth == 0, tag + ": depth bound inconsistent " + std::to_string(bad_depth));
}

void criterion_corruption_sweeps(Check& c) {
    ExperimentConfig cfg;
    cfg.graph_kind = "cycle";
    cfg.graph_n = 3;
    cfg.epsilon = 0.02;
    cfg.alpha = {1.0 / std::sqrt(2.0), 0.0};
    cfg.beta = {1.0 / std::sqrt(2.0), 0.0};
    cfg.seed = 100;
    const double cycle_margin =
        localized_distance_check(hypergraph_product(cycle_graph(3))).partition_margin(0.0, 0.0);
    corruption_sweep(c, cfg, cycle_margin, "cycle3");

    cfg.graph_kind = "complete";
    cfg.graph_n = 4;
    cfg.alpha = {0.6, 0.0};
    cfg.beta = {0.8, 0.0};
    cfg.seed = 200;
    const double complete_margin =
        localized_distance_check(hypergraph_product(complete_graph(4))).partition_margin(0.0, 0.0);
    corruption_sweep(c, cfg, complete_margin, "complete4");
}

void criterion_column_disjunction(Check& c) {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LocalizedDistanceReport audit = localized_distance_check(h);
    c.expect(audit.cycle_logicals_included, "coset walk skipped the cycle logicals");
    c.expect(audit.coset_dim == 9, "coset dimension is not 9");
    c.expect(audit.words == 512, "walk did not cover 512 words");
    c.expect(audit.disjunction_holds(2.0, 1.0),
             "some word has every V-column weight < 2 and every E-column weight < 1");
    c.expect(audit.min_max_v_col == 1, "achieved V-column minimum is not 1");
    c.expect(audit.min_max_e_col == 0, "achieved E-column minimum is not 0");
    const std::vector<std::uint32_t> expected = {UINT32_MAX, 1, 1, 0};
    c.expect(audit.min_e_for_v == expected, "per-bucket minima table changed");
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "css orthogonality on 50 random regular products", 5.0, criterion_css_orthogonality},
        {2, "qubit count, check locality and k formulas", 10.0, criterion_parameter_formulas},
        {3, "cycle3 product is an [[18, 2, 3]] code", 5.0, criterion_toric_parameters},
        {4, "exhaustive cheeger meets the spectral bound", 60.0, criterion_cheeger_vs_spectral},
        {5, "repetition-code soundness meets 2h/d", 120.0, criterion_repetition_soundness},
        {6, "uncertainty interval on random logical states", 10.0,
         criterion_uncertainty_random_states},
        {7, "partition witness masses under planted errors", 60.0, criterion_partition_witness},
        {8, "chebyshev gap profile on the (n, B) grid", 10.0, criterion_chebyshev_profile},
        {9, "vertex expansion bound on random circuits", 600.0,
         criterion_vertex_expansion_trials},
        {10, "closed-form depth and distance values", 1.0, criterion_closed_form_bounds},
        {11, "seeded corruption sweeps stay certified", 300.0, criterion_corruption_sweeps},
        {12, "column-weight disjunction over the full coset", 30.0,
         criterion_column_disjunction},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        try {
            only.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::fprintf(stderr, "usage: %s [criterion-number ...]\n", argv[0]);
            return 1;
        }
    }

    int failed = 0, ran = 0;
    for (const Criterion& cr : criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
        ++ran;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.problems.push_back(std::string("unexpected exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > cr.limit_seconds)
            check.problems.push_back("time limit exceeded: " + std::to_string(elapsed) +
                                     "s > " + std::to_string(cr.limit_seconds) + "s");
        const bool pass = check.problems.empty();
        std::printf("[%2d] %s  %7.2fs  %s\n", cr.id, pass ? "PASS" : "FAIL", elapsed, cr.name);
        for (const std::string& p : check.problems) std::printf("       - %s\n", p.c_str());
        if (!pass) ++failed;
    }
    std::printf("acceptance: %d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
