// Command line front end for the experiment drivers. Subcommands build
// the product code, audit its structure, run the exact-enumeration
// warmup, run seeded corruption experiments, and run the empirical
// vertex-expansion trials. Exit status: 0 when every checked claim
// holds, 2 when a run observes a falsification, 1 on operational errors.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epc/css.hpp"
#include "epc/expansion.hpp"
#include "epc/graph.hpp"
#include "epc/hgp.hpp"
#include "epc/io.hpp"
#include "epc/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "JSON experiment config file");
    sub->add_option("--out", args.out_path, "output file (stdout when omitted)");
    sub->add_option("--seed", args.seed, "override the config seed");
}

nlohmann::json load_config_json(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    return nlohmann::json::parse(epc::read_text_file(path));
}

epc::ExperimentConfig load_experiment_config(const CommonArgs& args) {
    epc::ExperimentConfig cfg = epc::experiment_config_from_json(load_config_json(args.config_path));
    if (args.seed) cfg.seed = *args.seed;
    return cfg;
}

epc::VertexTrialConfig load_vertex_config(const CommonArgs& args) {
    const nlohmann::json j = load_config_json(args.config_path);
    epc::VertexTrialConfig cfg;
    cfg.trials = j.value("trials", cfg.trials);
    cfg.min_n = j.value("min_n", cfg.min_n);
    cfg.max_n = j.value("max_n", cfg.max_n);
    cfg.max_depth = j.value("max_depth", cfg.max_depth);
    if (j.contains("gammas")) cfg.gammas = j.at("gammas").get<std::vector<double>>();
    cfg.seed = j.value("seed", cfg.seed);
    cfg.max_explicit_members = j.value("max_explicit_members", cfg.max_explicit_members);
    if (args.seed) cfg.seed = *args.seed;
    return cfg;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        epc::write_text_file(out_path, text);
}

int run_build(const CommonArgs& args) {
    const epc::ExperimentConfig cfg = load_experiment_config(args);
    const epc::HgpCode h = epc::hypergraph_product(epc::build_graph(cfg));

    std::size_t max_weight = 0;
    for (std::size_t i = 0; i < h.code.hx().rows(); ++i)
        max_weight = std::max(max_weight, h.code.hx().row(i).weight());
    for (std::size_t i = 0; i < h.code.hz().rows(); ++i)
        max_weight = std::max(max_weight, h.code.hz().row(i).weight());

    nlohmann::json summary;
    summary["base_n"] = h.graph.num_vertices();
    summary["base_m"] = h.graph.num_edges();
    summary["qubits"] = h.code.num_qubits();
    summary["x_checks"] = h.code.hx().rows();
    summary["z_checks"] = h.code.hz().rows();
    summary["k"] = h.code.k();
    summary["max_check_weight"] = max_weight;

    if (!args.out_path.empty()) {
        epc::save_css(args.out_path, h.code);
        std::fputs((summary.dump(2) + "\n").c_str(), stdout);
    } else {
        emit_json(summary, "");
    }
    return 0;
}

int run_audit(const CommonArgs& args) {
    const epc::ExperimentConfig cfg = load_experiment_config(args);
    const epc::StructuralAuditReport rep =
        epc::run_structural_audit(epc::build_graph(cfg), cfg.distance_max_dim, cfg.audit_max_dim);
    emit_json(epc::to_json(rep), args.out_path);
    const bool falsified = !rep.k_match || (rep.spanning.has_value() && !rep.spanning->spans);
    if (falsified) std::fprintf(stderr, "audit: structural claim falsified\n");
    return falsified ? 2 : 0;
}

int run_warmup_cmd(const CommonArgs& args) {
    const epc::ExperimentConfig cfg = load_experiment_config(args);
    const epc::HgpCode h = epc::hypergraph_product(epc::build_graph(cfg));
    const epc::WarmupReport rep =
        epc::run_warmup(h.code, cfg.alpha, cfg.beta, cfg.logical_index);
    emit_json(epc::to_json(rep), args.out_path);
    if (!rep.certified) std::fprintf(stderr, "warmup: mass floor missed\n");
    return rep.certified ? 0 : 2;
}

int run_nlets_cmd(const CommonArgs& args, std::size_t runs) {
    const epc::ExperimentConfig cfg = load_experiment_config(args);
    const epc::NletsSweepResult sweep = epc::run_nlets_sweep(cfg, runs);
    if (runs == 1)
        emit_json(epc::to_json(sweep.reports.front()), args.out_path);
    else
        emit_json(epc::to_json(sweep), args.out_path);
    if (sweep.falsifications > 0)
        std::fprintf(stderr, "nlets: %zu of %zu runs falsified\n", sweep.falsifications,
                     sweep.runs);
    return sweep.falsifications > 0 ? 2 : 0;
}

int run_expansion_trials(const CommonArgs& args) {
    const epc::VertexTrialConfig cfg = load_vertex_config(args);
    const epc::VertexTrialReport rep = epc::empirical_vertex_theorem(cfg);
    emit_json(epc::to_json(rep), args.out_path);
    if (rep.total_violations > 0)
        std::fprintf(stderr, "expansion-trials: %zu candidate violations\n",
                     rep.total_violations);
    return rep.total_violations > 0 ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph-product code construction and certification experiments"};
    app.require_subcommand(1);

    CommonArgs build_args, audit_args, warmup_args, nlets_args, trials_args;
    std::size_t nlets_runs = 1;

    CLI::App* build_cmd =
        app.add_subcommand("build", "construct the product code; --out writes the check blocks");
    add_common(build_cmd, build_args);

    CLI::App* audit_cmd =
        app.add_subcommand("audit", "structural audit of the configured product");
    add_common(audit_cmd, audit_args);

    CLI::App* warmup_cmd =
        app.add_subcommand("warmup", "exact masses and depth bound on the configured product");
    add_common(warmup_cmd, warmup_args);

    CLI::App* nlets_cmd =
        app.add_subcommand("nlets", "seeded corruption runs with certification");
    add_common(nlets_cmd, nlets_args);
    nlets_cmd->add_option("--runs", nlets_runs, "number of consecutive seeds")
        ->check(CLI::PositiveNumber);

    CLI::App* trials_cmd = app.add_subcommand(
        "expansion-trials", "empirical vertex-expansion bound over random circuits");
    add_common(trials_cmd, trials_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (build_cmd->parsed()) return run_build(build_args);
        if (audit_cmd->parsed()) return run_audit(audit_args);
        if (warmup_cmd->parsed()) return run_warmup_cmd(warmup_args);
        if (nlets_cmd->parsed()) return run_nlets_cmd(nlets_args, nlets_runs);
        if (trials_cmd->parsed()) return run_expansion_trials(trials_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
