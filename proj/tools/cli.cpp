#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hacs/acs.hpp"
#include "hacs/bench.hpp"
#include "hacs/clustering.hpp"
#include "hacs/tsplib.hpp"

namespace hacs::cli {

namespace {

struct SolveArgs {
    std::string file;
    AcsParams params;
    std::string ls = "composite";
    std::string local_update = "nodes";
    std::optional<std::string> trace;
};

struct HarnessArgs {
    std::string config;
    std::optional<std::string> output_dir;
    int workers = 0;
};

struct ClusterArgs {
    std::string file;
    std::optional<std::string> output;
};

void add_acs_flags(CLI::App& cmd, SolveArgs& a) {
    AcsParams& p = a.params;
    cmd.add_option("--beta", p.beta, "Visibility exponent")->capture_default_str();
    cmd.add_option("--rho", p.rho, "Global evaporation rate")->capture_default_str();
    cmd.add_option("--xi", p.xi, "Local evaporation rate")->capture_default_str();
    cmd.add_option("--q0", p.q0, "Exploitation probability")->capture_default_str();
    cmd.add_option("--delta", p.delta, "Stop after this many iterations without improvement")
        ->capture_default_str();
    cmd.add_option("--ants", p.num_ants, "Number of ants")->capture_default_str();
    cmd.add_option("--seed", p.seed, "Random seed")->capture_default_str();
    cmd.add_option("--ls", a.ls, "Local search: composite, 3opt or none")->capture_default_str();
    cmd.add_option("--local-update", a.local_update, "Local update denominator: nodes or clusters")
        ->capture_default_str();
    cmd.add_option("--max-time", p.max_time_seconds, "Wall-clock cap in seconds");
    cmd.add_option("--max-iterations", p.max_iterations, "Iteration cap");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("cannot write " + path.string());
}

std::filesystem::path output_dir_for(const HarnessArgs& a, const ExperimentConfig& config) {
    if (a.output_dir) return *a.output_dir;
    if (config.output_dir) return *config.output_dir;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
    return "results";
}

int solve(SolveArgs& a, std::ostream& out) {
    a.params.local_search = parse_local_search_mode(a.ls);
    a.params.local_update_denominator = parse_local_update_denominator(a.local_update);
    a.params.record_trace = a.trace.has_value();
    try {
        a.params.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    const GtspInstance instance = load_gtsp(a.file);
    const RunResult result = run(instance, a.params);
    if (a.trace) {
        std::string lines;
        for (const IterationRecord& rec : result.trace) lines += to_json_line(rec) + '\n';
        write_file(*a.trace, lines);
    }

    out << "instance: " << instance.name() << '\n';
    out << "nodes: " << instance.node_count() << '\n';
    out << "clusters: " << instance.cluster_count() << '\n';
    out << "nn_weight: " << result.nn_weight << '\n';
    out << "weight: " << result.best.weight << '\n';
    out << "tour: " << format_tour(result.best.nodes) << '\n';
    out << "iterations: " << result.iterations << '\n';
    out << "time_s: " << std::fixed << std::setprecision(3) << result.seconds << '\n';
    if (result.terminated_by_cap) out << "terminated_by_cap: true\n";
    return kExitOk;
}

struct Harness {
    ExperimentConfig config;
    std::vector<GtspInstance> instances;
    BestKnownRegistry registry;
    std::optional<PublishedReference> reference;
    std::filesystem::path output_dir;
};

Harness load_harness(const HarnessArgs& a) {
    Harness h{load_experiment_config(a.config), {}, {}, {}, {}};
    if (a.workers > 0) h.config.options.workers = a.workers;
    h.output_dir = output_dir_for(a, h.config);
    if (h.config.write_traces) h.config.options.trace_dir = h.output_dir / "traces";
    for (const auto& path : h.config.instances) h.instances.push_back(load_gtsp(path));
    if (h.config.registry) h.registry = BestKnownRegistry::load(*h.config.registry);
    if (h.config.reference) h.reference = PublishedReference::load(*h.config.reference);
    return h;
}

int bench(const HarnessArgs& a, std::ostream& out) {
    Harness h = load_harness(a);
    const auto reports = run_experiment(h.instances, h.registry, h.config.params, h.config.options);
    const PublishedReference* ref = h.reference ? &*h.reference : nullptr;
    const std::string md = render_report(reports, ReportFormat::markdown, ref);
    write_file(h.output_dir / "results.csv", render_report(reports, ReportFormat::csv, ref));
    write_file(h.output_dir / "results.md", md);
    write_file(h.output_dir / "runs.csv", render_runs_csv(reports));
    out << md;
    out << "wrote " << (h.output_dir / "results.csv").string() << '\n';
    return kExitOk;
}

int ablate(const HarnessArgs& a, std::ostream& out) {
    Harness h = load_harness(a);
    const AblationReport report = ablation(h.instances, h.registry, h.config.params, h.config.options);
    const std::string md = render_ablation(report, ReportFormat::markdown);
    write_file(h.output_dir / "ablation.csv", render_ablation(report, ReportFormat::csv));
    write_file(h.output_dir / "ablation.md", md);
    write_file(h.output_dir / "runs_composite.csv", render_runs_csv(report.hacs));
    write_file(h.output_dir / "runs_3opt.csv", render_runs_csv(report.hacs0));
    out << md;
    out << "wrote " << (h.output_dir / "ablation.csv").string() << '\n';
    return kExitOk;
}

int cluster(const ClusterArgs& a, std::ostream& out) {
    TspData tsp;
    try {
        tsp = parse_tsplib(read_text_file(a.file));
    } catch (const ParseError& e) {
        throw ParseError(a.file, e);
    }
    const GtspInstance instance = cluster_instance(tsp);
    const std::string text = write_gtsp(tsp, instance);
    if (a.output) {
        write_file(*a.output, text);
    } else {
        out << text;
    }
    return kExitOk;
}

int validate(const std::string& file, std::ostream& out) {
    const std::string text = read_text_file(file);
    if (looks_like_gtsp(text)) {
        const GtspInstance instance = load_gtsp(file);
        out << file << ": ok: GTSP " << instance.name() << ", n=" << instance.node_count()
            << ", m=" << instance.cluster_count() << ", cluster sizes " << instance.smallest_cluster_size()
            << ".." << instance.largest_cluster_size() << '\n';
        return kExitOk;
    }
    try {
        const TspData tsp = parse_tsplib(text);
        out << file << ": ok: TSP " << tsp.name << ", n=" << tsp.dimension << ", "
            << to_string(tsp.edge_weight_type) << '\n';
    } catch (const ParseError& e) {
        throw ParseError(file, e);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid ant colony system for the generalized TSP"};
    app.name("hacs");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one clustered GTSP instance");
    solve_cmd->add_option("file", solve_args.file, "GTSP file")->required();
    add_acs_flags(*solve_cmd, solve_args);
    solve_cmd->add_option("--trace", solve_args.trace, "Write per-iteration records to this file");

    HarnessArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Repeated seeded runs over a set of instances");
    bench_cmd->add_option("--config", bench_args.config, "Experiment config file")->required();
    bench_cmd->add_option("--output-dir", bench_args.output_dir, "Where to write reports");
    bench_cmd->add_option("--workers", bench_args.workers, "Override the worker cap");

    HarnessArgs ablate_args;
    auto* ablate_cmd = app.add_subcommand("ablate", "Composite vs 3-opt-only local search, paired seeds");
    ablate_cmd->add_option("--config", ablate_args.config, "Experiment config file")->required();
    ablate_cmd->add_option("--output-dir", ablate_args.output_dir, "Where to write reports");
    ablate_cmd->add_option("--workers", ablate_args.workers, "Override the worker cap");

    ClusterArgs cluster_args;
    auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a TSPLIB instance into a GTSP file");
    cluster_cmd->add_option("file", cluster_args.file, "TSPLIB file with coordinates")->required();
    cluster_cmd->add_option("-o,--output", cluster_args.output, "Output path (default: stdout)");

    std::string validate_file;
    auto* validate_cmd = app.add_subcommand("validate", "Check a TSPLIB or GTSP file");
    validate_cmd->add_option("file", validate_file, "File to check")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return solve(solve_args, out);
        if (*bench_cmd) return bench(bench_args, out);
        if (*ablate_cmd) return ablate(ablate_args, out);
        if (*cluster_cmd) return cluster(cluster_args, out);
        if (*validate_cmd) return validate(validate_file, out);
    } catch (const UsageError& e) {
        err << "hacs: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "hacs: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace hacs::cli
