#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hacs/acs.hpp"
#include "hacs/best_known.hpp"
#include "hacs/instance.hpp"

namespace hacs {

struct RunRecord {
    std::uint64_t seed = 0;
    Weight weight = 0;
    std::optional<double> error;  // percent; absent without a reference value
    double wall_seconds = 0.0;
    double cpu_seconds = 0.0;
    long long iterations = 0;
    bool hit = false;        // weight equals the reference value
    bool new_best = false;   // weight beats the reference value
    bool terminated_by_cap = false;
    std::vector<NodeId> tour;
};

struct RunReport {
    std::string instance;
    std::optional<Weight> best_known;
    std::vector<RunRecord> runs;
    std::optional<double> mean_error;
    double mean_time = 0.0;
    std::optional<double> optimal_pct;
    Weight best_found = 0;
    AcsParams config;

    /// Recomputes the aggregates from `runs` and `best_known`.
    void aggregate();
};

struct ExperimentOptions {
    int repeats = 10;
    int workers = 1;
    /// When set, one line-delimited trace file per run is written here.
    std::optional<std::filesystem::path> trace_dir;
};

/// Runs every instance `repeats` times with seeds seed, seed+1, ...
/// Errors are taken against `registry`; missing entries leave them empty.
/// Runs may execute on up to `workers` threads; results are ordered by
/// instance and seed regardless.
std::vector<RunReport> run_experiment(std::span<const GtspInstance> instances, const BestKnownRegistry& registry,
                                      const AcsParams& params, const ExperimentOptions& options);

struct AblationReport {
    std::vector<RunReport> hacs;   // composite local search
    std::vector<RunReport> hacs0;  // 3-opt only
};

/// Same instances and seeds under both local search modes.
AblationReport ablation(std::span<const GtspInstance> instances, const BestKnownRegistry& registry,
                        const AcsParams& params, const ExperimentOptions& options);

/// Static numbers as printed in the published comparison tables. Display only.
struct PublishedRow {
    std::optional<double> hacs_error, hacs0_error, sg_error, baf_error, ppc_error;
    std::optional<double> hacs_time, hacs0_time, sg_time, baf_time;
    std::optional<double> hacs_optimal, hacs0_optimal;
};

class PublishedReference {
public:
    static PublishedReference parse_csv(std::string_view text);
    static PublishedReference load(const std::filesystem::path& path);

    const PublishedRow* find(const std::string& instance) const;
    std::size_t size() const noexcept { return rows_.size(); }

private:
    std::map<std::string, PublishedRow> rows_;
};

enum class ReportFormat { csv, markdown };

/// "csv", "md" or "markdown"; anything else is a UsageError.
ReportFormat parse_report_format(std::string_view text);

/// Instance, Best, Error %, Time s, Optimal % per instance plus an averages
/// row. With `reference`, adds the published SG/BAF/PPC error columns.
std::string render_report(std::span<const RunReport> reports, ReportFormat format,
                          const PublishedReference* reference = nullptr);

/// Paired HACS / HACS0 table; the better value per metric is underlined in Markdown.
std::string render_ablation(const AblationReport& report, ReportFormat format);

/// One row per run: instance, seed, weight, error, times, iterations, flags, tour.
std::string render_runs_csv(std::span<const RunReport> reports);

/// Mean error and optimal-hit percentage over all runs that have a reference.
struct PooledStats {
    double mean_error = 0.0;
    double optimal_pct = 0.0;
    std::size_t runs = 0;
};
PooledStats pool(std::span<const RunReport> reports);

/// Plain "key = value" experiment description. `instance` may repeat; paths
/// are resolved relative to the config file. Without `output_dir` the caller
/// picks the destination; `traces` places trace files under <output>/traces.
struct ExperimentConfig {
    std::vector<std::filesystem::path> instances;
    std::optional<std::filesystem::path> registry;
    std::optional<std::filesystem::path> reference;
    std::optional<std::filesystem::path> output_dir;
    bool write_traces = false;
    AcsParams params;
    ExperimentOptions options;
};

ExperimentConfig parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace hacs
