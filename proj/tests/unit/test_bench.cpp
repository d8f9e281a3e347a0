#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hacs/bench.hpp"
#include "hacs/heuristics.hpp"
#include "hacs/tsplib.hpp"
#include "oracles.hpp"

using namespace hacs;

namespace {

const std::filesystem::path kData = HACS_DATA_DIR;

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> cells_of(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    return out;
}

std::string trimmed(std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(0, 1);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

RunRecord record(std::uint64_t seed, Weight w, Weight best) {
    RunRecord r;
    r.seed = seed;
    r.weight = w;
    r.error = relative_error(w, best);
    r.hit = w == best;
    r.new_best = w < best;
    r.wall_seconds = 0.5 * static_cast<double>(seed);
    return r;
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("hacs_bench_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("registry parsing") {
    const auto reg = BestKnownRegistry::parse_csv("# comment\nname,best\n40d198, 10557\n\n46pr226,64007\n");
    CHECK(reg.size() == 2);
    CHECK(reg.find("40d198") == 10557);
    CHECK_FALSE(reg.find("nope").has_value());
    CHECK_THROWS_AS(BestKnownRegistry::parse_csv("a,0\n"), ParseError);
    CHECK_THROWS_AS(BestKnownRegistry::parse_csv("a,12\na,13\n"), ParseError);
    CHECK_THROWS_AS(BestKnownRegistry::parse_csv("a;12\n"), ParseError);
    BestKnownRegistry r;
    CHECK_THROWS_AS(r.set("x", -1), DomainError);
}

TEST_CASE("shipped registry holds every published best value") {
    const auto reg = BestKnownRegistry::load(kData / "best_known.csv");
    const std::pair<const char*, Weight> expected[] = {
        {"40d198", 10557},     {"40kroa200", 13406}, {"40krob200", 13111}, {"45ts225", 68340},
        {"46pr226", 64007},    {"53gil262", 1013},   {"53pr264", 29549},   {"60pr299", 22615},
        {"64lin318", 20765},   {"80rd400", 6361},    {"84fl417", 9651},    {"88pr439", 60099},
        {"89pcb442", 21657},   {"99d493", 20023},    {"107att532", 13464}, {"107si535", 13502},
        {"113pa561", 1038},    {"115rat575", 2388},  {"131p654", 27428},   {"132d657", 22498},
        {"145u724", 17272},    {"157rat783", 3262},  {"201pr1002", 114311}, {"207si1032", 22306},
        {"212u1060", 106007},  {"217vm1084", 130704},
    };
    CHECK(reg.size() == 26);
    for (const auto& [name, best] : expected) {
        CAPTURE(name);
        CHECK(reg.find(name) == best);
    }
}

TEST_CASE("shipped published reference") {
    const auto ref = PublishedReference::load(kData / "published_reference.csv");
    CHECK(ref.size() == 26);
    const PublishedRow* row = ref.find("40d198");
    REQUIRE(row != nullptr);
    CHECK(row->sg_error == 0.0);
    CHECK(row->baf_error == 0.0);
    CHECK(row->ppc_error == 0.01);
    CHECK(row->hacs_time == 2.74);
    CHECK(row->hacs0_error == 0.69);
    CHECK(row->hacs_optimal == 100.0);
    CHECK_FALSE(ref.find("217vm1084")->ppc_error.has_value());
    CHECK_THROWS_AS(PublishedReference::parse_csv("name,x\n"), ParseError);
    CHECK_THROWS_AS(PublishedReference::parse_csv("instance,sg_error\na,b\n"), ParseError);
}

TEST_CASE("aggregation is recomputable from the runs") {
    RunReport rep;
    rep.instance = "x";
    rep.best_known = 100;
    rep.runs = {record(1, 100, 100), record(2, 103, 100), record(3, 99, 100), record(4, 100, 100)};
    rep.aggregate();
    CHECK(*rep.mean_error == doctest::Approx((0.0 + 3.0 - 1.0 + 0.0) / 4));
    CHECK(*rep.optimal_pct == 50.0);
    CHECK(rep.mean_time == doctest::Approx((0.5 + 1.0 + 1.5 + 2.0) / 4));
    CHECK(rep.best_found == 99);

    RunReport none;
    none.runs = {RunRecord{}};
    none.aggregate();
    CHECK_FALSE(none.mean_error.has_value());
    CHECK_FALSE(none.optimal_pct.has_value());
}

TEST_CASE("one instance, one exact hit") {
    RunReport rep;
    rep.instance = "3tri3";
    rep.best_known = 6;
    rep.runs = {record(1, 6, 6)};
    rep.aggregate();
    const std::vector<RunReport> reports{rep};
    const auto md = lines_of(render_report(reports, ReportFormat::markdown));
    REQUIRE(md.size() == 4);
    const auto cells = cells_of(md[2], '|');
    CHECK(trimmed(cells[1]) == "3tri3");
    CHECK(trimmed(cells[3]) == "0.00");
    CHECK(trimmed(cells[5]) == "100");
    const auto csv = lines_of(render_report(reports, ReportFormat::csv));
    CHECK(csv[0] == "instance,best,error_pct,time_s,optimal_pct,best_found,runs");
    CHECK(csv[1].rfind("3tri3,6,0.000000,", 0) == 0);
    CHECK_THROWS_AS(parse_report_format("html"), UsageError);
    CHECK(parse_report_format("md") == ReportFormat::markdown);
}

TEST_CASE("markdown averages agree with the CSV rows") {
    std::mt19937_64 gen(1);
    std::uniform_int_distribution<Weight> w(1000, 1100);
    std::vector<RunReport> reports;
    for (int i = 0; i < 7; ++i) {
        RunReport rep;
        rep.instance = "inst" + std::to_string(i);
        rep.best_known = 1000;
        for (std::uint64_t s = 1; s <= 10; ++s) rep.runs.push_back(record(s, w(gen) % 7 == 0 ? 1000 : w(gen), 1000));
        rep.aggregate();
        reports.push_back(rep);
    }
    const auto csv = lines_of(render_report(reports, ReportFormat::csv));
    double err = 0.0, time = 0.0, opt = 0.0;
    for (std::size_t i = 1; i + 1 < csv.size(); ++i) {
        const auto c = cells_of(csv[i], ',');
        err += std::stod(c[2]);
        time += std::stod(c[3]);
        opt += std::stod(c[4]);
    }
    const double n = static_cast<double>(reports.size());
    const auto md = lines_of(render_report(reports, ReportFormat::markdown));
    const auto avg = cells_of(md.back(), '|');
    CHECK(trimmed(avg[1]) == "Average");
    CHECK(std::abs(std::stod(trimmed(avg[3])) - err / n) <= 0.005);
    CHECK(std::abs(std::stod(trimmed(avg[4])) - time / n) <= 0.005);
    CHECK(std::abs(std::stod(trimmed(avg[5])) - opt / n) <= 0.5);
}

TEST_CASE("reference columns show the published numbers") {
    const auto ref = PublishedReference::load(kData / "published_reference.csv");
    RunReport rep;
    rep.instance = "40d198";
    rep.best_known = 10557;
    rep.runs = {record(1, 10557, 10557)};
    rep.aggregate();
    const std::vector<RunReport> reports{rep};
    const auto md = lines_of(render_report(reports, ReportFormat::markdown, &ref));
    const auto cells = cells_of(md[2], '|');
    CHECK(trimmed(cells[6]) == "0.00");
    CHECK(trimmed(cells[7]) == "0.00");
    CHECK(trimmed(cells[8]) == "0.01");
    const auto csv = lines_of(render_report(reports, ReportFormat::csv, &ref));
    CHECK(csv[1].substr(csv[1].size() - 15) == ",0.00,0.00,0.01");
}

TEST_CASE("new best values are flagged, not clamped") {
    RunReport rep;
    rep.instance = "x";
    rep.best_known = 100;
    rep.runs = {record(1, 98, 100)};
    rep.aggregate();
    CHECK(*rep.mean_error == doctest::Approx(-2.0));
    CHECK(rep.runs[0].new_best);
    const std::vector<RunReport> reports{rep};
    const std::string md = render_report(reports, ReportFormat::markdown);
    CHECK(md.find("new best: seed 1 | 98 | -2.00") != std::string::npos);
}

TEST_CASE("missing registry entries are reported without a reference") {
    std::mt19937_64 gen(5);
    const std::vector<GtspInstance> instances{oracle::random_instance(gen, {5, 5, 1, 3, 1, 100}, "unlisted")};
    ExperimentOptions options;
    options.repeats = 2;
    AcsParams params;
    params.delta = 10;
    const auto reports = run_experiment(instances, BestKnownRegistry{}, params, options);
    CHECK_FALSE(reports[0].best_known.has_value());
    CHECK_FALSE(reports[0].mean_error.has_value());
    CHECK(render_report(reports, ReportFormat::markdown).find("no reference") != std::string::npos);
}

TEST_CASE("single-tour instance: one run is always optimal") {
    const std::vector<GtspInstance> instances{GtspInstance("tri", {{0}, {1}, {2}}, {0, 1, 3, 1, 0, 2, 3, 2, 0})};
    BestKnownRegistry reg;
    reg.set("tri", 6);
    ExperimentOptions options;
    options.repeats = 1;
    const auto reports = run_experiment(instances, reg, AcsParams{}, options);
    CHECK(*reports[0].optimal_pct == 100.0);
    CHECK(*reports[0].mean_error == 0.0);
}

TEST_CASE("oracle-backed registry: ten seeds on an m=6 instance") {
    std::mt19937_64 gen(606);
    const std::vector<GtspInstance> instances{oracle::random_instance(gen, {6, 6, 1, 4, 1, 100}, "r6")};
    BestKnownRegistry reg;
    reg.set("r6", brute_force_optimum(instances[0]).weight);
    ExperimentOptions options;
    options.repeats = 10;
    const auto reports = run_experiment(instances, reg, AcsParams{}, options);
    CHECK(*reports[0].optimal_pct >= 90.0);
    for (std::size_t i = 0; i < reports[0].runs.size(); ++i) {
        const RunRecord& r = reports[0].runs[i];
        CHECK(r.seed == AcsParams{}.seed + i);
        CHECK(r.hit == (*r.error == 0.0));
        CHECK(r.weight == tour_weight(instances[0], r.tour));
        CHECK(r.cpu_seconds >= 0.0);
    }
}

TEST_CASE("worker count does not change results; traces are written") {
    std::mt19937_64 gen(77);
    std::vector<GtspInstance> instances;
    for (int i = 0; i < 3; ++i) instances.push_back(oracle::random_instance(gen, {7, 8, 1, 4, 1, 100}, "w" + std::to_string(i)));
    AcsParams params;
    params.delta = 15;
    ExperimentOptions serial;
    serial.repeats = 4;
    ExperimentOptions parallel = serial;
    parallel.workers = 3;
    parallel.trace_dir = scratch_dir("traces");
    const auto a = run_experiment(instances, BestKnownRegistry{}, params, serial);
    const auto b = run_experiment(instances, BestKnownRegistry{}, params, parallel);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        for (std::size_t r = 0; r < a[i].runs.size(); ++r) {
            CHECK(a[i].runs[r].seed == b[i].runs[r].seed);
            CHECK(a[i].runs[r].weight == b[i].runs[r].weight);
            CHECK(a[i].runs[r].tour == b[i].runs[r].tour);
            CHECK(a[i].runs[r].iterations == b[i].runs[r].iterations);
        }
    }
    const auto trace = *parallel.trace_dir / "w1_composite_seed3.jsonl";
    REQUIRE(std::filesystem::exists(trace));
    const auto lines = lines_of(read_text_file(trace));
    CHECK(static_cast<long long>(lines.size()) == b[1].runs[2].iterations);
    CHECK(lines.front().rfind("{\"iteration\":1,", 0) == 0);
}

TEST_CASE("ablation pairs seeds across modes and underlines winners") {
    std::mt19937_64 gen(88);
    std::vector<GtspInstance> instances{oracle::random_instance(gen, {7, 7, 2, 4, 1, 100}, "a7")};
    BestKnownRegistry reg;
    reg.set("a7", brute_force_optimum(instances[0]).weight);
    ExperimentOptions options;
    options.repeats = 3;
    AcsParams params;
    params.delta = 20;
    const AblationReport rep = ablation(instances, reg, params, options);
    CHECK(rep.hacs[0].config.local_search == LocalSearchMode::composite);
    CHECK(rep.hacs0[0].config.local_search == LocalSearchMode::three_opt_only);
    for (std::size_t r = 0; r < 3; ++r) CHECK(rep.hacs[0].runs[r].seed == rep.hacs0[0].runs[r].seed);
    const std::string md = render_ablation(rep, ReportFormat::markdown);
    CHECK(md.find("<u>") != std::string::npos);
    CHECK(lines_of(render_ablation(rep, ReportFormat::csv)).size() == 3);

    // Equal displayed values underline both sides.
    AblationReport tie;
    RunReport x;
    x.instance = "t";
    x.best_known = 10;
    x.runs = {record(1, 10, 10)};
    x.aggregate();
    tie.hacs = {x};
    tie.hacs0 = {x};
    const auto row = lines_of(render_ablation(tie, ReportFormat::markdown))[2];
    CHECK(row.find("<u>0.00</u> | <u>0.00</u>") != std::string::npos);
    CHECK(row.find("<u>100</u> | <u>100</u>") != std::string::npos);
}

TEST_CASE("pooled statistics") {
    RunReport a, b;
    a.runs = {record(1, 100, 100), record(2, 110, 100)};
    b.runs = {record(1, 50, 50), RunRecord{}};
    const std::vector<RunReport> reports{a, b};
    const PooledStats s = pool(reports);
    CHECK(s.runs == 3);
    CHECK(s.mean_error == doctest::Approx(10.0 / 3));
    CHECK(s.optimal_pct == doctest::Approx(200.0 / 3));
}

TEST_CASE("experiment config") {
    const auto cfg = parse_experiment_config(
        "# sample\ninstance = a.gtsp\ninstance = /abs/b.gtsp\nregistry = best.csv\nrepeats = 3\nworkers = 2\n"
        "seed = 9\nbeta = 2.5\nrho=0.3\nxi = 0.05\nq0 = 0.1\ndelta = 50\nants = 4\nls = 3opt\n"
        "local_update = clusters\nmax_iterations = 70\nmax_time = 12.5\ntraces = yes\noutput_dir = out\n",
        "/base");
    CHECK(cfg.instances == std::vector<std::filesystem::path>{"/base/a.gtsp", "/abs/b.gtsp"});
    CHECK(*cfg.registry == "/base/best.csv");
    CHECK(*cfg.output_dir == "/base/out");
    CHECK(cfg.write_traces);
    CHECK(cfg.options.repeats == 3);
    CHECK(cfg.options.workers == 2);
    CHECK(cfg.params.seed == 9);
    CHECK(cfg.params.beta == 2.5);
    CHECK(cfg.params.rho == 0.3);
    CHECK(cfg.params.xi == 0.05);
    CHECK(cfg.params.q0 == 0.1);
    CHECK(cfg.params.delta == 50);
    CHECK(cfg.params.num_ants == 4);
    CHECK(cfg.params.local_search == LocalSearchMode::three_opt_only);
    CHECK(cfg.params.local_update_denominator == LocalUpdateDenominator::clusters);
    CHECK(*cfg.params.max_iterations == 70);
    CHECK(*cfg.params.max_time_seconds == 12.5);

    const auto line_of = [](const std::string& text) {
        try {
            parse_experiment_config(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("instance = a\nbeta = x\n") == 2);
    CHECK(line_of("instance = a\n\ncolor = red\n") == 3);
    CHECK(line_of("instance a\n") == 1);
    CHECK(line_of("instance = a\nls = fancy\n") == 2);
    CHECK(line_of("repeats = 3\n") == 0);
    CHECK(line_of("instance = a\nrho = 2\n") == 0);
}
