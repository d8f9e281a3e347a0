#include <charconv>
#include <cstdio>
#include <sstream>

#include "hacs/bench.hpp"
#include "hacs/tsplib.hpp"

namespace hacs {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s(buf);
    if (s == "-0.00" || s == "-0.0000" || s == "-0.000000") s.erase(0, 1);
    return s;
}

std::string opt_fixed(const std::optional<double>& v, int digits, const char* absent) {
    return v ? fixed(*v, digits) : std::string(absent);
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        std::string_view cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
        out.emplace_back(cell);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_cell(const std::string& cell, int line) {
    if (cell.empty() || cell == "---" || cell == "-") return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("not a number: '" + cell + "'", line);
    }
    return v;
}

struct Averages {
    double error_sum = 0.0;
    int error_count = 0;
    double time_sum = 0.0;
    double optimal_sum = 0.0;
    int optimal_count = 0;
    int count = 0;

    void add(const RunReport& r) {
        ++count;
        time_sum += r.mean_time;
        if (r.mean_error) {
            error_sum += *r.mean_error;
            ++error_count;
        }
        if (r.optimal_pct) {
            optimal_sum += *r.optimal_pct;
            ++optimal_count;
        }
    }
    std::optional<double> error() const {
        return error_count ? std::optional<double>(error_sum / error_count) : std::nullopt;
    }
    std::optional<double> optimal() const {
        return optimal_count ? std::optional<double>(optimal_sum / optimal_count) : std::nullopt;
    }
    double time() const { return count ? time_sum / count : 0.0; }
};

std::string underline(const std::string& text, bool on) { return on ? "<u>" + text + "</u>" : text; }

}  // namespace

PublishedReference PublishedReference::parse_csv(std::string_view text) {
    PublishedReference ref;
    std::vector<std::string> header;
    int line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#' || line == "\r") continue;
        auto cells = split_csv(line);
        if (header.empty()) {
            header = std::move(cells);
            if (header.empty() || header.front() != "instance") {
                throw ParseError("reference table must start with an 'instance' header", line_no);
            }
            continue;
        }
        if (cells.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " columns, got " +
                                 std::to_string(cells.size()),
                             line_no);
        }
        PublishedRow row;
        for (std::size_t c = 1; c < header.size(); ++c) {
            const auto value = parse_cell(cells[c], line_no);
            const std::string& key = header[c];
            if (key == "hacs_error") row.hacs_error = value;
            else if (key == "hacs0_error") row.hacs0_error = value;
            else if (key == "sg_error") row.sg_error = value;
            else if (key == "baf_error") row.baf_error = value;
            else if (key == "ppc_error") row.ppc_error = value;
            else if (key == "hacs_time") row.hacs_time = value;
            else if (key == "hacs0_time") row.hacs0_time = value;
            else if (key == "sg_time") row.sg_time = value;
            else if (key == "baf_time") row.baf_time = value;
            else if (key == "hacs_optimal") row.hacs_optimal = value;
            else if (key == "hacs0_optimal") row.hacs0_optimal = value;
            else if (key != "best") throw ParseError("unknown column '" + key + "'", line_no);
        }
        ref.rows_[cells.front()] = row;
    }
    return ref;
}

PublishedReference PublishedReference::load(const std::filesystem::path& path) {
    try {
        return parse_csv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string(), e);
    }
}

const PublishedRow* PublishedReference::find(const std::string& instance) const {
    auto it = rows_.find(instance);
    return it == rows_.end() ? nullptr : &it->second;
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::csv;
    if (text == "md" || text == "markdown") return ReportFormat::markdown;
    throw UsageError("unknown report format '" + std::string(text) + "' (expected csv or markdown)");
}

std::string render_report(std::span<const RunReport> reports, ReportFormat format,
                          const PublishedReference* reference) {
    if (reports.empty()) throw UsageError("nothing to report");
    std::ostringstream out;
    Averages avg;
    for (const RunReport& r : reports) avg.add(r);

    const auto ref_cells = [&](const std::string& instance, const char* absent, int digits) {
        std::vector<std::string> cells;
        const PublishedRow* row = reference ? reference->find(instance) : nullptr;
        cells.push_back(row ? opt_fixed(row->sg_error, digits, absent) : absent);
        cells.push_back(row ? opt_fixed(row->baf_error, digits, absent) : absent);
        cells.push_back(row ? opt_fixed(row->ppc_error, digits, absent) : absent);
        return cells;
    };

    if (format == ReportFormat::csv) {
        out << "instance,best,error_pct,time_s,optimal_pct,best_found,runs";
        if (reference) out << ",sg_error_published,baf_error_published,ppc_error_published";
        out << '\n';
        for (const RunReport& r : reports) {
            out << r.instance << ',' << (r.best_known ? std::to_string(*r.best_known) : "") << ','
                << opt_fixed(r.mean_error, 6, "") << ',' << fixed(r.mean_time, 6) << ','
                << opt_fixed(r.optimal_pct, 6, "") << ',' << r.best_found << ',' << r.runs.size();
            if (reference) {
                for (const auto& cell : ref_cells(r.instance, "", 2)) out << ',' << cell;
            }
            out << '\n';
        }
        out << "Average,," << opt_fixed(avg.error(), 6, "") << ',' << fixed(avg.time(), 6) << ','
            << opt_fixed(avg.optimal(), 6, "") << ",,";
        if (reference) out << ",,,";
        out << '\n';
        return out.str();
    }

    out << "| Instance | Best | Error, % | Time, s | Optimal, % |";
    if (reference) out << " SG error, % (published) | BAF error, % (published) | PPC error, % (published) |";
    out << '\n' << "|---|---:|---:|---:|---:|";
    if (reference) out << "---:|---:|---:|";
    out << '\n';
    for (const RunReport& r : reports) {
        out << "| " << r.instance << " | " << (r.best_known ? std::to_string(*r.best_known) : "n/a") << " | "
            << opt_fixed(r.mean_error, 2, "no reference") << " | " << fixed(r.mean_time, 2) << " | "
            << opt_fixed(r.optimal_pct, 0, "n/a") << " |";
        if (reference) {
            for (const auto& cell : ref_cells(r.instance, "---", 2)) out << ' ' << cell << " |";
        }
        out << '\n';
        for (const RunRecord& run : r.runs) {
            if (run.new_best) {
                out << "|   new best: seed " << run.seed << " | " << run.weight << " | "
                    << fixed(*run.error, 2) << " | | |";
                if (reference) out << " | | |";
                out << '\n';
            }
        }
    }
    out << "| Average | | " << opt_fixed(avg.error(), 2, "n/a") << " | " << fixed(avg.time(), 2) << " | "
        << opt_fixed(avg.optimal(), 0, "n/a") << " |";
    if (reference) out << " | | |";
    out << '\n';
    return out.str();
}

std::string render_ablation(const AblationReport& report, ReportFormat format) {
    if (report.hacs.empty() || report.hacs.size() != report.hacs0.size()) {
        throw UsageError("ablation report needs matching non-empty HACS and HACS0 results");
    }
    std::ostringstream out;
    Averages a, b;
    for (std::size_t i = 0; i < report.hacs.size(); ++i) {
        a.add(report.hacs[i]);
        b.add(report.hacs0[i]);
    }

    if (format == ReportFormat::csv) {
        out << "instance,best,error_hacs,error_hacs0,time_hacs,time_hacs0,optimal_hacs,optimal_hacs0\n";
        for (std::size_t i = 0; i < report.hacs.size(); ++i) {
            const RunReport& x = report.hacs[i];
            const RunReport& y = report.hacs0[i];
            out << x.instance << ',' << (x.best_known ? std::to_string(*x.best_known) : "") << ','
                << opt_fixed(x.mean_error, 6, "") << ',' << opt_fixed(y.mean_error, 6, "") << ','
                << fixed(x.mean_time, 6) << ',' << fixed(y.mean_time, 6) << ','
                << opt_fixed(x.optimal_pct, 6, "") << ',' << opt_fixed(y.optimal_pct, 6, "") << '\n';
        }
        out << "Average,," << opt_fixed(a.error(), 6, "") << ',' << opt_fixed(b.error(), 6, "") << ','
            << fixed(a.time(), 6) << ',' << fixed(b.time(), 6) << ',' << opt_fixed(a.optimal(), 6, "") << ','
            << opt_fixed(b.optimal(), 6, "") << '\n';
        return out.str();
    }

    // Lower error and time win, higher optimal-hit share wins; ties underline both.
    const auto pair_cells = [](const std::optional<double>& x, const std::optional<double>& y, int digits,
                               bool lower_wins) {
        const std::string sx = opt_fixed(x, digits, "n/a");
        const std::string sy = opt_fixed(y, digits, "n/a");
        if (!x || !y) return sx + " | " + sy;
        const double vx = std::stod(sx);
        const double vy = std::stod(sy);
        const bool x_wins = lower_wins ? vx <= vy : vx >= vy;
        const bool y_wins = lower_wins ? vy <= vx : vy >= vx;
        return underline(sx, x_wins) + " | " + underline(sy, y_wins);
    };

    out << "| Instance | Best | Error HACS, % | Error HACS0, % | Time HACS, s | Time HACS0, s | Optimal HACS, % | "
           "Optimal HACS0, % |\n";
    out << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
    for (std::size_t i = 0; i < report.hacs.size(); ++i) {
        const RunReport& x = report.hacs[i];
        const RunReport& y = report.hacs0[i];
        out << "| " << x.instance << " | " << (x.best_known ? std::to_string(*x.best_known) : "n/a") << " | "
            << pair_cells(x.mean_error, y.mean_error, 2, true) << " | "
            << pair_cells(x.mean_time, y.mean_time, 2, true) << " | "
            << pair_cells(x.optimal_pct, y.optimal_pct, 0, false) << " |\n";
    }
    out << "| Average | | " << pair_cells(a.error(), b.error(), 2, true) << " | "
        << pair_cells(a.time(), b.time(), 2, true) << " | " << pair_cells(a.optimal(), b.optimal(), 0, false)
        << " |\n";
    return out.str();
}

std::string render_runs_csv(std::span<const RunReport> reports) {
    std::ostringstream out;
    out << "instance,local_search,seed,weight,error_pct,wall_s,cpu_s,iterations,hit,new_best,capped,tour\n";
    for (const RunReport& r : reports) {
        for (const RunRecord& run : r.runs) {
            out << r.instance << ',' << to_string(r.config.local_search) << ',' << run.seed << ',' << run.weight
                << ',' << opt_fixed(run.error, 6, "") << ',' << fixed(run.wall_seconds, 6) << ','
                << fixed(run.cpu_seconds, 6) << ',' << run.iterations << ',' << (run.hit ? 1 : 0) << ','
                << (run.new_best ? 1 : 0) << ',' << (run.terminated_by_cap ? 1 : 0) << ','
                << format_tour(run.tour) << '\n';
        }
    }
    return out.str();
}

}  // namespace hacs
