#include <charconv>
#include <cmath>

#include "hacs/bench.hpp"
#include "hacs/tsplib.hpp"

namespace hacs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double to_double(std::string_view v, std::string_view key, int line) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw ParseError(std::string(key) + ": expected a number, got '" + std::string(v) + "'", line);
    }
    return out;
}

long long to_int(std::string_view v, std::string_view key, int line) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ParseError(std::string(key) + ": expected an integer, got '" + std::string(v) + "'", line);
    }
    return out;
}

bool to_bool(std::string_view v, std::string_view key, int line) {
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw ParseError(std::string(key) + ": expected true or false, got '" + std::string(v) + "'", line);
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    const auto resolve = [&](std::string_view v) {
        std::filesystem::path p{std::string(v)};
        return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    };

    int line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError(key + " has no value", line_no);

        AcsParams& p = config.params;
        try {
            if (key == "instance") config.instances.push_back(resolve(value));
            else if (key == "registry") config.registry = resolve(value);
            else if (key == "reference") config.reference = resolve(value);
            else if (key == "output_dir") config.output_dir = resolve(value);
            else if (key == "traces") config.write_traces = to_bool(value, key, line_no);
            else if (key == "repeats") config.options.repeats = static_cast<int>(to_int(value, key, line_no));
            else if (key == "workers") config.options.workers = static_cast<int>(to_int(value, key, line_no));
            else if (key == "seed") p.seed = static_cast<std::uint64_t>(to_int(value, key, line_no));
            else if (key == "beta") p.beta = to_double(value, key, line_no);
            else if (key == "rho") p.rho = to_double(value, key, line_no);
            else if (key == "xi") p.xi = to_double(value, key, line_no);
            else if (key == "q0") p.q0 = to_double(value, key, line_no);
            else if (key == "delta") p.delta = static_cast<int>(to_int(value, key, line_no));
            else if (key == "ants") p.num_ants = static_cast<int>(to_int(value, key, line_no));
            else if (key == "ls") p.local_search = parse_local_search_mode(value);
            else if (key == "local_update") p.local_update_denominator = parse_local_update_denominator(value);
            else if (key == "max_iterations") p.max_iterations = to_int(value, key, line_no);
            else if (key == "max_time") p.max_time_seconds = to_double(value, key, line_no);
            else throw ParseError("unknown key '" + key + "'", line_no);
        } catch (const UsageError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (config.instances.empty()) throw ParseError("config lists no instance", 0);
    if (config.options.repeats < 1) throw ParseError("repeats must be at least 1", 0);
    if (config.options.workers < 1) throw ParseError("workers must be at least 1", 0);
    try {
        config.params.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    try {
        return parse_experiment_config(read_text_file(path), path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.string(), e);
    }
}

}  // namespace hacs
