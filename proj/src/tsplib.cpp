#include "hacs/tsplib.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace hacs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

struct Token {
    std::string_view text;
    int line = 0;
};

// Walks the file line by line; sections consume whitespace-separated tokens
// that may span several lines.
class Cursor {
public:
    explicit Cursor(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines_.push_back(line);
            if (end == text.size()) break;
            start = end + 1;
        }
    }

    bool at_end() const { return line_ >= lines_.size(); }
    int line_number() const { return static_cast<int>(line_) + 1; }

    // Rest of the current line, advancing to the next line.
    std::string_view take_line() {
        std::string_view rest = lines_[line_].substr(std::min(col_, lines_[line_].size()));
        ++line_;
        col_ = 0;
        return rest;
    }

    std::optional<Token> next_token() {
        while (line_ < lines_.size()) {
            std::string_view line = lines_[line_];
            while (col_ < line.size() && std::isspace(static_cast<unsigned char>(line[col_]))) ++col_;
            if (col_ >= line.size()) {
                ++line_;
                col_ = 0;
                continue;
            }
            std::size_t begin = col_;
            while (col_ < line.size() && !std::isspace(static_cast<unsigned char>(line[col_]))) ++col_;
            return Token{line.substr(begin, col_ - begin), static_cast<int>(line_) + 1};
        }
        return std::nullopt;
    }

    Token expect_token(std::string_view what) {
        auto token = next_token();
        if (!token) {
            throw ParseError("unexpected end of file while reading " + std::string(what),
                             static_cast<int>(lines_.size()));
        }
        return *token;
    }

    // Section data must end on a line boundary.
    void finish_section(std::string_view section) {
        if (line_ >= lines_.size()) return;
        if (!trim(lines_[line_].substr(std::min(col_, lines_[line_].size()))).empty()) {
            throw ParseError("trailing data after " + std::string(section), line_number());
        }
        ++line_;
        col_ = 0;
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t line_ = 0;
    std::size_t col_ = 0;
};

long long to_integer(const Token& token, std::string_view what) {
    long long value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        // Explicit matrices occasionally carry integral values written as "12.0".
        double d = 0.0;
        auto [dptr, dec] = std::from_chars(first, last, d);
        if (dec == std::errc() && dptr == last && std::floor(d) == d && std::abs(d) < 9e15) {
            return static_cast<long long>(d);
        }
        throw ParseError("expected an integer " + std::string(what) + ", got '" +
                             std::string(token.text) + "'",
                         token.line);
    }
    return value;
}

double to_real(const Token& token, std::string_view what) {
    double value = 0.0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ParseError("expected a number " + std::string(what) + ", got '" +
                             std::string(token.text) + "'",
                         token.line);
    }
    return value;
}

int parse_count(std::string_view value, std::string_view key, int line) {
    Token token{trim(value), line};
    if (token.text.empty()) throw ParseError(std::string(key) + " has no value", line);
    long long v = to_integer(token, key);
    if (v <= 0 || v > 10'000'000) {
        throw ParseError(std::string(key) + " must be a positive count, got " + std::to_string(v), line);
    }
    return static_cast<int>(v);
}

EdgeWeightType parse_edge_weight_type(std::string_view value, int line) {
    const std::string v = upper(trim(value));
    if (v == "EUC_2D") return EdgeWeightType::euc_2d;
    if (v == "CEIL_2D") return EdgeWeightType::ceil_2d;
    if (v == "GEO") return EdgeWeightType::geo;
    if (v == "ATT") return EdgeWeightType::att;
    if (v == "EXPLICIT") return EdgeWeightType::explicit_matrix;
    throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + std::string(trim(value)) + "'", line);
}

Distance nint(double x) { return static_cast<Distance>(x + 0.5); }

// TSPLIB geographical latitude/longitude in radians.
double geo_radians(double coordinate) {
    constexpr double pi = 3.141592;
    const double degrees = std::trunc(coordinate);
    const double minutes = coordinate - degrees;
    return pi * (degrees + 5.0 * minutes / 3.0) / 180.0;
}

struct ParsedFile {
    TspData tsp;
    std::optional<int> declared_sets;
    std::optional<std::vector<std::vector<NodeId>>> sets;
};

void read_explicit_weights(Cursor& cursor, TspData& tsp, const std::string& format, int section_line) {
    const int n = tsp.dimension;
    tsp.explicit_matrix.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int i, int j) -> Distance& {
        return tsp.explicit_matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(j)];
    };
    auto read = [&](int i, int j) {
        Token token = cursor.expect_token("EDGE_WEIGHT_SECTION");
        long long v = to_integer(token, "edge weight");
        if (v < 0 || v > 1'000'000'000) {
            throw ParseError("edge weight out of range: " + std::to_string(v), token.line);
        }
        at(i, j) = static_cast<Distance>(v);
        at(j, i) = static_cast<Distance>(v);
        return token;
    };

    if (format == "FULL_MATRIX") {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Token token = cursor.expect_token("EDGE_WEIGHT_SECTION");
                long long v = to_integer(token, "edge weight");
                if (v < 0 || v > 1'000'000'000) {
                    throw ParseError("edge weight out of range: " + std::to_string(v), token.line);
                }
                at(i, j) = static_cast<Distance>(v);
                if (j < i && at(j, i) != at(i, j)) {
                    throw ParseError("FULL_MATRIX is asymmetric at (" + std::to_string(j + 1) + ", " +
                                         std::to_string(i + 1) + "); only symmetric instances are supported",
                                     token.line);
                }
            }
        }
    } else if (format == "UPPER_ROW" || format == "LOWER_COL") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) read(i, j);
    } else if (format == "LOWER_ROW" || format == "UPPER_COL") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) read(i, j);
    } else if (format == "UPPER_DIAG_ROW" || format == "LOWER_DIAG_COL") {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) read(i, j);
    } else if (format == "LOWER_DIAG_ROW" || format == "UPPER_DIAG_COL") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) read(i, j);
    } else if (format.empty()) {
        throw ParseError("EDGE_WEIGHT_SECTION requires EDGE_WEIGHT_FORMAT", section_line);
    } else {
        throw ParseError("unsupported EDGE_WEIGHT_FORMAT '" + format + "'", section_line);
    }
    for (int i = 0; i < n; ++i) at(i, i) = 0;
}

ParsedFile parse_file(std::string_view text) {
    ParsedFile out;
    TspData& tsp = out.tsp;
    Cursor cursor(text);

    bool have_dimension = false;
    bool have_type = false;
    bool have_coords = false;
    bool have_weights = false;
    std::string weight_format;

    auto require_dimension = [&](std::string_view section, int line) {
        if (!have_dimension) {
            throw ParseError(std::string(section) + " appears before DIMENSION", line);
        }
    };

    while (!cursor.at_end()) {
        const int line_no = cursor.line_number();
        const std::string_view line = trim(cursor.take_line());
        if (line.empty()) continue;

        std::string_view key;
        std::string_view value;
        if (auto colon = line.find(':'); colon != std::string_view::npos) {
            key = trim(line.substr(0, colon));
            value = trim(line.substr(colon + 1));
        } else {
            auto space = line.find_first_of(" \t");
            key = line.substr(0, space);
            value = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
        }
        const std::string k = upper(key);

        if (k == "EOF") break;
        if (k == "NAME") {
            tsp.name = std::string(value);
        } else if (k == "COMMENT") {
            if (!tsp.comment.empty()) tsp.comment += ' ';
            tsp.comment += std::string(value);
        } else if (k == "TYPE") {
            const std::string t = upper(value);
            if (t != "TSP" && t != "GTSP") {
                throw ParseError("unsupported TYPE '" + std::string(value) +
                                     "'; only symmetric TSP/GTSP files are supported",
                                 line_no);
            }
        } else if (k == "DIMENSION") {
            tsp.dimension = parse_count(value, "DIMENSION", line_no);
            have_dimension = true;
        } else if (k == "GTSP_SETS") {
            out.declared_sets = parse_count(value, "GTSP_SETS", line_no);
        } else if (k == "EDGE_WEIGHT_TYPE") {
            tsp.edge_weight_type = parse_edge_weight_type(value, line_no);
            have_type = true;
        } else if (k == "EDGE_WEIGHT_FORMAT") {
            weight_format = upper(value);
        } else if (k == "NODE_COORD_TYPE" || k == "DISPLAY_DATA_TYPE" || k == "CAPACITY") {
            // informational only
        } else if (k == "NODE_COORD_SECTION") {
            require_dimension(k, line_no);
            tsp.coords.assign(static_cast<std::size_t>(tsp.dimension), Point{});
            std::vector<bool> seen(static_cast<std::size_t>(tsp.dimension), false);
            for (int r = 0; r < tsp.dimension; ++r) {
                Token id_token = cursor.expect_token("NODE_COORD_SECTION");
                long long id = to_integer(id_token, "node id");
                if (id < 1 || id > tsp.dimension) {
                    throw ParseError("node id " + std::to_string(id) + " outside 1.." +
                                         std::to_string(tsp.dimension) + " (dimension mismatch)",
                                     id_token.line);
                }
                if (seen[static_cast<std::size_t>(id - 1)]) {
                    throw ParseError("duplicate coordinates for node " + std::to_string(id), id_token.line);
                }
                seen[static_cast<std::size_t>(id - 1)] = true;
                Point p;
                p.x = to_real(cursor.expect_token("NODE_COORD_SECTION"), "coordinate");
                p.y = to_real(cursor.expect_token("NODE_COORD_SECTION"), "coordinate");
                tsp.coords[static_cast<std::size_t>(id - 1)] = p;
            }
            cursor.finish_section("NODE_COORD_SECTION");
            have_coords = true;
        } else if (k == "DISPLAY_DATA_SECTION") {
            require_dimension(k, line_no);
            for (int r = 0; r < 3 * tsp.dimension; ++r) cursor.expect_token("DISPLAY_DATA_SECTION");
            cursor.finish_section("DISPLAY_DATA_SECTION");
        } else if (k == "FIXED_EDGES_SECTION") {
            while (true) {
                Token token = cursor.expect_token("FIXED_EDGES_SECTION");
                if (token.text == "-1") break;
            }
            cursor.finish_section("FIXED_EDGES_SECTION");
        } else if (k == "EDGE_WEIGHT_SECTION") {
            require_dimension(k, line_no);
            read_explicit_weights(cursor, tsp, weight_format, line_no);
            cursor.finish_section("EDGE_WEIGHT_SECTION");
            have_weights = true;
        } else if (k == "GTSP_SET_SECTION") {
            require_dimension(k, line_no);
            if (!out.declared_sets) {
                throw ParseError("GTSP_SET_SECTION appears before GTSP_SETS", line_no);
            }
            const int m = *out.declared_sets;
            std::vector<std::vector<NodeId>> sets(static_cast<std::size_t>(m));
            std::vector<bool> seen(static_cast<std::size_t>(m), false);
            for (int r = 0; r < m; ++r) {
                Token index_token = cursor.expect_token("GTSP_SET_SECTION");
                if (index_token.text == "EOF") {
                    throw ParseError("GTSP_SET_SECTION lists " + std::to_string(r) +
                                         " sets but GTSP_SETS declares " + std::to_string(m),
                                     index_token.line);
                }
                long long index = to_integer(index_token, "set index");
                if (index < 1 || index > m) {
                    throw ParseError("set index " + std::to_string(index) + " outside 1.." +
                                         std::to_string(m) + " (set count mismatch)",
                                     index_token.line);
                }
                if (seen[static_cast<std::size_t>(index - 1)]) {
                    throw ParseError("set " + std::to_string(index) + " listed twice", index_token.line);
                }
                seen[static_cast<std::size_t>(index - 1)] = true;
                auto& members = sets[static_cast<std::size_t>(index - 1)];
                while (true) {
                    Token token = cursor.expect_token("GTSP_SET_SECTION");
                    long long node = to_integer(token, "node id");
                    if (node == -1) break;
                    if (node < 1 || node > tsp.dimension) {
                        throw ParseError("node " + std::to_string(node) + " in set " + std::to_string(index) +
                                             " outside 1.." + std::to_string(tsp.dimension),
                                         token.line);
                    }
                    members.push_back(static_cast<NodeId>(node - 1));
                }
            }
            cursor.finish_section("GTSP_SET_SECTION");
            out.sets = std::move(sets);
        } else {
            throw ParseError("unknown keyword '" + std::string(key) + "'", line_no);
        }
    }

    if (!have_dimension) throw ParseError("missing DIMENSION", 0);
    if (!have_type) throw ParseError("missing EDGE_WEIGHT_TYPE", 0);
    if (tsp.edge_weight_type == EdgeWeightType::explicit_matrix) {
        if (!have_weights) throw ParseError("EXPLICIT instance without EDGE_WEIGHT_SECTION", 0);
        tsp.coords.clear();
    } else if (!have_coords) {
        throw ParseError("missing NODE_COORD_SECTION", 0);
    }
    if (out.declared_sets && !out.sets) throw ParseError("GTSP_SETS declared but no GTSP_SET_SECTION", 0);
    return out;
}

std::string format_real(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

std::string_view to_string(EdgeWeightType type) noexcept {
    switch (type) {
        case EdgeWeightType::euc_2d: return "EUC_2D";
        case EdgeWeightType::ceil_2d: return "CEIL_2D";
        case EdgeWeightType::geo: return "GEO";
        case EdgeWeightType::att: return "ATT";
        case EdgeWeightType::explicit_matrix: return "EXPLICIT";
    }
    return "UNKNOWN";
}

Distance TspData::distance(NodeId i, NodeId j) const {
    if (i == j) return 0;
    if (edge_weight_type == EdgeWeightType::explicit_matrix) {
        return explicit_matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(dimension) +
                               static_cast<std::size_t>(j)];
    }
    const Point& a = coords[static_cast<std::size_t>(i)];
    const Point& b = coords[static_cast<std::size_t>(j)];
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    switch (edge_weight_type) {
        case EdgeWeightType::euc_2d:
            return nint(std::sqrt(dx * dx + dy * dy));
        case EdgeWeightType::ceil_2d:
            return static_cast<Distance>(std::ceil(std::sqrt(dx * dx + dy * dy)));
        case EdgeWeightType::att: {
            const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
            const Distance t = nint(r);
            return t < r ? t + 1 : t;
        }
        case EdgeWeightType::geo: {
            constexpr double earth_radius = 6378.388;
            const double lat_a = geo_radians(a.x);
            const double lon_a = geo_radians(a.y);
            const double lat_b = geo_radians(b.x);
            const double lon_b = geo_radians(b.y);
            const double q1 = std::cos(lon_a - lon_b);
            const double q2 = std::cos(lat_a - lat_b);
            const double q3 = std::cos(lat_a + lat_b);
            return static_cast<Distance>(
                earth_radius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
        }
        case EdgeWeightType::explicit_matrix:
            break;
    }
    return 0;
}

std::vector<Distance> TspData::distance_matrix() const {
    const auto n = static_cast<std::size_t>(dimension);
    if (edge_weight_type == EdgeWeightType::explicit_matrix) return explicit_matrix;
    std::vector<Distance> matrix(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Distance d = distance(static_cast<NodeId>(i), static_cast<NodeId>(j));
            matrix[i * n + j] = d;
            matrix[j * n + i] = d;
        }
    }
    return matrix;
}

TspData parse_tsplib(std::string_view text) { return parse_file(text).tsp; }

GtspFile parse_gtsp_file(std::string_view text) {
    ParsedFile parsed = parse_file(text);
    if (!parsed.sets) throw ParseError("not a clustered GTSP file: missing GTSP_SETS", 0);
    return GtspFile{std::move(parsed.tsp), std::move(*parsed.sets)};
}

GtspInstance parse_gtsp(std::string_view text) {
    GtspFile file = parse_gtsp_file(text);
    std::string name = file.tsp.name;
    if (name.empty()) {
        name = std::to_string(file.sets.size()) + "gtsp" + std::to_string(file.tsp.dimension);
    }
    return GtspInstance(std::move(name), std::move(file.sets), file.tsp.distance_matrix());
}

bool looks_like_gtsp(std::string_view text) {
    return upper(text).find("GTSP_SETS") != std::string::npos;
}

std::string write_gtsp(const TspData& tsp, const GtspInstance& instance) {
    if (tsp.dimension != instance.node_count()) {
        throw ValidationError("geometry has " + std::to_string(tsp.dimension) + " nodes, instance has " +
                              std::to_string(instance.node_count()));
    }
    std::ostringstream out;
    out << "NAME : " << instance.name() << '\n';
    out << "TYPE : GTSP\n";
    if (!tsp.comment.empty()) out << "COMMENT : " << tsp.comment << '\n';
    out << "DIMENSION : " << tsp.dimension << '\n';
    out << "GTSP_SETS : " << instance.cluster_count() << '\n';
    out << "EDGE_WEIGHT_TYPE : " << to_string(tsp.edge_weight_type) << '\n';
    if (tsp.has_coordinates()) {
        out << "NODE_COORD_SECTION\n";
        for (int i = 0; i < tsp.dimension; ++i) {
            const Point& p = tsp.coords[static_cast<std::size_t>(i)];
            out << i + 1 << ' ' << format_real(p.x) << ' ' << format_real(p.y) << '\n';
        }
    } else {
        out << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
        out << "EDGE_WEIGHT_SECTION\n";
        for (int i = 0; i < tsp.dimension; ++i) {
            for (int j = 0; j < tsp.dimension; ++j) {
                if (j > 0) out << ' ';
                out << tsp.distance(i, j);
            }
            out << '\n';
        }
    }
    out << "GTSP_SET_SECTION\n";
    for (ClusterId c = 0; c < instance.cluster_count(); ++c) {
        out << c + 1;
        for (NodeId v : instance.cluster(c)) out << ' ' << v + 1;
        out << " -1\n";
    }
    out << "EOF\n";
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GtspInstance load_gtsp(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_gtsp(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string(), e);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace hacs
