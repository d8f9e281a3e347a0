#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hacs/instance.hpp"
#include "hacs/types.hpp"

namespace hacs {

enum class EdgeWeightType { euc_2d, ceil_2d, geo, att, explicit_matrix };

std::string_view to_string(EdgeWeightType type) noexcept;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Raw TSP data as read from a TSPLIB file, before any clustering.
struct TspData {
    std::string name;
    std::string comment;
    int dimension = 0;
    EdgeWeightType edge_weight_type = EdgeWeightType::euc_2d;
    std::vector<Point> coords;             // empty for EXPLICIT
    std::vector<Distance> explicit_matrix;  // row-major n x n, EXPLICIT only

    bool has_coordinates() const noexcept { return !coords.empty(); }

    /// Distance by the TSPLIB rule of the edge-weight type (nint for EUC_2D).
    Distance distance(NodeId i, NodeId j) const;

    /// Full symmetric n x n matrix, zero diagonal.
    std::vector<Distance> distance_matrix() const;
};

/// Parses TSPLIB text with EDGE_WEIGHT_TYPE EUC_2D, CEIL_2D, GEO, ATT or EXPLICIT.
/// Throws ParseError naming the offending line.
TspData parse_tsplib(std::string_view text);

/// Parses a clustered GTSP file: TSPLIB plus "GTSP_SETS: m" and a
/// GTSP_SET_SECTION of "-1"-terminated set lines. Throws ParseError for
/// malformed text and ValidationError for a broken partition.
GtspInstance parse_gtsp(std::string_view text);

/// Both halves of a clustered file; `sets` holds 0-based node ids.
struct GtspFile {
    TspData tsp;
    std::vector<std::vector<NodeId>> sets;
};
GtspFile parse_gtsp_file(std::string_view text);

/// True when the text declares GTSP_SETS.
bool looks_like_gtsp(std::string_view text);

/// Serializes `instance` as a clustered GTSP file using the geometry of `tsp`
/// (coordinates when present, otherwise a FULL_MATRIX section).
std::string write_gtsp(const TspData& tsp, const GtspInstance& instance);

std::string read_text_file(const std::filesystem::path& path);

/// Loads a clustered GTSP file from disk. Error messages are prefixed with the path.
GtspInstance load_gtsp(const std::filesystem::path& path);

}  // namespace hacs
