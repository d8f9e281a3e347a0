#pragma once

#include <string>

#include "hacs/instance.hpp"
#include "hacs/tsplib.hpp"

namespace hacs {

/// Geometric clustering of a TSP into m = ceil(n/5) clusters.
///
/// Centers are picked by farthest-point dispersion: the first is the node with
/// the largest total distance to all others, each next one maximizes its
/// minimum distance to the centers chosen so far (lowest id on ties). Every
/// other node joins its nearest center, lowest center index on ties.
/// The result is named "<m><base><n>", where base is the TSP name without
/// its trailing digits. Requires coordinates and n >= 10.
GtspInstance cluster_instance(const TspData& tsp);

/// "<m><base><n>" for a TSP called e.g. "d198".
std::string clustered_name(const std::string& tsp_name, int clusters, int nodes);

}  // namespace hacs
