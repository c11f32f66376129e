#pragma once

#include <vector>

#include "shelfplan/core.hpp"

namespace shelfplan {

/// Outcome of a shortest-path query over corridor cells.
struct PathResult {
    bool found = false;
    std::vector<Point> path;  ///< start..goal inclusive when found, else empty
    int cost = -1;            ///< path.size() - 1 when found, else -1
};

/// Inputs to the navigability flag s: entrance-exit connectivity plus the
/// shelf cells no customer can reach.
struct NavigabilityReport {
    bool s = false;
    bool entrance_exit_connected = false;
    std::vector<Point> unreachable_shelf_cells;  ///< row-major order
};

/// Optimal 4-connected path over corridor (0) cells with a Manhattan
/// heuristic. found == false when either endpoint sits on a shelf or no
/// corridor path exists; out-of-bounds endpoints are an input error
/// (std::invalid_argument), distinct from an unreachable goal.
///
/// Expansion order is fully pinned: f-score ties break toward the larger
/// g-score, then toward the smaller row-major cell index, so identical
/// inputs always produce the identical path.
PathResult astar(const GridMap& grid, Point start, Point goal);

/// s is true iff the exit is reachable from the entrance over corridor cells
/// and every shelf cell touches the entrance's corridor component. A shelf
/// sitting on the entrance or exit yields s == false rather than an error,
/// so evolution can still score such layouts.
NavigabilityReport navigability(const GridMap& grid, Point entrance, Point exit);

}  // namespace shelfplan
