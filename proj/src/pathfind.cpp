#include "shelfplan/pathfind.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace shelfplan {
namespace {

constexpr int kStepDx[] = {0, -1, 1, 0};
constexpr int kStepDy[] = {-1, 0, 0, 1};

int manhattan(Point a, Point b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

struct OpenNode {
    int f = 0;
    int g = 0;
    int cell = 0;  // row-major index
};

// min-f first; ties prefer deeper nodes (larger g), then the smaller cell index
struct OpenNodeAfter {
    bool operator()(const OpenNode& lhs, const OpenNode& rhs) const {
        if (lhs.f != rhs.f) return lhs.f > rhs.f;
        if (lhs.g != rhs.g) return lhs.g < rhs.g;
        return lhs.cell > rhs.cell;
    }
};

}  // namespace

PathResult astar(const GridMap& grid, Point start, Point goal) {
    if (!grid.in_bounds(start)) throw std::invalid_argument("astar: start is outside the grid");
    if (!grid.in_bounds(goal)) throw std::invalid_argument("astar: goal is outside the grid");
    if (grid.shelf_at(start) || grid.shelf_at(goal)) return {};

    const int width = grid.width();
    const auto cell_index = [width](Point p) { return p.y * width + p.x; };

    const std::size_t cell_count =
        static_cast<std::size_t>(grid.width()) * static_cast<std::size_t>(grid.height());
    std::vector<int> best_g(cell_count, -1);
    std::vector<int> parent(cell_count, -1);
    std::vector<char> expanded(cell_count, 0);

    std::priority_queue<OpenNode, std::vector<OpenNode>, OpenNodeAfter> open;
    best_g[cell_index(start)] = 0;
    open.push({manhattan(start, goal), 0, cell_index(start)});

    const int goal_cell = cell_index(goal);
    while (!open.empty()) {
        const OpenNode node = open.top();
        open.pop();
        if (expanded[node.cell] || node.g != best_g[node.cell]) continue;  // stale entry
        expanded[node.cell] = 1;
        if (node.cell == goal_cell) break;

        const Point here{node.cell % width, node.cell / width};
        for (int dir = 0; dir < 4; ++dir) {
            const Point next{here.x + kStepDx[dir], here.y + kStepDy[dir]};
            if (!grid.in_bounds(next) || grid.shelf_at(next)) continue;
            const int next_cell = cell_index(next);
            const int g = node.g + 1;
            if (best_g[next_cell] >= 0 && best_g[next_cell] <= g) continue;
            best_g[next_cell] = g;
            parent[next_cell] = node.cell;
            open.push({g + manhattan(next, goal), g, next_cell});
        }
    }

    if (!expanded[goal_cell]) return {};

    PathResult result;
    result.found = true;
    result.cost = best_g[goal_cell];
    for (int cell = goal_cell; cell != -1; cell = parent[cell])
        result.path.push_back({cell % width, cell / width});
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

NavigabilityReport navigability(const GridMap& grid, Point entrance, Point exit) {
    if (!grid.in_bounds(entrance))
        throw std::invalid_argument("navigability: entrance is outside the grid");
    if (!grid.in_bounds(exit)) throw std::invalid_argument("navigability: exit is outside the grid");

    const int width = grid.width();
    const int height = grid.height();
    std::vector<char> reached(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);

    // corridor component of the entrance; stays empty when the entrance is a shelf
    if (!grid.shelf_at(entrance)) {
        std::vector<Point> frontier{entrance};
        reached[static_cast<std::size_t>(entrance.y) * width + entrance.x] = 1;
        while (!frontier.empty()) {
            const Point here = frontier.back();
            frontier.pop_back();
            for (int dir = 0; dir < 4; ++dir) {
                const Point next{here.x + kStepDx[dir], here.y + kStepDy[dir]};
                if (!grid.in_bounds(next) || grid.shelf_at(next)) continue;
                char& mark = reached[static_cast<std::size_t>(next.y) * width + next.x];
                if (mark) continue;
                mark = 1;
                frontier.push_back(next);
            }
        }
    }

    NavigabilityReport report;
    report.entrance_exit_connected =
        !grid.shelf_at(exit) && reached[static_cast<std::size_t>(exit.y) * width + exit.x] != 0;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (!grid.shelf_at(x, y)) continue;
            bool touches_component = false;
            for (int dir = 0; dir < 4 && !touches_component; ++dir) {
                const Point next{x + kStepDx[dir], y + kStepDy[dir]};
                touches_component = grid.in_bounds(next) && !grid.shelf_at(next) &&
                                    reached[static_cast<std::size_t>(next.y) * width + next.x] != 0;
            }
            if (!touches_component) report.unreachable_shelf_cells.push_back({x, y});
        }
    }

    report.s = report.entrance_exit_connected && report.unreachable_shelf_cells.empty();
    return report;
}

}  // namespace shelfplan
