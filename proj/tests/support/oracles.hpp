#pragma once

// Test-only reference implementations. Everything here is written from
// first principles (plain BFS, straight-line arithmetic) and must stay
// independent of the library code paths it is used to check.

#include <cstdlib>
#include <deque>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "shelfplan/core.hpp"
#include "shelfplan/rng.hpp"

namespace shelfplan::oracle {

struct BfsResult {
    bool found = false;
    int cost = -1;
};

// breadth-first shortest path over corridor cells, 4-connected
inline BfsResult bfs_shortest_path(const GridMap& grid, Point start, Point goal) {
    if (!grid.in_bounds(start) || !grid.in_bounds(goal)) return {};
    if (grid.shelf_at(start) || grid.shelf_at(goal)) return {};

    const int width = grid.width();
    std::vector<int> dist(static_cast<std::size_t>(width) * grid.height(), -1);
    std::deque<Point> queue;
    dist[static_cast<std::size_t>(start.y) * width + start.x] = 0;
    queue.push_back(start);

    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    while (!queue.empty()) {
        const Point here = queue.front();
        queue.pop_front();
        const int here_dist = dist[static_cast<std::size_t>(here.y) * width + here.x];
        if (here == goal) return {true, here_dist};
        for (int dir = 0; dir < 4; ++dir) {
            const Point next{here.x + dx[dir], here.y + dy[dir]};
            if (!grid.in_bounds(next) || grid.shelf_at(next)) continue;
            int& next_dist = dist[static_cast<std::size_t>(next.y) * width + next.x];
            if (next_dist >= 0) continue;
            next_dist = here_dist + 1;
            queue.push_back(next);
        }
    }
    return {};
}

// corridor cells reachable from seed; all-false when seed is a shelf
inline std::vector<char> corridor_component(const GridMap& grid, Point seed) {
    const int width = grid.width();
    std::vector<char> member(static_cast<std::size_t>(width) * grid.height(), 0);
    if (!grid.in_bounds(seed) || grid.shelf_at(seed)) return member;

    std::deque<Point> queue{seed};
    member[static_cast<std::size_t>(seed.y) * width + seed.x] = 1;
    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    while (!queue.empty()) {
        const Point here = queue.front();
        queue.pop_front();
        for (int dir = 0; dir < 4; ++dir) {
            const Point next{here.x + dx[dir], here.y + dy[dir]};
            if (!grid.in_bounds(next) || grid.shelf_at(next)) continue;
            char& mark = member[static_cast<std::size_t>(next.y) * width + next.x];
            if (mark) continue;
            mark = 1;
            queue.push_back(next);
        }
    }
    return member;
}

inline bool navigable(const GridMap& grid, Point entrance, Point exit) {
    const std::vector<char> component = corridor_component(grid, entrance);
    const int width = grid.width();
    if (grid.shelf_at(exit) || !component[static_cast<std::size_t>(exit.y) * width + exit.x])
        return false;
    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < width; ++x) {
            if (!grid.shelf_at(x, y)) continue;
            bool touches = false;
            for (int dir = 0; dir < 4 && !touches; ++dir) {
                const Point next{x + dx[dir], y + dy[dir]};
                touches = grid.in_bounds(next) && !grid.shelf_at(next) &&
                          component[static_cast<std::size_t>(next.y) * width + next.x] != 0;
            }
            if (!touches) return false;
        }
    }
    return true;
}

// straight-line recomputation of the composite fitness from the grid
inline double total_fitness(const GridMap& grid, Point entrance, Point exit) {
    int b = 0;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (grid.shelf_at(x, y)) ++b;

    int n = 0;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.shelf_at(x, y)) continue;
            if (x + 1 < grid.width() && grid.shelf_at(x + 1, y)) ++n;
            if (y + 1 < grid.height() && grid.shelf_at(x, y + 1)) ++n;
        }

    const bool s = navigable(grid, entrance, exit);
    const double f = b / 5.0;
    const double a = s ? 0.05 : -0.5;
    const double r = n >= 5 ? 0.05 * n : (n == 0 ? 0.05 : 0.05 / n);
    return f + a + r;
}

// fixture builder: one string per row, '1' = shelf, everything else corridor
inline GridMap grid_from_rows(std::initializer_list<std::string_view> rows) {
    const int height = static_cast<int>(rows.size());
    const int width = height > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    GridMap grid(width, height);
    int y = 0;
    for (std::string_view row : rows) {
        for (int x = 0; x < width; ++x)
            if (row[static_cast<std::size_t>(x)] == '1') grid.set_shelf(x, y);
        ++y;
    }
    return grid;
}

inline GridMap random_grid(Rng& rng, int width, int height, double shelf_density) {
    GridMap grid(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (rng.chance(shelf_density)) grid.set_shelf(x, y);
    return grid;
}

}  // namespace shelfplan::oracle
