#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shelfplan/core.hpp"
#include "shelfplan/engine.hpp"

namespace shelfplan {

/// Styling knobs for the SVG outputs. Defaults render a 10x10 grid at
/// 500x500 pixels. All fields are pinned so renders stay byte-deterministic.
struct RenderSpec {
    int cell_px = 50;
    std::string shelf_fill = "#37474f";
    std::string corridor_fill = "#eceff1";
    std::string grid_line_stroke = "#b0bec5";
    bool show_grid_lines = true;
    int chart_width = 640;
    int chart_height = 400;
};

/// Malformed ASCII grid text; carries a 1-based line/column position.
class GridParseError : public std::runtime_error {
public:
    GridParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Shortest decimal text that parses back to exactly the same double.
/// Locale-independent.
std::string format_double(double value);

/// '0'/'1' characters, single-space separated, one LF-terminated line per row.
std::string ascii_render(const GridMap& grid);

/// Inverse of ascii_render. Accepts any {0, 1, space} arrangement with
/// equal-length rows; anything else throws GridParseError.
GridMap parse_ascii_grid(std::string_view text);

/// Standalone SVG: one filled rect per shelf cell on a corridor-colored
/// canvas, optional grid lines on top.
std::string svg_render(const GridMap& grid, const RenderSpec& spec = {});

/// `generation,best,mean,min` header plus one row per record.
std::string stats_csv(std::span<const GenerationStats> stats);

/// Line chart of the best/mean/min trajectories (needs >= 2 records).
/// The three polylines carry id="best" / id="mean" / id="min".
std::string fitness_chart_svg(std::span<const GenerationStats> stats, const RenderSpec& spec = {});

}  // namespace shelfplan
