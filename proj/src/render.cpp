#include "shelfplan/render.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <vector>

namespace shelfplan {

std::string format_double(double value) {
    char buffer[64];
    const auto out = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, out.ptr);
}

std::string ascii_render(const GridMap& grid) {
    std::string text;
    text.reserve(static_cast<std::size_t>(grid.height()) *
                 (static_cast<std::size_t>(grid.width()) * 2));
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (x > 0) text.push_back(' ');
            text.push_back(grid.shelf_at(x, y) ? '1' : '0');
        }
        text.push_back('\n');
    }
    return text;
}

GridMap parse_ascii_grid(std::string_view text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        ++line_no;
        const std::size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<std::uint8_t> cells;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (c == ' ') continue;
            if (c == '0' || c == '1') {
                cells.push_back(c == '1' ? 1 : 0);
                continue;
            }
            throw GridParseError(std::string("unexpected character '") + c +
                                     "' (expected '0', '1' or space)",
                                 line_no, static_cast<int>(i) + 1);
        }
        if (cells.empty()) throw GridParseError("empty row", line_no, 1);
        if (!rows.empty() && cells.size() != rows.front().size())
            throw GridParseError("row has " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(rows.front().size()),
                                 line_no, 1);
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw GridParseError("empty grid", 1, 1);

    GridMap grid(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
                grid.set_shelf(x, y);
    return grid;
}

std::string svg_render(const GridMap& grid, const RenderSpec& spec) {
    const int canvas_w = grid.width() * spec.cell_px;
    const int canvas_h = grid.height() * spec.cell_px;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(canvas_w) +
           "\" height=\"" + std::to_string(canvas_h) + "\" viewBox=\"0 0 " +
           std::to_string(canvas_w) + " " + std::to_string(canvas_h) +
           "\" style=\"background-color:" + spec.corridor_fill + "\">\n";

    // one rect per shelf cell; corridors stay the canvas background
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.shelf_at(x, y)) continue;
            svg += "  <rect x=\"" + std::to_string(x * spec.cell_px) + "\" y=\"" +
                   std::to_string(y * spec.cell_px) + "\" width=\"" + std::to_string(spec.cell_px) +
                   "\" height=\"" + std::to_string(spec.cell_px) + "\" fill=\"" + spec.shelf_fill +
                   "\"/>\n";
        }
    }

    if (spec.show_grid_lines) {
        svg += "  <g stroke=\"" + spec.grid_line_stroke + "\" stroke-width=\"1\">\n";
        for (int x = 0; x <= grid.width(); ++x) {
            const std::string px = std::to_string(x * spec.cell_px);
            svg += "    <line x1=\"" + px + "\" y1=\"0\" x2=\"" + px + "\" y2=\"" +
                   std::to_string(canvas_h) + "\"/>\n";
        }
        for (int y = 0; y <= grid.height(); ++y) {
            const std::string py = std::to_string(y * spec.cell_px);
            svg += "    <line x1=\"0\" y1=\"" + py + "\" x2=\"" + std::to_string(canvas_w) +
                   "\" y2=\"" + py + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

std::string stats_csv(std::span<const GenerationStats> stats) {
    if (stats.empty()) throw std::invalid_argument("stats_csv: no records");
    std::string out = "generation,best,mean,min\n";
    for (const GenerationStats& record : stats) {
        out += std::to_string(record.generation);
        out += ',';
        out += format_double(record.best);
        out += ',';
        out += format_double(record.mean);
        out += ',';
        out += format_double(record.min);
        out += '\n';
    }
    return out;
}

std::string fitness_chart_svg(std::span<const GenerationStats> stats, const RenderSpec& spec) {
    if (stats.size() < 2)
        throw std::invalid_argument("fitness_chart_svg: need at least 2 records");

    constexpr double kMarginLeft = 56.0;
    constexpr double kMarginRight = 16.0;
    constexpr double kMarginTop = 18.0;
    constexpr double kMarginBottom = 42.0;
    const double plot_w = spec.chart_width - kMarginLeft - kMarginRight;
    const double plot_h = spec.chart_height - kMarginTop - kMarginBottom;

    double value_min = stats.front().min;
    double value_max = stats.front().best;
    for (const GenerationStats& record : stats) {
        value_min = std::min(value_min, record.min);
        value_max = std::max(value_max, record.best);
    }
    const double value_span = value_max - value_min;
    const double gen_first = stats.front().generation;
    const double gen_last = stats.back().generation;
    const double gen_span = gen_last - gen_first;

    const auto x_of = [&](double generation) {
        const double t = gen_span > 0.0 ? (generation - gen_first) / gen_span : 0.0;
        return kMarginLeft + t * plot_w;
    };
    const auto y_of = [&](double value) {
        const double t = value_span > 0.0 ? 1.0 - (value - value_min) / value_span : 0.5;
        return kMarginTop + t * plot_h;
    };

    struct Series {
        const char* id;
        const char* stroke;
        double GenerationStats::*field;
    };
    constexpr Series kSeries[] = {
        {"best", "#2e7d32", &GenerationStats::best},
        {"mean", "#1565c0", &GenerationStats::mean},
        {"min", "#c62828", &GenerationStats::min},
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(spec.chart_width) + "\" height=\"" + std::to_string(spec.chart_height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.chart_width) + " " +
           std::to_string(spec.chart_height) + "\" style=\"background-color:#ffffff\">\n";

    // axes
    const std::string x0 = format_double(kMarginLeft);
    const std::string y0 = format_double(kMarginTop + plot_h);
    const std::string x1 = format_double(kMarginLeft + plot_w);
    const std::string y_top = format_double(kMarginTop);
    svg += "  <g stroke=\"#444444\" stroke-width=\"1\">\n";
    svg += "    <line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
    svg += "    <line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y_top +
           "\"/>\n";
    svg += "  </g>\n";

    for (const Series& series : kSeries) {
        svg += "  <polyline id=\"";
        svg += series.id;
        svg += "\" fill=\"none\" stroke=\"";
        svg += series.stroke;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < stats.size(); ++i) {
            if (i > 0) svg += ' ';
            svg += format_double(x_of(stats[i].generation));
            svg += ',';
            svg += format_double(y_of(stats[i].*(series.field)));
        }
        svg += "\"/>\n";
    }

    // tick and series labels
    svg += "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\">\n";
    svg += "    <text x=\"" + x0 + "\" y=\"" + format_double(kMarginTop + plot_h + 16.0) +
           "\" text-anchor=\"middle\">" + format_double(gen_first) + "</text>\n";
    svg += "    <text x=\"" + x1 + "\" y=\"" + format_double(kMarginTop + plot_h + 16.0) +
           "\" text-anchor=\"middle\">" + format_double(gen_last) + "</text>\n";
    svg += "    <text x=\"" + format_double(kMarginLeft - 6.0) + "\" y=\"" +
           format_double(kMarginTop + plot_h + 4.0) + "\" text-anchor=\"end\">" +
           format_double(value_min) + "</text>\n";
    svg += "    <text x=\"" + format_double(kMarginLeft - 6.0) + "\" y=\"" +
           format_double(kMarginTop + 4.0) + "\" text-anchor=\"end\">" + format_double(value_max) +
           "</text>\n";
    svg += "    <text x=\"" + format_double(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
           format_double(static_cast<double>(spec.chart_height) - 8.0) +
           "\" text-anchor=\"middle\">generation</text>\n";
    svg += "    <text x=\"14\" y=\"" + format_double(kMarginTop + plot_h / 2.0) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           format_double(kMarginTop + plot_h / 2.0) + ")\">fitness</text>\n";
    double legend_x = kMarginLeft + plot_w;
    for (const Series& series : kSeries) {
        svg += "    <text x=\"" + format_double(legend_x) + "\" y=\"" +
               format_double(kMarginTop - 6.0) + "\" text-anchor=\"end\" fill=\"";
        svg += series.stroke;
        svg += "\">";
        svg += series.id;
        svg += "</text>\n";
        legend_x -= 44.0;
    }
    svg += "  </g>\n";

    svg += "</svg>\n";
    return svg;
}

}  // namespace shelfplan
