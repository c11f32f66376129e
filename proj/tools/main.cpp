// shelfplan command line: evolve shelf layouts, score existing ones, and
// render layout files to SVG.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "shelfplan/engine.hpp"
#include "shelfplan/render.hpp"

namespace fs = std::filesystem;
using namespace shelfplan;

namespace {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Formats {
    bool ascii = true;
    bool svg = true;
    bool csv = true;
    bool chart = true;
};

struct OutputOptions {
    fs::path dir = "out";
    int snapshot_every = 0;  // 0 = first and last generation only
    int top_k = 1;
    Formats formats;
    bool force = false;
};

Point parse_point(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a coordinate like 3,4 but got '" + text + "'");
    try {
        std::size_t used = 0;
        const int x = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        const std::string rest = text.substr(comma + 1);
        const int y = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {x, y};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a coordinate like 3,4 but got '" + text + "'");
    }
}

RMode parse_r_mode(const std::string& text) {
    if (text == "paper") return RMode::paper;
    if (text == "inverted") return RMode::inverted;
    throw std::invalid_argument("r-mode must be 'paper' or 'inverted', got '" + text + "'");
}

Formats parse_formats(const std::vector<std::string>& names) {
    if (names.empty()) return {};
    Formats formats{false, false, false, false};
    for (const std::string& name : names) {
        if (name == "ascii")
            formats.ascii = true;
        else if (name == "svg")
            formats.svg = true;
        else if (name == "csv")
            formats.csv = true;
        else if (name == "chart")
            formats.chart = true;
        else
            throw std::invalid_argument("unknown format '" + name +
                                        "' (expected ascii, svg, csv or chart)");
    }
    return formats;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed reading " + path.string());
    return content;
}

void write_file(const fs::path& path, const std::string& content, bool force) {
    if (!force && fs::exists(path))
        throw IoError(path.string() + " already exists (pass --force to overwrite)");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("short write to " + path.string());
}

Point point_from_json(const nlohmann::json& value, const std::string& key) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
        !value[1].is_number_integer())
        throw std::invalid_argument("config key '" + key + "' must be an [x, y] pair");
    return {value[0].get<int>(), value[1].get<int>()};
}

// JSON config file; flags still win afterwards
void apply_config_file(const fs::path& path, RunConfig& config, bool& exit_given,
                       bool& max_length_given) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument(path.string() + ": expected a JSON object");

    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "grid_width")
                config.grid_width = value.get<int>();
            else if (key == "grid_height")
                config.grid_height = value.get<int>();
            else if (key == "num_blocks")
                config.num_blocks = value.get<int>();
            else if (key == "max_block_length") {
                config.max_block_length = value.get<int>();
                max_length_given = true;
            } else if (key == "population_size")
                config.population_size = value.get<int>();
            else if (key == "generations")
                config.generations = value.get<int>();
            else if (key == "crossover_prob")
                config.crossover_prob = value.get<double>();
            else if (key == "mutation_prob")
                config.mutation_prob = value.get<double>();
            else if (key == "elite_count")
                config.elite_count = value.get<int>();
            else if (key == "entrance")
                config.entrance = point_from_json(value, key);
            else if (key == "exit") {
                config.exit = point_from_json(value, key);
                exit_given = true;
            } else if (key == "r_mode")
                config.r_mode = parse_r_mode(value.get<std::string>());
            else if (key == "rng_seed")
                config.rng_seed = value.get<std::uint64_t>();
            else
                throw std::invalid_argument("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void print_breakdown(std::ostream& out, const FitnessBreakdown& fb) {
    out << "b     = " << fb.b << '\n';
    out << "s     = " << (fb.s ? "true" : "false") << '\n';
    out << "n     = " << fb.n << '\n';
    out << "f     = " << format_double(fb.f) << '\n';
    out << "a     = " << format_double(fb.a) << '\n';
    out << "r     = " << format_double(fb.r) << '\n';
    out << "total = " << format_double(fb.total) << '\n';
}

std::vector<int> snapshot_generations(int last, int every) {
    std::vector<int> generations{0};
    if (every > 0)
        for (int g = every; g < last; g += every) generations.push_back(g);
    if (last > 0) generations.push_back(last);
    return generations;
}

// best-first final individuals, de-duplicated by rasterized layout
std::vector<const Individual*> top_distinct(const Population& population, const RunConfig& config,
                                            int top_k) {
    std::vector<std::size_t> order(population.individuals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return population.individuals[lhs].fitness->total >
               population.individuals[rhs].fitness->total;
    });

    std::vector<const Individual*> winners;
    std::set<std::string> seen_layouts;
    for (const std::size_t index : order) {
        const Individual& individual = population.individuals[index];
        const GridMap grid = rasterize(individual.genes, config.grid_width, config.grid_height);
        if (!seen_layouts.insert(ascii_render(grid)).second) continue;
        winners.push_back(&individual);
        if (static_cast<int>(winners.size()) == top_k) break;
    }
    return winners;
}

int cmd_run(const RunConfig& config, const OutputOptions& options) {
    if (const auto problem = validate_config(config)) {
        std::cerr << "error: " << *problem << '\n';
        return 2;
    }

    const RunResult result = run(config);

    fs::create_directories(options.dir);
    const RenderSpec spec;

    if (options.formats.csv)
        write_file(options.dir / "stats.csv", stats_csv(result.stats), options.force);
    if (options.formats.chart && result.stats.size() >= 2)
        write_file(options.dir / "fitness.svg", fitness_chart_svg(result.stats, spec),
                   options.force);

    for (const int g : snapshot_generations(config.generations, options.snapshot_every)) {
        const GridMap grid =
            rasterize(result.stats[static_cast<std::size_t>(g)].best_individual.genes,
                      config.grid_width, config.grid_height);
        const std::string stem = "gen_" + std::to_string(g);
        if (options.formats.ascii)
            write_file(options.dir / (stem + ".txt"), ascii_render(grid), options.force);
        if (options.formats.svg)
            write_file(options.dir / (stem + ".svg"), svg_render(grid, spec), options.force);
    }

    const std::vector<const Individual*> winners =
        top_distinct(result.population, config, options.top_k);
    for (std::size_t i = 0; i < winners.size(); ++i) {
        const std::string stem =
            i == 0 ? std::string("final_best") : "final_best_" + std::to_string(i + 1);
        const GridMap grid = rasterize(winners[i]->genes, config.grid_width, config.grid_height);
        if (options.formats.ascii)
            write_file(options.dir / (stem + ".txt"), ascii_render(grid), options.force);
        if (options.formats.svg)
            write_file(options.dir / (stem + ".svg"), svg_render(grid, spec), options.force);
    }

    std::cout << "evolved " << config.generations << " generations, population "
              << config.population_size << ", seed " << config.rng_seed << '\n';
    std::cout << "outputs in " << options.dir.string() << '\n';
    std::cout << "final best breakdown\n";
    print_breakdown(std::cout, *winners.front()->fitness);
    return 0;
}

int cmd_evaluate(const fs::path& layout_path, const std::string& entrance_text,
                 const std::string& exit_text, RMode mode) {
    const std::string text = read_file(layout_path);
    GridMap grid;
    try {
        grid = parse_ascii_grid(text);
    } catch (const GridParseError& e) {
        std::cerr << layout_path.string() << ": error: " << e.what() << '\n';
        return 2;
    }

    const Point entrance = entrance_text.empty() ? Point{0, 0} : parse_point(entrance_text);
    const Point exit = exit_text.empty() ? Point{grid.width() - 1, grid.height() - 1}
                                         : parse_point(exit_text);
    if (!grid.in_bounds(entrance) || !grid.in_bounds(exit)) {
        std::cerr << "error: entrance/exit must lie inside the " << grid.width() << "x"
                  << grid.height() << " grid\n";
        return 2;
    }
    if (entrance == exit) {
        std::cerr << "error: entrance and exit must differ\n";
        return 2;
    }

    const NavigabilityReport report = navigability(grid, entrance, exit);
    const FitnessBreakdown fb = evaluate_grid(grid, entrance, exit, mode);
    print_breakdown(std::cout, fb);
    std::cout << "navigability\n";
    std::cout << "  entrance_exit_connected = "
              << (report.entrance_exit_connected ? "true" : "false") << '\n';
    std::cout << "  unreachable_shelf_cells = ";
    if (report.unreachable_shelf_cells.empty()) {
        std::cout << "none\n";
    } else {
        for (std::size_t i = 0; i < report.unreachable_shelf_cells.size(); ++i) {
            const Point p = report.unreachable_shelf_cells[i];
            std::cout << (i > 0 ? " " : "") << "(" << p.x << "," << p.y << ")";
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_render(const fs::path& layout_path, const fs::path& out_dir, bool force) {
    const std::string text = read_file(layout_path);
    GridMap grid;
    try {
        grid = parse_ascii_grid(text);
    } catch (const GridParseError& e) {
        std::cerr << layout_path.string() << ": error: " << e.what() << '\n';
        return 2;
    }

    fs::create_directories(out_dir);
    const fs::path target = out_dir / (layout_path.stem().string() + ".svg");
    write_file(target, svg_render(grid), force);
    std::cout << "wrote " << target.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genetic-algorithm floor planner for market shelf layouts"};
    app.require_subcommand(1);

    // run
    RunConfig flag_values;
    std::string entrance_text;
    std::string exit_text;
    std::string r_mode_text;
    std::string config_file;
    OutputOptions output;
    std::vector<std::string> format_names;
    std::string out_dir_text = "out";

    CLI::App* run_cmd = app.add_subcommand("run", "evolve a layout and write reports");
    run_cmd->add_option("--config", config_file, "JSON config file (flags still override)");
    CLI::Option* opt_grid_w =
        run_cmd->add_option("--grid-w", flag_values.grid_width, "grid width in cells");
    CLI::Option* opt_grid_h =
        run_cmd->add_option("--grid-h", flag_values.grid_height, "grid height in cells");
    CLI::Option* opt_blocks =
        run_cmd->add_option("--blocks", flag_values.num_blocks, "shelf blocks per layout");
    CLI::Option* opt_pop =
        run_cmd->add_option("--pop", flag_values.population_size, "population size");
    CLI::Option* opt_generations =
        run_cmd->add_option("--generations", flag_values.generations, "generations to evolve");
    CLI::Option* opt_cx =
        run_cmd->add_option("--cx-prob", flag_values.crossover_prob, "crossover probability");
    CLI::Option* opt_mut =
        run_cmd->add_option("--mut-prob", flag_values.mutation_prob, "per-gene mutation probability");
    CLI::Option* opt_elite =
        run_cmd->add_option("--elite", flag_values.elite_count, "individuals copied unchanged");
    CLI::Option* opt_seed = run_cmd->add_option("--seed", flag_values.rng_seed, "random seed");
    CLI::Option* opt_entrance =
        run_cmd->add_option("--entrance", entrance_text, "entrance cell as x,y");
    CLI::Option* opt_exit = run_cmd->add_option("--exit", exit_text, "exit cell as x,y");
    CLI::Option* opt_r_mode =
        run_cmd->add_option("--r-mode", r_mode_text, "adjacency reward: paper or inverted");
    run_cmd->add_option("--out-dir", out_dir_text, "output directory")->capture_default_str();
    run_cmd->add_option("--snapshot-every", output.snapshot_every,
                        "snapshot cadence in generations (0 = first and last only)")
        ->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--top-k", output.top_k, "distinct best final layouts to emit")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--formats", format_names,
                        "comma-separated subset of ascii,svg,csv,chart (default: all)")
        ->delimiter(',');
    run_cmd->add_flag("--force", output.force, "overwrite existing output files");

    // evaluate
    std::string eval_layout;
    std::string eval_entrance;
    std::string eval_exit;
    std::string eval_r_mode = "paper";
    CLI::App* eval_cmd =
        app.add_subcommand("evaluate", "score a layout file and report navigability");
    eval_cmd->add_option("layout", eval_layout, "ASCII grid file")->required();
    eval_cmd->add_option("--entrance", eval_entrance, "entrance cell as x,y (default 0,0)");
    eval_cmd->add_option("--exit", eval_exit, "exit cell as x,y (default w-1,h-1)");
    eval_cmd->add_option("--r-mode", eval_r_mode, "adjacency reward: paper or inverted");

    // render
    std::string render_layout;
    std::string render_out_dir = "out";
    bool render_force = false;
    CLI::App* render_cmd = app.add_subcommand("render", "render a layout file to SVG");
    render_cmd->add_option("layout", render_layout, "ASCII grid file")->required();
    render_cmd->add_option("--out-dir", render_out_dir, "output directory")->capture_default_str();
    render_cmd->add_flag("--force", render_force, "overwrite existing output files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            RunConfig config;
            bool exit_given = false;
            bool max_length_given = false;
            if (!config_file.empty())
                apply_config_file(config_file, config, exit_given, max_length_given);
            if (opt_grid_w->count() > 0) config.grid_width = flag_values.grid_width;
            if (opt_grid_h->count() > 0) config.grid_height = flag_values.grid_height;
            if (opt_blocks->count() > 0) config.num_blocks = flag_values.num_blocks;
            if (opt_pop->count() > 0) config.population_size = flag_values.population_size;
            if (opt_generations->count() > 0) config.generations = flag_values.generations;
            if (opt_cx->count() > 0) config.crossover_prob = flag_values.crossover_prob;
            if (opt_mut->count() > 0) config.mutation_prob = flag_values.mutation_prob;
            if (opt_elite->count() > 0) config.elite_count = flag_values.elite_count;
            if (opt_seed->count() > 0) config.rng_seed = flag_values.rng_seed;
            if (opt_entrance->count() > 0) config.entrance = parse_point(entrance_text);
            if (opt_exit->count() > 0) {
                config.exit = parse_point(exit_text);
                exit_given = true;
            }
            if (opt_r_mode->count() > 0) config.r_mode = parse_r_mode(r_mode_text);
            // doors and the block-length cap track the grid unless pinned explicitly
            if (!exit_given) config.exit = {config.grid_width - 1, config.grid_height - 1};
            if (!max_length_given) config.max_block_length = config.grid_height;

            output.dir = out_dir_text;
            output.formats = parse_formats(format_names);
            return cmd_run(config, output);
        }
        if (eval_cmd->parsed())
            return cmd_evaluate(eval_layout, eval_entrance, eval_exit, parse_r_mode(eval_r_mode));
        if (render_cmd->parsed()) return cmd_render(render_layout, render_out_dir, render_force);
    } catch (const GridParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
