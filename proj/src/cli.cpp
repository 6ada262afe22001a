#include "debox/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "debox/analysis.hpp"
#include "debox/de.hpp"
#include "debox/errors.hpp"
#include "debox/format.hpp"
#include "debox/runner.hpp"
#include "debox/svg.hpp"

namespace debox {

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw DataError("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw DataError("write to '" + path + "' failed");
}

// ---- run ----------------------------------------------------------------

struct RunArgs {
    int n = 30;
    std::int64_t budget = 300000;
    int pop_size = 0;
    double f = 0;
    double cr = 0;
    std::string mutation, crossover, strategy;
    std::uint64_t seed = 42;
    std::string objective = "f0";
};

void cmd_run(const RunArgs& a, std::ostream& out) {
    DeConfig cfg;
    cfg.pop_size = a.pop_size;
    cfg.scale_factor = a.f;
    cfg.crossover_rate = a.cr;
    cfg.mutation = mutation_from_name(a.mutation);
    cfg.crossover = crossover_from_name(a.crossover);
    cfg.strategy = strategy_from_name(a.strategy);
    cfg.budget = a.budget;
    cfg.validate();
    if (a.n < 1) throw ConfigError("--n must be >= 1");

    const Domain domain = Domain::unit(static_cast<std::size_t>(a.n));
    const Objective objective(objective_from_name(a.objective), domain);
    RngStream rng = derive_substream(a.seed, 0, 0);
    const RunRecord rec = run_de(cfg, domain, objective, rng);

    out << "seed,infeasible_count,evaluations_used,pois,best_fitness,generations\n"
        << rec.seed << ',' << rec.infeasible_count << ',' << rec.evaluations_used
        << ',' << format_real(rec.pois) << ',' << format_real(rec.best_fitness)
        << ',' << rec.generations << '\n';
}

// ---- grid ---------------------------------------------------------------

struct GridArgs {
    std::string grid_file;
    std::string out_path;
    int parallelism = 1;
    bool resume = false;
    std::optional<int> n_override;
    std::optional<std::int64_t> budget_per_dim_override;
    std::optional<int> runs_override;
    std::optional<std::uint64_t> master_seed_override;
};

void cmd_grid(const GridArgs& a, std::ostream& out, std::ostream& err) {
    GridSpec grid = load_grid(a.grid_file);
    if (a.n_override) grid.dimensionality = *a.n_override;
    if (a.budget_per_dim_override) grid.budget_per_dimension = *a.budget_per_dim_override;
    if (a.runs_override) grid.runs_per_config = *a.runs_override;
    if (a.master_seed_override) grid.master_seed = *a.master_seed_override;
    grid.validate();

    const Expansion expansion = expand(grid);
    for (const auto& rej : expansion.rejected) {
        err << "rejected config " << rej.config_id << ": " << rej.reason << '\n';
    }
    if (expansion.accepted.empty()) {
        throw ConfigError("grid expands to zero runnable configurations");
    }

    const ResultsTable table = execute(grid, a.parallelism, a.out_path, a.resume);
    std::int64_t failed = 0;
    for (const auto& row : table.rows) {
        if (row.failed()) ++failed;
    }
    out << "wrote " << table.rows.size() << " rows (" << expansion.accepted.size()
        << " configs x " << grid.runs_per_config << " runs, " << failed
        << " failed) to " << a.out_path << '\n';
}

// ---- analyze ------------------------------------------------------------

struct FilterArgs {
    std::optional<std::string> mutation, crossover, strategy;
    std::optional<int> pop_size;

    bool matches(const ResultRow& row) const {
        if (mutation && mutation_from_name(*mutation) != row.mutation) return false;
        if (crossover && crossover_from_name(*crossover) != row.crossover) return false;
        if (strategy && strategy_from_name(*strategy) != row.strategy) return false;
        if (pop_size && *pop_size != row.pop_size) return false;
        return true;
    }
};

struct ConfigSeries {
    ResultRow meta;                 // first row's configuration fields
    std::vector<ResultRow> rows;    // sorted by run_index
};

std::vector<ConfigSeries> group_by_config(const ResultsTable& table) {
    std::map<std::int64_t, ConfigSeries> groups;
    for (const auto& row : table.rows) {
        auto [it, fresh] = groups.try_emplace(row.config_id);
        if (fresh) it->second.meta = row;
        it->second.rows.push_back(row);
    }
    std::vector<ConfigSeries> out;
    out.reserve(groups.size());
    for (auto& [id, g] : groups) {
        std::sort(g.rows.begin(), g.rows.end(),
                  [](const ResultRow& a, const ResultRow& b) {
                      return a.run_index < b.run_index;
                  });
        out.push_back(std::move(g));
    }
    return out;
}

struct AnalyzeArgs {
    std::string results_path;
    FilterArgs filter;
    std::optional<std::string> out_path;
};

void cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    ResultsTable table = load(a.results_path);
    ResultsTable filtered;
    for (const auto& row : table.rows) {
        if (a.filter.matches(row)) filtered.rows.push_back(row);
    }
    if (filtered.rows.empty()) {
        throw DataError("no rows in '" + a.results_path + "' match the filter");
    }
    const auto groups = group_by_config(filtered);

    std::size_t expected_runs = 0;
    for (const auto& g : groups) expected_runs = std::max(expected_runs, g.rows.size());

    std::ostringstream body;
    body << "config_id,mutation,crossover,strategy,N,F,Cr,runs,class,min,max,"
            "mean,median,stddev,status\n";
    for (const auto& g : groups) {
        PoisSeries series;
        bool contiguous = true;
        for (std::size_t i = 0; i < g.rows.size(); ++i) {
            if (g.rows[i].run_index != static_cast<int>(i)) contiguous = false;
            if (!g.rows[i].failed()) series.values.push_back(g.rows[i].pois);
        }
        const bool complete = contiguous &&
                              g.rows.size() == expected_runs &&
                              series.values.size() == g.rows.size();
        const auto& m = g.meta;
        body << m.config_id << ',' << mutation_name(m.mutation) << ','
             << crossover_name(m.crossover) << ',' << strategy_name(m.strategy)
             << ',' << m.pop_size << ',' << format_real(m.scale_factor) << ','
             << format_real(m.crossover_rate) << ',' << series.values.size() << ',';
        if (series.values.empty()) {
            body << "-,nan,nan,nan,nan,nan";
        } else {
            const SeriesSummary s = summarize(series);
            body << color_name(classify(series)) << ',' << format_real(s.min)
                 << ',' << format_real(s.max) << ',' << format_real(s.mean)
                 << ',' << format_real(s.median) << ',' << format_real(s.stddev);
        }
        body << ',' << (complete ? "ok" : "incomplete") << '\n';
    }

    if (a.out_path) {
        write_text_file(*a.out_path, body.str());
    } else {
        out << body.str();
    }
}

// ---- plot ---------------------------------------------------------------

struct PlotArgs {
    std::string results_path;
    std::string mutation, crossover, strategy;
    int pop_size = 0;
    std::string out_path;
};

void cmd_plot(const PlotArgs& a) {
    PlotFamily family;
    family.mutation = mutation_from_name(a.mutation);
    family.crossover = crossover_from_name(a.crossover);
    family.strategy = strategy_from_name(a.strategy);
    family.pop_size = a.pop_size;

    ResultsTable table = load(a.results_path);
    ResultsTable filtered;
    for (const auto& row : table.rows) {
        if (row.mutation == family.mutation && row.crossover == family.crossover &&
            row.strategy == family.strategy && row.pop_size == family.pop_size) {
            filtered.rows.push_back(row);
        }
    }
    if (filtered.rows.empty()) {
        throw DataError("no rows in '" + a.results_path +
                        "' match the requested configuration family");
    }

    std::set<double> f_grid, cr_grid;
    std::map<std::pair<double, double>, std::vector<double>> cells;
    for (const auto& row : filtered.rows) {
        if (!(row.scale_factor > 0.0 && row.scale_factor <= 2.0)) {
            throw DataError("row with F " + format_real(row.scale_factor) +
                            " outside the (0, 2] axis");
        }
        if (!(row.crossover_rate >= 0.0 && row.crossover_rate <= 1.0)) {
            throw DataError("row with Cr " + format_real(row.crossover_rate) +
                            " outside the [0, 1] axis");
        }
        f_grid.insert(row.scale_factor);
        cr_grid.insert(row.crossover_rate);
        if (!row.failed()) {
            cells[{row.scale_factor, row.crossover_rate}].push_back(row.pois);
        }
    }

    std::vector<std::string> missing;
    for (double f : f_grid) {
        for (double cr : cr_grid) {
            auto it = cells.find({f, cr});
            if (it == cells.end() || it->second.empty()) {
                missing.push_back("(F=" + format_real(f) + ", Cr=" +
                                  format_real(cr) + ")");
            }
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) {
            if (!list.empty()) list += ", ";
            list += m;
        }
        throw DataError("missing grid cells: " + list);
    }

    std::vector<PlotPanel> panels;
    panels.reserve(cells.size());
    for (auto& [key, values] : cells) {
        PlotPanel p;
        p.scale_factor = key.first;
        p.crossover_rate = key.second;
        std::sort(values.begin(), values.end());
        p.pois_sorted = values;
        PoisSeries series;
        series.values = values;
        p.color = classify(series);
        panels.push_back(std::move(p));
    }

    write_text_file(a.out_path, render_lattice_svg(family, panels));
}

// ---- tabulate -----------------------------------------------------------

struct TabulateArgs {
    std::string t_grid = "0,0.01,0.05,0.1,0.2,0.3,0.4,0.5";
    std::string n_grid = "1,5,10,30,50,100,500,1000";
    std::optional<std::string> out_path;
    std::optional<std::string> svg_path;
};

std::string short_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void cmd_tabulate(const TabulateArgs& a, std::ostream& out) {
    const std::vector<double> t_grid = parse_real_list(a.t_grid, "--t-grid");
    const std::vector<int> n_grid = parse_int_list(a.n_grid, "--n-grid");
    const PmaxTable table = tabulate_pmax(t_grid, n_grid);

    std::ostringstream body;
    body << 'n';
    for (double t : table.t_grid) body << ",t=" << short_label(t);
    body << '\n';
    for (std::size_t i = 0; i < table.n_grid.size(); ++i) {
        body << table.n_grid[i];
        for (double v : table.rows[i]) body << ',' << format_real(v);
        body << '\n';
    }

    if (a.out_path) {
        write_text_file(*a.out_path, body.str());
    } else {
        out << body.str();
    }
    if (a.svg_path) write_text_file(*a.svg_path, render_pmax_svg(table));
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"differential-evolution out-of-box candidate study"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand(
        "run", "execute a single configuration and print its record");
    run_cmd->add_option("--n", run_args.n, "dimensionality")->capture_default_str();
    run_cmd->add_option("--budget", run_args.budget, "total objective evaluations")
        ->capture_default_str();
    run_cmd->add_option("--pop-size", run_args.pop_size, "population size")->required();
    run_cmd->add_option("--f", run_args.f, "scale factor, in (0, 2]")->required();
    run_cmd->add_option("--cr", run_args.cr, "crossover rate, in [0, 1]")->required();
    run_cmd->add_option("--mutation", run_args.mutation,
                        "rand1|rand2|best1|current-to-best1")->required();
    run_cmd->add_option("--crossover", run_args.crossover, "bin|exp")->required();
    run_cmd->add_option("--strategy", run_args.strategy,
                        "saturation|toroidal|mirror|cotn|penalty")->required();
    run_cmd->add_option("--seed", run_args.seed, "master seed")->capture_default_str();
    run_cmd->add_option("--objective", run_args.objective, "f0|sphere")
        ->capture_default_str();
    run_cmd->callback([&]() { cmd_run(run_args, out); });

    GridArgs grid_args;
    auto* grid_cmd = app.add_subcommand(
        "grid", "sweep a configuration grid and persist the results CSV");
    grid_cmd->add_option("grid-file", grid_args.grid_file, "grid JSON document")
        ->required();
    grid_cmd->add_option("--out", grid_args.out_path, "results CSV path")->required();
    grid_cmd->add_option("--parallelism", grid_args.parallelism,
                         "worker thread count")->capture_default_str();
    grid_cmd->add_flag("--resume", grid_args.resume,
                       "keep completed (config, run) pairs found in --out");
    grid_cmd->add_option("--n", grid_args.n_override, "override dimensionality");
    grid_cmd->add_option("--budget-per-dim", grid_args.budget_per_dim_override,
                         "override evaluations per dimension");
    grid_cmd->add_option("--runs", grid_args.runs_override,
                         "override runs per configuration");
    grid_cmd->add_option("--master-seed", grid_args.master_seed_override,
                         "override the master seed");
    grid_cmd->callback([&]() { cmd_grid(grid_args, out, err); });

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "summarize a results CSV per configuration");
    analyze_cmd->add_option("results", analyze_args.results_path, "results CSV")
        ->required();
    analyze_cmd->add_option("--mutation", analyze_args.filter.mutation,
                            "keep one mutation");
    analyze_cmd->add_option("--crossover", analyze_args.filter.crossover,
                            "keep one crossover");
    analyze_cmd->add_option("--strategy", analyze_args.filter.strategy,
                            "keep one strategy");
    analyze_cmd->add_option("--pop-size", analyze_args.filter.pop_size,
                            "keep one population size");
    analyze_cmd->add_option("--out", analyze_args.out_path,
                            "write the summary CSV here instead of stdout");
    analyze_cmd->callback([&]() { cmd_analyze(analyze_args, out); });

    PlotArgs plot_args;
    auto* plot_cmd = app.add_subcommand(
        "plot", "render one configuration family as a small-multiples SVG");
    plot_cmd->add_option("results", plot_args.results_path, "results CSV")->required();
    plot_cmd->add_option("--mutation", plot_args.mutation, "family mutation")
        ->required();
    plot_cmd->add_option("--crossover", plot_args.crossover, "family crossover")
        ->required();
    plot_cmd->add_option("--strategy", plot_args.strategy, "family strategy")
        ->required();
    plot_cmd->add_option("--pop-size", plot_args.pop_size, "family population size")
        ->required();
    plot_cmd->add_option("--out", plot_args.out_path, "output SVG path")->required();
    plot_cmd->callback([&]() { cmd_plot(plot_args); });

    TabulateArgs tab_args;
    auto* tab_cmd = app.add_subcommand(
        "tabulate", "emit the probability-bound surface as CSV (and SVG)");
    tab_cmd->add_option("--t-grid", tab_args.t_grid,
                        "comma-separated thresholds in [0, 1)")->capture_default_str();
    tab_cmd->add_option("--n-grid", tab_args.n_grid,
                        "comma-separated dimensionalities")->capture_default_str();
    tab_cmd->add_option("--out", tab_args.out_path,
                        "write the CSV here instead of stdout");
    tab_cmd->add_option("--svg", tab_args.svg_path, "also render the shaded figure");
    tab_cmd->callback([&]() { cmd_tabulate(tab_args, out); });

    try {
        app.parse(argc, argv);
        return kExitSuccess;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace debox
