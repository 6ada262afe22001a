#include "debox/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "debox/errors.hpp"
#include "debox/format.hpp"

namespace debox {

std::size_t GridSpec::product_size() const {
    return strategies.size() * mutations.size() * crossovers.size() *
           pop_sizes.size() * f_values.size() * cr_values.size();
}

void GridSpec::validate() const {
    if (pop_sizes.empty() || cr_values.empty() || f_values.empty() ||
        mutations.empty() || crossovers.empty() || strategies.empty()) {
        throw ConfigError("every grid value list must be non-empty");
    }
    if (dimensionality < 1) throw ConfigError("dimensionality must be >= 1");
    if (budget_per_dimension < 1) {
        throw ConfigError("budget_per_dimension must be >= 1");
    }
    if (runs_per_config < 1) throw ConfigError("runs_per_config must be >= 1");
}

GridSpec default_grid() {
    GridSpec g;
    g.pop_sizes = {5, 20, 100};
    g.cr_values = {0.05, 0.285, 0.52, 0.755, 0.99};
    g.f_values = {0.05, 0.266, 0.483, 0.7, 0.916, 1.133, 1.350, 1.566, 1.783, 2.0};
    g.mutations = {Mutation::Rand1, Mutation::Rand2, Mutation::Best1,
                   Mutation::CurrentToBest1};
    g.crossovers = {Crossover::Bin, Crossover::Exp};
    g.strategies = {Strategy::Saturation, Strategy::Toroidal, Strategy::Mirror,
                    Strategy::Cotn, Strategy::Penalty};
    g.dimensionality = 30;
    g.budget_per_dimension = 10000;
    g.runs_per_config = 50;
    g.master_seed = 42;
    g.objective = ObjectiveKind::F0;
    return g;
}

Expansion expand(const GridSpec& grid) {
    grid.validate();
    Expansion out;
    std::int64_t id = 0;
    for (Strategy st : grid.strategies)
        for (Mutation mu : grid.mutations)
            for (Crossover cx : grid.crossovers)
                for (int N : grid.pop_sizes)
                    for (double F : grid.f_values)
                        for (double Cr : grid.cr_values) {
                            DeConfig de;
                            de.pop_size = N;
                            de.scale_factor = F;
                            de.crossover_rate = Cr;
                            de.mutation = mu;
                            de.crossover = cx;
                            de.strategy = st;
                            de.budget = grid.budget();
                            try {
                                de.validate();
                                out.accepted.push_back(GridConfig{id, de});
                            } catch (const ConfigError& e) {
                                out.rejected.push_back(GridRejection{id, e.what()});
                            }
                            ++id;
                        }
    return out;
}

bool ResultRow::failed() const { return std::isnan(pois); }

void ResultsTable::sort() {
    std::sort(rows.begin(), rows.end(),
              [](const ResultRow& a, const ResultRow& b) {
                  if (a.config_id != b.config_id) return a.config_id < b.config_id;
                  return a.run_index < b.run_index;
              });
}

std::string format_result_row(const ResultRow& row) {
    std::ostringstream s;
    s << row.config_id << ',' << mutation_name(row.mutation) << ','
      << crossover_name(row.crossover) << ',' << strategy_name(row.strategy)
      << ',' << row.pop_size << ',' << format_real(row.scale_factor) << ','
      << format_real(row.crossover_rate) << ',' << row.run_index << ','
      << row.seed << ',' << format_real(row.pois) << ','
      << format_real(row.best_fitness) << ',' << row.evaluations_used;
    return s.str();
}

void persist(const ResultsTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << kResultsHeader << '\n';
    for (const auto& row : table.rows) out << format_result_row(row) << '\n';
    out.flush();
    if (!out) throw DataError("write to '" + path + "' failed");
}

namespace {

std::string cell(const std::string& path, std::size_t line, std::size_t column) {
    return path + ":" + std::to_string(line) + ":" + std::to_string(column);
}

ResultRow parse_result_row(const std::vector<std::string>& fields,
                           const std::string& path, std::size_t line_no) {
    ResultRow row;
    row.config_id = parse_int(fields[0], cell(path, line_no, 1));
    try {
        row.mutation = mutation_from_name(fields[1]);
        row.crossover = crossover_from_name(fields[2]);
        row.strategy = strategy_from_name(fields[3]);
    } catch (const ArgumentError& e) {
        throw DataError(cell(path, line_no, 2) + ": " + e.what());
    }
    row.pop_size = static_cast<int>(parse_int(fields[4], cell(path, line_no, 5)));
    row.scale_factor = parse_real(fields[5], cell(path, line_no, 6));
    row.crossover_rate = parse_real(fields[6], cell(path, line_no, 7));
    row.run_index = static_cast<int>(parse_int(fields[7], cell(path, line_no, 8)));
    row.seed = parse_uint(fields[8], cell(path, line_no, 9));
    row.pois = parse_real(fields[9], cell(path, line_no, 10));
    row.best_fitness = parse_real(fields[10], cell(path, line_no, 11));
    row.evaluations_used = parse_int(fields[11], cell(path, line_no, 12));

    if (row.config_id < 0) {
        throw DataError(cell(path, line_no, 1) + ": config_id must be >= 0");
    }
    if (row.run_index < 0) {
        throw DataError(cell(path, line_no, 8) + ": run_index must be >= 0");
    }
    // NaN is the failed-run marker; a finite pois must be a proportion.
    if (!std::isnan(row.pois) && !(row.pois >= 0.0 && row.pois <= 1.0)) {
        throw DataError(cell(path, line_no, 10) + ": pois " +
                        format_real(row.pois) + " outside [0, 1]");
    }
    if (row.evaluations_used < 0) {
        throw DataError(cell(path, line_no, 12) + ": evaluations_used must be >= 0");
    }
    return row;
}

}  // namespace

ResultsTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(path + ":1:1: missing header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kResultsHeader) {
        throw DataError(path + ":1:1: unexpected header '" + line + "'");
    }
    ResultsTable table;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;  // tolerate a trailing blank line
        const auto fields = split_csv_line(line);
        if (fields.size() != 12) {
            throw DataError(cell(path, line_no, fields.size() + 1) +
                            ": expected 12 fields, found " +
                            std::to_string(fields.size()));
        }
        table.rows.push_back(parse_result_row(fields, path, line_no));
    }
    return table;
}

namespace {

ResultRow make_row(const GridConfig& cfg, int run_index, std::uint64_t seed) {
    ResultRow row;
    row.config_id = cfg.config_id;
    row.mutation = cfg.de.mutation;
    row.crossover = cfg.de.crossover;
    row.strategy = cfg.de.strategy;
    row.pop_size = cfg.de.pop_size;
    row.scale_factor = cfg.de.scale_factor;
    row.crossover_rate = cfg.de.crossover_rate;
    row.run_index = run_index;
    row.seed = seed;
    return row;
}

}  // namespace

ResultsTable execute(const GridSpec& grid, int parallelism,
                     const std::optional<std::string>& csv_path, bool resume) {
    grid.validate();
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");

    const Expansion expansion = expand(grid);
    const Domain domain = Domain::unit(static_cast<std::size_t>(grid.dimensionality));
    const Objective objective(grid.objective, domain);

    ResultsTable table;
    std::set<std::pair<std::int64_t, int>> done;
    if (csv_path && resume) {
        std::ifstream probe(*csv_path);
        if (probe.good()) {
            table = load(*csv_path);
            for (const auto& row : table.rows) {
                done.emplace(row.config_id, row.run_index);
            }
        }
    }

    struct Job {
        const GridConfig* cfg;
        int run_index;
    };
    std::vector<Job> jobs;
    for (const auto& cfg : expansion.accepted) {
        for (int r = 0; r < grid.runs_per_config; ++r) {
            if (done.count({cfg.config_id, r})) continue;
            jobs.push_back(Job{&cfg, r});
        }
    }

    std::ofstream sink;
    if (csv_path) {
        const bool fresh = done.empty();
        sink.open(*csv_path, fresh ? std::ios::trunc : std::ios::app);
        if (!sink) throw DataError("cannot open '" + *csv_path + "' for writing");
        if (fresh) sink << kResultsHeader << '\n' << std::flush;
    }

    std::mutex sink_mutex;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t j = cursor.fetch_add(1);
            if (j >= jobs.size()) return;
            const Job& job = jobs[j];
            RngStream rng = derive_substream(
                grid.master_seed,
                static_cast<std::uint64_t>(job.cfg->config_id),
                static_cast<std::uint64_t>(job.run_index));
            ResultRow row = make_row(*job.cfg, job.run_index, rng.seed());
            try {
                const RunRecord rec =
                    run_de(job.cfg->de, domain, objective, rng);
                row.pois = rec.pois;
                row.best_fitness = rec.best_fitness;
                row.evaluations_used = rec.evaluations_used;
            } catch (const NumericError& e) {
                row.pois = std::nan("");
                row.best_fitness = std::nan("");
                row.evaluations_used = 0;
                std::lock_guard<std::mutex> lock(sink_mutex);
                std::fprintf(stderr,
                             "run failed (config %lld, run %d): %s\n",
                             static_cast<long long>(row.config_id),
                             row.run_index, e.what());
            }
            std::lock_guard<std::mutex> lock(sink_mutex);
            table.rows.push_back(row);
            if (sink.is_open()) sink << format_result_row(row) << '\n' << std::flush;
        }
    };

    if (parallelism == 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const std::size_t n_threads =
            std::min<std::size_t>(static_cast<std::size_t>(parallelism), jobs.size());
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    table.sort();
    if (csv_path) {
        sink.close();
        persist(table, *csv_path);  // canonical sorted rewrite
    }
    return table;
}

namespace {

using nlohmann::json;

template <typename T, typename Parse>
std::vector<T> parse_name_list(const json& arr, const std::string& key, Parse parse) {
    if (!arr.is_array()) throw DataError("grid key '" + key + "' must be an array");
    std::vector<T> out;
    for (const auto& item : arr) {
        if (!item.is_string()) {
            throw DataError("grid key '" + key + "' must contain names");
        }
        try {
            out.push_back(parse(item.template get<std::string>()));
        } catch (const ArgumentError& e) {
            throw DataError(std::string("grid key '") + key + "': " + e.what());
        }
    }
    return out;
}

}  // namespace

GridSpec load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open grid file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        throw ConfigError("grid file '" + path + "' is empty");
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError("grid file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw DataError("grid file '" + path + "' must hold a JSON object");
    }

    static const std::set<std::string> known = {
        "pop_sizes", "cr_values", "f_values", "mutations", "crossovers",
        "strategies", "dimensionality", "budget_per_dimension",
        "runs_per_config", "master_seed", "objective"};
    for (const auto& el : doc.items()) {
        if (!known.count(el.key())) {
            throw DataError("grid file '" + path + "': unknown key '" + el.key() +
                            "'");
        }
    }

    GridSpec g = default_grid();
    try {
        if (doc.contains("pop_sizes")) g.pop_sizes = doc["pop_sizes"].get<std::vector<int>>();
        if (doc.contains("cr_values")) g.cr_values = doc["cr_values"].get<std::vector<double>>();
        if (doc.contains("f_values")) g.f_values = doc["f_values"].get<std::vector<double>>();
        if (doc.contains("mutations")) {
            g.mutations = parse_name_list<Mutation>(doc["mutations"], "mutations",
                                                    mutation_from_name);
        }
        if (doc.contains("crossovers")) {
            g.crossovers = parse_name_list<Crossover>(doc["crossovers"], "crossovers",
                                                      crossover_from_name);
        }
        if (doc.contains("strategies")) {
            g.strategies = parse_name_list<Strategy>(doc["strategies"], "strategies",
                                                     strategy_from_name);
        }
        if (doc.contains("dimensionality")) g.dimensionality = doc["dimensionality"].get<int>();
        if (doc.contains("budget_per_dimension")) {
            g.budget_per_dimension = doc["budget_per_dimension"].get<std::int64_t>();
        }
        if (doc.contains("runs_per_config")) g.runs_per_config = doc["runs_per_config"].get<int>();
        if (doc.contains("master_seed")) g.master_seed = doc["master_seed"].get<std::uint64_t>();
        if (doc.contains("objective")) {
            try {
                g.objective = objective_from_name(doc["objective"].get<std::string>());
            } catch (const ArgumentError& e) {
                throw DataError(std::string("grid file '") + path + "': " + e.what());
            }
        }
    } catch (const json::exception& e) {
        throw DataError("grid file '" + path + "': " + e.what());
    }
    g.validate();
    return g;
}

std::string grid_to_json(const GridSpec& grid) {
    json doc;
    doc["pop_sizes"] = grid.pop_sizes;
    doc["cr_values"] = grid.cr_values;
    doc["f_values"] = grid.f_values;
    json mutations = json::array();
    for (Mutation m : grid.mutations) mutations.push_back(mutation_name(m));
    doc["mutations"] = mutations;
    json crossovers = json::array();
    for (Crossover c : grid.crossovers) crossovers.push_back(crossover_name(c));
    doc["crossovers"] = crossovers;
    json strategies = json::array();
    for (Strategy s : grid.strategies) strategies.push_back(strategy_name(s));
    doc["strategies"] = strategies;
    doc["dimensionality"] = grid.dimensionality;
    doc["budget_per_dimension"] = grid.budget_per_dimension;
    doc["runs_per_config"] = grid.runs_per_config;
    doc["master_seed"] = grid.master_seed;
    doc["objective"] = objective_name(grid.objective);
    return doc.dump(2) + "\n";
}

}  // namespace debox
