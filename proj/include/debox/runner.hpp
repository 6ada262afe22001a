#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "debox/de.hpp"
#include "debox/objective.hpp"

namespace debox {

// The full parameter sweep: value lists whose cross product defines the
// configuration set, run-series length, and seeding.
struct GridSpec {
    std::vector<int> pop_sizes;
    std::vector<double> cr_values;
    std::vector<double> f_values;
    std::vector<Mutation> mutations;
    std::vector<Crossover> crossovers;
    std::vector<Strategy> strategies;
    int dimensionality = 30;
    std::int64_t budget_per_dimension = 10000;  // budget = this x dimensionality
    int runs_per_config = 50;
    std::uint64_t master_seed = 42;
    ObjectiveKind objective = ObjectiveKind::F0;

    std::int64_t budget() const { return budget_per_dimension * dimensionality; }
    std::size_t product_size() const;
    void validate() const;  // throws ConfigError
};

// The standard sweep: 3 population sizes x 5 crossover rates x 10 scale
// factors (uniformly spaced in (0, 2]) x 4 mutations x 2 crossovers x
// 5 strategies = 6000 configurations, 50 runs each, on the 30-dimensional
// unit box with the noise objective and 10^4 evaluations per dimension.
GridSpec default_grid();

// One expanded configuration cell. config_id is the cell's position in the
// full cross-product enumeration, nested in the order (strategy, mutation,
// crossover, pop size, F, Cr) with strategy varying slowest — stable no
// matter which cells are rejected.
struct GridConfig {
    std::int64_t config_id = 0;
    DeConfig de;
};

struct GridRejection {
    std::int64_t config_id = 0;
    std::string reason;
};

struct Expansion {
    std::vector<GridConfig> accepted;
    std::vector<GridRejection> rejected;  // cells violating engine preconditions
};

Expansion expand(const GridSpec& grid);

// One results row; (config_id, run_index) is the primary key. A run that
// aborted with a numeric error is recorded with pois and best_fitness set
// to NaN (the failed-run marker) and evaluations_used 0; the diagnostic
// goes to the execution log.
struct ResultRow {
    std::int64_t config_id = 0;
    Mutation mutation = Mutation::Rand1;
    Crossover crossover = Crossover::Bin;
    Strategy strategy = Strategy::Saturation;
    int pop_size = 0;
    double scale_factor = 0;
    double crossover_rate = 0;
    int run_index = 0;
    std::uint64_t seed = 0;
    double pois = 0;          // NaN marks a failed run
    double best_fitness = 0;  // NaN for a failed run
    std::int64_t evaluations_used = 0;

    bool failed() const;
};

struct ResultsTable {
    std::vector<ResultRow> rows;

    // Sorts by (config_id, run_index) — the canonical on-disk order.
    void sort();
};

inline const char* kResultsHeader =
    "config_id,mutation,crossover,strategy,N,F,Cr,run_index,seed,pois,"
    "best_fitness,evaluations_used";

std::string format_result_row(const ResultRow& row);

// CSV persistence. Reals carry 17 significant digits, so
// load(persist(table)) reproduces the table exactly. load() validates
// ranges (a finite pois outside [0, 1] is a data error; NaN is the failed-
// run marker) and reports parse errors as "path:line:column".
void persist(const ResultsTable& table, const std::string& path);
ResultsTable load(const std::string& path);

// Runs every (accepted config, run_index) pair of the grid on a pool of
// `parallelism` workers. Each pair derives its own stream from
// (master_seed, config_id, run_index), so the result content is identical
// at any parallelism level. When `csv_path` is given, finished rows are
// appended to it immediately (crash-resumable); on completion the file is
// rewritten in canonical sorted order. With `resume`, (config_id,
// run_index) pairs already present in the file are skipped and kept.
// A run that throws NumericError becomes a failed row; the sweep continues.
ResultsTable execute(const GridSpec& grid, int parallelism,
                     const std::optional<std::string>& csv_path = std::nullopt,
                     bool resume = false);

// Grid specs persist as JSON files mirroring the GridSpec fields
// (pop_sizes, cr_values, f_values, mutations, crossovers, strategies,
// dimensionality, budget_per_dimension, runs_per_config, master_seed,
// objective). Unknown keys are rejected. An empty file is reported as a
// usage problem (ConfigError) rather than a parse failure.
GridSpec load_grid(const std::string& path);
std::string grid_to_json(const GridSpec& grid);

}  // namespace debox
