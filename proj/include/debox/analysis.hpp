#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debox/rng.hpp"

namespace debox {

// Distribution classes for a series of per-run infeasible proportions.
// A series confined to the extreme bands [0, 0.001] u [0.999, 1] is Teal;
// one confined to the near-extreme union [0, 0.01] u [0.99, 1] (with at
// least one value outside the Teal bands) is Orange; anything else is
// Violet. Band boundaries are closed on both sides.
enum class ColorClass { Teal, Orange, Violet };

ColorClass color_from_name(const std::string& name);
std::string color_name(ColorClass c);

// Proportion-of-infeasible series for one configuration: one value per run,
// in run order.
struct PoisSeries {
    std::vector<double> values;
};

// Classify a series into Teal / Orange / Violet. Throws ArgumentError on an
// empty series or on values outside [0, 1].
ColorClass classify(const PoisSeries& series);

// Probability that a point is outside the box in at least one of n
// dimensions when each dimension is independently outside with probability
// p: 1 - (1-p)^n, computed through log1p/expm1 so tiny p survives.
double prob_infeasible(double p, int n);

// Largest per-dimension probability p with 1 - (1-p)^n <= t, i.e.
// 1 - (1-t)^(1/n). Throws ArgumentError unless 0 <= t < 1 and n >= 1.
double p_max(double t, int n);

// Rectangular surface of p_max values: one row per n, one column per t.
struct PmaxTable {
    std::vector<double> t_grid;
    std::vector<int> n_grid;
    std::vector<std::vector<double>> rows;  // rows[i][j] = p_max(t_grid[j], n_grid[i])
};
PmaxTable tabulate_pmax(const std::vector<double>& t_grid,
                        const std::vector<int>& n_grid);

// Simulation cross-check for prob_infeasible: per trial, flag each of n
// dimensions independently with probability p; returns the fraction of
// trials with at least one flagged dimension.
double monte_carlo_infeasibility(double p, int n, std::int64_t trials,
                                 RngStream& rng);

struct SeriesSummary {
    double min = 0, max = 0, mean = 0, median = 0, stddev = 0;
};

// Order statistics and moments of a series. Median is the midpoint of the
// two central order statistics for even lengths; stddev is the sample
// standard deviation (n-1 denominator, 0 for a single-value series).
SeriesSummary summarize(const PoisSeries& series);

}  // namespace debox
