#include "debox/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "debox/errors.hpp"

namespace debox {

ColorClass color_from_name(const std::string& name) {
    if (name == "teal") return ColorClass::Teal;
    if (name == "orange") return ColorClass::Orange;
    if (name == "violet") return ColorClass::Violet;
    throw ArgumentError("unknown color class '" + name + "'");
}

std::string color_name(ColorClass c) {
    switch (c) {
        case ColorClass::Teal: return "teal";
        case ColorClass::Orange: return "orange";
        case ColorClass::Violet: return "violet";
    }
    throw ArgumentError("unknown color class");
}

namespace {
bool in_teal_bands(double v) {
    return (v >= 0.0 && v <= 0.001) || (v >= 0.999 && v <= 1.0);
}
bool in_orange_or_teal_bands(double v) {
    return (v >= 0.0 && v <= 0.01) || (v >= 0.99 && v <= 1.0);
}
}  // namespace

ColorClass classify(const PoisSeries& series) {
    if (series.values.empty()) throw ArgumentError("cannot classify an empty series");
    bool all_teal = true, all_orange = true;
    for (double v : series.values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ArgumentError("series value " + std::to_string(v) +
                                " outside [0, 1]");
        }
        all_teal = all_teal && in_teal_bands(v);
        all_orange = all_orange && in_orange_or_teal_bands(v);
    }
    if (all_teal) return ColorClass::Teal;
    if (all_orange) return ColorClass::Orange;
    return ColorClass::Violet;
}

double prob_infeasible(double p, int n) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("probability p must lie in [0, 1]");
    }
    if (n < 1) throw ArgumentError("dimensionality n must be >= 1");
    if (p == 1.0) return 1.0;  // log1p(-1) would be -inf
    // 1 - (1-p)^n == -expm1(n * log1p(-p)), exact for p down to the
    // denormal range where the naive power loses every digit.
    return -std::expm1(static_cast<double>(n) * std::log1p(-p));
}

double p_max(double t, int n) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw ArgumentError("threshold t must lie in [0, 1)");
    }
    if (n < 1) throw ArgumentError("dimensionality n must be >= 1");
    // 1 - (1-t)^(1/n) == -expm1(log1p(-t) / n)
    return -std::expm1(std::log1p(-t) / static_cast<double>(n));
}

PmaxTable tabulate_pmax(const std::vector<double>& t_grid,
                        const std::vector<int>& n_grid) {
    if (t_grid.empty() || n_grid.empty()) {
        throw ArgumentError("tabulation grids must be non-empty");
    }
    PmaxTable table;
    table.t_grid = t_grid;
    table.n_grid = n_grid;
    table.rows.reserve(n_grid.size());
    for (int n : n_grid) {
        std::vector<double> row;
        row.reserve(t_grid.size());
        for (double t : t_grid) row.push_back(p_max(t, n));
        table.rows.push_back(std::move(row));
    }
    return table;
}

double monte_carlo_infeasibility(double p, int n, std::int64_t trials,
                                 RngStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("probability p must lie in [0, 1]");
    }
    if (n < 1) throw ArgumentError("dimensionality n must be >= 1");
    if (trials < 1) throw ArgumentError("trials must be >= 1");
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        bool any = false;
        for (int i = 0; i < n; ++i) {
            if (rng.uniform01() < p) any = true;
        }
        if (any) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

SeriesSummary summarize(const PoisSeries& series) {
    const auto& v = series.values;
    if (v.empty()) throw ArgumentError("cannot summarize an empty series");
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    SeriesSummary s;
    s.min = sorted.front();
    s.max = sorted.back();
    double sum = 0;
    for (double x : sorted) sum += x;
    s.mean = sum / static_cast<double>(sorted.size());
    const std::size_t m = sorted.size();
    s.median = (m % 2 == 1) ? sorted[m / 2]
                            : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    if (m > 1) {
        double ss = 0;
        for (double x : sorted) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(m - 1));
    }
    return s;
}

}  // namespace debox
