#include "debox/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "debox/errors.hpp"

namespace debox {

namespace {

void check_length(const std::vector<double>& point, const Domain& domain) {
    if (point.size() != domain.dimensionality()) {
        throw DimensionError("point has " + std::to_string(point.size()) +
                             " coordinates, domain has " +
                             std::to_string(domain.dimensionality()));
    }
}

bool coord_feasible(double x, double a, double b) { return x >= a && x <= b; }

}  // namespace

std::vector<double> saturate(const std::vector<double>& point,
                             const Domain& domain) {
    check_length(point, domain);
    std::vector<double> out = point;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::clamp(out[i], domain.lower(i), domain.upper(i));
    }
    return out;
}

std::vector<double> toroidal(const std::vector<double>& point,
                             const Domain& domain) {
    check_length(point, domain);
    std::vector<double> out = point;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = domain.lower(i), b = domain.upper(i);
        if (coord_feasible(out[i], a, b)) continue;
        const double w = b - a;
        double y = std::fmod(out[i] - a, w);
        if (y < 0.0) y += w;
        // fmod is exact, but a + y can still graze past b by one rounding
        // step for general bounds; clamp keeps the closure guarantee exact.
        out[i] = std::clamp(a + y, a, b);
    }
    return out;
}

std::vector<double> mirror(const std::vector<double>& point,
                           const Domain& domain) {
    check_length(point, domain);
    std::vector<double> out = point;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = domain.lower(i), b = domain.upper(i);
        if (coord_feasible(out[i], a, b)) continue;
        const double w = b - a;
        // Triangular wave with period 2w: distance into the period, then
        // fold the descending half back down.
        double y = std::fmod(out[i] - a, 2.0 * w);
        if (y < 0.0) y += 2.0 * w;
        if (y > w) y = 2.0 * w - y;
        out[i] = std::clamp(a + y, a, b);
    }
    return out;
}

std::vector<double> cotn(const std::vector<double>& point, const Domain& domain,
                         RngStream& rng) {
    check_length(point, domain);
    std::vector<double> out = point;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = domain.lower(i), b = domain.upper(i);
        if (coord_feasible(out[i], a, b)) continue;
        double h;
        do {
            h = std::fabs(rng.normal(0.0, 1.0 / 3.0));
        } while (h > 1.0);  // ~0.27% of draws; loop terminates fast
        const double unit = (out[i] < a) ? h : 1.0 - h;
        out[i] = std::clamp(a + (b - a) * unit, a, b);
    }
    return out;
}

CorrectionOutcome correct(Strategy strategy, const std::vector<double>& point,
                          const Domain& domain, RngStream& rng) {
    check_length(point, domain);
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (!std::isfinite(point[i])) {
            throw NumericError("non-finite coordinate " + std::to_string(i) +
                               " reached boundary correction");
        }
    }
    CorrectionOutcome outcome;
    outcome.was_infeasible = !domain.contains(point);
    if (!outcome.was_infeasible) {
        outcome.corrected = point;  // feasible input passes through untouched
        return outcome;
    }
    switch (strategy) {
        case Strategy::Saturation: outcome.corrected = saturate(point, domain); break;
        case Strategy::Toroidal: outcome.corrected = toroidal(point, domain); break;
        case Strategy::Mirror: outcome.corrected = mirror(point, domain); break;
        case Strategy::Cotn: outcome.corrected = cotn(point, domain, rng); break;
        case Strategy::Penalty:
            outcome.corrected = point;
            outcome.penalty_applied = true;
            break;
    }
    return outcome;
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "saturation") return Strategy::Saturation;
    if (name == "toroidal") return Strategy::Toroidal;
    if (name == "mirror") return Strategy::Mirror;
    if (name == "cotn") return Strategy::Cotn;
    if (name == "penalty") return Strategy::Penalty;
    throw ArgumentError("unknown strategy '" + name +
                        "' (expected saturation|toroidal|mirror|cotn|penalty)");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Saturation: return "saturation";
        case Strategy::Toroidal: return "toroidal";
        case Strategy::Mirror: return "mirror";
        case Strategy::Cotn: return "cotn";
        case Strategy::Penalty: return "penalty";
    }
    throw ArgumentError("unknown strategy kind");
}

}  // namespace debox
