#pragma once

#include <string>
#include <vector>

#include "debox/domain.hpp"
#include "debox/rng.hpp"

namespace debox {

// How an out-of-box candidate is turned into the point that actually gets
// evaluated and compared in selection.
enum class Strategy {
    Saturation,  // clamp each violating coordinate to the nearest bound
    Toroidal,    // wrap modularly, treating each interval as a ring
    Mirror,      // fold back by reflection off the bounds
    Cotn,        // re-sample violating coordinates from a half-normal hugging the violated bound
    Penalty,     // leave coordinates alone; selection sees a fitness worse than anything attainable
};

struct CorrectionOutcome {
    std::vector<double> corrected;
    bool was_infeasible = false;   // the input had >= 1 out-of-bounds coordinate
    bool penalty_applied = false;  // Penalty strategy on an infeasible input
};

// Per-coordinate maps. Each leaves feasible coordinates bit-identical and is
// idempotent (cotn excepted — it is stochastic). Outputs are always inside
// the box, for overshoots of any finite size.
std::vector<double> saturate(const std::vector<double>& point, const Domain& domain);
std::vector<double> toroidal(const std::vector<double>& point, const Domain& domain);
std::vector<double> mirror(const std::vector<double>& point, const Domain& domain);

// Violating coordinates are re-drawn: below the lower bound from |N(0, 1/3)|,
// above the upper bound from 1 - |N(0, 1/3)| (in box-normalized units,
// 1/3 being the standard deviation), re-drawing until the value is inside
// [0, 1], then mapped back to [lower, upper].
std::vector<double> cotn(const std::vector<double>& point, const Domain& domain,
                         RngStream& rng);

// Dispatch over the strategy enumeration. Feasibility is decided once, before
// correction, via Domain::contains. For Penalty the coordinates pass through
// unchanged and penalty_applied signals the engine to assign the rejection
// sentinel. Non-finite input coordinates raise NumericError — they indicate
// an upstream defect that correction must not paper over.
CorrectionOutcome correct(Strategy strategy, const std::vector<double>& point,
                          const Domain& domain, RngStream& rng);

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

}  // namespace debox
