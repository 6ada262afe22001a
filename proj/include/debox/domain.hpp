#pragma once

#include <cstddef>
#include <vector>

#include "debox/rng.hpp"

namespace debox {

// Axis-aligned box of feasible points: the cross product of closed intervals
// [lower[i], upper[i]]. Boundary points are feasible. This is the single
// feasibility oracle — every other component decides feasibility via
// contains(), never by re-deriving bound checks.
class Domain {
public:
    Domain(std::vector<double> lower, std::vector<double> upper);

    // [0,1]^n, the default experimental box.
    static Domain unit(std::size_t n);

    std::size_t dimensionality() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }

    // True iff lower[i] <= point[i] <= upper[i] for every i.
    // Throws DimensionError on length mismatch.
    bool contains(const std::vector<double>& point) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

}  // namespace debox
