#pragma once

#include <string>
#include <vector>

#include "debox/domain.hpp"
#include "debox/rng.hpp"

namespace debox {

enum class ObjectiveKind {
    F0,      // pure noise: every evaluation is an independent U(0,1) draw
    Sphere,  // deterministic sanity function: sum((x_i - 0.5)^2)
};

// Objective function over a domain. Evaluation is total: any real vector of
// the right length is accepted, feasible or not (the penalty strategy
// evaluates uncorrected points and overrides the value afterwards).
//
// Evaluation is a pure draw/computation — budget metering belongs to the
// caller (the engine charges its budgeted call sites exactly once each).
struct Objective {
    ObjectiveKind kind;
    Domain domain;

    Objective(ObjectiveKind k, Domain d) : kind(k), domain(std::move(d)) {}

    // F0: a fresh U(0,1) draw, independent of `point` and of any previous
    // call (no memoization by coordinates — correlations between solutions
    // must stay at zero). Sphere: sum((x_i - 0.5)^2), optimum interior.
    // Throws DimensionError on length mismatch.
    double evaluate(const std::vector<double>& point, RngStream& rng) const;
};

ObjectiveKind objective_from_name(const std::string& name);  // "f0" | "sphere"
std::string objective_name(ObjectiveKind kind);

}  // namespace debox
