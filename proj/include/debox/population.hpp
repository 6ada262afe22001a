#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "debox/domain.hpp"
#include "debox/rng.hpp"

namespace debox {

// One candidate solution: a coordinate vector plus the objective value it
// received when it was evaluated. The stored fitness is set exactly once, at
// evaluation time, and never recomputed — for stochastic objectives it is the
// drawn value.
struct Individual {
    std::vector<double> coords;
    std::optional<double> fitness;  // empty until evaluated

    bool evaluated() const { return fitness.has_value(); }
};

// Fixed-size ordered collection of individuals plus the index of the current
// best (minimal fitness, ties broken by lowest index).
class Population {
public:
    explicit Population(std::vector<Individual> members);

    std::size_t size() const { return members_.size(); }
    const Individual& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Individual>& members() const { return members_; }

    std::size_t best_index() const { return best_index_; }
    const Individual& best() const { return members_[best_index_]; }

    // Replaces the member at `i` and updates best_index incrementally.
    void replace(std::size_t i, Individual member);

    // Full rescan of members for the minimal fitness. Used once per
    // generation after a synchronous population swap.
    void recompute_best();

private:
    std::vector<Individual> members_;
    std::size_t best_index_ = 0;
};

// Uniform draw from the domain: each coordinate independent on [lower, upper].
// Fitness left unevaluated.
Individual sample_uniform(const Domain& domain, RngStream& rng);

}  // namespace debox
