#include "debox/population.hpp"

#include <limits>

#include "debox/errors.hpp"

namespace debox {

namespace {
// Unevaluated members sort behind everything during best-tracking.
double fitness_or_inf(const Individual& ind) {
    return ind.fitness.value_or(std::numeric_limits<double>::infinity());
}
}  // namespace

Population::Population(std::vector<Individual> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw ArgumentError("population must be non-empty");
    recompute_best();
}

void Population::replace(std::size_t i, Individual member) {
    members_[i] = std::move(member);
    if (i == best_index_) {
        recompute_best();  // the previous best may have been displaced
        return;
    }
    const double f = fitness_or_inf(members_[i]);
    const double b = fitness_or_inf(members_[best_index_]);
    if (f < b || (f == b && i < best_index_)) best_index_ = i;
}

void Population::recompute_best() {
    best_index_ = 0;
    double best = fitness_or_inf(members_[0]);
    for (std::size_t i = 1; i < members_.size(); ++i) {
        const double f = fitness_or_inf(members_[i]);
        if (f < best) {
            best = f;
            best_index_ = i;
        }
    }
}

Individual sample_uniform(const Domain& domain, RngStream& rng) {
    Individual ind;
    const std::size_t n = domain.dimensionality();
    ind.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ind.coords[i] = rng.uniform_real(domain.lower(i), domain.upper(i));
    }
    return ind;
}

}  // namespace debox
