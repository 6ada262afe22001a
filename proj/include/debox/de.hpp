#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "debox/boundary.hpp"
#include "debox/domain.hpp"
#include "debox/objective.hpp"
#include "debox/population.hpp"
#include "debox/rng.hpp"

namespace debox {

enum class Mutation { Rand1, Rand2, Best1, CurrentToBest1 };
enum class Crossover { Bin, Exp };

Mutation mutation_from_name(const std::string& name);
std::string mutation_name(Mutation m);
// Smallest population that can supply the required mutually distinct donors.
int mutation_min_pop(Mutation m);

Crossover crossover_from_name(const std::string& name);
std::string crossover_name(Crossover c);

// One cell of the parameter space: everything that defines a run series
// except the seed.
struct DeConfig {
    int pop_size = 0;          // N
    double scale_factor = 0;   // F, in (0, 2]
    double crossover_rate = 0; // Cr, in [0, 1]
    Mutation mutation = Mutation::Rand1;
    Crossover crossover = Crossover::Bin;
    Strategy strategy = Strategy::Saturation;
    std::int64_t budget = 0;   // total objective evaluations, >= pop_size

    // Throws ConfigError when any field is out of range or the population is
    // too small for the mutation's donor requirement.
    void validate() const;
};

// Outcome of a single run.
struct RunRecord {
    std::uint64_t seed = 0;          // seed of the stream that drove the run
    std::int64_t infeasible_count = 0;
    std::int64_t evaluations_used = 0;
    double pois = 0.0;               // infeasible_count / budget
    double best_fitness = 0.0;
    std::int64_t generations = 0;    // generation loop entries (a trailing partial one counts)
};

// Mutation operators. Donor indices are drawn uniformly, mutually distinct
// among themselves; they may coincide with target_index (the weakest rule
// that still admits the 5-donor variant at N = 5). No feasibility handling
// here — mutants go out of the box freely.
std::vector<double> mutate_rand1(const Population& pop, std::size_t target_index,
                                 double F, RngStream& rng);
std::vector<double> mutate_rand2(const Population& pop, std::size_t target_index,
                                 double F, RngStream& rng);
std::vector<double> mutate_best1(const Population& pop, std::size_t target_index,
                                 double F, RngStream& rng);
std::vector<double> mutate_current_to_best1(const Population& pop,
                                            std::size_t target_index, double F,
                                            RngStream& rng);
std::vector<double> mutate(Mutation kind, const Population& pop,
                           std::size_t target_index, double F, RngStream& rng);

// Crossovers. Both guarantee at least one mutant component in the offspring.
//
// Binomial: a forced position is drawn uniformly; every position i takes the
// mutant component when U_i <= Cr or i is the forced position (one U drawn
// per position, in index order, after the forced draw).
std::vector<double> crossover_bin(const std::vector<double>& target,
                                  const std::vector<double>& mutant, double Cr,
                                  RngStream& rng);
// Exponential: a uniform start position, then a contiguous circular block of
// mutant components; after each copy the block continues while U <= Cr and
// the index has not wrapped around to the start. Block length L has
// P(L = k) = Cr^(k-1) (1 - Cr) for k < n and P(L = n) = Cr^(n-1).
std::vector<double> crossover_exp(const std::vector<double>& target,
                                  const std::vector<double>& mutant, double Cr,
                                  RngStream& rng);
std::vector<double> crossover(Crossover kind, const std::vector<double>& target,
                              const std::vector<double>& mutant, double Cr,
                              RngStream& rng);

// One-to-one selection rule: the offspring takes the slot unless it is
// strictly worse (ties go to the offspring).
inline bool selection_accepts(double candidate_value, double reference_value) {
    return candidate_value <= reference_value;
}

// Called once per generation, after the synchronous population swap.
using GenerationObserver =
    std::function<void(std::int64_t generation, const Population& pop)>;

// The full generational loop:
//   - uniform initialization, one budgeted evaluation per member;
//   - per target: mutate -> crossover -> count the offspring as infeasible if
//     it left the box -> apply the correction strategy -> one budgeted
//     evaluation (the rejection sentinel overrides it when the penalty
//     strategy passed an infeasible offspring through) -> the offspring
//     replaces the target iff its value compares <= the target's;
//   - populations swap synchronously, the best individual is recomputed once
//     per generation, and the loop stops when the next evaluation would
//     exceed the budget (a partial final generation leaves the remaining
//     targets unchanged).
//
// Selection compares against the target's objective value *evaluated afresh
// at comparison time* (uncharged — the budget meters candidate evaluations
// only; evaluations_used = pop_size + offspring count). For deterministic
// objectives the fresh value equals the stored one, so this is the ordinary
// elitist rule; for noise objectives it makes each comparison a fair draw
// rather than a race against the target's best-ever value, which is what
// keeps minimal-parameter populations coalescing the way aggressive ones
// diverge. Each individual still stores the value from its own evaluation,
// and best-individual tracking and reporting use stored values.
RunRecord run_de(const DeConfig& config, const Domain& domain,
                 const Objective& objective, RngStream& rng,
                 const GenerationObserver& observer = nullptr);

}  // namespace debox
