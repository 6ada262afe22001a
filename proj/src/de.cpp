#include "debox/de.hpp"

#include <cmath>
#include <limits>

#include "debox/errors.hpp"

namespace debox {

Mutation mutation_from_name(const std::string& name) {
    if (name == "rand1") return Mutation::Rand1;
    if (name == "rand2") return Mutation::Rand2;
    if (name == "best1") return Mutation::Best1;
    if (name == "current-to-best1") return Mutation::CurrentToBest1;
    throw ArgumentError("unknown mutation '" + name +
                        "' (expected rand1|rand2|best1|current-to-best1)");
}

std::string mutation_name(Mutation m) {
    switch (m) {
        case Mutation::Rand1: return "rand1";
        case Mutation::Rand2: return "rand2";
        case Mutation::Best1: return "best1";
        case Mutation::CurrentToBest1: return "current-to-best1";
    }
    throw ArgumentError("unknown mutation kind");
}

int mutation_min_pop(Mutation m) {
    switch (m) {
        case Mutation::Rand1: return 3;
        case Mutation::Rand2: return 5;
        case Mutation::Best1: return 2;
        case Mutation::CurrentToBest1: return 2;
    }
    throw ArgumentError("unknown mutation kind");
}

Crossover crossover_from_name(const std::string& name) {
    if (name == "bin") return Crossover::Bin;
    if (name == "exp") return Crossover::Exp;
    throw ArgumentError("unknown crossover '" + name + "' (expected bin|exp)");
}

std::string crossover_name(Crossover c) {
    switch (c) {
        case Crossover::Bin: return "bin";
        case Crossover::Exp: return "exp";
    }
    throw ArgumentError("unknown crossover kind");
}

void DeConfig::validate() const {
    if (pop_size < 1) throw ConfigError("pop_size must be positive");
    if (!(scale_factor > 0.0) || !(scale_factor <= 2.0)) {
        throw ConfigError("scale_factor must lie in (0, 2]");
    }
    if (!(crossover_rate >= 0.0) || !(crossover_rate <= 1.0)) {
        throw ConfigError("crossover_rate must lie in [0, 1]");
    }
    const int need = mutation_min_pop(mutation);
    if (pop_size < need) {
        throw ConfigError("mutation " + mutation_name(mutation) + " needs " +
                          std::to_string(need) + " distinct donors; pop_size " +
                          std::to_string(pop_size) + " is too small");
    }
    if (budget < pop_size) {
        throw ConfigError("budget " + std::to_string(budget) +
                          " cannot cover initialization of pop_size " +
                          std::to_string(pop_size));
    }
}

namespace {

// k donor indices, mutually distinct, drawn uniformly from [0, N); the target
// index is allowed. Sequential rejection keeps the draw order deterministic.
void draw_donors(std::size_t N, std::size_t k, std::size_t* out, RngStream& rng) {
    for (std::size_t j = 0; j < k; ++j) {
        bool fresh;
        do {
            out[j] = static_cast<std::size_t>(rng.uniform_index(N));
            fresh = true;
            for (std::size_t i = 0; i < j; ++i) {
                if (out[i] == out[j]) {
                    fresh = false;
                    break;
                }
            }
        } while (!fresh);
    }
}

void require_min_pop(const Population& pop, Mutation kind) {
    if (pop.size() < static_cast<std::size_t>(mutation_min_pop(kind))) {
        throw ConfigError("population of " + std::to_string(pop.size()) +
                          " is too small for mutation " + mutation_name(kind));
    }
}

}  // namespace

std::vector<double> mutate_rand1(const Population& pop, std::size_t /*target_index*/,
                                 double F, RngStream& rng) {
    require_min_pop(pop, Mutation::Rand1);
    std::size_t r[3];
    draw_donors(pop.size(), 3, r, rng);
    const auto& x1 = pop[r[0]].coords;
    const auto& x2 = pop[r[1]].coords;
    const auto& x3 = pop[r[2]].coords;
    std::vector<double> m(x1.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = x1[i] + F * (x2[i] - x3[i]);
    return m;
}

std::vector<double> mutate_rand2(const Population& pop, std::size_t /*target_index*/,
                                 double F, RngStream& rng) {
    require_min_pop(pop, Mutation::Rand2);
    std::size_t r[5];
    draw_donors(pop.size(), 5, r, rng);
    const auto& x1 = pop[r[0]].coords;
    const auto& x2 = pop[r[1]].coords;
    const auto& x3 = pop[r[2]].coords;
    const auto& x4 = pop[r[3]].coords;
    const auto& x5 = pop[r[4]].coords;
    std::vector<double> m(x1.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = x1[i] + F * (x2[i] - x3[i]) + F * (x4[i] - x5[i]);
    }
    return m;
}

std::vector<double> mutate_best1(const Population& pop, std::size_t /*target_index*/,
                                 double F, RngStream& rng) {
    require_min_pop(pop, Mutation::Best1);
    std::size_t r[2];
    draw_donors(pop.size(), 2, r, rng);
    const auto& xb = pop.best().coords;
    const auto& x1 = pop[r[0]].coords;
    const auto& x2 = pop[r[1]].coords;
    std::vector<double> m(xb.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = xb[i] + F * (x1[i] - x2[i]);
    return m;
}

std::vector<double> mutate_current_to_best1(const Population& pop,
                                            std::size_t target_index, double F,
                                            RngStream& rng) {
    require_min_pop(pop, Mutation::CurrentToBest1);
    std::size_t r[2];
    draw_donors(pop.size(), 2, r, rng);
    const auto& x = pop[target_index].coords;
    const auto& xb = pop.best().coords;
    const auto& x1 = pop[r[0]].coords;
    const auto& x2 = pop[r[1]].coords;
    std::vector<double> m(x.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = x[i] + F * (xb[i] - x[i]) + F * (x1[i] - x2[i]);
    }
    return m;
}

std::vector<double> mutate(Mutation kind, const Population& pop,
                           std::size_t target_index, double F, RngStream& rng) {
    switch (kind) {
        case Mutation::Rand1: return mutate_rand1(pop, target_index, F, rng);
        case Mutation::Rand2: return mutate_rand2(pop, target_index, F, rng);
        case Mutation::Best1: return mutate_best1(pop, target_index, F, rng);
        case Mutation::CurrentToBest1:
            return mutate_current_to_best1(pop, target_index, F, rng);
    }
    throw ArgumentError("unknown mutation kind");
}

namespace {
void check_equal_lengths(const std::vector<double>& target,
                         const std::vector<double>& mutant) {
    if (target.size() != mutant.size()) {
        throw DimensionError("crossover parents differ in length: " +
                             std::to_string(target.size()) + " vs " +
                             std::to_string(mutant.size()));
    }
    if (target.empty()) throw DimensionError("crossover on empty vectors");
}
}  // namespace

std::vector<double> crossover_bin(const std::vector<double>& target,
                                  const std::vector<double>& mutant, double Cr,
                                  RngStream& rng) {
    check_equal_lengths(target, mutant);
    const std::size_t n = target.size();
    std::vector<double> off = target;
    const std::size_t forced = static_cast<std::size_t>(rng.uniform_index(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01();  // drawn for every position, forced included
        if (u <= Cr || i == forced) off[i] = mutant[i];
    }
    return off;
}

std::vector<double> crossover_exp(const std::vector<double>& target,
                                  const std::vector<double>& mutant, double Cr,
                                  RngStream& rng) {
    check_equal_lengths(target, mutant);
    const std::size_t n = target.size();
    std::vector<double> off = target;
    const std::size_t start = static_cast<std::size_t>(rng.uniform_index(n));
    std::size_t i = start;
    do {
        off[i] = mutant[i];
        i = (i + 1) % n;
    } while (i != start && rng.uniform01() <= Cr);
    return off;
}

std::vector<double> crossover(Crossover kind, const std::vector<double>& target,
                              const std::vector<double>& mutant, double Cr,
                              RngStream& rng) {
    switch (kind) {
        case Crossover::Bin: return crossover_bin(target, mutant, Cr, rng);
        case Crossover::Exp: return crossover_exp(target, mutant, Cr, rng);
    }
    throw ArgumentError("unknown crossover kind");
}

RunRecord run_de(const DeConfig& config, const Domain& domain,
                 const Objective& objective, RngStream& rng,
                 const GenerationObserver& observer) {
    config.validate();
    if (domain.dimensionality() != objective.domain.dimensionality()) {
        throw DimensionError("objective and run domain disagree on dimensionality");
    }
    const std::size_t N = static_cast<std::size_t>(config.pop_size);
    const std::int64_t budget = config.budget;
    constexpr double kRejectionSentinel = std::numeric_limits<double>::infinity();

    RunRecord rec;
    rec.seed = rng.seed();

    std::vector<Individual> init;
    init.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
        Individual ind = sample_uniform(domain, rng);
        ind.fitness = objective.evaluate(ind.coords, rng);
        ++rec.evaluations_used;
        init.push_back(std::move(ind));
    }
    Population pop(std::move(init));

    while (rec.evaluations_used < budget) {
        ++rec.generations;
        std::vector<Individual> next = pop.members();
        for (std::size_t t = 0; t < N; ++t) {
            if (rec.evaluations_used == budget) break;  // partial generation: the rest carry over
            std::vector<double> mutant =
                mutate(config.mutation, pop, t, config.scale_factor, rng);
            std::vector<double> off = crossover(config.crossover, pop[t].coords,
                                                mutant, config.crossover_rate, rng);
            CorrectionOutcome corr = correct(config.strategy, off, domain, rng);
            if (corr.was_infeasible) ++rec.infeasible_count;

            Individual cand;
            cand.coords = std::move(corr.corrected);
            double value = objective.evaluate(cand.coords, rng);
            ++rec.evaluations_used;
            if (corr.penalty_applied) value = kRejectionSentinel;
            cand.fitness = value;

            const double reference = objective.evaluate(pop[t].coords, rng);
            if (selection_accepts(value, reference)) next[t] = std::move(cand);
        }
        pop = Population(std::move(next));  // constructor rescans for the best
        if (observer) observer(rec.generations, pop);
    }

    rec.pois = static_cast<double>(rec.infeasible_count) / static_cast<double>(budget);
    rec.best_fitness = pop.best().fitness.value();
    return rec;
}

}  // namespace debox
