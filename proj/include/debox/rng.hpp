#pragma once

#include <cstdint>
#include <random>

namespace debox {

// Deterministic random stream. mt19937_64 output is fixed by the C++ standard,
// but the standard distribution adaptors are not, so the few distributions we
// need are implemented here directly on the raw 64-bit output. Identical seeds
// therefore produce identical draw sequences on every platform and compiler.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Raw 64-bit word.
    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform double in [a, b).
    double uniform_real(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [0, n), n >= 1, via rejection sampling (unbiased).
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard-normal deviate scaled to (mean, stddev), Marsaglia polar method.
    // The paired second deviate is discarded so draws never interleave.
    double normal(double mean, double stddev);

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

// splitmix64 mixing step; the seed-derivation primitive. Stable across
// releases: changing it would silently re-seed every experiment.
std::uint64_t splitmix64(std::uint64_t x);

// Independent substream for one (master seed, config index, run index) cell.
// Two mixing rounds fold the indices in at different multiples of the golden
// ratio so transposed (config, run) pairs land on different streams.
RngStream derive_substream(std::uint64_t master_seed,
                           std::uint64_t config_index,
                           std::uint64_t run_index);

}  // namespace debox
