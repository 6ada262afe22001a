#include "debox/rng.hpp"

#include <cmath>

namespace debox {

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    // Accept words in [r, 2^64) — a span that is an exact multiple of n.
    const std::uint64_t r = (0 - n) % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x < r);
    return x % n;
}

double RngStream::normal(double mean, double stddev) {
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mean + stddev * (u * std::sqrt(-2.0 * std::log(s) / s));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream derive_substream(std::uint64_t master_seed,
                           std::uint64_t config_index,
                           std::uint64_t run_index) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h + 0x9E3779B97F4A7C15ULL * (config_index + 1));
    h = splitmix64(h + 0x9E3779B97F4A7C15ULL * (run_index + 1));
    return RngStream(h);
}

}  // namespace debox
