#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "debox/rng.hpp"

using debox::RngStream;
using debox::derive_substream;
using debox::splitmix64;

TEST_CASE("identical seeds give identical draw sequences") {
    RngStream a(987654321), b(987654321);
    for (int i = 0; i < 50; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("splitmix64 matches the reference algorithm and stays frozen") {
    // First output of the published splitmix64 for state 0; pinning it keeps
    // seed derivation stable across releases.
    CHECK(splitmix64(0) == 16294208416658607535ULL);
    CHECK(splitmix64(42) == 13679457532755275413ULL);
}

TEST_CASE("substream derivation is deterministic and index-sensitive") {
    RngStream s1 = derive_substream(42, 0, 0);
    RngStream s2 = derive_substream(42, 0, 0);
    for (int i = 0; i < 20; ++i) CHECK(s1.next_u64() == s2.next_u64());

    // Neighbouring cells and transposed indices must diverge immediately.
    auto differs_in_first_10 = [](RngStream a, RngStream b) {
        for (int i = 0; i < 10; ++i) {
            if (a.next_u64() != b.next_u64()) return true;
        }
        return false;
    };
    CHECK(differs_in_first_10(derive_substream(42, 0, 0), derive_substream(42, 0, 1)));
    CHECK(differs_in_first_10(derive_substream(42, 0, 0), derive_substream(42, 1, 0)));
    CHECK(differs_in_first_10(derive_substream(42, 1, 0), derive_substream(42, 0, 1)));
    CHECK(derive_substream(42, 0, 0).seed() == 14266671629466169366ULL);
}

TEST_CASE("uniform01 lands in [0,1) with the uniform mean") {
    RngStream rng(7);
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.01);
}

TEST_CASE("uniform_index is bounded and roughly uniform") {
    RngStream rng(11);
    const std::uint64_t k = 7;
    const int n = 70000;
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t v = rng.uniform_index(k);
        REQUIRE(v < k);
        ++counts[v];
    }
    // Per-bucket sd is sqrt(n * (1/k) * (1 - 1/k)) ~ 92.6; allow 5 sd.
    for (std::uint64_t i = 0; i < k; ++i) {
        CHECK(std::fabs(counts[i] - n / static_cast<double>(k)) < 465.0);
    }
}

TEST_CASE("normal deviates have the requested moments") {
    RngStream rng(13);
    const int n = 100000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal(0.0, 1.0);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(std::sqrt(var) - 1.0) < 0.02);

    // Scaling: mean 2, sd 0.5.
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal(2.0, 0.5);
        s += x;
        s2 += x * x;
    }
    const double m2 = s / n;
    CHECK(std::fabs(m2 - 2.0) < 0.02);
    CHECK(std::fabs(std::sqrt(s2 / n - m2 * m2) - 0.5) < 0.02);
}
