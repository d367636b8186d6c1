#pragma once

#include <cstdint>

namespace cupcap {

// SplitMix64. Small, fast, and identical on every platform, which keeps
// seeded suites byte-reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform integer in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Independent stream for (seed, index) pairs.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x51b5c19ad99025b1ULL * (index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace cupcap
