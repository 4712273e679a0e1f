#pragma once

#include <cstdint>

namespace mwscp {

// Identifier recorded in reports so traces can be replayed elsewhere.
inline constexpr const char* kRngId = "splitmix64";

// SplitMix64 (Vigna's public-domain mixer). Chosen over std::mt19937_64 +
// std::uniform_*_distribution because the standard distributions are not
// bit-stable across library implementations; this one is.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n), unbiased via rejection. n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = (-n) % n;  // 2^64 mod n
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r < limit);
        return r % n;
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool next_bool(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

}  // namespace mwscp
