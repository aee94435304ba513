#ifndef GRAPHMETRIC_RNG_HPP
#define GRAPHMETRIC_RNG_HPP

#include <cstdint>

namespace graphmetric {

// SplitMix64 finalizer (Steele, Lea, Flood).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic generator keyed by (seed, stream). Each (seed, stream) pair
// names an independent sequence, so work items can draw from their own stream
// in any order, on any thread, and still reproduce byte-identical results.
// Not for cryptography.
class counter_rng {
public:
    counter_rng(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64(splitmix64(seed) + stream)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), rejection sampled so there is no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return r % n;
    }

    bool next_bool(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

} // namespace graphmetric

#endif
