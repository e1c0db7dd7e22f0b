// rng.hpp — the experiment RNG, pinned so golden files reproduce
// across platforms and languages.
//
// Generator: splitmix64.  State advances by the golden-ratio constant
// 0x9E3779B97F4A7C15; output is the two-round xor-multiply finalizer
// with constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
//
// Parallel sweeps never share a stream: each (q, trial) work item
// seeds its own generator with derive_seed(base, q, trial).

#pragma once

#include <cstdint>

namespace lwflat {

// The splitmix64 output finalizer applied to a single word.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in {0, ..., n-1} by 128-bit multiply-high; the O(n/2^64)
    // bias is irrelevant at experiment scale and keeps the consumption
    // of the stream fixed at one word per call.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // +1 or -1 from the top bit.
    int next_sign() { return (next() >> 63) ? -1 : 1; }

private:
    std::uint64_t state_;
};

// Per-work-item seed: base mixed with q and the trial index through
// the finalizer, so distinct (q, trial) pairs get decorrelated streams
// regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t q,
                                 std::uint64_t trial) {
    std::uint64_t h = base;
    h = mix64(h ^ (q * 0x9E3779B97F4A7C15ULL));
    h = mix64(h ^ (trial * 0xBF58476D1CE4E5B9ULL));
    return h;
}

} // namespace lwflat
