#pragma once

#include <cstdint>

namespace regmix {

// Counter-based 64-bit generator (SplitMix64 output function over an
// affine counter sequence). Every draw is a pure function of
// (seed, stream, counter), so parallel tasks get reproducible,
// non-overlapping randomness via the stream-derivation rule
//     stream = hash(seed, task-id)
// exposed as Rng::derive_stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix(seed + GOLDEN) ^ mix(stream + FLEA)), counter_(0) {}

    static std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t task_id) {
        return mix(mix(seed + GOLDEN) + task_id);
    }

    std::uint64_t next_u64() { return mix(base_ + (++counter_) * GOLDEN); }

    // Uniform in [0, bound), bias-free by rejection on the top range.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    std::uint32_t below_u32(std::uint32_t bound) {
        return static_cast<std::uint32_t>(below(bound));
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin() { return (next_u64() & 1u) != 0; }

private:
    static constexpr std::uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t FLEA = 0xbf58476d1ce4e5b9ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_;
};

} // namespace regmix
