#pragma once

#include <cstdint>

namespace cff {

// SplitMix64: a counter-based generator (the state advances by a fixed odd
// constant, the output is a bijective hash of the counter). Pure 64-bit
// integer arithmetic, so a given seed yields the same sequence on every
// platform.
struct RngState {
    std::uint64_t state = 0;

    RngState() = default;
    explicit RngState(std::uint64_t seed) : state(seed) {}
};

std::uint64_t rng_next_u64(RngState& rng);

// uniform in [0, 1), 53 random mantissa bits
double rng_uniform_real(RngState& rng);

// uniform integer in [lo, hi); throws contract_error on an empty range
long long rng_uniform_int(RngState& rng, long long lo, long long hi);

} // namespace cff
