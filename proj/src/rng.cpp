#include "cff/rng.hpp"

#include "cff/errors.hpp"

#include <string>

namespace cff {

std::uint64_t rng_next_u64(RngState& rng) {
    std::uint64_t z = (rng.state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double rng_uniform_real(RngState& rng) {
    return static_cast<double>(rng_next_u64(rng) >> 11) * 0x1.0p-53;
}

long long rng_uniform_int(RngState& rng, long long lo, long long hi) {
    if (lo >= hi) {
        throw contract_error("rng_uniform_int: empty range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + ")");
    }
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
    // rejection sampling keeps the draw unbiased for spans that do not divide 2^64
    std::uint64_t min = (0 - span) % span;
    std::uint64_t r = rng_next_u64(rng);
    while (r < min) {
        r = rng_next_u64(rng);
    }
    return lo + static_cast<long long>(r % span);
}

} // namespace cff
