#pragma once

#include <cstdint>

#include "obtsim/bit.hpp"

namespace obtsim {

// Deterministic random source: xoshiro256** seeded through splitmix64 from a
// (seed, stream) pair. Identical pairs replay identical sequences on any
// platform; distinct stream indices give statistically independent streams,
// which is what makes parallel Monte-Carlo runs order-independent.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_double();  // uniform in [0, 1)
    Bit next_bit();

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream() const { return stream_; }
    /// Number of 64-bit words consumed so far.
    [[nodiscard]] std::uint64_t draws() const { return draws_; }

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t draws_ = 0;
};

/// Stable 64-bit hash of (seed, index), used to derive per-point sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace obtsim
