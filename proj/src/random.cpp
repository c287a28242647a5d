#include "obtsim/random.hpp"

namespace obtsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    // Every state word must vary with both seed and stream, otherwise the
    // first draws of sibling streams share structure.
    std::uint64_t a = seed;
    std::uint64_t b = stream ^ 0x5851f42d4c957f2dULL;
    for (std::uint64_t& word : state_) {
        word = splitmix64(a) ^ splitmix64(b);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = kGolden;  // xoshiro state must not be all zero
    }
}

std::uint64_t RandomSource::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    ++draws_;
    return result;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Bit RandomSource::next_bit() { return Bit(static_cast<int>(next_u64() >> 63)); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix64(s) ^ index;
    return splitmix64(mixed);
}

}  // namespace obtsim
