#pragma once

#include <cstdint>
#include <stdexcept>

namespace obtsim {

// A protocol bit. Construction enforces the {0,1} domain, so every Bit in
// flight carries a valid value and xor/and algebra stays closed.
class Bit {
public:
    constexpr Bit() = default;
    constexpr Bit(int v) : v_(static_cast<std::uint8_t>(v)) {
        if (v != 0 && v != 1) {
            throw std::invalid_argument("Bit value must be 0 or 1");
        }
    }

    [[nodiscard]] constexpr int value() const { return v_; }
    constexpr explicit operator bool() const { return v_ != 0; }

    friend constexpr Bit operator^(Bit a, Bit b) { return Bit(a.v_ ^ b.v_); }
    friend constexpr Bit operator&(Bit a, Bit b) { return Bit(a.v_ & b.v_); }
    friend constexpr Bit operator~(Bit a) { return Bit(a.v_ ^ 1); }
    friend constexpr bool operator==(Bit a, Bit b) { return a.v_ == b.v_; }

    constexpr Bit& operator^=(Bit other) {
        v_ ^= other.v_;
        return *this;
    }

private:
    std::uint8_t v_ = 0;
};

/// b_c of a chosen 1-out-of-2 pair.
constexpr Bit select(Bit c, Bit b0, Bit b1) { return c.value() ? b1 : b0; }

}  // namespace obtsim
