#include "obtsim/qubit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace obtsim {

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

BlochVector::BlochVector(double x, double y, double z) : v_{x, y, z} {
    if (std::abs(dot(v_, v_) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("BlochVector must have unit norm");
    }
}

BlochVector BlochVector::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) {
        throw std::invalid_argument("cannot normalize a near-zero vector");
    }
    return {x / n, y / n, z / n};
}

QubitState::QubitState(std::complex<double> amp0, std::complex<double> amp1)
    : amp0_(amp0), amp1_(amp1) {
    const double norm2 = std::norm(amp0_) + std::norm(amp1_);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("QubitState amplitudes must be normalized");
    }
}

QubitState rotate(const QubitState& s, double phi) {
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    return {c * s.amp0() - sn * s.amp1(), sn * s.amp0() + c * s.amp1()};
}

QubitState hadamard(const QubitState& s) {
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {inv_sqrt2 * (s.amp0() + s.amp1()), inv_sqrt2 * (s.amp0() - s.amp1())};
}

double born_probability_zero(const QubitState& s) { return std::norm(s.amp0()); }

Bit measure_computational(const QubitState& s, RandomSource& rng) {
    return Bit(rng.next_double() < born_probability_zero(s) ? 0 : 1);
}

Bit measure_along(const BlochVector& state, const BlochVector& axis, RandomSource& rng) {
    const double p_plus = (1.0 + dot(state, axis)) / 2.0;
    return Bit(rng.next_double() < p_plus ? 0 : 1);
}

std::pair<Bit, Bit> singlet_sample(const BlochVector& a, const BlochVector& b,
                                   RandomSource& rng) {
    const Bit x = rng.next_bit();
    const double p_equal = (1.0 - dot(a, b)) / 2.0;
    const Bit y = rng.next_double() < p_equal ? x : ~x;
    return {x, y};
}

BlochVector random_bloch(RandomSource& rng) {
    const double z = 2.0 * rng.next_double() - 1.0;
    const double azimuth = 2.0 * std::numbers::pi * rng.next_double();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(azimuth), r * std::sin(azimuth), z};
}

}  // namespace obtsim
