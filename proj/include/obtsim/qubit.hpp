#pragma once

#include <complex>
#include <utility>

#include "obtsim/bit.hpp"
#include "obtsim/random.hpp"

namespace obtsim {

inline constexpr double kNormTolerance = 1e-9;

// Plain 3-vector; carries unnormalized quantities such as l1 +/- l2.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v);

// Unit vector on the Poincare sphere; states and measurement axes.
// Construction checks x^2 + y^2 + z^2 = 1 within kNormTolerance.
class BlochVector {
public:
    BlochVector(double x, double y, double z);

    /// Rescales an arbitrary non-zero vector onto the sphere.
    static BlochVector normalized(double x, double y, double z);

    [[nodiscard]] double x() const { return v_.x; }
    [[nodiscard]] double y() const { return v_.y; }
    [[nodiscard]] double z() const { return v_.z; }
    [[nodiscard]] Vec3 vec() const { return v_; }
    operator Vec3() const { return v_; }  // NOLINT: intentional implicit widening

private:
    Vec3 v_;
};

// Pure single-qubit state. Construction checks |amp0|^2 + |amp1|^2 = 1
// within kNormTolerance.
class QubitState {
public:
    QubitState() = default;  // |0>
    QubitState(std::complex<double> amp0, std::complex<double> amp1);

    static QubitState ket0() { return {}; }
    static QubitState ket1() { return {{0.0, 0.0}, {1.0, 0.0}}; }

    [[nodiscard]] std::complex<double> amp0() const { return amp0_; }
    [[nodiscard]] std::complex<double> amp1() const { return amp1_; }

private:
    std::complex<double> amp0_{1.0, 0.0};
    std::complex<double> amp1_{0.0, 0.0};
};

/// Real-plane rotation: (amp0, amp1) -> (cos phi * amp0 - sin phi * amp1,
/// sin phi * amp0 + cos phi * amp1).
QubitState rotate(const QubitState& s, double phi);

/// (amp0, amp1) -> ((amp0 + amp1)/sqrt(2), (amp0 - amp1)/sqrt(2)).
QubitState hadamard(const QubitState& s);

/// Probability of outcome 0 in the computational basis: |amp0|^2.
double born_probability_zero(const QubitState& s);

/// Samples the computational-basis measurement; consumes exactly one draw.
Bit measure_computational(const QubitState& s, RandomSource& rng);

/// Von Neumann measurement of the state with Bloch vector `state` along
/// `axis`: returns 0 (outcome along +axis) with probability (1 + state.axis)/2.
Bit measure_along(const BlochVector& state, const BlochVector& axis, RandomSource& rng);

/// Joint outcome of measuring the two halves of a singlet along axes a and b:
/// P(x,y) = (1 - (a.b)(1-2x)(1-2y))/4. Marginals are uniform and the
/// correlation of the +/-1-valued outcomes is -a.b.
std::pair<Bit, Bit> singlet_sample(const BlochVector& a, const BlochVector& b, RandomSource& rng);

/// Uniform point on the unit sphere (z uniform in [-1,1], azimuth uniform).
BlochVector random_bloch(RandomSource& rng);

}  // namespace obtsim
