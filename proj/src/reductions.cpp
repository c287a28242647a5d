#include "obtsim/reductions.hpp"

#include <cmath>
#include <numbers>

namespace obtsim {

Bit sg(double x) { return Bit(x >= 0.0 ? 0 : 1); }

namespace {

constexpr double kDegenerateTolerance = 1e-12;

bool nearly_zero(const Vec3& v) {
    return std::abs(v.x) < kDegenerateTolerance && std::abs(v.y) < kDegenerateTolerance &&
           std::abs(v.z) < kDegenerateTolerance;
}

}  // namespace

SharedSphereRandomness draw_shared_randomness(RandomSource& rng) {
    for (;;) {
        const BlochVector l1 = random_bloch(rng);
        const BlochVector l2 = random_bloch(rng);
        const Vec3 l_plus = l1.vec() + l2.vec();
        const Vec3 l_minus = l1.vec() - l2.vec();
        // l1 = +/- l2 would hand sg an exactly zero dot product; the event has
        // probability zero, so resample.
        if (nearly_zero(l_plus) || nearly_zero(l_minus)) continue;
        return {l1, l2, l_plus, l_minus};
    }
}

Bit ot_from_nlbox(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t, const NLBoxFn& box) {
    const NLBoxOutcome o = box(b0 ^ b1, c, rng, t);
    const Bit received = send_classical_bit(o.x ^ b0, t);
    return received ^ o.y;  // b0 ^ (b0 ^ b1) c = b_c
}

Bit ot_from_nlbox(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t) {
    return ot_from_nlbox(b0, b1, c, rng, t, nl_box);
}

NLBoxOutcome nlbox_from_ot(Bit u, Bit v, RandomSource& rng, Transcript& t) {
    const Bit r = rng.next_bit();
    const Bit receiver_output = ideal_ot(r, r ^ u, v, t);  // r ^ uv
    return {r, receiver_output};
}

namespace {

// Output labeling constant. With sg(x >= 0) = 0 and measurement outcome 0
// meaning "along +axis", epsilon = 0 makes aligned parties (v_alice == v_bob)
// produce outcome 0 on every run; epsilon = 1 would label the -axis outcome
// instead.
constexpr int kTeleportEpsilon = 0;

template <typename OtCall>
TeleportationResult teleport_core(const BlochVector& v_alice, const BlochVector& v_bob,
                                  RandomSource& rng, Transcript& t, OtCall&& ot) {
    Transcript run;
    const SharedSphereRandomness lr = draw_shared_randomness(rng);
    const Bit b0 = sg(dot(v_alice, lr.l1));
    const Bit b1 = sg(dot(v_alice, lr.l2));
    const Bit t_plus = sg(dot(v_bob, lr.l_plus));
    const Bit t_minus = sg(dot(v_bob, lr.l_minus));
    const Bit choice = t_plus ^ t_minus;
    const Bit z = ot(b0, b1, choice, run);
    const Bit outcome = z ^ t_plus ^ Bit(kTeleportEpsilon);
    t.append(run);
    return {outcome, std::move(run)};
}

}  // namespace

TeleportationResult teleport_via_ot(const BlochVector& v_alice, const BlochVector& v_bob,
                                    RandomSource& rng, Transcript& t) {
    return teleport_core(v_alice, v_bob, rng, t, [](Bit b0, Bit b1, Bit c, Transcript& run) {
        return ideal_ot(b0, b1, c, run);
    });
}

TeleportationResult teleport_via_nlbox(const BlochVector& v_alice, const BlochVector& v_bob,
                                       RandomSource& rng, Transcript& t) {
    return teleport_core(v_alice, v_bob, rng, t, [&rng](Bit b0, Bit b1, Bit c, Transcript& run) {
        return ot_from_nlbox(b0, b1, c, rng, run);
    });
}

// Encoding calibration for OT over one qubit. The relabeling places the four
// prepared states at rotation angles {(0,0): pi/8, (1,0): 3pi/8, (0,1): -pi/8,
// (1,1): -3pi/8}, so a computational-basis measurement decodes b0 and a
// Hadamard followed by the same measurement decodes b1, each with success
// cos^2(pi/8) on every input. The decode flip is 0 for both choice bits under
// this relabeling; the quarter-turn variant (b0 ^ b1, b1) with flip 1 is the
// same protocol with relabeled internal states.
std::pair<Bit, Bit> qrac_relabel(Bit b0, Bit b1) { return {b0 ^ b1, ~b1}; }

double qrac_angle(Bit m0, Bit m1) {
    return std::numbers::pi / 8.0 * (2 * m0.value() + 4 * m1.value() - 3);
}

Bit qrac_decode_flip(Bit /*c*/) { return Bit(0); }

Bit ot_via_quantum(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t) {
    const auto [m0, m1] = qrac_relabel(b0, b1);
    const QubitState prepared = rotate(QubitState::ket0(), qrac_angle(m0, m1));
    QubitState received = send_qubit(prepared, t);
    if (c.value() == 1) received = hadamard(received);
    const Bit outcome = measure_computational(received, rng);
    return outcome ^ qrac_decode_flip(c);
}

double ot_via_quantum_success_probability(Bit b0, Bit b1, Bit c) {
    const auto [m0, m1] = qrac_relabel(b0, b1);
    QubitState state = rotate(QubitState::ket0(), qrac_angle(m0, m1));
    if (c.value() == 1) state = hadamard(state);
    const double p_zero = born_probability_zero(state);
    const Bit wanted_outcome = select(c, b0, b1) ^ qrac_decode_flip(c);
    return wanted_outcome.value() == 0 ? p_zero : 1.0 - p_zero;
}

Bit ot_via_one_classical_bit(Bit b0, Bit /*b1*/, Bit /*c*/, Transcript& t) {
    // The sender always forwards b0; the receiver outputs the received bit.
    return send_classical_bit(b0, t);
}

}  // namespace obtsim
