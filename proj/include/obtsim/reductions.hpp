#pragma once

#include <numbers>
#include <utility>

#include "obtsim/bit.hpp"
#include "obtsim/primitives.hpp"
#include "obtsim/qubit.hpp"
#include "obtsim/random.hpp"
#include "obtsim/transcript.hpp"

namespace obtsim {

/// cos^2(pi/8): success probability of oblivious transfer over one qubit.
inline constexpr double kQuantumOtSuccess = (2.0 + std::numbers::sqrt2) / 4.0;

/// Success probability of oblivious transfer over one classical bit.
inline constexpr double kClassicalOtSuccess = 0.75;

/// Bit-valued signum: 0 for x >= 0, 1 otherwise.
Bit sg(double x);

// The randomness shared by both teleportation parties: two independent
// uniform sphere vectors and their (unnormalized) sum and difference.
struct SharedSphereRandomness {
    BlochVector l1;
    BlochVector l2;
    Vec3 l_plus;   // l1 + l2
    Vec3 l_minus;  // l1 - l2
};

/// Draws (l1, l2); resamples the measure-zero degenerate case l1 = +/- l2.
SharedSphereRandomness draw_shared_randomness(RandomSource& rng);

struct TeleportationResult {
    Bit outcome;
    Transcript transcript;  // resources consumed by this run
};

/// OT from one non-local box use plus one classical bit: the parties feed
/// (b0 ^ b1, c) to the box, the sender transmits x ^ b0, and the receiver
/// xors it with his box output. Exact for every input and box outcome.
Bit ot_from_nlbox(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t);

/// Same reduction with a caller-supplied box (e.g. one built from OT).
Bit ot_from_nlbox(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t, const NLBoxFn& box);

/// Non-local box from one OT use: sender draws random r, inputs (r, r ^ u);
/// outputs are (r, r ^ uv). No communication.
NLBoxOutcome nlbox_from_ot(Bit u, Bit v, RandomSource& rng, Transcript& t);

/// Classical teleportation of the state v_alice measured along v_bob, using
/// one oblivious transfer and shared sphere randomness. The outcome is 0
/// with probability (1 + v_alice.v_bob)/2, exactly the quantum statistics.
TeleportationResult teleport_via_ot(const BlochVector& v_alice, const BlochVector& v_bob,
                                    RandomSource& rng, Transcript& t);

/// Same protocol with the OT realized by one non-local box use plus one
/// classical bit.
TeleportationResult teleport_via_nlbox(const BlochVector& v_alice, const BlochVector& v_bob,
                                       RandomSource& rng, Transcript& t);

/// Approximate OT over a one-qubit channel: succeeds with cos^2(pi/8) for
/// every input triple.
Bit ot_via_quantum(Bit b0, Bit b1, Bit c, RandomSource& rng, Transcript& t);

/// Closed-form success probability of ot_via_quantum for one input triple,
/// computed from the prepared amplitudes without sampling.
double ot_via_quantum_success_probability(Bit b0, Bit b1, Bit c);

/// Baseline OT over one classical bit: the sender forwards b0 and the
/// receiver outputs it. Succeeds with probability 0.75 on uniform inputs.
Bit ot_via_one_classical_bit(Bit b0, Bit b1, Bit c, Transcript& t);

// Calibration constants of the quantum OT encoding (see reductions.cpp).
std::pair<Bit, Bit> qrac_relabel(Bit b0, Bit b1);
double qrac_angle(Bit m0, Bit m1);
Bit qrac_decode_flip(Bit c);

}  // namespace obtsim
