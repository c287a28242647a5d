#pragma once

#include <functional>

#include "obtsim/bit.hpp"
#include "obtsim/qubit.hpp"
#include "obtsim/random.hpp"
#include "obtsim/transcript.hpp"

namespace obtsim {

struct NLBoxOutcome {
    Bit x;  // first party
    Bit y;  // second party
};

/// Ideal non-local box: x is a fresh uniform bit, y = x ^ (u & v).
/// Metered as one box use; the box is a resource, not communication.
NLBoxOutcome nl_box(Bit u, Bit v, RandomSource& rng, Transcript& t);

/// Ideal chosen 1-out-of-2 oblivious transfer: returns b_c exactly.
Bit ideal_ot(Bit b0, Bit b1, Bit c, Transcript& t);

/// Noiseless one-bit classical channel; metered as one classical bit.
Bit send_classical_bit(Bit b, Transcript& t, Direction direction = Direction::alice_to_bob);

/// Noiseless one-qubit quantum channel; metered as one qubit sent.
QubitState send_qubit(const QubitState& s, Transcript& t,
                      Direction direction = Direction::alice_to_bob);

/// Anything with the nl_box call shape; lets reductions swap in a box
/// built from other resources.
using NLBoxFn = std::function<NLBoxOutcome(Bit, Bit, RandomSource&, Transcript&)>;

}  // namespace obtsim
