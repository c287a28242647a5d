#include "obtsim/primitives.hpp"

namespace obtsim {

NLBoxOutcome nl_box(Bit u, Bit v, RandomSource& rng, Transcript& t) {
    const Bit x = rng.next_bit();
    const Bit y = x ^ (u & v);
    t.record(Direction::joint, PayloadKind::nlbox_use);
    return {x, y};
}

Bit ideal_ot(Bit b0, Bit b1, Bit c, Transcript& t) {
    t.record(Direction::joint, PayloadKind::ot_use);
    return select(c, b0, b1);
}

Bit send_classical_bit(Bit b, Transcript& t, Direction direction) {
    t.record(direction, PayloadKind::classical_bit);
    return b;
}

QubitState send_qubit(const QubitState& s, Transcript& t, Direction direction) {
    t.record(direction, PayloadKind::qubit);
    return s;
}

}  // namespace obtsim
