#include "obtsim/transcript.hpp"

namespace obtsim {

void Transcript::record(Direction direction, PayloadKind kind) {
    switch (kind) {
        case PayloadKind::nlbox_use: ++nlbox_uses; break;
        case PayloadKind::ot_use: ++ot_uses; break;
        case PayloadKind::classical_bit: ++classical_bits; break;
        case PayloadKind::qubit: ++qubits_sent; break;
    }
    messages.push_back({direction, kind});
}

void Transcript::append(const Transcript& other) {
    nlbox_uses += other.nlbox_uses;
    ot_uses += other.ot_uses;
    classical_bits += other.classical_bits;
    qubits_sent += other.qubits_sent;
    messages.insert(messages.end(), other.messages.begin(), other.messages.end());
}

bool Transcript::consistent() const {
    std::size_t boxes = 0;
    std::size_t ots = 0;
    std::size_t bits = 0;
    std::size_t qubits = 0;
    for (const Message& m : messages) {
        switch (m.kind) {
            case PayloadKind::nlbox_use: ++boxes; break;
            case PayloadKind::ot_use: ++ots; break;
            case PayloadKind::classical_bit: ++bits; break;
            case PayloadKind::qubit: ++qubits; break;
        }
    }
    return boxes == nlbox_uses && ots == ot_uses && bits == classical_bits &&
           qubits == qubits_sent;
}

}  // namespace obtsim
