#pragma once

#include <cstddef>
#include <vector>

namespace obtsim {

enum class Direction { alice_to_bob, bob_to_alice, joint };
enum class PayloadKind { nlbox_use, ot_use, classical_bit, qubit };

struct Message {
    Direction direction;
    PayloadKind kind;
};

// Per-run resource ledger. Every primitive call bumps exactly one counter and
// appends exactly one message, so the counters can be audited against the log.
struct Transcript {
    std::size_t nlbox_uses = 0;
    std::size_t ot_uses = 0;
    std::size_t classical_bits = 0;
    std::size_t qubits_sent = 0;
    std::vector<Message> messages;

    void record(Direction direction, PayloadKind kind);
    void append(const Transcript& other);

    /// Counters match the message log.
    [[nodiscard]] bool consistent() const;
};

}  // namespace obtsim
