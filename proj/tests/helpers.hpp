#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "obtsim/bit.hpp"
#include "obtsim/random.hpp"

namespace testutil {

inline bool within_4sigma(double p_hat, double p, std::uint64_t n) {
    const double bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return std::abs(p_hat - p) <= bound;
}

inline bool two_proportions_within_4sigma(std::uint64_t s1, std::uint64_t n1, std::uint64_t s2,
                                          std::uint64_t n2) {
    const double p1 = static_cast<double>(s1) / static_cast<double>(n1);
    const double p2 = static_cast<double>(s2) / static_cast<double>(n2);
    const double pooled = static_cast<double>(s1 + s2) / static_cast<double>(n1 + n2);
    const double variance = pooled * (1.0 - pooled) *
                            (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2));
    if (variance == 0.0) return p1 == p2;
    return std::abs(p1 - p2) <= 4.0 * std::sqrt(variance);
}

// Smallest seed whose stream-0 first bit equals `wanted`; drives both branches
// of protocol-internal coin flips exhaustively.
inline std::uint64_t seed_with_first_bit(obtsim::Bit wanted) {
    for (std::uint64_t s = 0;; ++s) {
        obtsim::RandomSource probe(s, 0);
        if (probe.next_bit() == wanted) return s;
    }
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string cli_path() {
    const char* p = std::getenv("OBTSIM_CLI");
    return p == nullptr ? std::string{} : std::string{p};
}

}  // namespace testutil
