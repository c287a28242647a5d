#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "obtsim/bit.hpp"
#include "obtsim/primitives.hpp"
#include "obtsim/qubit.hpp"
#include "obtsim/random.hpp"
#include "obtsim/transcript.hpp"

namespace obtsim {

// Monte-Carlo estimate of a success probability with a 95% Wilson interval.
struct EstimateResult {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t seed = 0;
};

struct Interval {
    double low;
    double high;
};

/// 95% Wilson score interval; well behaved at p_hat = 0 and 1.
Interval wilson95(std::uint64_t successes, std::uint64_t trials);

// One deterministic correlation-game strategy: an output per input bit.
struct DeterministicStrategy {
    std::array<Bit, 2> alice;
    std::array<Bit, 2> bob;
};

struct ChshClassicalResult {
    double probability;  // best_hits / input_count
    int best_hits;
    int input_count;
    DeterministicStrategy best;
};

/// Enumerates all 16 deterministic strategy pairs against x ^ y = u & v over
/// the 4 equiprobable inputs. The maximum is 3/4.
ChshClassicalResult chsh_classical_optimum();

// Measurement settings for the game played on singlet correlations. The
// second party reports the flipped outcome; with these axes every input pair
// then wins with probability cos^2(pi/8).
struct ChshSettings {
    BlochVector alice0;
    BlochVector alice1;
    BlochVector bob0;
    BlochVector bob1;
    Bit bob_flip;
};

const ChshSettings& chsh_settings();

/// Exact game value computed from the closed-form singlet distribution.
double chsh_quantum_exact();
double chsh_quantum_exact(const ChshSettings& settings);

/// Game success frequency using a non-local box, exhaustively over the 4
/// inputs; equals 1 on every trial.
double chsh_nlbox(RandomSource& rng, std::size_t trials_per_input = 1000);
double chsh_nlbox(RandomSource& rng, std::size_t trials_per_input, const NLBoxFn& box);

// A named protocol plus fixed parameters; trial() runs one round with the
// supplied per-trial stream and reports success.
struct Experiment {
    std::string name;
    double reference = 0.0;  // target success probability
    std::function<bool(RandomSource&, Transcript&)> trial;
};

/// Builds one of the named experiments; throws on an unknown name.
Experiment make_experiment(const std::string& name);
const std::vector<std::string>& experiment_names();

/// Runs n independent trials with per-trial streams derived from
/// (seed, trial-index). The result is identical for any worker count.
EstimateResult run_trials(const Experiment& experiment, std::uint64_t n, std::uint64_t seed,
                          unsigned workers = 1);

enum class TeleportVariant { via_ot, via_nlbox };

struct SweepRow {
    double theta;
    EstimateResult estimate;
    double reference;  // (1 + cos theta)/2
};

/// Evenly spaced angles from 0 to pi inclusive; points >= 2.
std::vector<double> uniform_angle_grid(std::size_t points);

/// Runs the chosen teleportation protocol at each relative angle theta
/// between the sent state and the measurement axis.
std::vector<SweepRow> sweep_alignment(TeleportVariant protocol, const std::vector<double>& thetas,
                                      std::uint64_t trials_per_point, std::uint64_t seed);

}  // namespace obtsim
