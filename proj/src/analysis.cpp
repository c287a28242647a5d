#include "obtsim/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "obtsim/reductions.hpp"

namespace obtsim {

Interval wilson95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson95: trials must be positive");
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // The bound is exactly the endpoint in the degenerate cases.
    const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

ChshClassicalResult chsh_classical_optimum() {
    ChshClassicalResult result{0.0, -1, 4, {}};
    for (int a0 = 0; a0 < 2; ++a0) {
        for (int a1 = 0; a1 < 2; ++a1) {
            for (int b0 = 0; b0 < 2; ++b0) {
                for (int b1 = 0; b1 < 2; ++b1) {
                    const DeterministicStrategy s{{Bit(a0), Bit(a1)}, {Bit(b0), Bit(b1)}};
                    int hits = 0;
                    for (int u = 0; u < 2; ++u) {
                        for (int v = 0; v < 2; ++v) {
                            const Bit x = s.alice[static_cast<std::size_t>(u)];
                            const Bit y = s.bob[static_cast<std::size_t>(v)];
                            if ((x ^ y) == Bit(u & v)) ++hits;
                        }
                    }
                    if (hits > result.best_hits) {
                        result = {hits / 4.0, hits, 4, s};
                    }
                }
            }
        }
    }
    return result;
}

namespace {

BlochVector equatorial(double angle) {
    return {std::cos(angle), std::sin(angle), 0.0};
}

}  // namespace

const ChshSettings& chsh_settings() {
    static const ChshSettings settings{
        equatorial(0.0),
        equatorial(std::numbers::pi / 2.0),
        equatorial(std::numbers::pi / 4.0),
        equatorial(-std::numbers::pi / 4.0),
        Bit(1),
    };
    return settings;
}

double chsh_quantum_exact(const ChshSettings& settings) {
    double total = 0.0;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            const BlochVector& a = u ? settings.alice1 : settings.alice0;
            const BlochVector& b = v ? settings.bob1 : settings.bob0;
            double p_equal = (1.0 - dot(a, b)) / 2.0;  // singlet: P(x == y)
            if (settings.bob_flip.value() == 1) p_equal = 1.0 - p_equal;
            total += (u & v) ? 1.0 - p_equal : p_equal;
        }
    }
    return total / 4.0;
}

double chsh_quantum_exact() { return chsh_quantum_exact(chsh_settings()); }

double chsh_nlbox(RandomSource& rng, std::size_t trials_per_input, const NLBoxFn& box) {
    std::size_t wins = 0;
    std::size_t total = 0;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            for (std::size_t i = 0; i < trials_per_input; ++i) {
                Transcript t;
                const NLBoxOutcome o = box(Bit(u), Bit(v), rng, t);
                if ((o.x ^ o.y) == Bit(u & v)) ++wins;
                ++total;
            }
        }
    }
    return static_cast<double>(wins) / static_cast<double>(total);
}

double chsh_nlbox(RandomSource& rng, std::size_t trials_per_input) {
    return chsh_nlbox(rng, trials_per_input, nl_box);
}

namespace {

Experiment teleport_experiment(std::string name, TeleportVariant variant,
                               const BlochVector& v_alice, const BlochVector& v_bob,
                               double reference) {
    return {std::move(name), reference,
            [variant, v_alice, v_bob](RandomSource& rng, Transcript& t) {
                const TeleportationResult r = variant == TeleportVariant::via_ot
                                                  ? teleport_via_ot(v_alice, v_bob, rng, t)
                                                  : teleport_via_nlbox(v_alice, v_bob, rng, t);
                return r.outcome == Bit(0);
            }};
}

const BlochVector kNorthPole{0.0, 0.0, 1.0};

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{
        "chsh-classical", "chsh-quantum",    "chsh-nlbox",
        "ot-nlbox",       "nlbox-ot",        "ot-quantum",
        "ot-classical-bit", "teleport-ot",   "teleport-nlbox",
    };
    return names;
}

Experiment make_experiment(const std::string& name) {
    if (name == "chsh-classical") {
        const DeterministicStrategy strategy = chsh_classical_optimum().best;
        return {name, 0.75, [strategy](RandomSource& rng, Transcript&) {
                    const Bit u = rng.next_bit();
                    const Bit v = rng.next_bit();
                    const Bit x = strategy.alice[static_cast<std::size_t>(u.value())];
                    const Bit y = strategy.bob[static_cast<std::size_t>(v.value())];
                    return (x ^ y) == (u & v);
                }};
    }
    if (name == "chsh-quantum") {
        const ChshSettings settings = chsh_settings();
        return {name, chsh_quantum_exact(), [settings](RandomSource& rng, Transcript&) {
                    const Bit u = rng.next_bit();
                    const Bit v = rng.next_bit();
                    const BlochVector& a = u.value() ? settings.alice1 : settings.alice0;
                    const BlochVector& b = v.value() ? settings.bob1 : settings.bob0;
                    const auto [x, y] = singlet_sample(a, b, rng);
                    return (x ^ y ^ settings.bob_flip) == (u & v);
                }};
    }
    if (name == "chsh-nlbox") {
        return {name, 1.0, [](RandomSource& rng, Transcript& t) {
                    const Bit u = rng.next_bit();
                    const Bit v = rng.next_bit();
                    const NLBoxOutcome o = nl_box(u, v, rng, t);
                    return (o.x ^ o.y) == (u & v);
                }};
    }
    if (name == "ot-nlbox") {
        return {name, 1.0, [](RandomSource& rng, Transcript& t) {
                    const Bit b0 = rng.next_bit();
                    const Bit b1 = rng.next_bit();
                    const Bit c = rng.next_bit();
                    return ot_from_nlbox(b0, b1, c, rng, t) == select(c, b0, b1);
                }};
    }
    if (name == "nlbox-ot") {
        return {name, 1.0, [](RandomSource& rng, Transcript& t) {
                    const Bit u = rng.next_bit();
                    const Bit v = rng.next_bit();
                    const NLBoxOutcome o = nlbox_from_ot(u, v, rng, t);
                    return (o.x ^ o.y) == (u & v);
                }};
    }
    if (name == "ot-quantum") {
        return {name, kQuantumOtSuccess, [](RandomSource& rng, Transcript& t) {
                    const Bit b0 = rng.next_bit();
                    const Bit b1 = rng.next_bit();
                    const Bit c = rng.next_bit();
                    return ot_via_quantum(b0, b1, c, rng, t) == select(c, b0, b1);
                }};
    }
    if (name == "ot-classical-bit") {
        return {name, kClassicalOtSuccess, [](RandomSource& rng, Transcript& t) {
                    const Bit b0 = rng.next_bit();
                    const Bit b1 = rng.next_bit();
                    const Bit c = rng.next_bit();
                    return ot_via_one_classical_bit(b0, b1, c, t) == select(c, b0, b1);
                }};
    }
    if (name == "teleport-ot") {
        return teleport_experiment(name, TeleportVariant::via_ot, kNorthPole, kNorthPole, 1.0);
    }
    if (name == "teleport-nlbox") {
        return teleport_experiment(name, TeleportVariant::via_nlbox, kNorthPole, kNorthPole, 1.0);
    }
    throw std::invalid_argument("unknown experiment: " + name);
}

EstimateResult run_trials(const Experiment& experiment, std::uint64_t n, std::uint64_t seed,
                          unsigned workers) {
    if (n == 0) throw std::invalid_argument("run_trials: trial count must be positive");
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n));

    const auto count_range = [&experiment, seed](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t wins = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            RandomSource rng(seed, i);
            Transcript t;
            if (experiment.trial(rng, t)) ++wins;
        }
        return wins;
    };

    std::uint64_t successes = 0;
    if (workers == 1) {
        successes = count_range(0, n);
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = n / workers;
        const std::uint64_t extra = n % workers;
        std::uint64_t lo = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
            pool.emplace_back(
                [&partial, &count_range, w, lo, hi] { partial[w] = count_range(lo, hi); });
            lo = hi;
        }
        for (std::thread& th : pool) th.join();
        for (const std::uint64_t p : partial) successes += p;
    }

    const Interval ci = wilson95(successes, n);
    return {n, successes, static_cast<double>(successes) / static_cast<double>(n),
            ci.low, ci.high, seed};
}

std::vector<double> uniform_angle_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("angle grid needs at least 2 points");
    std::vector<double> grid(points);
    for (std::size_t k = 0; k < points; ++k) {
        grid[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return grid;
}

std::vector<SweepRow> sweep_alignment(TeleportVariant protocol, const std::vector<double>& thetas,
                                      std::uint64_t trials_per_point, std::uint64_t seed) {
    if (thetas.empty()) throw std::invalid_argument("sweep_alignment: empty angle grid");
    std::vector<SweepRow> rows;
    rows.reserve(thetas.size());
    const std::string name =
        protocol == TeleportVariant::via_ot ? "teleport-ot" : "teleport-nlbox";
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const double theta = thetas[k];
        const BlochVector v_bob{std::sin(theta), 0.0, std::cos(theta)};
        const double reference = (1.0 + std::cos(theta)) / 2.0;
        const Experiment e = teleport_experiment(name, protocol, kNorthPole, v_bob, reference);
        rows.push_back({theta, run_trials(e, trials_per_point, derive_seed(seed, k)), reference});
    }
    return rows;
}

}  // namespace obtsim
