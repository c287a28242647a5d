#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "obtsim/qubit.hpp"
#include "obtsim/reductions.hpp"

using namespace obtsim;
using testutil::seed_with_first_bit;
using testutil::two_proportions_within_4sigma;
using testutil::within_4sigma;

namespace {

constexpr double kPi = std::numbers::pi;
const double kQ = (2.0 + std::sqrt(2.0)) / 4.0;

// Independent 2x2 oracle for the quantum OT protocol: raw real arithmetic,
// no QubitState involved.
struct Amplitudes {
    double a0;
    double a1;
};

Amplitudes oracle_rotate(double phi, Amplitudes v) {
    return {std::cos(phi) * v.a0 - std::sin(phi) * v.a1,
            std::sin(phi) * v.a0 + std::cos(phi) * v.a1};
}

Amplitudes oracle_hadamard(Amplitudes v) {
    const double k = 1.0 / std::sqrt(2.0);
    return {k * (v.a0 + v.a1), k * (v.a0 - v.a1)};
}

// Success probability of the encoding (m0, m1) = (b0 ^ alpha*b1 ^ beta,
// b1 ^ gamma) with decode flips (d0, d1).
double oracle_success(int b0, int b1, int c, int alpha, int beta, int gamma, int d0, int d1) {
    const int m0 = b0 ^ (alpha & b1) ^ beta;
    const int m1 = b1 ^ gamma;
    const double phi = kPi / 8.0 * (2 * m0 + 4 * m1 - 3);
    Amplitudes s = oracle_rotate(phi, {1.0, 0.0});
    if (c == 1) s = oracle_hadamard(s);
    const double p_zero = s.a0 * s.a0;
    const int wanted = (c ? b1 : b0) ^ (c ? d1 : d0);
    return wanted == 0 ? p_zero : 1.0 - p_zero;
}

bool encoding_uniform(int alpha, int beta, int gamma, int d0, int d1) {
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int c = 0; c < 2; ++c) {
                if (std::abs(oracle_success(b0, b1, c, alpha, beta, gamma, d0, d1) - kQ) > 1e-12) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("sg is the bit-valued signum") {
    CHECK(sg(3.2) == Bit(0));
    CHECK(sg(-0.5) == Bit(1));
    CHECK(sg(0.0) == Bit(0));
    CHECK(sg(1e-300) == Bit(0));
    CHECK(sg(-1e-300) == Bit(1));
}

TEST_CASE("shared sphere randomness satisfies l+ + l- = 2 l1") {
    RandomSource rng(61, 0);
    for (int i = 0; i < 1000; ++i) {
        const SharedSphereRandomness lr = draw_shared_randomness(rng);
        const Vec3 sum = lr.l_plus + lr.l_minus;
        const Vec3 diff = lr.l_plus - lr.l_minus;
        CHECK(std::abs(sum.x - 2.0 * lr.l1.x()) < 1e-12);
        CHECK(std::abs(sum.y - 2.0 * lr.l1.y()) < 1e-12);
        CHECK(std::abs(sum.z - 2.0 * lr.l1.z()) < 1e-12);
        CHECK(std::abs(diff.x - 2.0 * lr.l2.x()) < 1e-12);
        CHECK(std::abs(diff.y - 2.0 * lr.l2.y()) < 1e-12);
        CHECK(std::abs(diff.z - 2.0 * lr.l2.z()) < 1e-12);
    }
}

TEST_CASE("OT from one box use is exact over inputs and box randomness") {
    CHECK(seed_with_first_bit(Bit(0)) != seed_with_first_bit(Bit(1)));
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int c = 0; c < 2; ++c) {
                for (int x = 0; x < 2; ++x) {
                    RandomSource rng(seed_with_first_bit(Bit(x)), 0);
                    Transcript t;
                    const Bit out = ot_from_nlbox(Bit(b0), Bit(b1), Bit(c), rng, t);
                    CHECK(out == Bit(c ? b1 : b0));
                    CHECK(t.nlbox_uses == 1);
                    CHECK(t.classical_bits == 1);
                    CHECK(t.ot_uses == 0);
                    CHECK(t.qubits_sent == 0);
                    CHECK(t.consistent());
                }
            }
        }
    }
    // spot values
    RandomSource rng(1, 0);
    Transcript t;
    CHECK(ot_from_nlbox(Bit(1), Bit(0), Bit(1), rng, t) == Bit(0));
    CHECK(ot_from_nlbox(Bit(1), Bit(0), Bit(0), rng, t) == Bit(1));
}

TEST_CASE("box from one OT use is exact over inputs and r") {
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            for (int r = 0; r < 2; ++r) {
                RandomSource rng(seed_with_first_bit(Bit(r)), 0);
                Transcript t;
                const NLBoxOutcome o = nlbox_from_ot(Bit(u), Bit(v), rng, t);
                CHECK((o.x ^ o.y) == Bit(u & v));
                CHECK(o.x == Bit(r));
                CHECK(t.ot_uses == 1);
                CHECK(t.classical_bits == 0);
                CHECK(t.consistent());
            }
        }
    }
    // (1,1) anti-correlates, (0,1) correlates
    RandomSource rng(2, 0);
    Transcript t;
    const NLBoxOutcome anti = nlbox_from_ot(Bit(1), Bit(1), rng, t);
    CHECK(anti.x == ~anti.y);
    const NLBoxOutcome corr = nlbox_from_ot(Bit(0), Bit(1), rng, t);
    CHECK(corr.x == corr.y);
}

TEST_CASE("box-from-OT first output stays uniform") {
    const std::uint64_t n = 100000;
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        RandomSource rng(62, i);
        Transcript t;
        if (nlbox_from_ot(Bit(1), Bit(1), rng, t).x == Bit(0)) ++zeros;
    }
    CHECK(within_4sigma(static_cast<double>(zeros) / n, 0.5, n));
}

TEST_CASE("OT rebuilt from the OT-backed box is exact") {
    const NLBoxFn composed = [](Bit u, Bit v, RandomSource& rng, Transcript& t) {
        return nlbox_from_ot(u, v, rng, t);
    };
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int c = 0; c < 2; ++c) {
                for (int r = 0; r < 2; ++r) {
                    RandomSource rng(seed_with_first_bit(Bit(r)), 0);
                    Transcript t;
                    const Bit out = ot_from_nlbox(Bit(b0), Bit(b1), Bit(c), rng, t, composed);
                    CHECK(out == Bit(c ? b1 : b0));
                    CHECK(t.ot_uses == 1);
                    CHECK(t.classical_bits == 1);
                    CHECK(t.nlbox_uses == 0);
                }
            }
        }
    }
}

TEST_CASE("teleportation via OT: aligned vectors give outcome 0 on every run") {
    const BlochVector z{0.0, 0.0, 1.0};
    for (std::uint64_t seed = 100; seed < 104; ++seed) {
        for (std::uint64_t i = 0; i < 10000; ++i) {
            RandomSource rng(seed, i);
            Transcript t;
            const TeleportationResult r = teleport_via_ot(z, z, rng, t);
            CHECK(r.outcome == Bit(0));
            CHECK(t.ot_uses == 1);
            CHECK(t.classical_bits == 0);
            CHECK(t.qubits_sent == 0);
            CHECK(t.nlbox_uses == 0);
        }
    }
}

TEST_CASE("teleportation via OT reproduces the Born rule statistically") {
    const std::uint64_t n = 20000;
    const BlochVector v_alice{0.0, 0.0, 1.0};

    // orthogonal and pi/4 special cases plus seeded random pairs
    RandomSource pair_rng(63, 0);
    for (int pair = 0; pair < 8; ++pair) {
        BlochVector a = pair == 0 ? v_alice : random_bloch(pair_rng);
        BlochVector b = pair == 0 ? BlochVector{1.0, 0.0, 0.0} : random_bloch(pair_rng);
        if (pair == 1) {
            a = v_alice;
            b = BlochVector{std::sin(kPi / 4.0), 0.0, std::cos(kPi / 4.0)};
        }
        const double p = (1.0 + dot(a, b)) / 2.0;
        std::uint64_t zeros = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            RandomSource rng(derive_seed(64, static_cast<std::uint64_t>(pair)), i);
            Transcript t;
            if (teleport_via_ot(a, b, rng, t).outcome == Bit(0)) ++zeros;
        }
        CHECK(within_4sigma(static_cast<double>(zeros) / n, p, n));
    }

    // anti-aligned vectors give outcome 1 on every run
    const BlochVector minus_z{0.0, 0.0, -1.0};
    for (std::uint64_t i = 0; i < 10000; ++i) {
        RandomSource rng(65, i);
        Transcript t;
        CHECK(teleport_via_ot(v_alice, minus_z, rng, t).outcome == Bit(1));
    }
}

TEST_CASE("teleportation result carries its own run transcript") {
    const BlochVector z{0.0, 0.0, 1.0};
    RandomSource rng(66, 0);
    Transcript t;
    const TeleportationResult first = teleport_via_ot(z, z, rng, t);
    const TeleportationResult second = teleport_via_ot(z, z, rng, t);
    CHECK(first.transcript.ot_uses == 1);
    CHECK(second.transcript.ot_uses == 1);
    CHECK(t.ot_uses == 2);
}

TEST_CASE("teleportation via box + bit matches the OT variant") {
    const BlochVector z{0.0, 0.0, 1.0};

    // budget
    RandomSource rng(67, 0);
    Transcript t;
    const TeleportationResult r = teleport_via_nlbox(z, z, rng, t);
    CHECK(r.outcome == Bit(0));
    CHECK(t.nlbox_uses == 1);
    CHECK(t.classical_bits == 1);
    CHECK(t.ot_uses == 0);
    CHECK(t.qubits_sent == 0);

    // aligned determinism
    for (std::uint64_t i = 0; i < 10000; ++i) {
        RandomSource trial_rng(68, i);
        Transcript trial_t;
        CHECK(teleport_via_nlbox(z, z, trial_rng, trial_t).outcome == Bit(0));
    }

    // distributional equality against teleport_via_ot on random pairs
    const std::uint64_t n = 20000;
    RandomSource pair_rng(69, 0);
    for (int pair = 0; pair < 6; ++pair) {
        const BlochVector a = random_bloch(pair_rng);
        const BlochVector b = random_bloch(pair_rng);
        std::uint64_t ot_zeros = 0;
        std::uint64_t box_zeros = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            RandomSource r1(derive_seed(70, static_cast<std::uint64_t>(pair)), i);
            RandomSource r2(derive_seed(71, static_cast<std::uint64_t>(pair)), i);
            Transcript t1;
            Transcript t2;
            if (teleport_via_ot(a, b, r1, t1).outcome == Bit(0)) ++ot_zeros;
            if (teleport_via_nlbox(a, b, r2, t2).outcome == Bit(0)) ++box_zeros;
        }
        CHECK(two_proportions_within_4sigma(ot_zeros, n, box_zeros, n));
    }
}

TEST_CASE("quantum OT encoding calibration: exact enumeration oracle") {
    // Enumerate every relabeling (b0 ^ alpha*b1 ^ beta, b1 ^ gamma) and decode
    // pair (d0, d1); exactly the four label-equivalent encodings succeed with
    // cos^2(pi/8) on all 8 inputs, and the implemented one is among them.
    int uniform_count = 0;
    bool implemented_choice_found = false;
    for (int alpha = 0; alpha < 2; ++alpha) {
        for (int beta = 0; beta < 2; ++beta) {
            for (int gamma = 0; gamma < 2; ++gamma) {
                for (int d0 = 0; d0 < 2; ++d0) {
                    for (int d1 = 0; d1 < 2; ++d1) {
                        if (!encoding_uniform(alpha, beta, gamma, d0, d1)) continue;
                        ++uniform_count;
                        CHECK(alpha == 1);  // m0 must mix b1 in
                        if (alpha == 1 && beta == 0 && gamma == 1 && d0 == 0 && d1 == 0) {
                            implemented_choice_found = true;
                        }
                    }
                }
            }
        }
    }
    CHECK(uniform_count == 4);
    CHECK(implemented_choice_found);

    // the implementation uses (m0, m1) = (b0 ^ b1, ~b1) with decode flip 0
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            const auto [m0, m1] = qrac_relabel(Bit(b0), Bit(b1));
            CHECK(m0 == (Bit(b0) ^ Bit(b1)));
            CHECK(m1 == ~Bit(b1));
        }
    }
    CHECK(qrac_decode_flip(Bit(0)) == Bit(0));
    CHECK(qrac_decode_flip(Bit(1)) == Bit(0));
}

TEST_CASE("quantum OT analytic success equals cos^2(pi/8) on all inputs") {
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int c = 0; c < 2; ++c) {
                const double p = ot_via_quantum_success_probability(Bit(b0), Bit(b1), Bit(c));
                CHECK(std::abs(p - kQ) < 1e-12);
                // cross-check against the raw-arithmetic oracle
                CHECK(std::abs(p - oracle_success(b0, b1, c, 1, 0, 1, 0, 0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("quantum OT Monte-Carlo success and resource budget") {
    const std::uint64_t n = 200000;
    std::uint64_t wins = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        RandomSource rng(72, i);
        const Bit b0 = rng.next_bit();
        const Bit b1 = rng.next_bit();
        const Bit c = rng.next_bit();
        Transcript t;
        const Bit out = ot_via_quantum(b0, b1, c, rng, t);
        CHECK(t.qubits_sent == 1);
        CHECK(t.classical_bits == 0);
        CHECK(t.ot_uses == 0);
        if (out == select(c, b0, b1)) ++wins;
    }
    CHECK(within_4sigma(static_cast<double>(wins) / n, kQ, n));
}

TEST_CASE("one classical bit gives exactly 0.75 on uniform inputs") {
    {
        Transcript t;
        CHECK(ot_via_one_classical_bit(Bit(1), Bit(0), Bit(0), t) == Bit(1));  // correct
        CHECK(ot_via_one_classical_bit(Bit(0), Bit(1), Bit(1), t) == Bit(0));  // incorrect
        CHECK(t.classical_bits == 2);
    }
    int correct = 0;
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int c = 0; c < 2; ++c) {
                Transcript t;
                const Bit out = ot_via_one_classical_bit(Bit(b0), Bit(b1), Bit(c), t);
                if (out == Bit(c ? b1 : b0)) ++correct;
                CHECK(t.classical_bits == 1);
            }
        }
    }
    CHECK(correct == 6);
    CHECK(correct / 8.0 == 0.75);
}
