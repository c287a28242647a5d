#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "obtsim/analysis.hpp"
#include "obtsim/primitives.hpp"
#include "obtsim/qubit.hpp"
#include "obtsim/reductions.hpp"

namespace py = pybind11;

using namespace obtsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "simulation of oblivious transfer, non-local boxes, and one-qubit channels";

    py::class_<RandomSource>(m, "RandomSource")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
        .def("next_u64", &RandomSource::next_u64)
        .def("next_double", &RandomSource::next_double)
        .def("next_bit", [](RandomSource& rng) { return rng.next_bit().value(); })
        .def_property_readonly("seed", &RandomSource::seed)
        .def_property_readonly("stream", &RandomSource::stream)
        .def_property_readonly("draws", &RandomSource::draws);

    py::class_<Transcript>(m, "Transcript")
        .def(py::init<>())
        .def_readonly("nlbox_uses", &Transcript::nlbox_uses)
        .def_readonly("ot_uses", &Transcript::ot_uses)
        .def_readonly("classical_bits", &Transcript::classical_bits)
        .def_readonly("qubits_sent", &Transcript::qubits_sent)
        .def_property_readonly("message_count",
                               [](const Transcript& t) { return t.messages.size(); })
        .def("consistent", &Transcript::consistent);

    py::class_<QubitState>(m, "QubitState")
        .def(py::init<std::complex<double>, std::complex<double>>(), py::arg("amp0"),
             py::arg("amp1"))
        .def_static("ket0", &QubitState::ket0)
        .def_static("ket1", &QubitState::ket1)
        .def_property_readonly("amp0", &QubitState::amp0)
        .def_property_readonly("amp1", &QubitState::amp1);

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("normalized", &BlochVector::normalized)
        .def_property_readonly("x", &BlochVector::x)
        .def_property_readonly("y", &BlochVector::y)
        .def_property_readonly("z", &BlochVector::z);

    py::class_<EstimateResult>(m, "EstimateResult")
        .def_readonly("trials", &EstimateResult::trials)
        .def_readonly("successes", &EstimateResult::successes)
        .def_readonly("p_hat", &EstimateResult::p_hat)
        .def_readonly("ci95_low", &EstimateResult::ci95_low)
        .def_readonly("ci95_high", &EstimateResult::ci95_high)
        .def_readonly("seed", &EstimateResult::seed);

    py::class_<TeleportationResult>(m, "TeleportationResult")
        .def_property_readonly("outcome",
                               [](const TeleportationResult& r) { return r.outcome.value(); })
        .def_readonly("transcript", &TeleportationResult::transcript);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("theta", &SweepRow::theta)
        .def_readonly("estimate", &SweepRow::estimate)
        .def_readonly("reference", &SweepRow::reference);

    py::class_<ChshClassicalResult>(m, "ChshClassicalResult")
        .def_readonly("probability", &ChshClassicalResult::probability)
        .def_readonly("best_hits", &ChshClassicalResult::best_hits)
        .def_readonly("input_count", &ChshClassicalResult::input_count)
        .def_property_readonly("best_alice",
                               [](const ChshClassicalResult& r) {
                                   return std::vector<int>{r.best.alice[0].value(),
                                                           r.best.alice[1].value()};
                               })
        .def_property_readonly("best_bob", [](const ChshClassicalResult& r) {
            return std::vector<int>{r.best.bob[0].value(), r.best.bob[1].value()};
        });

    // single-qubit operations
    m.def("rotate", &rotate, py::arg("state"), py::arg("phi"));
    m.def("hadamard", &hadamard, py::arg("state"));
    m.def("born_probability_zero", &born_probability_zero, py::arg("state"));
    m.def("measure_computational", [](const QubitState& s, RandomSource& rng) {
        return measure_computational(s, rng).value();
    });
    m.def("measure_along", [](const BlochVector& state, const BlochVector& axis,
                              RandomSource& rng) { return measure_along(state, axis, rng).value(); });
    m.def("singlet_sample", [](const BlochVector& a, const BlochVector& b, RandomSource& rng) {
        const auto [x, y] = singlet_sample(a, b, rng);
        return py::make_tuple(x.value(), y.value());
    });
    m.def("random_bloch", &random_bloch, py::arg("rng"));
    m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("index"));

    // metered resources
    m.def("nl_box", [](int u, int v, RandomSource& rng, Transcript& t) {
        const NLBoxOutcome o = nl_box(Bit(u), Bit(v), rng, t);
        return py::make_tuple(o.x.value(), o.y.value());
    });
    m.def("ideal_ot", [](int b0, int b1, int c, Transcript& t) {
        return ideal_ot(Bit(b0), Bit(b1), Bit(c), t).value();
    });
    m.def("send_classical_bit",
          [](int b, Transcript& t) { return send_classical_bit(Bit(b), t).value(); });
    m.def("send_qubit", [](const QubitState& s, Transcript& t) { return send_qubit(s, t); });

    // protocol reductions
    m.def("sg", [](double x) { return sg(x).value(); });
    m.def("ot_from_nlbox", [](int b0, int b1, int c, RandomSource& rng, Transcript& t) {
        return ot_from_nlbox(Bit(b0), Bit(b1), Bit(c), rng, t).value();
    });
    m.def("nlbox_from_ot", [](int u, int v, RandomSource& rng, Transcript& t) {
        const NLBoxOutcome o = nlbox_from_ot(Bit(u), Bit(v), rng, t);
        return py::make_tuple(o.x.value(), o.y.value());
    });
    m.def("teleport_via_ot", &teleport_via_ot, py::arg("v_alice"), py::arg("v_bob"),
          py::arg("rng"), py::arg("transcript"));
    m.def("teleport_via_nlbox", &teleport_via_nlbox, py::arg("v_alice"), py::arg("v_bob"),
          py::arg("rng"), py::arg("transcript"));
    m.def("ot_via_quantum", [](int b0, int b1, int c, RandomSource& rng, Transcript& t) {
        return ot_via_quantum(Bit(b0), Bit(b1), Bit(c), rng, t).value();
    });
    m.def("ot_via_quantum_success_probability", [](int b0, int b1, int c) {
        return ot_via_quantum_success_probability(Bit(b0), Bit(b1), Bit(c));
    });
    m.def("ot_via_one_classical_bit", [](int b0, int b1, int c, Transcript& t) {
        return ot_via_one_classical_bit(Bit(b0), Bit(b1), Bit(c), t).value();
    });

    // game values and estimation harness
    m.def("chsh_classical_optimum", &chsh_classical_optimum);
    m.def("chsh_quantum_exact", py::overload_cast<>(&chsh_quantum_exact));
    m.def(
        "chsh_nlbox",
        [](RandomSource& rng, std::size_t trials_per_input) {
            return chsh_nlbox(rng, trials_per_input);
        },
        py::arg("rng"), py::arg("trials_per_input") = 1000);
    m.def(
        "run_trials",
        [](const std::string& experiment, std::uint64_t trials, std::uint64_t seed,
           unsigned workers) {
            return run_trials(make_experiment(experiment), trials, seed, workers);
        },
        py::arg("experiment"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);
    m.def(
        "sweep_alignment",
        [](const std::string& protocol, std::size_t points, std::uint64_t trials,
           std::uint64_t seed) {
            if (protocol != "teleport-ot" && protocol != "teleport-nlbox") {
                throw std::invalid_argument("unknown protocol: " + protocol);
            }
            const TeleportVariant variant = protocol == "teleport-ot"
                                                ? TeleportVariant::via_ot
                                                : TeleportVariant::via_nlbox;
            return sweep_alignment(variant, uniform_angle_grid(points), trials, seed);
        },
        py::arg("protocol"), py::arg("points"), py::arg("trials"), py::arg("seed"));
    m.def("experiment_names", [] { return experiment_names(); });

    m.attr("QUANTUM_OT_SUCCESS") = kQuantumOtSuccess;
    m.attr("CLASSICAL_OT_SUCCESS") = kClassicalOtSuccess;
#ifdef OBTSIM_VERSION
    m.attr("__version__") = OBTSIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
