// Copyright 2026 The QECCD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qeccd/channels.hpp"
#include "qeccd/cli.hpp"
#include "qeccd/errors.hpp"
#include "qeccd/estimation.hpp"
#include "qeccd/protocol.hpp"
#include "qeccd/serialization.hpp"
#include "qeccd/stabilizer_code.hpp"

namespace py = pybind11;
using namespace qeccd;

namespace {

std::vector<std::string> labels(const ErrorBasis& basis) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(basis.label(i));
    return out;
}

py::dict characterize(const StabilizerCode& code, const Channel& channel, std::optional<std::vector<Complex>> beta,
                      const std::string& mode, std::uint64_t shots, std::uint64_t seed) {
    if (mode != "exact" && mode != "sampled") {
        throw ParseError("mode must be 'exact' or 'sampled'");
    }
    check_support(code, channel);
    std::vector<Complex> amplitudes = beta ? *beta : uniform_beta(code);
    Plan plan = plan_configurations(code);
    auto records = simulate_plan(code, amplitudes, channel, plan);
    if (mode == "sampled") {
        records = sample_records(records, SamplingPolicy{shots, seed});
    }
    Reconstruction rec = reconstruct(code, plan, records);
    ProcessMatrix oracle = chi_from_kraus(channel, code.error_basis());
    ErrorReport err = compare(rec.chi, oracle);

    py::dict out;
    out["labels"] = labels(code.error_basis());
    out["chi"] = rec.chi.matrix();
    out["oracle_chi"] = oracle.matrix();
    out["configurations"] = plan.configurations.size();
    out["residuals"] = rec.residuals;
    out["frobenius_error"] = err.frobenius_error;
    out["max_entry_error"] = err.max_entry_error;
    out["min_eigenvalue"] = rec.validity.min_eigenvalue;
    out["trace"] = rec.validity.trace;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Channel characterization from stabilizer syndrome statistics";

    auto base = py::register_exception<Error>(m, "QeccdError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    auto validation = py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<ReconstructionError>(m, "ReconstructionError", base.ptr());
    py::register_exception<SyndromeCollisionError>(m, "SyndromeCollisionError", validation.ptr());
    py::register_exception<SupportError>(m, "SupportError", validation.ptr());

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init(&PauliOperator::from_string), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("x_mask", &PauliOperator::x_mask)
        .def_property_readonly("z_mask", &PauliOperator::z_mask)
        .def_property_readonly("phase_exp", &PauliOperator::phase_exp)
        .def("is_hermitian", &PauliOperator::is_hermitian)
        .def("to_matrix", [](const PauliOperator& p) { return to_matrix(p); })
        .def("__mul__", [](const PauliOperator& a, const PauliOperator& b) { return a * b; })
        .def("__eq__", [](const PauliOperator& a, const PauliOperator& b) { return a == b; })
        .def("__str__", &PauliOperator::str)
        .def("__repr__", [](const PauliOperator& p) { return "PauliOperator('" + p.str() + "')"; });

    m.def(
        "pauli_mul",
        [](const PauliOperator& a, const PauliOperator& b) {
            auto [g, r] = pauli_mul(a, b);
            return py::make_tuple(g.value(), r);
        },
        "Product split into (factor, Hermitian word).");
    m.def("commutes", &commutes);

    py::class_<HammingBound>(m, "HammingBound")
        .def_readonly("satisfied", &HammingBound::satisfied)
        .def_readonly("perfect", &HammingBound::perfect);
    m.def("hamming_bound", &hamming_bound, py::arg("n"), py::arg("k"), py::arg("m"));

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def_property_readonly("name", &StabilizerCode::name)
        .def_property_readonly("n", &StabilizerCode::n)
        .def_property_readonly("k", &StabilizerCode::k)
        .def_property_readonly("noisy_coords", &StabilizerCode::noisy_coords)
        .def_property_readonly("generators",
                               [](const StabilizerCode& c) {
                                   std::vector<std::string> out;
                                   for (const auto& g : c.generators()) out.push_back(g.str());
                                   return out;
                               })
        .def_property_readonly("error_labels", [](const StabilizerCode& c) { return labels(c.error_basis()); })
        .def_property_readonly("syndrome_table",
                               [](const StabilizerCode& c) {
                                   std::vector<std::string> out;
                                   for (const auto& s : c.syndrome_table()) out.push_back(s.str());
                                   return out;
                               })
        .def_property_readonly("logical_basis",
                               [](const StabilizerCode& c) {
                                   std::vector<Vector> out;
                                   for (const auto& w : c.logical_basis()) out.push_back(w.amplitudes());
                                   return out;
                               })
        .def("is_perfect", &StabilizerCode::is_perfect)
        .def("knill_laflamme_residual", [](const StabilizerCode& c) { return knill_laflamme(c).residual; });

    m.def("builtin_code", &builtin_code, py::arg("name"));
    m.def("builtin_code_names", &builtin_code_names);
    m.def(
        "code_from_json",
        [](const std::string& text) {
            Json j;
            try {
                j = Json::parse(text);
            } catch (const Json::exception& e) {
                throw ParseError(e.what());
            }
            return build_code(code_spec_from_json(j));
        },
        py::arg("text"));

    py::class_<Channel>(m, "Channel")
        .def(py::init([](std::size_t p, std::vector<Matrix> kraus, std::string label) {
                 return Channel(p, std::move(kraus), std::move(label));
             }),
             py::arg("num_qubits"), py::arg("kraus"), py::arg("label") = "")
        .def_property_readonly("num_qubits", &Channel::num_qubits)
        .def_property_readonly("kraus", &Channel::kraus)
        .def_property_readonly("label", &Channel::label)
        .def("is_trace_preserving", [](const Channel& ch) { return validate_channel(ch).tp; });

    m.def(
        "builtin_channel",
        [](const std::string& name, std::vector<double> params) { return builtin_channel(name, params); },
        py::arg("name"), py::arg("params") = std::vector<double>{});
    m.def("builtin_channel_names", &builtin_channel_names);
    m.def(
        "chi_from_kraus",
        [](const Channel& ch, const StabilizerCode& code) { return chi_from_kraus(ch, code.error_basis()).matrix(); },
        py::arg("channel"), py::arg("code"), "Process matrix over the code's error basis.");

    m.def(
        "plan",
        [](const StabilizerCode& code) { return plan_to_json(code, plan_configurations(code)).dump(); },
        py::arg("code"), "Measurement configurations as a JSON document.");
    m.def(
        "plan_size", [](const StabilizerCode& code) { return plan_configurations(code).configurations.size(); },
        py::arg("code"));

    m.def("characterize", &characterize, py::arg("code"), py::arg("channel"), py::arg("beta") = py::none(),
          py::arg("mode") = "exact", py::arg("shots") = SamplingPolicy{}.shots_per_configuration,
          py::arg("seed") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one command and returns (exit_code, stdout, stderr).");
}
