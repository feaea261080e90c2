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

#include "qeccd/serialization.hpp"

#include <fstream>
#include <sstream>

#include "qeccd/errors.hpp"

namespace qeccd {

namespace {

template <class F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

PauliOperator parse_pauli(const Json& j) {
    if (!j.is_string()) {
        throw ParseError("Pauli operators must be strings");
    }
    return PauliOperator::from_string(j.get<std::string>());
}

std::vector<PauliOperator> parse_pauli_list(const Json& j) {
    std::vector<PauliOperator> out;
    if (j.is_string()) {
        out.push_back(parse_pauli(j));
    } else if (j.is_array()) {
        for (const auto& item : j) out.push_back(parse_pauli(item));
    } else {
        throw ParseError("expected a Pauli string or a list of them");
    }
    return out;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("state vectors must be arrays of [re, im]");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

std::string theta_symbol(int t) { return t > 0 ? "+" : "-"; }

int theta_from_symbol(const Json& j) {
    if (!j.is_string()) {
        throw ParseError("theta entries must be \"+\" or \"-\"");
    }
    auto s = j.get<std::string>();
    if (s == "+") return 1;
    if (s == "-" || s == "\xE2\x88\x92") return -1;
    throw ParseError("theta entries must be \"+\" or \"-\", got '" + s + "'");
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex numbers must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw ParseError("matrices must be non-empty lists of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ParseError("matrix rows must all have the same length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

Json channel_to_json(const Channel& ch) {
    Json kraus = Json::array();
    for (const auto& e : ch.kraus()) {
        kraus.push_back(matrix_to_json(e));
    }
    return Json{{"p", ch.num_qubits()}, {"label", ch.label()}, {"kraus", std::move(kraus)}};
}

Channel channel_from_json(const Json& j) {
    auto [p, label, kraus] = guarded("channel", [&] {
        auto p = require(j, "p").get<std::size_t>();
        std::string label = j.value("label", std::string("channel"));
        const Json& list = require(j, "kraus");
        if (!list.is_array() || list.empty()) {
            throw ParseError("'kraus' must be a non-empty list of matrices");
        }
        std::vector<Matrix> kraus;
        for (const auto& m : list) kraus.push_back(matrix_from_json(m));
        return std::make_tuple(p, std::move(label), std::move(kraus));
    });
    return Channel(p, std::move(kraus), std::move(label));
}

Json code_spec_to_json(const CodeSpec& spec) {
    Json gens = Json::array();
    for (const auto& g : spec.generators) gens.push_back(g.str());
    Json j{{"n", spec.n},
           {"k", spec.n - spec.generators.size()},
           {"generators", std::move(gens)},
           {"noisy_coords", spec.noisy_coords}};
    if (!spec.name.empty()) {
        j["name"] = spec.name;
    }
    if (spec.codewords) {
        Json words = Json::array();
        for (const auto& w : *spec.codewords) {
            Json amps = Json::array();
            for (Eigen::Index i = 0; i < w.amplitudes().size(); ++i) {
                amps.push_back(complex_to_json(w.amplitudes()(i)));
            }
            words.push_back(std::move(amps));
        }
        j["codewords"] = std::move(words);
    }
    if (spec.logical_ops) {
        auto list = [](const std::vector<PauliOperator>& ops) {
            if (ops.size() == 1) return Json(ops.front().str());
            Json arr = Json::array();
            for (const auto& op : ops) arr.push_back(op.str());
            return arr;
        };
        j["logical_ops"] = Json{{"X", list(spec.logical_ops->x)}, {"Z", list(spec.logical_ops->z)}};
    }
    return j;
}

CodeSpec code_spec_from_json(const Json& j) {
    return guarded("code", [&] {
        CodeSpec spec;
        spec.name = j.value("name", std::string("custom"));
        spec.n = require(j, "n").get<std::size_t>();
        spec.generators = parse_pauli_list(require(j, "generators"));
        spec.noisy_coords = require(j, "noisy_coords").get<std::vector<std::size_t>>();
        if (j.contains("k")) {
            auto k = j.at("k").get<std::size_t>();
            if (k + spec.generators.size() != spec.n) {
                throw ParseError("k = " + std::to_string(k) + " does not match n - #generators");
            }
        }
        if (j.contains("codewords") && !j.at("codewords").is_null()) {
            std::vector<StateVector> words;
            for (const auto& w : j.at("codewords")) {
                words.emplace_back(vector_from_json(w));
            }
            spec.codewords = std::move(words);
        }
        if (j.contains("logical_ops") && !j.at("logical_ops").is_null()) {
            const Json& ops = j.at("logical_ops");
            spec.logical_ops = LogicalOperators{parse_pauli_list(require(ops, "X")), parse_pauli_list(require(ops, "Z"))};
        }
        return spec;
    });
}

Json configuration_to_json(const StabilizerCode& code, const Configuration& cfg) {
    const ErrorBasis& basis = code.error_basis();
    Json j{{"kind", to_string(cfg.kind)}};
    if (cfg.kind != ConfigurationKind::kBare) {
        j["a"] = basis.element(cfg.a).str();
        j["b"] = basis.element(cfg.b).str();
    }
    if (cfg.kind == ConfigurationKind::kToggled) {
        // Object keys are emitted in sorted order; basis order is recoverable from the words.
        Json theta = Json::object();
        for (std::size_t m = 0; m < cfg.theta.size(); ++m) {
            theta[basis.element(m).str()] = theta_symbol(cfg.theta[m]);
        }
        j["theta"] = std::move(theta);
    }
    return j;
}

Json plan_to_json(const StabilizerCode& code, const Plan& plan) {
    Json configs = Json::array();
    for (const auto& cfg : plan.configurations) {
        configs.push_back(configuration_to_json(code, cfg));
    }
    return Json{{"code", code.name()},
                {"n", code.n()},
                {"noisy_coords", code.noisy_coords()},
                {"count", plan.configurations.size()},
                {"configurations", std::move(configs)}};
}

Plan plan_from_json(const StabilizerCode& code, const Json& j) {
    const ErrorBasis& basis = code.error_basis();
    auto index = [&](const Json& word) { return basis.index_of(parse_pauli(word)); };
    Plan plan;
    guarded("plan", [&] {
        const Json& configs = j.is_array() ? j : require(j, "configurations");
        if (!configs.is_array()) {
            throw ParseError("'configurations' must be a list");
        }
        for (const auto& c : configs) {
            auto kind = require(c, "kind").get<std::string>();
            if (kind == "bare") {
                plan.configurations.push_back(bare_configuration(code));
            } else if (kind == "rotated") {
                plan.configurations.push_back(rotated_configuration(code, index(require(c, "a")), index(require(c, "b"))));
            } else if (kind == "toggled") {
                std::vector<int> theta(basis.size(), 0);
                const Json& t = require(c, "theta");
                if (!t.is_object()) {
                    throw ParseError("'theta' must be an object");
                }
                for (const auto& [word, sym] : t.items()) {
                    theta.at(basis.index_of(PauliOperator::from_string(word))) = theta_from_symbol(sym);
                }
                plan.configurations.push_back(
                    toggled_configuration(code, index(require(c, "a")), index(require(c, "b")), std::move(theta)));
            } else {
                throw ParseError("unknown configuration kind '" + kind + "'");
            }
        }
        return 0;
    });
    for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
        for (std::size_t x = 0; x < basis.size(); ++x) {
            plan.readouts.push_back(readout_for(code, plan.configurations[c], c, x));
        }
    }
    return plan;
}

Json process_matrix_to_json(const ProcessMatrix& chi) { return matrix_to_json(chi.matrix()); }

Json validity_to_json(const ChiValidity& v) {
    return Json{{"hermiticity_defect", v.hermiticity_defect},
                {"min_eigenvalue", v.min_eigenvalue},
                {"trace", v.trace},
                {"hermitian", v.hermitian},
                {"positive", v.positive}};
}

Json error_report_to_json(const ErrorReport& r) {
    return Json{{"frobenius_error", r.frobenius_error},
                {"max_entry_error", r.max_entry_error},
                {"trace_defect", r.trace_defect},
                {"min_eigenvalue", r.min_eigenvalue}};
}

Json record_to_json(const StabilizerCode& code, const MeasurementRecord& rec) {
    Json dist = Json::object();
    for (std::size_t x = 0; x < rec.size(); ++x) {
        const std::string key = code.syndrome(x).str();
        if (rec.sampled()) {
            dist[key] = rec.counts[x];
        } else {
            dist[key] = rec.probabilities[x];
        }
    }
    Json j{{"configuration", rec.configuration}, {"distribution", std::move(dist)}};
    if (rec.sampled()) {
        j["shots"] = *rec.shots;
        j["no_detection"] = rec.no_detection;
    }
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace qeccd
