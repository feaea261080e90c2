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

// JSON forms of channels, codes, plans and characterization reports.
//
// Complex numbers are [re, im] pairs and matrices are row-major lists of rows.
//
//   channel: {"p": 1, "label": "...", "kraus": [ [[ [re,im], ... ], ...], ... ]}
//   code:    {"n": 3, "k": 1, "generators": ["XIX", "YYZ"], "noisy_coords": [0],
//             "codewords": [[ [re,im], ... ], ...],          (optional)
//             "logical_ops": {"X": "-ZXZ", "Z": "-ZZZ"}}      (optional; arrays for k > 1)
//   plan:    {"n": 3, "noisy_coords": [0], "count": 7,
//             "configurations": [{"kind": "bare"},
//                                {"kind": "rotated", "a": "III", "b": "XII"},
//                                {"kind": "toggled", "a": "III", "b": "XII",
//                                 "theta": {"III": "+", "XII": "-", ...}}, ...]}

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qeccd/channels.hpp"
#include "qeccd/estimation.hpp"
#include "qeccd/protocol.hpp"
#include "qeccd/stabilizer_code.hpp"

namespace qeccd {

using Json = nlohmann::json;

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json channel_to_json(const Channel& ch);
/// Throws ParseError on schema violations; Channel validation errors pass through.
Channel channel_from_json(const Json& j);

Json code_spec_to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const Json& j);

Json plan_to_json(const StabilizerCode& code, const Plan& plan);
/// Rebuilds configurations (and readouts) for `code` from a plan document.
Plan plan_from_json(const StabilizerCode& code, const Json& j);

Json configuration_to_json(const StabilizerCode& code, const Configuration& cfg);

Json process_matrix_to_json(const ProcessMatrix& chi);
Json validity_to_json(const ChiValidity& v);
Json error_report_to_json(const ErrorReport& r);
Json record_to_json(const StabilizerCode& code, const MeasurementRecord& rec);

/// Reads and parses a JSON file. Throws ParseError if it cannot be read or parsed.
Json read_json_file(const std::string& path);

}  // namespace qeccd
