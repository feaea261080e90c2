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

#pragma once

#include <cstddef>

namespace qeccd {

/// Every numeric tolerance used by the library lives here.
struct NumericPolicy {
    /// Hermiticity, unitarity, idempotence, trace preservation.
    double algebraic = 1e-10;
    /// Orthonormality of user-supplied state lists.
    double orthonormality = 1e-8;
    /// Knill-Laflamme residual.
    double knill_laflamme = 1e-8;
    /// Probabilities this far below zero are floating-point dust and get clamped.
    double probability_dust = 1e-12;
    /// Agreement required between redundant readouts of one chi entry in exact mode.
    double readout_consistency = 1e-8;
    /// Largest qubit count for which dense 2^n x 2^n matrices are built.
    std::size_t dense_qubit_cap = 12;
};

inline const NumericPolicy& default_policy() {
    static const NumericPolicy policy{};
    return policy;
}

}  // namespace qeccd
