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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qeccd/channels.hpp"
#include "qeccd/protocol.hpp"

namespace qeccd {

struct SamplingPolicy {
    std::uint64_t shots_per_configuration = 10000;
    std::uint64_t seed = 0;
};

/// Generator for one configuration. Depends only on (seed, configuration index), so results
/// do not depend on the order in which configurations are sampled.
std::mt19937_64 configuration_rng(std::uint64_t seed, std::uint64_t configuration_index);

/// Multinomial draw of `shots` outcomes from an exact record. Probabilities within the dust
/// tolerance below zero are clamped; the deficit 1 - sum(p) of a trace-decreasing channel
/// goes to the no-detection bin.
MeasurementRecord sample_record(const MeasurementRecord& exact, const SamplingPolicy& policy,
                                const NumericPolicy& numeric = default_policy());

std::vector<MeasurementRecord> sample_records(std::span<const MeasurementRecord> exact, const SamplingPolicy& policy,
                                              const NumericPolicy& numeric = default_policy());

struct ErrorReport {
    double frobenius_error = 0.0;
    double max_entry_error = 0.0;
    /// |Tr chi_est - Tr chi_oracle|
    double trace_defect = 0.0;
    /// Smallest eigenvalue of the Hermitian part of chi_est.
    double min_eigenvalue = 0.0;
};

ErrorReport compare(const ProcessMatrix& estimate, const ProcessMatrix& oracle);

}  // namespace qeccd
