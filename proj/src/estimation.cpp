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

#include "qeccd/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qeccd/errors.hpp"

namespace qeccd {

std::mt19937_64 configuration_rng(std::uint64_t seed, std::uint64_t configuration_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(configuration_index),
                      static_cast<std::uint32_t>(configuration_index >> 32)};
    return std::mt19937_64(seq);
}

MeasurementRecord sample_record(const MeasurementRecord& exact, const SamplingPolicy& policy,
                                const NumericPolicy& numeric) {
    if (exact.sampled()) {
        throw ValidationError("sample_record expects an exact-mode record");
    }
    if (policy.shots_per_configuration == 0) {
        throw ValidationError("shots per configuration must be positive");
    }
    std::vector<double> p = exact.probabilities;
    double total = 0.0;
    for (double& v : p) {
        if (v < -numeric.probability_dust) {
            throw ValidationError("negative outcome probability " + std::to_string(v));
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (total > 1.0 + numeric.algebraic) {
        throw ValidationError("outcome probabilities sum to " + std::to_string(total) + " > 1");
    }
    double deficit = std::max(0.0, 1.0 - total);
    if (deficit < numeric.algebraic) {
        deficit = 0.0;
    }
    const double mass = total + deficit;

    std::mt19937_64 rng = configuration_rng(policy.seed, exact.configuration);
    MeasurementRecord out;
    out.configuration = exact.configuration;
    out.shots = policy.shots_per_configuration;
    out.counts.assign(p.size(), 0);
    std::uint64_t remaining = policy.shots_per_configuration;
    double remaining_mass = mass;
    for (std::size_t i = 0; i < p.size() && remaining > 0; ++i) {
        bool last = i + 1 == p.size() && deficit == 0.0;
        std::uint64_t k = remaining;
        if (!last) {
            double cond = remaining_mass > 0.0 ? std::clamp(p[i] / remaining_mass, 0.0, 1.0) : 0.0;
            std::binomial_distribution<std::uint64_t> draw(remaining, cond);
            k = draw(rng);
        }
        out.counts[i] = k;
        remaining -= k;
        remaining_mass -= p[i];
    }
    out.no_detection = remaining;
    return out;
}

std::vector<MeasurementRecord> sample_records(std::span<const MeasurementRecord> exact, const SamplingPolicy& policy,
                                              const NumericPolicy& numeric) {
    std::vector<MeasurementRecord> out;
    out.reserve(exact.size());
    for (const auto& rec : exact) {
        out.push_back(sample_record(rec, policy, numeric));
    }
    return out;
}

ErrorReport compare(const ProcessMatrix& estimate, const ProcessMatrix& oracle) {
    if (estimate.matrix().rows() != oracle.matrix().rows() || estimate.matrix().cols() != oracle.matrix().cols()) {
        throw DimensionError("process matrices have different dimensions");
    }
    Matrix diff = estimate.matrix() - oracle.matrix();
    ErrorReport report;
    report.frobenius_error = diff.norm();
    report.max_entry_error = diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0;
    report.trace_defect = std::abs(estimate.matrix().trace() - oracle.matrix().trace());
    report.min_eigenvalue = estimate.validity().min_eigenvalue;
    return report;
}

}  // namespace qeccd
