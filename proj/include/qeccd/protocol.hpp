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

// Channel characterization from syndrome statistics.
//
// The noisy state E(|Psi_L><Psi_L|) is expanded as sum chi_{m,n} F_m|Psi_L><Psi_L|F_n. A bare
// stabilizer measurement reads the diagonal of chi. Pre-processing with
// U(a,b) = (F_a + c F_b)/sqrt(2), c = 1 for anticommuting and c = i for commuting words, makes
// each syndrome probability an affine function of one real component of one off-diagonal
// entry. An extra diagonal phase S+ on the error spaces (the toggle) swaps which component
// is visible. Every readout is therefore
//
//   xi = (chi_AA + chi_BB)/2 + c Re(chi_AB) + s Im(chi_AB),   (c, s) in {(+-1, 0), (0, +-1)}
//
// and a plan that covers each entry with both components fixes chi completely.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qeccd/channels.hpp"
#include "qeccd/dense.hpp"
#include "qeccd/pauli.hpp"
#include "qeccd/stabilizer_code.hpp"

namespace qeccd {

enum class ConfigurationKind { kBare, kRotated, kToggled };

std::string to_string(ConfigurationKind kind);

/// A pre-processing step followed by stabilizer measurement.
struct Configuration {
    ConfigurationKind kind = ConfigurationKind::kBare;
    /// Error-basis indices of F_a and F_b (rotated and toggled only).
    std::size_t a = 0;
    std::size_t b = 0;
    /// +1 / -1 per error-basis index, meaning theta = +-pi/4 (toggled only).
    std::vector<int> theta;
    /// Realized pre-processing unitary on the full register: I, U or U S+.
    Matrix unitary;

    /// Same descriptor (kind, a, b, theta); the unitary is derived data.
    bool same_setup(const Configuration& other) const {
        return kind == other.kind && a == other.a && b == other.b && theta == other.theta;
    }
};

/// xi = (chi_AA + chi_BB)/2 + re_coeff Re(chi_AB) + im_coeff Im(chi_AB).
/// A bare readout has A == B == x and zero coefficients, so xi = chi_xx.
struct LinearReadout {
    std::size_t configuration = 0;
    /// Error index whose syndrome is observed.
    std::size_t syndrome = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    int re_coeff = 0;
    int im_coeff = 0;

    double evaluate(const ProcessMatrix& chi) const;
};

/// Outcome statistics of one configuration, indexed by error-basis index (one syndrome each).
struct MeasurementRecord {
    std::size_t configuration = 0;
    /// Exact mode: outcome probabilities. They sum to Tr(E(rho)).
    std::vector<double> probabilities;
    /// Sampled mode: outcome counts plus a no-detection bin for trace-decreasing channels.
    std::vector<std::uint64_t> counts;
    std::uint64_t no_detection = 0;
    std::optional<std::uint64_t> shots;

    bool sampled() const { return shots.has_value(); }
    /// Probability (exact) or observed frequency (sampled) of outcome x.
    double value(std::size_t x) const;
    std::size_t size() const { return sampled() ? counts.size() : probabilities.size(); }
};

struct Plan {
    std::vector<Configuration> configurations;
    std::vector<LinearReadout> readouts;
};

struct PauliFactors {
    PauliFactor g_a;
    std::size_t a = 0;
    PauliFactor g_b;
    std::size_t b = 0;
    /// Both factors real or both imaginary.
    bool same_type = false;
};

/// g_A F_A = F_a F_x and g_B F_B = F_b F_x.
PauliFactors pauli_factors(const ErrorBasis& basis, std::size_t a, std::size_t b, std::size_t x);

/// sum_j beta_j |j_L>. Throws ValidationError for a wrong length or a non-unit norm.
StateVector encode(const StabilizerCode& code, std::span<const Complex> beta,
                   const NumericPolicy& policy = default_policy());

/// (1, 1, ..., 1) / sqrt(2^k).
std::vector<Complex> uniform_beta(const StabilizerCode& code);

/// (F_a + F_b)/sqrt(2) when the words anticommute, (F_a + i F_b)/sqrt(2) when they commute.
Matrix rotation_unitary(const StabilizerCode& code, std::size_t a, std::size_t b,
                        const NumericPolicy& policy = default_policy());

/// S+ = sum_m e^{i theta_m} P_m + (identity off the error ball), theta_m = theta[m] * pi/4.
/// Throws ValidationError unless theta has one +-1 entry per error index with equally many of each sign.
Matrix build_toggle(const StabilizerCode& code, std::span<const int> theta,
                    const NumericPolicy& policy = default_policy());

/// S chi S^dagger with S = diag(e^{i theta_m pi/4}).
ProcessMatrix toggle_chi(const ProcessMatrix& chi, std::span<const int> theta);

Configuration bare_configuration(const StabilizerCode& code);
Configuration rotated_configuration(const StabilizerCode& code, std::size_t a, std::size_t b,
                                    const NumericPolicy& policy = default_policy());
Configuration toggled_configuration(const StabilizerCode& code, std::size_t a, std::size_t b, std::vector<int> theta,
                                    const NumericPolicy& policy = default_policy());

/// Readout of syndrome x under `cfg`, derived symbolically from the Pauli factors.
LinearReadout readout_for(const StabilizerCode& code, const Configuration& cfg, std::size_t config_index,
                          std::size_t x);

/// Closed-form syndrome probability for outcome x given chi.
double xi_predicted(const ProcessMatrix& chi, const StabilizerCode& code, const Configuration& cfg, std::size_t x);

/// One bare configuration, then for every non-identity P a rotated (I, P) configuration and
/// a toggled one whose theta two-colors the pairing x <-> P F_x (+ on the smaller index).
Plan plan_configurations(const StabilizerCode& code, const NumericPolicy& policy = default_policy());

/// Throws SupportError unless the channel acts on exactly the code's noisy qubits.
void check_support(const StabilizerCode& code, const Channel& ch);

/// E(|Psi_L><Psi_L|) with E acting on the noisy coordinates.
DensityMatrix noisy_state(const StabilizerCode& code, std::span<const Complex> beta, const Channel& ch,
                          const NumericPolicy& policy = default_policy());

/// Exact outcome probabilities of `cfg` on an already-noisy state.
MeasurementRecord measure(const StabilizerCode& code, const DensityMatrix& rho, const Configuration& cfg,
                          std::size_t config_index, const NumericPolicy& policy = default_policy());

/// Exact-mode record for one configuration.
MeasurementRecord xi_simulated(const StabilizerCode& code, std::span<const Complex> beta, const Channel& ch,
                               const Configuration& cfg, std::size_t config_index = 0,
                               const NumericPolicy& policy = default_policy());

/// Exact-mode records for every configuration of a plan.
std::vector<MeasurementRecord> simulate_plan(const StabilizerCode& code, std::span<const Complex> beta,
                                             const Channel& ch, const Plan& plan,
                                             const NumericPolicy& policy = default_policy());

struct Reconstruction {
    ProcessMatrix chi;
    ChiValidity validity;
    /// Per configuration: max |observed xi - xi predicted from the estimate|.
    std::vector<double> residuals;
    /// Largest disagreement between redundant readouts of the same component.
    double max_readout_spread = 0.0;
};

/// Solves the readouts for chi. Diagonal from the bare record; each off-diagonal component is
/// the average of its readouts. In exact mode a readout spread above tolerance is an error.
Reconstruction reconstruct(const StabilizerCode& code, const Plan& plan, std::span<const MeasurementRecord> records,
                           const NumericPolicy& policy = default_policy());

/// Applies F_x for the error carrying syndrome `s`.
StateVector recover(const StateVector& state, const StabilizerCode& code, const Syndrome& s,
                    const NumericPolicy& policy = default_policy());
DensityMatrix recover(const DensityMatrix& state, const StabilizerCode& code, const Syndrome& s,
                      const NumericPolicy& policy = default_policy());

/// P_x rho P_x / Tr(P_x rho) for outcome x. Throws ValidationError when the outcome has zero probability.
DensityMatrix collapse(const StabilizerCode& code, const DensityMatrix& rho, std::size_t x,
                       const NumericPolicy& policy = default_policy());

}  // namespace qeccd
