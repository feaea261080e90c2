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

#include "qeccd/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qeccd/errors.hpp"

namespace qeccd {

namespace {

std::vector<Matrix> error_space_projectors(const StabilizerCode& code, const NumericPolicy& policy) {
    std::vector<Matrix> out;
    out.reserve(code.error_basis().size());
    for (std::size_t x = 0; x < code.error_basis().size(); ++x) {
        out.push_back(error_space_projector(code, x, policy).matrix());
    }
    return out;
}

MeasurementRecord measure_with(const std::vector<Matrix>& projectors, const DensityMatrix& rho,
                               const Configuration& cfg, std::size_t config_index) {
    const Matrix& u = cfg.unitary;
    if (u.rows() != static_cast<Eigen::Index>(rho.dim())) {
        throw DimensionError("configuration unitary does not match the register");
    }
    Matrix rotated = u * rho.matrix() * u.adjoint();
    Matrix rotated_t = rotated.transpose();
    MeasurementRecord record;
    record.configuration = config_index;
    record.probabilities.reserve(projectors.size());
    for (const auto& proj : projectors) {
        record.probabilities.push_back(rotated_t.cwiseProduct(proj).sum().real());
    }
    return record;
}

void check_theta(const StabilizerCode& code, std::span<const int> theta) {
    const std::size_t d2 = code.error_basis().size();
    if (theta.size() != d2) {
        throw ValidationError("toggle phases must cover all " + std::to_string(d2) + " error spaces");
    }
    std::size_t plus = 0;
    for (int t : theta) {
        if (t != 1 && t != -1) {
            throw ValidationError("toggle phases must be +pi/4 or -pi/4");
        }
        plus += t == 1;
    }
    if (2 * plus != d2) {
        throw ValidationError("toggle phases need equally many +pi/4 and -pi/4 entries");
    }
}

}  // namespace

std::string to_string(ConfigurationKind kind) {
    switch (kind) {
        case ConfigurationKind::kBare:
            return "bare";
        case ConfigurationKind::kRotated:
            return "rotated";
        case ConfigurationKind::kToggled:
            return "toggled";
    }
    return "unknown";
}

double LinearReadout::evaluate(const ProcessMatrix& chi) const {
    Complex ab = chi(a, b);
    return 0.5 * (chi(a, a).real() + chi(b, b).real()) + re_coeff * ab.real() + im_coeff * ab.imag();
}

double MeasurementRecord::value(std::size_t x) const {
    if (sampled()) {
        return *shots == 0 ? 0.0 : static_cast<double>(counts.at(x)) / static_cast<double>(*shots);
    }
    return probabilities.at(x);
}

PauliFactors pauli_factors(const ErrorBasis& basis, std::size_t a, std::size_t b, std::size_t x) {
    PauliFactors f;
    std::tie(f.g_a, f.a) = basis.multiply(a, x);
    std::tie(f.g_b, f.b) = basis.multiply(b, x);
    f.same_type = f.g_a.is_real() == f.g_b.is_real();
    return f;
}

StateVector encode(const StabilizerCode& code, std::span<const Complex> beta, const NumericPolicy& policy) {
    const auto& basis = code.logical_basis();
    if (beta.size() != basis.size()) {
        throw DimensionError("expected " + std::to_string(basis.size()) + " logical amplitudes, got " +
                             std::to_string(beta.size()));
    }
    double norm2 = 0.0;
    for (const auto& c : beta) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > policy.algebraic) {
        throw ValidationError("logical amplitudes are not normalized");
    }
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(basis.front().dim()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        psi += beta[j] * basis[j].amplitudes();
    }
    return StateVector(std::move(psi));
}

std::vector<Complex> uniform_beta(const StabilizerCode& code) {
    const std::size_t count = code.logical_basis().size();
    return std::vector<Complex>(count, Complex(1.0 / std::sqrt(static_cast<double>(count)), 0.0));
}

Matrix rotation_unitary(const StabilizerCode& code, std::size_t a, std::size_t b, const NumericPolicy& policy) {
    const ErrorBasis& basis = code.error_basis();
    if (a >= basis.size() || b >= basis.size()) {
        throw ValidationError("rotation index out of range");
    }
    if (a == b) {
        throw ValidationError("a rotation needs two distinct errors");
    }
    const PauliOperator& fa = basis.element(a);
    const PauliOperator& fb = basis.element(b);
    Complex c = commutes(fa, fb) ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
    return (to_matrix(fa, policy) + c * to_matrix(fb, policy)) / std::sqrt(2.0);
}

Matrix build_toggle(const StabilizerCode& code, std::span<const int> theta, const NumericPolicy& policy) {
    check_theta(code, theta);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << code.n());
    Matrix toggle = Matrix::Identity(dim, dim);
    const Complex plus = std::polar(1.0, M_PI / 4.0);
    const Complex minus = std::conj(plus);
    for (std::size_t m = 0; m < theta.size(); ++m) {
        Matrix proj = error_space_projector(code, m, policy).matrix();
        toggle += ((theta[m] == 1 ? plus : minus) - 1.0) * proj;
    }
    return toggle;
}

ProcessMatrix toggle_chi(const ProcessMatrix& chi, std::span<const int> theta) {
    if (theta.size() != chi.size()) {
        throw DimensionError("toggle phases do not match the process matrix");
    }
    for (int t : theta) {
        if (t != 1 && t != -1) {
            throw ValidationError("toggle phases must be +1 or -1");
        }
    }
    // Entry (m, n) picks up e^{i(theta_m - theta_n) pi/4}, which is 1, i or -i.
    Matrix out = chi.matrix();
    for (std::size_t m = 0; m < theta.size(); ++m) {
        for (std::size_t n = 0; n < theta.size(); ++n) {
            const int diff = theta[m] - theta[n];
            if (diff == 0) continue;
            Complex& entry = out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
            entry = diff > 0 ? Complex(-entry.imag(), entry.real()) : Complex(entry.imag(), -entry.real());
        }
    }
    return ProcessMatrix(std::move(out), chi.basis());
}

Configuration bare_configuration(const StabilizerCode& code) {
    Configuration cfg;
    cfg.kind = ConfigurationKind::kBare;
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << code.n());
    cfg.unitary = Matrix::Identity(dim, dim);
    return cfg;
}

Configuration rotated_configuration(const StabilizerCode& code, std::size_t a, std::size_t b,
                                    const NumericPolicy& policy) {
    Configuration cfg;
    cfg.kind = ConfigurationKind::kRotated;
    cfg.a = a;
    cfg.b = b;
    cfg.unitary = rotation_unitary(code, a, b, policy);
    return cfg;
}

Configuration toggled_configuration(const StabilizerCode& code, std::size_t a, std::size_t b, std::vector<int> theta,
                                    const NumericPolicy& policy) {
    Configuration cfg;
    cfg.kind = ConfigurationKind::kToggled;
    cfg.a = a;
    cfg.b = b;
    cfg.unitary = rotation_unitary(code, a, b, policy) * build_toggle(code, theta, policy);
    cfg.theta = std::move(theta);
    return cfg;
}

LinearReadout readout_for(const StabilizerCode& code, const Configuration& cfg, std::size_t config_index,
                          std::size_t x) {
    const ErrorBasis& basis = code.error_basis();
    if (x >= basis.size()) {
        throw ValidationError("syndrome index out of range");
    }
    LinearReadout r;
    r.configuration = config_index;
    r.syndrome = x;
    if (cfg.kind == ConfigurationKind::kBare) {
        r.a = x;
        r.b = x;
        return r;
    }
    PauliFactors f = pauli_factors(basis, cfg.a, cfg.b, x);
    r.a = f.a;
    r.b = f.b;
    // The visible term is Re(i^q chi_AB) with i^q = conj(c) conj(g_A) g_B, times the toggle phase
    // e^{i(theta_A - theta_B)} when S+ precedes U.
    int q = (f.g_a.conj() * f.g_b).exponent();
    if (commutes(basis.element(cfg.a), basis.element(cfg.b))) {
        q += 3;
    }
    if (cfg.kind == ConfigurationKind::kToggled) {
        q += (cfg.theta.at(f.a) - cfg.theta.at(f.b)) / 2;
    }
    switch (((q % 4) + 4) % 4) {
        case 0:
            r.re_coeff = 1;
            break;
        case 1:
            r.im_coeff = -1;
            break;
        case 2:
            r.re_coeff = -1;
            break;
        default:
            r.im_coeff = 1;
            break;
    }
    return r;
}

double xi_predicted(const ProcessMatrix& chi, const StabilizerCode& code, const Configuration& cfg, std::size_t x) {
    return readout_for(code, cfg, 0, x).evaluate(chi);
}

Plan plan_configurations(const StabilizerCode& code, const NumericPolicy& policy) {
    const ErrorBasis& basis = code.error_basis();
    const std::size_t d2 = basis.size();
    Plan plan;
    plan.configurations.push_back(bare_configuration(code));
    for (std::size_t p = 1; p < d2; ++p) {
        plan.configurations.push_back(rotated_configuration(code, 0, p, policy));
        std::vector<int> theta(d2, 0);
        for (std::size_t x = 0; x < d2; ++x) {
            std::size_t partner = basis.multiply(p, x).second;
            theta[x] = x < partner ? 1 : -1;
        }
        plan.configurations.push_back(toggled_configuration(code, 0, p, std::move(theta), policy));
    }
    for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
        for (std::size_t x = 0; x < d2; ++x) {
            plan.readouts.push_back(readout_for(code, plan.configurations[c], c, x));
        }
    }
    return plan;
}

void check_support(const StabilizerCode& code, const Channel& ch) {
    if (ch.num_qubits() != code.noisy_coords().size()) {
        throw SupportError("channel support mismatch: channel acts on " + std::to_string(ch.num_qubits()) +
                           " qubits but the code protects " + std::to_string(code.noisy_coords().size()));
    }
}

DensityMatrix noisy_state(const StabilizerCode& code, std::span<const Complex> beta, const Channel& ch,
                          const NumericPolicy& policy) {
    check_support(code, ch);
    DensityMatrix rho = outer(encode(code, beta, policy));
    return apply_channel(rho, ch.kraus(), code.noisy_coords(), false, policy);
}

MeasurementRecord measure(const StabilizerCode& code, const DensityMatrix& rho, const Configuration& cfg,
                          std::size_t config_index, const NumericPolicy& policy) {
    return measure_with(error_space_projectors(code, policy), rho, cfg, config_index);
}

MeasurementRecord xi_simulated(const StabilizerCode& code, std::span<const Complex> beta, const Channel& ch,
                               const Configuration& cfg, std::size_t config_index, const NumericPolicy& policy) {
    return measure(code, noisy_state(code, beta, ch, policy), cfg, config_index, policy);
}

std::vector<MeasurementRecord> simulate_plan(const StabilizerCode& code, std::span<const Complex> beta,
                                             const Channel& ch, const Plan& plan, const NumericPolicy& policy) {
    DensityMatrix rho = noisy_state(code, beta, ch, policy);
    std::vector<Matrix> projectors = error_space_projectors(code, policy);
    std::vector<MeasurementRecord> records;
    records.reserve(plan.configurations.size());
    for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
        records.push_back(measure_with(projectors, rho, plan.configurations[c], c));
    }
    return records;
}

Reconstruction reconstruct(const StabilizerCode& code, const Plan& plan, std::span<const MeasurementRecord> records,
                           const NumericPolicy& policy) {
    const ErrorBasis& basis = code.error_basis();
    const std::size_t d2 = basis.size();
    std::vector<const MeasurementRecord*> by_config(plan.configurations.size(), nullptr);
    bool exact = true;
    for (const auto& rec : records) {
        if (rec.configuration >= by_config.size()) {
            throw ReconstructionError("record refers to configuration " + std::to_string(rec.configuration) +
                                      " which is not in the plan");
        }
        if (rec.size() != d2) {
            throw DimensionError("record has " + std::to_string(rec.size()) + " outcomes, expected " +
                                 std::to_string(d2));
        }
        by_config[rec.configuration] = &rec;
        exact = exact && !rec.sampled();
    }
    for (std::size_t c = 0; c < by_config.size(); ++c) {
        if (!by_config[c]) {
            throw ReconstructionError("missing configuration " + std::to_string(c) + " (" +
                                      to_string(plan.configurations[c].kind) + ")");
        }
    }

    // Diagonal first: every off-diagonal readout subtracts it.
    std::vector<double> diag_sum(d2, 0.0);
    std::vector<int> diag_count(d2, 0);
    for (const auto& r : plan.readouts) {
        if (r.a == r.b) {
            diag_sum[r.a] += by_config[r.configuration]->value(r.syndrome);
            diag_count[r.a] += 1;
        }
    }
    Matrix chi = Matrix::Zero(static_cast<Eigen::Index>(d2), static_cast<Eigen::Index>(d2));
    for (std::size_t x = 0; x < d2; ++x) {
        if (diag_count[x] == 0) {
            throw ReconstructionError("no readout determines chi(" + basis.label(x) + "," + basis.label(x) + ")");
        }
        chi(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = diag_sum[x] / diag_count[x];
    }

    struct Accumulator {
        double sum = 0.0;
        int count = 0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
    };
    // Keyed by (row, col, component) with row < col; component 0 = Re, 1 = Im.
    std::map<std::tuple<std::size_t, std::size_t, int>, Accumulator> parts;
    for (const auto& r : plan.readouts) {
        if (r.a == r.b) {
            continue;
        }
        double v = by_config[r.configuration]->value(r.syndrome) -
                   0.5 * (chi(static_cast<Eigen::Index>(r.a), static_cast<Eigen::Index>(r.a)).real() +
                          chi(static_cast<Eigen::Index>(r.b), static_cast<Eigen::Index>(r.b)).real());
        std::size_t row = std::min(r.a, r.b);
        std::size_t col = std::max(r.a, r.b);
        int component = r.re_coeff != 0 ? 0 : 1;
        double estimate = component == 0 ? v / r.re_coeff : v / r.im_coeff;
        // chi_BA = conj(chi_AB)
        if (component == 1 && r.a > r.b) {
            estimate = -estimate;
        }
        auto& acc = parts[{row, col, component}];
        acc.sum += estimate;
        acc.count += 1;
        acc.lo = std::min(acc.lo, estimate);
        acc.hi = std::max(acc.hi, estimate);
    }

    Reconstruction result;
    for (std::size_t row = 0; row < d2; ++row) {
        for (std::size_t col = row + 1; col < d2; ++col) {
            double value[2] = {0.0, 0.0};
            for (int component = 0; component < 2; ++component) {
                auto it = parts.find({row, col, component});
                if (it == parts.end()) {
                    throw ReconstructionError(std::string("no readout determines ") + (component ? "Im" : "Re") +
                                              " chi(" + basis.label(row) + "," + basis.label(col) + ")");
                }
                const Accumulator& acc = it->second;
                double spread = acc.hi - acc.lo;
                result.max_readout_spread = std::max(result.max_readout_spread, spread);
                if (exact && spread > policy.readout_consistency) {
                    throw ReconstructionError(std::string("inconsistent readouts for ") + (component ? "Im" : "Re") +
                                              " chi(" + basis.label(row) + "," + basis.label(col) +
                                              "): spread " + std::to_string(spread));
                }
                value[component] = acc.sum / acc.count;
            }
            Complex entry(value[0], value[1]);
            chi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = entry;
            chi(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row)) = std::conj(entry);
        }
    }

    result.chi = ProcessMatrix(std::move(chi), basis);
    result.validity = result.chi.validity(policy);
    result.residuals.assign(plan.configurations.size(), 0.0);
    for (const auto& r : plan.readouts) {
        double observed = by_config[r.configuration]->value(r.syndrome);
        result.residuals[r.configuration] =
            std::max(result.residuals[r.configuration], std::abs(observed - r.evaluate(result.chi)));
    }
    return result;
}

StateVector recover(const StateVector& state, const StabilizerCode& code, const Syndrome& s,
                    const NumericPolicy& policy) {
    auto x = code.error_for(s);
    if (!x) {
        throw ValidationError("syndrome " + s.str() + " is not in the syndrome table");
    }
    if (state.num_qubits() != code.n()) {
        throw DimensionError("state does not live on the code register");
    }
    // Basis words are Hermitian, so F_x^dagger = F_x.
    return StateVector(to_matrix(code.error_basis().element(*x), policy) * state.amplitudes());
}

DensityMatrix recover(const DensityMatrix& state, const StabilizerCode& code, const Syndrome& s,
                      const NumericPolicy& policy) {
    auto x = code.error_for(s);
    if (!x) {
        throw ValidationError("syndrome " + s.str() + " is not in the syndrome table");
    }
    if (state.num_qubits() != code.n()) {
        throw DimensionError("state does not live on the code register");
    }
    Matrix f = to_matrix(code.error_basis().element(*x), policy);
    return DensityMatrix(f * state.matrix() * f.adjoint());
}

DensityMatrix collapse(const StabilizerCode& code, const DensityMatrix& rho, std::size_t x,
                       const NumericPolicy& policy) {
    Matrix proj = error_space_projector(code, x, policy).matrix();
    Matrix post = proj * rho.matrix() * proj;
    double p = post.trace().real();
    if (p <= policy.algebraic) {
        throw ValidationError("outcome " + code.error_basis().label(x) + " has zero probability");
    }
    return DensityMatrix(post / p);
}

}  // namespace qeccd
