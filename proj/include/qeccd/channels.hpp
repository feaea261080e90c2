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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qeccd/dense.hpp"
#include "qeccd/pauli.hpp"

namespace qeccd {

/// Completely positive map on p qubits given by Kraus operators.
///
/// Construction enforces sum E^dagger E <= I. Trace-decreasing channels are allowed;
/// validate_channel() reports whether equality holds.
class Channel {
   public:
    Channel() = default;
    Channel(std::size_t num_qubits, std::vector<Matrix> kraus, std::string label = {},
            const NumericPolicy& policy = default_policy());

    std::size_t num_qubits() const { return p_; }
    std::size_t dim() const { return std::size_t{1} << p_; }
    const std::vector<Matrix>& kraus() const { return kraus_; }
    const std::string& label() const { return label_; }

   private:
    std::size_t p_ = 0;
    std::vector<Matrix> kraus_;
    std::string label_;
};

struct ChannelReport {
    bool cp = true;
    bool tp = false;
    /// Spectral norm of sum E^dagger E - I.
    double defect = 0.0;
};

ChannelReport validate_channel(const Channel& ch, const NumericPolicy& policy = default_policy());

/// Hermiticity, positivity and trace of a process matrix.
struct ChiValidity {
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    bool hermitian = false;
    bool positive = false;
};

/// chi_{m,n} over an ErrorBasis: E(rho) = sum_{m,n} chi_{m,n} F_m rho F_n^dagger.
class ProcessMatrix {
   public:
    ProcessMatrix() = default;
    ProcessMatrix(Matrix entries, ErrorBasis basis);

    const Matrix& matrix() const { return entries_; }
    const ErrorBasis& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    Complex operator()(std::size_t m, std::size_t n) const {
        return entries_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }
    /// Entry looked up by local basis labels, e.g. at("X", "Y").
    Complex at(std::string_view row_label, std::string_view col_label) const;

    ChiValidity validity(const NumericPolicy& policy = default_policy()) const;

   private:
    Matrix entries_;
    ErrorBasis basis_;
};

/// alpha_{j,m} = Tr(F_m^dagger E_j) / d, chi_{m,n} = sum_j alpha_{j,m} conj(alpha_{j,n}).
ProcessMatrix chi_from_kraus(const Channel& ch, const ErrorBasis& basis);

/// Eigendecomposition of chi reassembled into Kraus operators sqrt(lambda) sum_m v_m F_m.
/// Throws ValidationError on an eigenvalue below -tolerance.
Channel kraus_from_chi(const ProcessMatrix& chi, const NumericPolicy& policy = default_policy());

/// sum_{m,n} chi_{m,n} F_m rho F_n^dagger with the F embedded on `coords`.
DensityMatrix apply_chi(const DensityMatrix& rho, const ProcessMatrix& chi,
                        const NumericPolicy& policy = default_policy());

/// Named channel library.
///
///   identity            [p = 1]
///   amplitude-damping   [lambda]
///   correlated-flip     [p]            Kraus {sqrt(1-p) I, sqrt(p) XX} on two qubits
///   depolarizing        [p, qubits = 1] rho -> (1-p) rho + p I/d
///   phase-damping       [gamma]
///   random-cp           [seed, qubits = 1, rank = 4^qubits]
Channel builtin_channel(std::string_view name, std::span<const double> params);

/// Names accepted by builtin_channel.
std::vector<std::string> builtin_channel_names();

/// Haar-random CPTP map: a random isometry from C^d into C^d (x) C^rank, sliced into Kraus blocks.
Channel random_cp_channel(std::uint64_t seed, std::size_t num_qubits, std::size_t rank);

}  // namespace qeccd
