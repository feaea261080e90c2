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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qeccd/numeric_policy.hpp"

namespace qeccd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Pure state on 2^n amplitudes. Qubit 0 is the most significant bit of the amplitude index.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(Vector amplitudes);

    const Vector& amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    std::size_t num_qubits() const;
    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(const NumericPolicy& policy = default_policy()) const;

   private:
    Vector amplitudes_;
};

/// Density operator of a (possibly sub-normalized) state.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    explicit DensityMatrix(Matrix entries);

    const Matrix& matrix() const { return entries_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    std::size_t num_qubits() const;
    Complex trace() const { return entries_.trace(); }

   private:
    Matrix entries_;
};

/// Orthogonal projector. Construction checks Hermiticity and idempotence.
class Projector {
   public:
    Projector() = default;
    explicit Projector(Matrix entries, const NumericPolicy& policy = default_policy());

    const Matrix& matrix() const { return entries_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    double rank() const { return entries_.trace().real(); }

   private:
    Matrix entries_;
};

struct DensityCheck {
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    bool ok = false;
};

/// Checks Hermiticity, positivity and 0 < trace <= 1 within the policy tolerance.
DensityCheck check_density(const DensityMatrix& rho, const NumericPolicy& policy = default_policy());

DensityMatrix outer(const StateVector& v);

/// Sum of |v><v| over an orthonormal list. Throws ValidationError if the list is not orthonormal.
Projector projector_from_states(std::span<const StateVector> basis,
                                const NumericPolicy& policy = default_policy());

/// U rho U^dagger. Throws ValidationError if U is not unitary.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& unitary,
                            const NumericPolicy& policy = default_policy());

/// Lifts an operator on the qubits `coords` (in list order, first = most significant)
/// to the full n-qubit space.
Matrix embed_operator(const Matrix& op, std::span<const std::size_t> coords, std::size_t n_total,
                      const NumericPolicy& policy = default_policy());

/// sum_j E_j rho E_j^dagger with each E_j embedded on `coords`.
/// With `strict_tp` a completeness defect above tolerance is an error; otherwise only
/// sum E^dagger E <= I is required.
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::span<const std::size_t> coords, bool strict_tp = false,
                            const NumericPolicy& policy = default_policy());

/// Tr(rho M).
double expectation(const DensityMatrix& rho, const Projector& projector,
                   const NumericPolicy& policy = default_policy());

double fidelity(const StateVector& psi, const DensityMatrix& rho);
double fidelity(const StateVector& psi, const StateVector& phi);

/// Largest deviation from unitarity, max |U^dagger U - I|.
double unitarity_defect(const Matrix& u);

/// Spectral norm of a Hermitian matrix.
double hermitian_norm(const Matrix& h);

std::size_t log2_dim(std::size_t dim);

}  // namespace qeccd
