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

#include "qeccd/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qeccd/errors.hpp"

namespace qeccd {

std::size_t log2_dim(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    log2_dim(dim());
}

std::size_t StateVector::num_qubits() const { return log2_dim(dim()); }

bool StateVector::is_normalized(const NumericPolicy& policy) const {
    return std::abs(norm() - 1.0) < policy.algebraic;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError("density matrix must be square");
    }
    log2_dim(dim());
}

std::size_t DensityMatrix::num_qubits() const { return log2_dim(dim()); }

Projector::Projector(Matrix entries, const NumericPolicy& policy) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError("projector must be square");
    }
    double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    double idem = (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
    if (herm > policy.algebraic || idem > policy.algebraic) {
        throw ValidationError("matrix is not an orthogonal projector (hermiticity defect " +
                              std::to_string(herm) + ", idempotence defect " +
                              std::to_string(idem) + ")");
    }
}

double hermitian_norm(const Matrix& h) {
    if (h.size() == 0) {
        return 0.0;
    }
    Matrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double unitarity_defect(const Matrix& u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

DensityCheck check_density(const DensityMatrix& rho, const NumericPolicy& policy) {
    DensityCheck check;
    const Matrix& m = rho.matrix();
    check.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    Matrix sym = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = solver.eigenvalues()(0);
    check.trace = m.trace().real();
    check.ok = check.hermiticity_defect < policy.algebraic && check.min_eigenvalue > -policy.algebraic &&
               check.trace > 0.0 && check.trace <= 1.0 + policy.algebraic;
    return check;
}

DensityMatrix outer(const StateVector& v) {
    const Vector& a = v.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

Projector projector_from_states(std::span<const StateVector> basis, const NumericPolicy& policy) {
    if (basis.empty()) {
        throw ValidationError("projector_from_states needs at least one state");
    }
    const auto dim = static_cast<Eigen::Index>(basis.front().dim());
    Matrix frame(dim, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (static_cast<Eigen::Index>(basis[j].dim()) != dim) {
            throw DimensionError("states in a projector basis must share a dimension");
        }
        frame.col(static_cast<Eigen::Index>(j)) = basis[j].amplitudes();
    }
    Matrix gram = frame.adjoint() * frame;
    double defect = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (defect > policy.orthonormality) {
        throw ValidationError("states are not orthonormal (Gram defect " + std::to_string(defect) + ")");
    }
    return Projector(frame * frame.adjoint(), policy);
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& unitary, const NumericPolicy& policy) {
    if (unitary.rows() != static_cast<Eigen::Index>(rho.dim()) || unitary.cols() != unitary.rows()) {
        throw DimensionError("unitary dimension does not match the state");
    }
    if (unitarity_defect(unitary) > policy.algebraic) {
        throw ValidationError("operator is not unitary");
    }
    return DensityMatrix(unitary * rho.matrix() * unitary.adjoint());
}

Matrix embed_operator(const Matrix& op, std::span<const std::size_t> coords, std::size_t n_total,
                      const NumericPolicy& policy) {
    if (n_total > policy.dense_qubit_cap) {
        throw ResourceError("dense operators are limited to " + std::to_string(policy.dense_qubit_cap) +
                            " qubits");
    }
    const std::size_t p = coords.size();
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != (std::size_t{1} << p)) {
        throw DimensionError("operator dimension does not match " + std::to_string(p) + " target qubits");
    }
    std::size_t coord_mask = 0;
    std::vector<std::size_t> shift(p);
    for (std::size_t j = 0; j < p; ++j) {
        if (coords[j] >= n_total) {
            throw DimensionError("target qubit " + std::to_string(coords[j]) + " out of range");
        }
        shift[j] = n_total - 1 - coords[j];
        std::size_t bit = std::size_t{1} << shift[j];
        if (coord_mask & bit) {
            throw ValidationError("duplicate target qubit " + std::to_string(coords[j]));
        }
        coord_mask |= bit;
    }
    const std::size_t local_dim = std::size_t{1} << p;
    std::vector<std::size_t> scatter(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l) {
        for (std::size_t j = 0; j < p; ++j) {
            if ((l >> (p - 1 - j)) & 1) {
                scatter[l] |= std::size_t{1} << shift[j];
            }
        }
    }
    const std::size_t dim = std::size_t{1} << n_total;
    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t rest = 0; rest < dim; ++rest) {
        if (rest & coord_mask) {
            continue;
        }
        for (std::size_t lc = 0; lc < local_dim; ++lc) {
            for (std::size_t lr = 0; lr < local_dim; ++lr) {
                full(static_cast<Eigen::Index>(rest | scatter[lr]), static_cast<Eigen::Index>(rest | scatter[lc])) =
                    op(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
            }
        }
    }
    return full;
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::span<const std::size_t> coords, bool strict_tp, const NumericPolicy& policy) {
    if (kraus.empty()) {
        throw ValidationError("a channel needs at least one Kraus operator");
    }
    const auto local_dim = static_cast<Eigen::Index>(std::size_t{1} << coords.size());
    Matrix completeness = Matrix::Zero(local_dim, local_dim);
    for (const auto& e : kraus) {
        if (e.rows() != local_dim || e.cols() != local_dim) {
            throw DimensionError("Kraus operator dimension does not match the target qubits");
        }
        completeness += e.adjoint() * e;
    }
    Matrix defect = completeness - Matrix::Identity(local_dim, local_dim);
    Eigen::SelfAdjointEigenSolver<Matrix> solver((defect + defect.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    if (ev(ev.size() - 1) > policy.algebraic) {
        throw ValidationError("Kraus operators violate sum E^dagger E <= I");
    }
    if (strict_tp && std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) > policy.algebraic) {
        throw ValidationError("channel is not trace preserving");
    }
    const std::size_t n = rho.num_qubits();
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const auto& e : kraus) {
        Matrix full = embed_operator(e, coords, n, policy);
        out += full * rho.matrix() * full.adjoint();
    }
    return DensityMatrix(std::move(out));
}

double expectation(const DensityMatrix& rho, const Projector& projector, const NumericPolicy& policy) {
    (void)policy;
    if (rho.dim() != projector.dim()) {
        throw DimensionError("state and projector dimensions differ");
    }
    return rho.matrix().transpose().cwiseProduct(projector.matrix()).sum().real();
}

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) {
        throw DimensionError("state dimensions differ");
    }
    const Vector& a = psi.amplitudes();
    return (a.adjoint() * rho.matrix() * a)(0, 0).real();
}

double fidelity(const StateVector& psi, const StateVector& phi) {
    if (psi.dim() != phi.dim()) {
        throw DimensionError("state dimensions differ");
    }
    return std::norm(psi.amplitudes().dot(phi.amplitudes()));
}

}  // namespace qeccd
