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

#include "qeccd/channels.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "qeccd/errors.hpp"

namespace qeccd {

namespace {

std::string format_number(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string make_label(std::string_view name, std::span<const double> params) {
    std::string out(name);
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += format_number(params[i]);
    }
    out += ')';
    return out;
}

void require_unit_interval(std::string_view name, double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError(std::string(name) + " parameter " + format_number(value) + " outside [0, 1]");
    }
}

std::size_t integer_param(std::string_view name, double value, std::size_t lo, std::size_t hi) {
    if (!(value >= static_cast<double>(lo) && value <= static_cast<double>(hi)) || std::floor(value) != value) {
        throw ValidationError(std::string(name) + " expects an integer in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "], got " + format_number(value));
    }
    return static_cast<std::size_t>(value);
}

Matrix pauli_local(std::string_view word) { return to_matrix(PauliOperator::from_string(word)); }

}  // namespace

Channel::Channel(std::size_t num_qubits, std::vector<Matrix> kraus, std::string label, const NumericPolicy& policy)
    : p_(num_qubits), kraus_(std::move(kraus)), label_(std::move(label)) {
    if (kraus_.empty()) {
        throw ValidationError("a channel needs at least one Kraus operator");
    }
    if (p_ > policy.dense_qubit_cap) {
        throw ResourceError("channel acts on too many qubits");
    }
    const auto d = static_cast<Eigen::Index>(dim());
    Matrix completeness = Matrix::Zero(d, d);
    for (const auto& e : kraus_) {
        if (e.rows() != d || e.cols() != d) {
            throw DimensionError("Kraus operator is " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                                 ", expected " + std::to_string(d) + "x" + std::to_string(d));
        }
        completeness += e.adjoint() * e;
    }
    Matrix defect = completeness - Matrix::Identity(d, d);
    Eigen::SelfAdjointEigenSolver<Matrix> solver((defect + defect.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(d - 1) > policy.algebraic) {
        throw ValidationError("Kraus operators violate sum E^dagger E <= I");
    }
}

ChannelReport validate_channel(const Channel& ch, const NumericPolicy& policy) {
    const auto d = static_cast<Eigen::Index>(ch.dim());
    Matrix completeness = Matrix::Zero(d, d);
    for (const auto& e : ch.kraus()) {
        completeness += e.adjoint() * e;
    }
    ChannelReport report;
    report.defect = hermitian_norm(completeness - Matrix::Identity(d, d));
    report.tp = report.defect < policy.algebraic;
    return report;
}

ProcessMatrix::ProcessMatrix(Matrix entries, ErrorBasis basis) : entries_(std::move(entries)), basis_(std::move(basis)) {
    const auto n = static_cast<Eigen::Index>(basis_.size());
    if (entries_.rows() != n || entries_.cols() != n) {
        throw DimensionError("process matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
}

Complex ProcessMatrix::at(std::string_view row_label, std::string_view col_label) const {
    std::size_t m = basis_.index_of(PauliOperator::from_string(row_label));
    std::size_t n = basis_.index_of(PauliOperator::from_string(col_label));
    return (*this)(m, n);
}

ChiValidity ProcessMatrix::validity(const NumericPolicy& policy) const {
    ChiValidity v;
    v.hermiticity_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Matrix> solver((entries_ + entries_.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    v.min_eigenvalue = solver.eigenvalues()(0);
    v.trace = entries_.trace().real();
    v.hermitian = v.hermiticity_defect < policy.algebraic;
    v.positive = v.min_eigenvalue > -policy.algebraic;
    return v;
}

ProcessMatrix chi_from_kraus(const Channel& ch, const ErrorBasis& basis) {
    if (basis.num_local_qubits() != ch.num_qubits()) {
        throw DimensionError("channel acts on " + std::to_string(ch.num_qubits()) + " qubits but the basis has " +
                             std::to_string(basis.num_local_qubits()));
    }
    const auto d2 = static_cast<Eigen::Index>(basis.size());
    const double d = static_cast<double>(ch.dim());
    std::vector<Matrix> paulis;
    paulis.reserve(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        paulis.push_back(to_matrix(basis.local(m)));
    }
    // Row j of alpha holds the Pauli coefficients of E_j.
    Matrix alpha(static_cast<Eigen::Index>(ch.kraus().size()), d2);
    for (std::size_t j = 0; j < ch.kraus().size(); ++j) {
        for (Eigen::Index m = 0; m < d2; ++m) {
            alpha(static_cast<Eigen::Index>(j), m) =
                paulis[static_cast<std::size_t>(m)].adjoint().cwiseProduct(ch.kraus()[j].transpose()).sum() / d;
        }
    }
    Matrix chi = alpha.transpose() * alpha.conjugate();
    return ProcessMatrix(std::move(chi), basis);
}

Channel kraus_from_chi(const ProcessMatrix& chi, const NumericPolicy& policy) {
    const ErrorBasis& basis = chi.basis();
    Matrix herm = (chi.matrix() + chi.matrix().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
    const auto& ev = solver.eigenvalues();
    if (ev(0) < -policy.algebraic) {
        throw ValidationError("process matrix has negative eigenvalue " + format_number(ev(0)));
    }
    const auto d = static_cast<Eigen::Index>(basis.local_dim());
    std::vector<Matrix> kraus;
    for (Eigen::Index k = ev.size() - 1; k >= 0; --k) {
        if (ev(k) <= policy.algebraic) {
            continue;
        }
        Matrix e = Matrix::Zero(d, d);
        for (std::size_t m = 0; m < basis.size(); ++m) {
            e += solver.eigenvectors()(static_cast<Eigen::Index>(m), k) * to_matrix(basis.local(m));
        }
        kraus.push_back(std::sqrt(ev(k)) * e);
    }
    if (kraus.empty()) {
        kraus.push_back(Matrix::Zero(d, d));
    }
    return Channel(basis.num_local_qubits(), std::move(kraus), "from-chi", policy);
}

DensityMatrix apply_chi(const DensityMatrix& rho, const ProcessMatrix& chi, const NumericPolicy& policy) {
    const ErrorBasis& basis = chi.basis();
    if (rho.num_qubits() != basis.n_total()) {
        throw DimensionError("state and process-matrix basis act on different registers");
    }
    std::vector<Matrix> f;
    f.reserve(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        f.push_back(to_matrix(basis.element(m), policy));
    }
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (std::size_t n = 0; n < basis.size(); ++n) {
        Matrix rho_fn = rho.matrix() * f[n].adjoint();
        for (std::size_t m = 0; m < basis.size(); ++m) {
            Complex c = chi(m, n);
            if (c != Complex(0.0, 0.0)) {
                out += c * (f[m] * rho_fn);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

Channel random_cp_channel(std::uint64_t seed, std::size_t num_qubits, std::size_t rank) {
    if (rank == 0) {
        throw ValidationError("random channel rank must be positive");
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    const auto r = static_cast<Eigen::Index>(rank);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(d * r, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index row = 0; row < d * r; ++row) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(row, c) = Complex(re, im);
        }
    }
    // Haar measure needs the phase fix Q * diag(R_ii / |R_ii|).
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d * r, d);
    Matrix rmat = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; ++c) {
        Complex diag = rmat(c, c);
        double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(c) *= diag / mag;
        }
    }
    std::vector<Matrix> kraus;
    kraus.reserve(rank);
    for (Eigen::Index k = 0; k < r; ++k) {
        kraus.push_back(q.middleRows(k * d, d));
    }
    double params[] = {static_cast<double>(seed), static_cast<double>(num_qubits), static_cast<double>(rank)};
    return Channel(num_qubits, std::move(kraus), make_label("random-cp", params));
}

std::vector<std::string> builtin_channel_names() {
    return {"identity", "amplitude-damping", "correlated-flip", "depolarizing", "phase-damping", "random-cp"};
}

Channel builtin_channel(std::string_view name, std::span<const double> params) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi) {
            throw ValidationError(std::string(name) + " expects between " + std::to_string(lo) + " and " +
                                  std::to_string(hi) + " parameters, got " + std::to_string(params.size()));
        }
    };
    std::string label = make_label(name, params);
    if (name == "identity") {
        need(0, 1);
        std::size_t p = params.empty() ? 1 : integer_param(name, params[0], 0, 6);
        auto d = static_cast<Eigen::Index>(std::size_t{1} << p);
        return Channel(p, {Matrix::Identity(d, d)}, label);
    }
    if (name == "amplitude-damping") {
        need(1, 1);
        double lambda = params[0];
        require_unit_interval(name, lambda);
        double s = std::sqrt(1.0 - lambda);
        Matrix e0 = ((1.0 + s) / 2.0) * pauli_local("I") + ((1.0 - s) / 2.0) * pauli_local("Z");
        Matrix e1 = (std::sqrt(lambda) / 2.0) * pauli_local("X") +
                    Complex(0.0, std::sqrt(lambda) / 2.0) * pauli_local("Y");
        return Channel(1, {e0, e1}, label);
    }
    if (name == "correlated-flip") {
        need(1, 1);
        double p = params[0];
        require_unit_interval(name, p);
        return Channel(2, {std::sqrt(1.0 - p) * pauli_local("II"), std::sqrt(p) * pauli_local("XX")}, label);
    }
    if (name == "depolarizing") {
        need(1, 2);
        double p = params[0];
        require_unit_interval(name, p);
        std::size_t q = params.size() > 1 ? integer_param(name, params[1], 1, 6) : 1;
        ErrorBasis basis(q, [&] {
            std::vector<std::size_t> c(q);
            for (std::size_t j = 0; j < q; ++j) c[j] = j;
            return c;
        }());
        const double d2 = static_cast<double>(basis.size());
        std::vector<Matrix> kraus;
        kraus.push_back(std::sqrt(1.0 - p * (d2 - 1.0) / d2) * to_matrix(basis.local(0)));
        for (std::size_t m = 1; m < basis.size(); ++m) {
            kraus.push_back(std::sqrt(p / d2) * to_matrix(basis.local(m)));
        }
        return Channel(q, std::move(kraus), label);
    }
    if (name == "phase-damping") {
        need(1, 1);
        double gamma = params[0];
        require_unit_interval(name, gamma);
        Matrix e0 = Matrix::Zero(2, 2);
        e0(0, 0) = 1.0;
        e0(1, 1) = std::sqrt(1.0 - gamma);
        Matrix e1 = Matrix::Zero(2, 2);
        e1(1, 1) = std::sqrt(gamma);
        return Channel(1, {e0, e1}, label);
    }
    if (name == "random-cp") {
        need(1, 3);
        if (!(params[0] >= 0.0) || std::floor(params[0]) != params[0] || params[0] > 9007199254740992.0) {
            throw ValidationError("random-cp seed must be a nonnegative integer");
        }
        auto seed = static_cast<std::uint64_t>(params[0]);
        std::size_t q = params.size() > 1 ? integer_param(name, params[1], 1, 6) : 1;
        std::size_t max_rank = std::size_t{1} << (2 * q);
        std::size_t rank = params.size() > 2 ? integer_param(name, params[2], 1, max_rank) : max_rank;
        return random_cp_channel(seed, q, rank);
    }
    throw ValidationError("unknown channel '" + std::string(name) + "'");
}

}  // namespace qeccd
