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

#include "qeccd/stabilizer_code.hpp"

#include <algorithm>
#include <cmath>

#include "qeccd/errors.hpp"

namespace qeccd {

namespace {

using Mask = PauliOperator::Mask;

// Rank of the generators' symplectic vectors over GF(2).
std::size_t symplectic_rank(const std::vector<PauliOperator>& ops) {
    std::vector<std::pair<Mask, Mask>> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) {
        rows.emplace_back(op.x_mask(), op.z_mask());
    }
    std::size_t rank = 0;
    for (int half = 0; half < 2; ++half) {
        for (int bit = 0; bit < 64; ++bit) {
            Mask m = Mask{1} << bit;
            auto has = [&](const std::pair<Mask, Mask>& r) { return ((half == 0 ? r.first : r.second) & m) != 0; };
            auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(), has);
            if (pivot == rows.end()) {
                continue;
            }
            std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && has(rows[r])) {
                    rows[r].first ^= rows[rank].first;
                    rows[r].second ^= rows[rank].second;
                }
            }
            ++rank;
        }
    }
    return rank;
}

// Rotates v so its first amplitude of non-negligible magnitude is real and positive.
Vector fix_phase(Vector v) {
    const double cutoff = 1e-8;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > cutoff) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

Matrix stabilizer_projector(std::size_t n, const std::vector<PauliOperator>& generators, const NumericPolicy& policy) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix proj = Matrix::Identity(dim, dim);
    for (const auto& g : generators) {
        proj = proj * ((Matrix::Identity(dim, dim) + to_matrix(g, policy)) / 2.0);
    }
    return proj;
}

Vector best_column(const Matrix& proj) {
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index c = 0; c < proj.cols(); ++c) {
        double nrm = proj.col(c).norm();
        if (nrm > best_norm + 1e-12) {
            best_norm = nrm;
            best = c;
        }
    }
    return proj.col(best) / best_norm;
}

void check_logical_ops(const LogicalOperators& ops, std::size_t n, std::size_t k,
                       const std::vector<PauliOperator>& generators) {
    if (ops.x.size() != k || ops.z.size() != k) {
        throw ValidationError("expected " + std::to_string(k) + " X and Z logical operators");
    }
    auto check_one = [&](const PauliOperator& op) {
        if (op.num_qubits() != n) {
            throw DimensionError("logical operator " + op.str() + " has the wrong qubit count");
        }
        if (!op.is_hermitian()) {
            throw ValidationError("logical operator " + op.str() + " is not Hermitian");
        }
        for (const auto& g : generators) {
            if (!commutes(op, g)) {
                throw ValidationError("logical operator " + op.str() + " anticommutes with stabilizer " + g.str());
            }
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        check_one(ops.x[i]);
        check_one(ops.z[i]);
        for (std::size_t j = 0; j < k; ++j) {
            bool should_commute = i != j;
            if (commutes(ops.x[i], ops.z[j]) != should_commute) {
                throw ValidationError("logical operators " + ops.x[i].str() + " and " + ops.z[j].str() +
                                      " have the wrong commutation relation");
            }
            if (!commutes(ops.x[i], ops.x[j]) || !commutes(ops.z[i], ops.z[j])) {
                throw ValidationError("logical operators of the same type must commute");
            }
        }
    }
}

// Z_L eigenvectors, |j_L> = X_L^j |0_L>. Logical qubit 0 is the most significant bit of j.
std::vector<StateVector> basis_from_logical_ops(const Matrix& code_proj, const LogicalOperators& ops, std::size_t n,
                                                std::size_t k, const NumericPolicy& policy) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix p0 = code_proj;
    for (const auto& z : ops.z) {
        p0 = p0 * ((Matrix::Identity(dim, dim) + to_matrix(z, policy)) / 2.0);
    }
    Vector zero = fix_phase(best_column(p0));
    std::vector<StateVector> basis;
    const std::size_t count = std::size_t{1} << k;
    basis.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        Vector v = zero;
        for (std::size_t q = 0; q < k; ++q) {
            if ((j >> (k - 1 - q)) & 1) {
                v = to_matrix(ops.x[q], policy) * v;
            }
        }
        basis.emplace_back(std::move(v));
    }
    return basis;
}

// Gram-Schmidt over P|c> for computational basis states c in increasing order.
std::vector<StateVector> basis_from_projector(const Matrix& code_proj, std::size_t k) {
    const std::size_t count = std::size_t{1} << k;
    std::vector<Vector> found;
    for (Eigen::Index c = 0; c < code_proj.cols() && found.size() < count; ++c) {
        Vector v = code_proj.col(c);
        for (const auto& b : found) {
            v -= b.dot(v) * b;
        }
        double nrm = v.norm();
        if (nrm > 1e-6) {
            found.push_back(fix_phase(v / nrm));
        }
    }
    if (found.size() != count) {
        throw ValidationError("stabilizers do not define a code space of dimension " + std::to_string(count));
    }
    std::vector<StateVector> basis;
    basis.reserve(count);
    for (auto& v : found) {
        basis.emplace_back(std::move(v));
    }
    return basis;
}

}  // namespace

Syndrome::Syndrome(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {
    if (length > 64 || (length < 64 && (bits >> length) != 0)) {
        throw DimensionError("syndrome bits exceed its length");
    }
}

Syndrome Syndrome::from_string(std::string_view text) {
    if (text.size() > 64) {
        throw ParseError("syndrome string too long");
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1') {
            bits |= std::uint64_t{1} << j;
        } else if (text[j] != '0') {
            throw ParseError("invalid syndrome string '" + std::string(text) + "'");
        }
    }
    return Syndrome(bits, text.size());
}

std::string Syndrome::str() const {
    std::string out(length_, '0');
    for (std::size_t j = 0; j < length_; ++j) {
        if (bit(j)) out[j] = '1';
    }
    return out;
}

std::vector<int> Syndrome::eigenvalues() const {
    std::vector<int> out(length_);
    for (std::size_t j = 0; j < length_; ++j) {
        out[j] = bit(j) ? -1 : 1;
    }
    return out;
}

Syndrome operator^(const Syndrome& a, const Syndrome& b) {
    if (a.length_ != b.length_) {
        throw DimensionError("syndromes of different length");
    }
    return Syndrome(a.bits_ ^ b.bits_, a.length_);
}

std::optional<std::size_t> StabilizerCode::error_for(const Syndrome& s) const {
    if (s.size() != generators_.size()) {
        return std::nullopt;
    }
    auto it = syndrome_lookup_.find(s.bits());
    if (it == syndrome_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool StabilizerCode::is_perfect() const { return hamming_bound(n_, k_, error_basis_.num_local_qubits()).perfect; }

StabilizerCode build_code(const CodeSpec& spec, const NumericPolicy& policy) {
    const std::size_t n = spec.n;
    if (n == 0) {
        throw ValidationError("a code needs at least one qubit");
    }
    if (n > policy.dense_qubit_cap) {
        throw ResourceError("codes are limited to " + std::to_string(policy.dense_qubit_cap) + " qubits");
    }
    if (spec.generators.size() > n) {
        throw ValidationError("more generators than qubits");
    }
    for (const auto& g : spec.generators) {
        if (g.num_qubits() != n) {
            throw DimensionError("generator " + g.str() + " does not act on " + std::to_string(n) + " qubits");
        }
        if (!g.is_hermitian()) {
            throw ValidationError("generator " + g.str() + " is not Hermitian");
        }
    }
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            if (!commutes(spec.generators[i], spec.generators[j])) {
                throw ValidationError("generators " + spec.generators[i].str() + " and " + spec.generators[j].str() +
                                      " do not commute");
            }
        }
    }
    if (symplectic_rank(spec.generators) != spec.generators.size()) {
        throw ValidationError("generators are not independent");
    }
    if (spec.generators.size() >= 64) {
        throw ResourceError("at most 63 generators are supported");
    }

    StabilizerCode code;
    code.name_ = spec.name;
    code.n_ = n;
    code.k_ = n - spec.generators.size();
    code.generators_ = spec.generators;
    code.error_basis_ = ErrorBasis(n, spec.noisy_coords);

    Matrix proj = stabilizer_projector(n, spec.generators, policy);
    const std::size_t count = std::size_t{1} << code.k_;

    if (spec.logical_ops) {
        check_logical_ops(*spec.logical_ops, n, code.k_, spec.generators);
        code.logical_ops_ = spec.logical_ops;
    }
    if (spec.codewords) {
        const auto& words = *spec.codewords;
        if (words.size() != count) {
            throw ValidationError("expected " + std::to_string(count) + " codewords, got " +
                                  std::to_string(words.size()));
        }
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (words[j].dim() != (std::size_t{1} << n)) {
                throw DimensionError("codeword " + std::to_string(j) + " has the wrong dimension");
            }
            for (const auto& g : spec.generators) {
                double err = (to_matrix(g, policy) * words[j].amplitudes() - words[j].amplitudes()).cwiseAbs().maxCoeff();
                if (err > policy.algebraic) {
                    throw ValidationError("codeword " + std::to_string(j) + " is not stabilized by " + g.str());
                }
            }
        }
        // Orthonormality check happens inside projector_from_states.
        projector_from_states(words, policy);
        code.logical_basis_ = words;
    } else if (spec.logical_ops) {
        code.logical_basis_ = basis_from_logical_ops(proj, *spec.logical_ops, n, code.k_, policy);
    } else {
        code.logical_basis_ = basis_from_projector(proj, code.k_);
    }
    code.code_projector_ = projector_from_states(code.logical_basis_, policy);

    const ErrorBasis& basis = code.error_basis_;
    code.syndrome_table_.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < code.generators_.size(); ++j) {
            if (!commutes(basis.element(i), code.generators_[j])) {
                bits |= std::uint64_t{1} << j;
            }
        }
        Syndrome s(bits, code.generators_.size());
        auto [it, inserted] = code.syndrome_lookup_.emplace(bits, i);
        if (!inserted) {
            throw SyndromeCollisionError("syndrome collision: errors " + basis.label(it->second) + " and " +
                                         basis.label(i) + " share syndrome " + s.str());
        }
        code.syndrome_table_.push_back(s);
    }
    return code;
}

Syndrome syndrome_of(const StabilizerCode& code, std::size_t error_index) {
    if (error_index >= code.error_basis().size()) {
        throw ValidationError("error index " + std::to_string(error_index) + " out of range");
    }
    return code.syndrome(error_index);
}

KnillLaflammeReport knill_laflamme(const StabilizerCode& code, const NumericPolicy& policy) {
    const ErrorBasis& basis = code.error_basis();
    const Matrix& proj = code.code_projector().matrix();
    const double tr = proj.trace().real();
    const auto d2 = static_cast<Eigen::Index>(basis.size());
    std::vector<Matrix> f;
    f.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f.push_back(to_matrix(basis.element(i), policy));
    }
    KnillLaflammeReport report;
    report.c = Matrix::Zero(d2, d2);
    for (Eigen::Index a = 0; a < d2; ++a) {
        Matrix left = proj * f[static_cast<std::size_t>(a)].adjoint();
        for (Eigen::Index b = 0; b < d2; ++b) {
            Matrix m = left * f[static_cast<std::size_t>(b)] * proj;
            Complex c = m.trace() / tr;
            report.c(a, b) = c;
            report.residual = std::max(report.residual, (m - c * proj).cwiseAbs().maxCoeff());
        }
    }
    Eigen::FullPivLU<Matrix> lu(report.c);
    lu.setThreshold(policy.knill_laflamme);
    report.nondegenerate = lu.isInvertible();
    return report;
}

Matrix kl_condition(const StabilizerCode& code, const NumericPolicy& policy) {
    KnillLaflammeReport report = knill_laflamme(code, policy);
    if (report.residual >= policy.knill_laflamme) {
        throw ValidationError("Knill-Laflamme residual " + std::to_string(report.residual) +
                              ": code does not correct this error set");
    }
    return report.c;
}

HammingBound hamming_bound(std::size_t n, std::size_t k, std::size_t m) {
    return {k + 2 * m <= n, k + 2 * m == n};
}

Projector error_space_projector(const StabilizerCode& code, std::size_t error_index, const NumericPolicy& policy) {
    Matrix f = to_matrix(code.error_basis().element(error_index), policy);
    return Projector(f * code.code_projector().matrix() * f.adjoint(), policy);
}

Projector syndrome_projector(const StabilizerCode& code, const Syndrome& s, const NumericPolicy& policy) {
    auto idx = code.error_for(s);
    if (!idx) {
        throw ValidationError("syndrome " + s.str() + " is not produced by any correctable error");
    }
    return error_space_projector(code, *idx, policy);
}

std::vector<std::string> builtin_code_names() { return {"code3", "code5"}; }

CodeSpec builtin_code_spec(std::string_view name) {
    auto ket = [](std::size_t n, std::initializer_list<std::pair<const char*, double>> terms, double scale) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
        for (const auto& [bits, coeff] : terms) {
            v(static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))) = coeff * scale;
        }
        return v;
    };
    CodeSpec spec;
    spec.name = std::string(name);
    if (name == "code3") {
        spec.n = 3;
        spec.generators = {PauliOperator::from_string("XIX"), PauliOperator::from_string("YYZ")};
        spec.noisy_coords = {0};
        Vector zero = ket(3, {{"001", 1}, {"010", 1}, {"100", 1}, {"111", 1}}, 0.5);
        Vector one = ket(3, {{"110", 1}, {"101", -1}, {"011", 1}, {"000", -1}}, 0.5);
        spec.codewords = std::vector<StateVector>{StateVector(zero), StateVector(one)};
        spec.logical_ops = LogicalOperators{{PauliOperator::from_string("-ZXZ")}, {PauliOperator::from_string("-ZZZ")}};
        return spec;
    }
    if (name == "code5") {
        spec.n = 5;
        spec.generators = {PauliOperator::from_string("IZZZZ"), PauliOperator::from_string("XXXII"),
                           PauliOperator::from_string("ZXZIX"), PauliOperator::from_string("ZZXXI")};
        spec.noisy_coords = {0, 1};
        Vector zero = ket(5,
                          {{"00000", 1},
                           {"00110", 1},
                           {"01001", 1},
                           {"01111", -1},
                           {"10011", -1},
                           {"10101", 1},
                           {"11010", 1},
                           {"11100", 1}},
                          1.0 / (2.0 * std::sqrt(2.0)));
        Vector one = to_matrix(PauliOperator::from_string("XXXXX")) * zero;
        spec.codewords = std::vector<StateVector>{StateVector(zero), StateVector(one)};
        spec.logical_ops = LogicalOperators{{PauliOperator::from_string("XXXXX")}, {PauliOperator::from_string("ZIZZI")}};
        return spec;
    }
    throw ValidationError("unknown code '" + std::string(name) + "'");
}

StabilizerCode builtin_code(std::string_view name) { return build_code(builtin_code_spec(name)); }

}  // namespace qeccd
