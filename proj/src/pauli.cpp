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

#include "qeccd/pauli.hpp"

#include <bit>
#include <set>

#include "qeccd/errors.hpp"

namespace qeccd {

namespace {

constexpr std::size_t kMaxLocalQubits = 6;

PauliOperator::Mask low_bits(std::size_t n) {
    return n >= 64 ? ~PauliOperator::Mask{0} : ((PauliOperator::Mask{1} << n) - 1);
}

int popcount(PauliOperator::Mask m) { return std::popcount(m); }

void require_same_size(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli operators act on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

Complex PauliFactor::value() const {
    switch (exp_) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

std::string PauliFactor::str() const {
    static const char* names[] = {"+1", "+i", "-1", "-i"};
    return names[exp_];
}

PauliOperator::PauliOperator(std::size_t n) : PauliOperator(n, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t n, Mask x_mask, Mask z_mask, int phase_exp)
    : n_(n), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
    if (n > kMaxQubits) {
        throw ResourceError("Pauli operators are limited to 64 qubits");
    }
    if ((x_ | z_) & ~low_bits(n)) {
        throw DimensionError("mask has bits beyond qubit count " + std::to_string(n));
    }
}

PauliOperator PauliOperator::word(std::size_t n, Mask x_mask, Mask z_mask) {
    return PauliOperator(n, x_mask, z_mask, popcount(x_mask & z_mask));
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    std::string_view rest = text;
    int sign_exp = 0;
    if (!rest.empty() && rest.front() == '+') {
        rest.remove_prefix(1);
    } else if (!rest.empty() && rest.front() == '-') {
        sign_exp = 2;
        rest.remove_prefix(1);
    } else if (rest.starts_with("\xE2\x88\x92")) {
        sign_exp = 2;
        rest.remove_prefix(3);
    }
    if (!rest.empty() && rest.front() == 'i') {
        sign_exp += 1;
        rest.remove_prefix(1);
    }
    if (rest.empty()) {
        throw ParseError("empty Pauli string '" + std::string(text) + "'");
    }
    if (rest.size() > kMaxQubits) {
        throw ResourceError("Pauli strings are limited to 64 qubits");
    }
    Mask x = 0;
    Mask z = 0;
    for (std::size_t q = 0; q < rest.size(); ++q) {
        Mask bit = Mask{1} << q;
        switch (rest[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw ParseError("invalid Pauli character '" + std::string(1, rest[q]) + "' in '" +
                                 std::string(text) + "'");
        }
    }
    return PauliOperator(rest.size(), x, z, sign_exp + popcount(x & z));
}

PauliFactor PauliOperator::sign() const { return PauliFactor::from_exponent(phase_ - popcount(x_ & z_)); }

char PauliOperator::letter(std::size_t q) const {
    bool xb = (x_ >> q) & 1;
    bool zb = (z_ >> q) & 1;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

std::string PauliOperator::str() const {
    static const char* prefixes[] = {"", "+i", "-", "-i"};
    std::string out = prefixes[sign().exponent()];
    for (std::size_t q = 0; q < n_; ++q) {
        out += letter(q);
    }
    return out;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    require_same_size(a, b);
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
    int phase = a.phase_ + b.phase_ + 2 * popcount(a.z_ & b.x_);
    return PauliOperator(a.n_, a.x_ ^ b.x_, a.z_ ^ b.z_, phase);
}

std::pair<PauliFactor, PauliOperator> pauli_mul(const PauliOperator& p, const PauliOperator& q) {
    PauliOperator product = p * q;
    return {product.sign(), product.bare()};
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    require_same_size(p, q);
    return (popcount(p.x_mask() & q.z_mask()) + popcount(p.z_mask() & q.x_mask())) % 2 == 0;
}

Matrix to_matrix(const PauliOperator& p, const NumericPolicy& policy) {
    const std::size_t n = p.num_qubits();
    if (n > policy.dense_qubit_cap) {
        throw ResourceError("dense Pauli matrices are limited to " + std::to_string(policy.dense_qubit_cap) +
                            " qubits");
    }
    // Qubit q sits at bit (n - 1 - q) of the basis index.
    std::size_t x_idx = 0;
    std::size_t z_idx = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t bit = std::size_t{1} << (n - 1 - q);
        if ((p.x_mask() >> q) & 1) x_idx |= bit;
        if ((p.z_mask() >> q) & 1) z_idx |= bit;
    }
    const std::size_t dim = std::size_t{1} << n;
    const Complex global = PauliFactor::from_exponent(p.phase_exp()).value();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        double s = (std::popcount(z_idx & col) % 2) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(col ^ x_idx), static_cast<Eigen::Index>(col)) = s * global;
    }
    return m;
}

ErrorBasis::ErrorBasis(std::size_t n_total, std::vector<std::size_t> coords)
    : n_total_(n_total), coords_(std::move(coords)) {
    if (n_total_ > PauliOperator::kMaxQubits) {
        throw ResourceError("register size " + std::to_string(n_total_) + " exceeds 64 qubits");
    }
    std::set<std::size_t> seen;
    for (std::size_t c : coords_) {
        if (c >= n_total_) {
            throw ValidationError("noisy coordinate " + std::to_string(c) + " out of range for " +
                                  std::to_string(n_total_) + " qubits");
        }
        if (!seen.insert(c).second) {
            throw ValidationError("duplicate noisy coordinate " + std::to_string(c));
        }
    }
    const std::size_t p = coords_.size();
    if (p > kMaxLocalQubits) {
        throw ResourceError("error bases are limited to " + std::to_string(kMaxLocalQubits) + " noisy qubits");
    }
    const std::size_t count = std::size_t{1} << (2 * p);
    local_.reserve(count);
    embedded_.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t u = idx >> p;
        std::size_t v = idx & ((std::size_t{1} << p) - 1);
        PauliOperator::Mask lx = 0, lz = 0, ex = 0, ez = 0;
        for (std::size_t j = 0; j < p; ++j) {
            std::size_t shift = p - 1 - j;
            if ((u >> shift) & 1) {
                lx |= PauliOperator::Mask{1} << j;
                ex |= PauliOperator::Mask{1} << coords_[j];
            }
            if ((v >> shift) & 1) {
                lz |= PauliOperator::Mask{1} << j;
                ez |= PauliOperator::Mask{1} << coords_[j];
            }
        }
        local_.push_back(PauliOperator::word(p, lx, lz));
        embedded_.push_back(PauliOperator::word(n_total_, ex, ez));
    }
}

std::size_t ErrorBasis::index_of(const PauliOperator& op) const {
    const std::size_t p = coords_.size();
    PauliOperator::Mask lx = 0, lz = 0;
    if (op.num_qubits() == p) {
        lx = op.x_mask();
        lz = op.z_mask();
    } else if (op.num_qubits() == n_total_) {
        PauliOperator::Mask support = 0;
        for (std::size_t j = 0; j < p; ++j) {
            PauliOperator::Mask bit = PauliOperator::Mask{1} << coords_[j];
            support |= bit;
            if (op.x_mask() & bit) lx |= PauliOperator::Mask{1} << j;
            if (op.z_mask() & bit) lz |= PauliOperator::Mask{1} << j;
        }
        if ((op.x_mask() | op.z_mask()) & ~support) {
            throw ValidationError("operator " + op.str() + " acts outside the noisy coordinates");
        }
    } else {
        throw DimensionError("operator " + op.str() + " has the wrong qubit count for this error basis");
    }
    std::size_t u = 0, v = 0;
    for (std::size_t j = 0; j < p; ++j) {
        std::size_t shift = p - 1 - j;
        if ((lx >> j) & 1) u |= std::size_t{1} << shift;
        if ((lz >> j) & 1) v |= std::size_t{1} << shift;
    }
    return (u << p) | v;
}

std::pair<PauliFactor, std::size_t> ErrorBasis::multiply(std::size_t i, std::size_t j) const {
    auto [g, word] = pauli_mul(local(i), local(j));
    return {g, index_of(word)};
}

bool ErrorBasis::is_group_closed() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            auto [g, word] = pauli_mul(local_[i], local_[j]);
            std::size_t k = index_of(word);
            if (!local_[k].same_word(word)) {
                return false;
            }
        }
    }
    return true;
}

ErrorBasis enumerate_error_basis(std::size_t n_total, std::vector<std::size_t> coords) {
    return ErrorBasis(n_total, std::move(coords));
}

}  // namespace qeccd
