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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qeccd/dense.hpp"

namespace qeccd {

/// A scalar i^k, k in {0, 1, 2, 3}.
class PauliFactor {
   public:
    constexpr PauliFactor() = default;
    static constexpr PauliFactor from_exponent(int k) { return PauliFactor(((k % 4) + 4) % 4); }
    static constexpr PauliFactor one() { return PauliFactor(0); }
    static constexpr PauliFactor i() { return PauliFactor(1); }
    static constexpr PauliFactor minus_one() { return PauliFactor(2); }
    static constexpr PauliFactor minus_i() { return PauliFactor(3); }

    constexpr int exponent() const { return exp_; }
    constexpr bool is_real() const { return exp_ % 2 == 0; }
    constexpr PauliFactor conj() const { return PauliFactor((4 - exp_) % 4); }
    Complex value() const;
    /// "+1", "+i", "-1" or "-i".
    std::string str() const;

    friend constexpr PauliFactor operator*(PauliFactor a, PauliFactor b) {
        return PauliFactor((a.exp_ + b.exp_) % 4);
    }
    friend constexpr bool operator==(PauliFactor, PauliFactor) = default;

   private:
    constexpr explicit PauliFactor(int k) : exp_(k) {}
    int exp_ = 0;
};

/// i^phase_exp * X^x_mask * Z^z_mask on n qubits. Bit q of a mask refers to qubit q.
///
/// A single-qubit Y is stored as x = z = 1 with one extra factor of i (Y = iXZ), so the
/// masks are a plain symplectic vector and all sign bookkeeping sits in phase_exp.
class PauliOperator {
   public:
    using Mask = std::uint64_t;
    static constexpr std::size_t kMaxQubits = 64;

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n);
    PauliOperator(std::size_t n, Mask x_mask, Mask z_mask, int phase_exp = 0);

    /// Tensor product of I/X/Y/Z (no extra sign) with the given masks.
    static PauliOperator word(std::size_t n, Mask x_mask, Mask z_mask);
    /// Parses "XYZ", "-ZXZ", "+iXX", "-iY". Accepts 'I' or '_' for identity and U+2212 for minus.
    static PauliOperator from_string(std::string_view text);

    std::size_t num_qubits() const { return n_; }
    Mask x_mask() const { return x_; }
    Mask z_mask() const { return z_; }
    int phase_exp() const { return phase_; }

    /// Factor g with *this == g * bare().
    PauliFactor sign() const;
    /// The I/X/Y/Z tensor word with the same masks.
    PauliOperator bare() const { return word(n_, x_, z_); }
    bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
    bool is_hermitian() const { return sign().is_real(); }
    bool same_word(const PauliOperator& other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }
    /// 'I', 'X', 'Y' or 'Z' on qubit q.
    char letter(std::size_t q) const;
    std::string str() const;

    friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

   private:
    std::size_t n_ = 0;
    Mask x_ = 0;
    Mask z_ = 0;
    int phase_ = 0;
};

/// P*Q split into (g, R) where R is the bare I/X/Y/Z word and g*R == P*Q.
std::pair<PauliFactor, PauliOperator> pauli_mul(const PauliOperator& p, const PauliOperator& q);

/// Symplectic commutation test.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Dense 2^n x 2^n matrix. Qubit 0 is the leftmost (most significant) tensor factor.
Matrix to_matrix(const PauliOperator& p, const NumericPolicy& policy = default_policy());

/// All 4^p Pauli words supported on `coords` of an n_total-qubit register.
///
/// Element index is (u << p) | v where u and v are the X and Z bit vectors over coords,
/// coords[0] being the most significant bit of each. Element 0 is the identity.
class ErrorBasis {
   public:
    ErrorBasis() : ErrorBasis(0, {}) {}
    ErrorBasis(std::size_t n_total, std::vector<std::size_t> coords);

    std::size_t n_total() const { return n_total_; }
    const std::vector<std::size_t>& coords() const { return coords_; }
    std::size_t num_local_qubits() const { return coords_.size(); }
    std::size_t size() const { return local_.size(); }
    /// Local dimension d = 2^p.
    std::size_t local_dim() const { return std::size_t{1} << coords_.size(); }

    /// Element i acting on the p noisy qubits (local qubit j = coords[j]).
    const PauliOperator& local(std::size_t i) const { return local_.at(i); }
    /// Element i on the full register, identity outside coords.
    const PauliOperator& element(std::size_t i) const { return embedded_.at(i); }
    /// Label of the local word, e.g. "XZ".
    std::string label(std::size_t i) const { return local_.at(i).str(); }

    /// Index of the word matching `op` up to phase. Accepts local (p-qubit) or embedded operators.
    std::size_t index_of(const PauliOperator& op) const;
    /// F_i F_j = g F_k; returns (g, k).
    std::pair<PauliFactor, std::size_t> multiply(std::size_t i, std::size_t j) const;
    /// Exhaustive check that products stay in the basis up to a factor.
    bool is_group_closed() const;

    friend bool operator==(const ErrorBasis& a, const ErrorBasis& b) {
        return a.n_total_ == b.n_total_ && a.coords_ == b.coords_;
    }

   private:
    std::size_t n_total_ = 0;
    std::vector<std::size_t> coords_;
    std::vector<PauliOperator> local_;
    std::vector<PauliOperator> embedded_;
};

/// Validating factory for ErrorBasis.
ErrorBasis enumerate_error_basis(std::size_t n_total, std::vector<std::size_t> coords);

}  // namespace qeccd
