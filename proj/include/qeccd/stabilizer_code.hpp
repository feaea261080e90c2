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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qeccd/dense.hpp"
#include "qeccd/pauli.hpp"

namespace qeccd {

/// Stabilizer measurement outcome. Bit j belongs to generator j; 0 means eigenvalue +1.
class Syndrome {
   public:
    Syndrome() = default;
    Syndrome(std::uint64_t bits, std::size_t length);
    /// "0101" with generator 0 first.
    static Syndrome from_string(std::string_view text);

    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return length_; }
    bool bit(std::size_t j) const { return (bits_ >> j) & 1; }
    bool is_trivial() const { return bits_ == 0; }
    std::string str() const;
    /// +1 / -1 per generator.
    std::vector<int> eigenvalues() const;

    friend Syndrome operator^(const Syndrome& a, const Syndrome& b);
    friend auto operator<=>(const Syndrome&, const Syndrome&) = default;

   private:
    std::uint64_t bits_ = 0;
    std::size_t length_ = 0;
};

/// One X_L / Z_L pair per logical qubit.
struct LogicalOperators {
    std::vector<PauliOperator> x;
    std::vector<PauliOperator> z;
};

/// Everything needed to build a code. Codewords, when given, fix the logical basis;
/// otherwise it is derived from the stabilizers (and the logical operators, if any).
struct CodeSpec {
    std::string name;
    std::size_t n = 0;
    std::vector<PauliOperator> generators;
    std::vector<std::size_t> noisy_coords;
    std::optional<std::vector<StateVector>> codewords;
    std::optional<LogicalOperators> logical_ops;
};

class StabilizerCode {
   public:
    const std::string& name() const { return name_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const std::vector<PauliOperator>& generators() const { return generators_; }
    const std::vector<StateVector>& logical_basis() const { return logical_basis_; }
    const std::optional<LogicalOperators>& logical_ops() const { return logical_ops_; }
    const std::vector<std::size_t>& noisy_coords() const { return error_basis_.coords(); }
    const ErrorBasis& error_basis() const { return error_basis_; }
    /// Projector onto the code space.
    const Projector& code_projector() const { return code_projector_; }

    /// Syndrome of error-basis element i.
    const Syndrome& syndrome(std::size_t error_index) const { return syndrome_table_.at(error_index); }
    const std::vector<Syndrome>& syndrome_table() const { return syndrome_table_; }
    /// Error-basis index whose syndrome is `s`; nullopt if none.
    std::optional<std::size_t> error_for(const Syndrome& s) const;
    /// Whether 2^k 4^p == 2^n.
    bool is_perfect() const;

   private:
    friend StabilizerCode build_code(const CodeSpec& spec, const NumericPolicy& policy);

    std::string name_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<StateVector> logical_basis_;
    std::optional<LogicalOperators> logical_ops_;
    ErrorBasis error_basis_;
    Projector code_projector_;
    std::vector<Syndrome> syndrome_table_;
    std::unordered_map<std::uint64_t, std::size_t> syndrome_lookup_;
};

/// Validates the generators, fixes the logical basis, and builds the syndrome table.
///
/// Throws ValidationError for non-commuting, dependent or non-Hermitian generators and for
/// codewords that are not stabilized or not orthonormal; SyndromeCollisionError when two
/// basis errors share a syndrome.
StabilizerCode build_code(const CodeSpec& spec, const NumericPolicy& policy = default_policy());

/// Bit j is 1 iff the error anticommutes with generator j.
Syndrome syndrome_of(const StabilizerCode& code, std::size_t error_index);

struct KnillLaflammeReport {
    Matrix c;
    double residual = 0.0;
    /// C is non-singular.
    bool nondegenerate = false;
};

/// C_ab = Tr(P F_a F_b P) / Tr(P) and the largest entry of |P F_a F_b P - C_ab P| over all pairs.
KnillLaflammeReport knill_laflamme(const StabilizerCode& code, const NumericPolicy& policy = default_policy());

/// Same as knill_laflamme() but throws ValidationError when the residual is above tolerance.
Matrix kl_condition(const StabilizerCode& code, const NumericPolicy& policy = default_policy());

struct HammingBound {
    bool satisfied = false;
    bool perfect = false;
};

/// 2^k 4^m <= 2^n, i.e. k + 2m <= n.
HammingBound hamming_bound(std::size_t n, std::size_t k, std::size_t m);

/// F_x P F_x for the error F_x carrying syndrome `s`. Throws ValidationError for an unknown syndrome.
Projector syndrome_projector(const StabilizerCode& code, const Syndrome& s,
                             const NumericPolicy& policy = default_policy());
/// Projector for error-basis element i.
Projector error_space_projector(const StabilizerCode& code, std::size_t error_index,
                                const NumericPolicy& policy = default_policy());

/// "code3" ([[3,1]], noise on qubit 0) or "code5" ([[5,1]], noise on qubits 0 and 1).
CodeSpec builtin_code_spec(std::string_view name);
StabilizerCode builtin_code(std::string_view name);
std::vector<std::string> builtin_code_names();

}  // namespace qeccd
