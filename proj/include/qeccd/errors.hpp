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

#include <stdexcept>
#include <string>

namespace qeccd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or matrix dimension.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Input violates a documented precondition (non-unitary, non-orthonormal, bad range, ...).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A request exceeds the dense-simulation size cap.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Two correctable errors share a syndrome, so the code cannot separate them.
class SyndromeCollisionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// The channel acts on qubits the code does not protect.
class SupportError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Measurement records do not determine, or disagree about, a process-matrix entry.
class ReconstructionError : public Error {
   public:
    using Error::Error;
};

}  // namespace qeccd
