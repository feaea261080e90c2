# Copyright 2026 The QECCD Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Channel characterization from stabilizer syndrome statistics."""

from ._core import (
    Channel,
    DimensionError,
    HammingBound,
    ParseError,
    PauliOperator,
    QeccdError,
    ReconstructionError,
    ResourceError,
    StabilizerCode,
    SupportError,
    SyndromeCollisionError,
    ValidationError,
    builtin_channel,
    builtin_channel_names,
    builtin_code,
    builtin_code_names,
    characterize,
    chi_from_kraus,
    code_from_json,
    commutes,
    hamming_bound,
    pauli_mul,
    plan,
    plan_size,
    run_cli,
)

__all__ = [
    "Channel",
    "DimensionError",
    "HammingBound",
    "ParseError",
    "PauliOperator",
    "QeccdError",
    "ReconstructionError",
    "ResourceError",
    "StabilizerCode",
    "SupportError",
    "SyndromeCollisionError",
    "ValidationError",
    "builtin_channel",
    "builtin_channel_names",
    "builtin_code",
    "builtin_code_names",
    "characterize",
    "chi_from_kraus",
    "code_from_json",
    "commutes",
    "hamming_bound",
    "pauli_mul",
    "plan",
    "plan_size",
    "run_cli",
]
