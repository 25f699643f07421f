# Copyright 2026 The fermicompress Authors
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

"""Compressed simulation of free-fermion Hamiltonians on log(n) + 1 qubits."""

import json

from ._fermicompress import (
    QuadraticHamiltonian,
    ResourceLimitError,
    brute_force_ground_energy,
    build_model,
    commuting_sets,
    diagonalizer,
    evaluate,
    num_parameters,
    optimize,
    run_cli,
    sample,
    spectral_ground_energy,
    vacuum_energy,
)
from ._fermicompress import plan_json as _plan_json


def plan(hamiltonian):
    """Measurement plan as a dict: groups, patterns, entries and signs."""
    return json.loads(_plan_json(hamiltonian))


__all__ = [
    "QuadraticHamiltonian",
    "ResourceLimitError",
    "brute_force_ground_energy",
    "build_model",
    "commuting_sets",
    "diagonalizer",
    "evaluate",
    "num_parameters",
    "optimize",
    "plan",
    "run_cli",
    "sample",
    "spectral_ground_energy",
    "vacuum_energy",
]
