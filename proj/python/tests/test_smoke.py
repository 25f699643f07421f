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

import json
import os

import numpy as np
import pytest

import fermicompress as fc

DATA = os.environ.get("FERMICOMPRESS_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data"))


def chain(n=8, **couplings):
    couplings.setdefault("t", 1.0)
    return fc.build_model("tight_binding_1d", n=n, couplings=couplings)


def test_single_orbital_energy():
    h = fc.QuadraticHamiltonian(np.array([[0.0, 1.0], [-1.0, 0.0]]))
    energy, modes = fc.spectral_ground_energy(h)
    assert energy == pytest.approx(-2.0)
    assert modes == pytest.approx([1.0])
    assert fc.brute_force_ground_energy(h) == pytest.approx(-2.0)
    assert fc.vacuum_energy(h) == pytest.approx(-2.0)


def test_model_shape():
    h = chain(8, mu=0.5)
    assert h.num_orbitals == 8
    assert h.num_qubits == 4
    assert h.coefficients.shape == (16, 16)
    assert np.allclose(h.coefficients, -h.coefficients.T)


def test_plan_counts():
    plan = fc.plan(chain(8, mu=0.5, phase=0.3))
    assert plan["group_count"] == 7
    assert plan["includes_diagonal_set"]
    assert all(abs(e["sign"]) == 1 for g in plan["groups"] for e in g["entries"])


def test_commuting_sets_and_diagonalizer():
    sets = fc.commuting_sets(2)
    assert len(sets) == 3
    assert all(len(words) == 2 for _, words in sets)
    assert fc.diagonalizer("AA").splitlines() == ["CX 0->1", "X 0", "S 0", "H 0", "CX 0->1"]


def test_modes_agree():
    h = chain(4, mu=0.2, phase=0.4)
    p = fc.num_parameters(h)
    assert p == 28
    params = list(np.linspace(-1.0, 1.0, p))
    e_matrix, _ = fc.evaluate(h, params, mode="matrix")
    e_exact, _ = fc.evaluate(h, params, mode="circuit_exact")
    assert e_matrix == pytest.approx(e_exact, abs=1e-10)
    e_sampled, err = fc.evaluate(h, params, mode="circuit_sampled", shots=20000, seed=3)
    assert err > 0
    assert abs(e_sampled - e_exact) < 6 * err


def test_optimize_reaches_oracle():
    h = chain(4)
    result = fc.optimize(h)
    energy, _ = fc.spectral_ground_energy(h)
    assert abs(result["energy"] - energy) < 1e-6
    assert result["evaluations"] <= 2_000_000


def test_sample_is_deterministic():
    a = fc.sample([0.25, 0.25, 0.5], 1000, 7)
    assert a == fc.sample([0.25, 0.25, 0.5], 1000, 7)
    assert sum(a.values()) == 1000


def test_resource_limit():
    h = chain(64)
    with pytest.raises(fc.ResourceLimitError):
        fc.brute_force_ground_energy(h)


def test_cli_in_process():
    code, out, err = fc.run_cli(["plan", "--config", os.path.join(DATA, "tight_binding_8.ini")])
    assert code == 0, err
    assert json.loads(out)["group_count"] == 7
    code, _, err = fc.run_cli(["plan", "--config", os.path.join(DATA, "malformed.ini")])
    assert code == 2
    assert err
