# Copyright 2026 The phasefold Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

from typing import Callable, Dict, List, Tuple

import numpy as np

from ..ir import Circuit, Gate, cx, h, s, t, tdg, x, z
from ..typing import QubitId
from ..utils import make_generator


# Gate alphabet of random circuits, CX last so it can be left out for n = 1.
SINGLE_QUBIT_GATES: Tuple[Callable[[QubitId], Gate], ...] = (h, x, t, tdg, s, z)
NUM_GATE_KINDS = len(SINGLE_QUBIT_GATES) + 1


def _distinct_pairs(rng: np.random.Generator, num_qubits: int,
                    size: int) -> Tuple[np.ndarray, np.ndarray]:
  control = rng.integers(0, num_qubits, size=size)
  target = rng.integers(0, num_qubits - 1, size=size)
  target += target >= control
  return control, target


class _GateCache(object):
  r""" Shares one immutable :class:`Gate` per (kind, qubits) among the
  gates of a generated circuit.
  """
  def __init__(self):
    self._single: Dict[Tuple[int, int], Gate] = {}
    self._cx: Dict[Tuple[int, int], Gate] = {}

  def single(self, kind: int, q: int) -> Gate:
    g = self._single.get((kind, q))
    if g is None:
      g = SINGLE_QUBIT_GATES[kind](q)
      self._single[(kind, q)] = g
    return g

  def cx(self, c: int, tq: int) -> Gate:
    g = self._cx.get((c, tq))
    if g is None:
      g = cx(c, tq)
      self._cx[(c, tq)] = g
    return g


def random_circuit(num_qubits: int, num_gates: int, seed: int) -> Circuit:
  r""" Draw ``num_gates`` i.i.d. gates, uniform over
  ``{H, X, T, Tdg, S, Z, CX}`` (without CX on a single qubit), on uniformly
  random qubits; CX control and target are distinct. Deterministic per
  ``seed``.
  """
  if num_qubits < 1:
    raise ValueError(f"'random_circuit': number of qubits must be positive "
                     f"(got {num_qubits})")
  if num_gates < 0:
    raise ValueError(f"'random_circuit': number of gates must be "
                     f"non-negative (got {num_gates})")
  rng = make_generator(seed)
  num_kinds = NUM_GATE_KINDS if num_qubits > 1 else NUM_GATE_KINDS - 1
  kinds = rng.integers(0, num_kinds, size=num_gates).tolist()
  qubits = rng.integers(0, num_qubits, size=num_gates).tolist()
  if num_qubits > 1:
    control, target = _distinct_pairs(rng, num_qubits, num_gates)
    control, target = control.tolist(), target.tolist()
  cx_kind = NUM_GATE_KINDS - 1
  cache = _GateCache()
  gates: List[Gate] = []
  for i, kind in enumerate(kinds):
    if kind == cx_kind:
      gates.append(cache.cx(control[i], target[i]))
    else:
      gates.append(cache.single(kind, qubits[i]))
  return Circuit.from_gates(num_qubits, gates, check=False)


def tchain_cx_circuit(num_gates: int, seed: int, num_qubits: int = 16,
                      h_period: int = 8) -> Circuit:
  r""" A circuit of ``num_gates`` gates made of layers ``T/Tdg q; CX c t``
  on random qubits, with an ``H`` on a random qubit after every
  ``h_period`` layers. Parities keep recurring between Hadamards, so
  folds happen at every scale.

  Args:
    num_gates (int): Exact gate count of the result.
    seed (int): Seed of the generator.
    num_qubits (int): Register size, at least 2. (default: ``16``)
    h_period (int): Layers between Hadamards, at least 1. (default: ``8``)
  """
  if num_qubits < 2:
    raise ValueError(f"'tchain_cx_circuit': need at least 2 qubits "
                     f"(got {num_qubits})")
  if h_period < 1:
    raise ValueError(f"'tchain_cx_circuit': h_period must be positive "
                     f"(got {h_period})")
  rng = make_generator(seed)
  num_layers = num_gates // 2 + 1
  rot_q = rng.integers(0, num_qubits, size=num_layers).tolist()
  rot_dag = rng.integers(0, 2, size=num_layers).tolist()
  control, target = _distinct_pairs(rng, num_qubits, num_layers)
  control, target = control.tolist(), target.tolist()
  h_q = rng.integers(0, num_qubits, size=num_layers).tolist()
  cache = _GateCache()
  t_kind = SINGLE_QUBIT_GATES.index(t)
  h_kind = SINGLE_QUBIT_GATES.index(h)
  gates: List[Gate] = []
  layer = 0
  while len(gates) < num_gates:
    gates.append(cache.single(t_kind + rot_dag[layer], rot_q[layer]))
    gates.append(cache.cx(control[layer], target[layer]))
    layer += 1
    if layer % h_period == 0:
      gates.append(cache.single(h_kind, h_q[layer - 1]))
  del gates[num_gates:]
  return Circuit.from_gates(num_qubits, gates, check=False)


FAMILIES = ('random', 'tchain-cx')


def family_circuit(family: str, num_gates: int, seed: int,
                   num_qubits: int = 16, h_period: int = 8) -> Circuit:
  if family == 'random':
    return random_circuit(num_qubits, num_gates, seed)
  if family == 'tchain-cx':
    return tchain_cx_circuit(num_gates, seed, num_qubits, h_period)
  raise ValueError(f"'family_circuit': unknown family '{family}', expected "
                   f"one of {FAMILIES}")
