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

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from ..ir import Circuit, Gate, GateKind

from .base import BasePass


@dataclass
class CancelReport:
  r""" Outcome of one adjacent-gate cancellation run.

  Args:
    gates_in (int): Live gates of the input circuit.
    gates_out (int): Gates of the output circuit.
    cancelled_pairs (int): Number of cancelled self-inverse pairs.
  """
  gates_in: int
  gates_out: int
  cancelled_pairs: int


class CancelAdjacentPass(BasePass):
  r""" Remove adjacent self-inverse pairs ``X X``, ``H H`` and ``CX CX``
  (same orientation) in one linear scan.

  Adjacency is per qubit: two gates are adjacent when no live gate acts on
  any of their qubits in between. Every qubit keeps a stack of the live
  output gates on it, so removing a pair exposes the previous gate for a
  further cancellation (``H X X H`` collapses fully). Rz gates never cancel
  here but block adjacency on their qubit.
  """
  def run(self, circuit: Circuit) -> Tuple[Circuit, CancelReport]:
    out: List[Gate] = []
    alive = bytearray()
    stacks: List[List[int]] = [[] for _ in range(circuit.num_qubits)]
    cancelled = 0
    rz_kind, cx_kind = GateKind.RZ, GateKind.CX

    for g in circuit:
      kind = g.kind
      q = g.target
      top = stacks[q][-1] if stacks[q] else -1
      if kind != rz_kind and top >= 0 and out[top] == g:
        if kind != cx_kind:
          stacks[q].pop()
          alive[top] = 0
          cancelled += 1
          continue
        c = g.control
        if stacks[c] and stacks[c][-1] == top:
          stacks[q].pop()
          stacks[c].pop()
          alive[top] = 0
          cancelled += 1
          continue
      index = len(out)
      out.append(g)
      alive.append(1)
      stacks[q].append(index)
      if kind == cx_kind:
        stacks[g.control].append(index)

    result = Circuit.from_gates(
      circuit.num_qubits, itertools.compress(out, alive), check=False)
    return result, CancelReport(len(circuit), len(result), cancelled)


def cancel_adjacent(circuit: Circuit) -> Circuit:
  return CancelAdjacentPass()(circuit)
