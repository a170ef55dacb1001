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

import logging
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Tuple

from ..analysis import AbstractDomain, AbstractState, SymbolicState
from ..ir import Angle, AngleClass, Circuit, Gate, GateKind
from ..typing import (
  AbstractValue, DEFAULT_WIDTH, GateHandle, MergePairs, QubitId, check_width
)

from .base import BasePass
from .width import error_bound


class FoldEntry(NamedTuple):
  r""" A rotation waiting in the fold table for a later merge.

  Args:
    angle (Angle): The accumulated angle of the emitted rotation.
    qubit (int): The qubit of the emitted rotation.
    handle (GateHandle): The handle of the emitted rotation in the output.
    origin (int): Input index of the rotation that emitted it.
  """
  angle: Angle
  qubit: QubitId
  handle: GateHandle
  origin: int


# Maps an abstract value to the rotation awaiting a merge at that value.
FoldTable = Dict[AbstractValue, FoldEntry]


@dataclass
class FoldReport:
  r""" Outcome of one phase-folding run.

  Args:
    merges (int): Number of performed merges.
    rotations_eliminated (int): Input rotations missing from the output.
    t_count_before (int): T-count of the input circuit.
    t_count_after (int): T-count of the output circuit.
    width (int, optional): Bit width k, ``None`` for exact folding.
    seed (int, optional): Seed of the random draws, ``None`` for exact
      folding.
    rotations_in (int): Rotations of the input circuit.
    rotations_out (int): Rotations of the output circuit.
    transfers (int): Transfer function invocations (one per non-Rz gate).
    table_ops (int): Fold table lookups, removals and inserts.
    merged_pairs (List[Tuple[int, int]]): For every merge, the input index of
      the rotation whose emitted occurrence was deleted and the input index
      of the rotation that absorbed it. Indices count live input gates.
    error_bound (float): Union bound on the probability that this run
      performed an unsound merge.
  """
  merges: int = 0
  rotations_eliminated: int = 0
  t_count_before: int = 0
  t_count_after: int = 0
  width: Optional[int] = None
  seed: Optional[int] = None
  rotations_in: int = 0
  rotations_out: int = 0
  transfers: int = 0
  table_ops: int = 0
  merged_pairs: MergePairs = field(default_factory=list)
  error_bound: float = 0.0


def fold_with(circuit: Circuit,
              domain: AbstractDomain,
              trace: bool = False) -> Tuple[Circuit, FoldReport]:
  r""" Single left-to-right phase-folding scan driven by ``domain``.

  On ``Rz(theta) q`` the table is consulted at ``u = domain.value(q)``. On a
  hit the earlier emitted rotation is deleted and its angle is accumulated
  onto the current one, which stays on ``q``; a sum of zero drops both
  rotations and frees ``u``. Otherwise a zero rotation is dropped and any
  other is emitted and becomes the table entry at ``u``. Every other gate
  goes through the domain's transfer function and is emitted unchanged.

  An :class:`AbstractState` is updated through its scan view, other domains
  through :meth:`AbstractDomain.transfer`.

  Args:
    circuit (Circuit): The input circuit, not modified.
    domain (AbstractDomain): A freshly initialized abstract state over
      ``circuit.num_qubits`` qubits. It is advanced in place.
    trace (bool): Log every merge at debug level. (default: ``False``)
  """
  if domain.num_qubits != circuit.num_qubits:
    raise ValueError(f"'fold_with': domain tracks {domain.num_qubits} qubits, "
                     f"circuit has {circuit.num_qubits}")
  out = Circuit(circuit.num_qubits)
  table: FoldTable = {}
  report = FoldReport()
  merged_pairs = report.merged_pairs
  transfer = domain.transfer
  value = domain.value
  bits = draw = None
  mask = 0
  if isinstance(domain, AbstractState):
    bits, draw = domain.scan_view()
    mask = domain.mask
  emit = out.append_unchecked
  delete = out.delete
  rz_kind, cx_kind, x_kind = GateKind.RZ, GateKind.CX, GateKind.X
  tgate = AngleClass.TGATE
  rotations_in = 0
  t_count_before = 0
  table_ops = 0

  for index, g in enumerate(circuit):
    kind = g.kind
    if kind != rz_kind:
      if bits is None:
        transfer(g)
      elif kind == cx_kind:
        bits[g.target] ^= bits[g.control]
      elif kind == x_kind:
        bits[g.target] ^= mask
      else:
        bits[g.target] = draw()
      emit(g)
      continue
    rotations_in += 1
    angle = g.angle
    if angle.t_class() is tgate:
      t_count_before += 1
    q = g.target
    u = value(q) if bits is None else bits[q]
    entry = table.get(u)
    table_ops += 1
    if entry is not None:
      delete(entry.handle)
      angle = angle + entry.angle
      merged_pairs.append((entry.origin, index))
      if trace:
        logging.debug("'fold_with': merge rotation #%d (q%d) into #%d (q%d), "
                      "angle %r", entry.origin, entry.qubit, index, q, angle)
      if angle.is_zero():
        del table[u]
        table_ops += 1
        continue
      g = Gate(rz_kind, q, -1, angle)
    elif angle.is_zero():
      continue
    # Overwrites u in place of a remove then insert.
    table[u] = FoldEntry(angle, q, emit(g), index)
    table_ops += 1

  # Every live output rotation is a table entry.
  report.merges = len(merged_pairs)
  report.transfers = len(circuit) - rotations_in
  report.table_ops = table_ops
  report.rotations_in = rotations_in
  report.rotations_out = len(table)
  report.rotations_eliminated = rotations_in - len(table)
  report.t_count_before = t_count_before
  report.t_count_after = sum(1 for e in table.values()
                             if e.angle.t_class() is tgate)
  return out, report


class PhaseFoldPass(BasePass):
  r""" Randomized phase folding over k-bit abstract strings.

  Args:
    width (int): The bit width k, in [1, 128]. (default: ``128``)
    seed (int, optional): Seed of the random draws. A fresh seed is sampled
      if set to ``None``; the effective seed is always recorded in the
      report. (default: ``None``)
    trace (bool): Log every merge at debug level. (default: ``False``)
  """
  def __init__(self, width: int = DEFAULT_WIDTH, seed: Optional[int] = None,
               trace: bool = False):
    check_width(width, self.__class__.__name__)
    self.width = width
    self.seed = seed
    self.trace = trace

  def run(self, circuit: Circuit) -> Tuple[Circuit, FoldReport]:
    state = AbstractState(circuit.num_qubits, self.width, self.seed)
    out, report = fold_with(circuit, state, self.trace)
    report.width = self.width
    report.seed = state.seed
    report.error_bound = error_bound(len(circuit), self.width)
    return out, report


class ExactFoldPass(BasePass):
  r""" Phase folding over exact symbolic parities. Deterministic and never
  unsound, at the cost of set operations per gate; used as a reference.
  """
  def __init__(self, trace: bool = False):
    self.trace = trace

  def run(self, circuit: Circuit) -> Tuple[Circuit, FoldReport]:
    return fold_with(circuit, SymbolicState(circuit.num_qubits), self.trace)


def fold(circuit: Circuit, width: int = DEFAULT_WIDTH,
         seed: Optional[int] = None) -> Tuple[Circuit, FoldReport]:
  return PhaseFoldPass(width, seed).run(circuit)


def exact_fold(circuit: Circuit) -> Tuple[Circuit, FoldReport]:
  return ExactFoldPass().run(circuit)
