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

from typing import List, NamedTuple, Optional, Set

from ..analysis import AbstractState, Parity, SymbolicState
from ..ir import Circuit, GateKind
from ..passes import exact_fold, fold
from ..typing import MergePair, QubitId


class RotationSite(NamedTuple):
  r""" Exact parity seen by one rotation.

  Args:
    index (int): Input index of the rotation among live gates.
    qubit (int): The rotation's qubit.
    parity (Parity): The qubit's parity right before the rotation.
  """
  index: int
  qubit: QubitId
  parity: Parity


def rotation_sites(circuit: Circuit) -> List[RotationSite]:
  state = SymbolicState(circuit.num_qubits)
  sites = []
  for index, g in enumerate(circuit):
    if g.kind == GateKind.RZ:
      sites.append(RotationSite(index, g.target, state.value(g.target)))
    else:
      state.transfer(g)
  return sites


def symbolic_mergeable(circuit: Circuit, i: int, j: int) -> bool:
  r""" Whether rotations ``i`` < ``j`` (ordinals among the live Rz gates)
  see equal exact parities.
  """
  sites = rotation_sites(circuit)
  if not 0 <= i < j < len(sites):
    raise IndexError(f"'symbolic_mergeable': need 0 <= i < j < {len(sites)} "
                     f"(got i={i}, j={j})")
  return sites[i].parity == sites[j].parity


def merge_pairs(circuit: Circuit, width: int,
                seed: Optional[int]) -> Set[MergePair]:
  return set(fold(circuit, width, seed)[1].merged_pairs)


def exact_merge_pairs(circuit: Circuit) -> Set[MergePair]:
  return set(exact_fold(circuit)[1].merged_pairs)


class Agreement(NamedTuple):
  agree: bool
  randomized: Set[MergePair]
  exact: Set[MergePair]


def check_agreement(circuit: Circuit, width: int, seed: int,
                    randomized: Optional[Set[MergePair]] = None) -> Agreement:
  r""" Compare the merge set of randomized folding against folding with exact
  parity keys on the same circuit.

  Args:
    circuit (Circuit): The circuit both folds run on.
    width (int): Bit width of the randomized fold.
    seed (int): Seed of the randomized fold.
    randomized (Set[MergePair], optional): Merge set of a randomized fold
      of ``circuit`` that already ran with ``width`` and ``seed``. Folded
      again if set to ``None``. (default: ``None``)
  """
  if randomized is None:
    randomized = merge_pairs(circuit, width, seed)
  exact = exact_merge_pairs(circuit)
  return Agreement(randomized == exact, randomized, exact)


def check_structure(circuit: Circuit, width: int, seed: int) -> bool:
  r""" Check that evaluating the exact parities at the randomized draws
  reproduces the randomized state after every gate.
  """
  rand = AbstractState(circuit.num_qubits, width, seed, record_draws=True)
  exact = SymbolicState(circuit.num_qubits)
  if exact.evaluate(rand.draws, rand.mask) != rand.values():
    return False
  for g in circuit:
    rand.transfer(g)
    exact.transfer(g)
    if exact.evaluate(rand.draws, rand.mask) != rand.values():
      return False
  return True
