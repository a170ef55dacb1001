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

from typing import FrozenSet, Iterable, List, NamedTuple, Sequence

from ..ir import Gate, GateKind
from ..typing import BitString, QubitId

from .base import AbstractDomain


class Parity(NamedTuple):
  r""" An affine boolean function :math:`c \oplus \bigoplus_{v \in S} v`
  over formal variables.

  Variables ``0..n-1`` stand for the input values of the ``n`` qubits,
  variables from ``n`` upward for Hadamard outcomes in allocation order.

  Args:
    constant (int): The constant bit ``c``.
    variables (FrozenSet[int]): The variable set ``S``.
  """
  constant: int
  variables: FrozenSet[int]

  @classmethod
  def var(cls, index: int) -> 'Parity':
    return cls(0, frozenset((index,)))

  def __xor__(self, other: 'Parity') -> 'Parity':
    return Parity(self.constant ^ other.constant,
                  self.variables ^ other.variables)

  def negate(self) -> 'Parity':
    return Parity(self.constant ^ 1, self.variables)

  def differs_in_variables(self, other: 'Parity') -> bool:
    r""" Whether the symmetric difference of the variable sets is nonempty.
    Parities that only differ in the constant never collide.
    """
    return self.variables != other.variables

  def evaluate(self, values: Sequence[BitString], mask: BitString) -> BitString:
    r""" Evaluate the parity bitwise at k-bit variable values, where ``mask``
    is the all-ones string of width k.
    """
    out = mask if self.constant else 0
    for v in self.variables:
      out ^= values[v]
    return out

  def __str__(self) -> str:
    terms = [f'v{v}' for v in sorted(self.variables)]
    if self.constant or not terms:
      terms.insert(0, str(self.constant))
    return ' + '.join(terms)


class SymbolicState(AbstractDomain):
  r""" Exact symbolic parity state.

  Every qubit holds the exact :class:`Parity` of its basis-state value in
  terms of the input values and the Hadamard outcomes seen so far:

  * ``X q``: toggle the constant of :math:`p_q`
  * ``CX c t``: :math:`p_t \gets p_t \oplus p_c`
  * ``H q``: :math:`p_q` becomes a fresh single variable
  * ``Rz``: no change

  Args:
    num_qubits (int): Number of qubits.
  """
  def __init__(self, num_qubits: int):
    if num_qubits < 1:
      raise ValueError(f"'{self.__class__.__name__}': number of qubits must "
                       f"be positive (got {num_qubits})")
    self._parities: List[Parity] = [Parity.var(q) for q in range(num_qubits)]
    self.next_fresh = num_qubits

  @property
  def num_qubits(self) -> int:
    return len(self._parities)

  def reset(self):
    n = len(self._parities)
    self._parities = [Parity.var(q) for q in range(n)]
    self.next_fresh = n

  def fresh(self) -> Parity:
    p = Parity.var(self.next_fresh)
    self.next_fresh += 1
    return p

  def transfer(self, gate: Gate):
    kind = gate.kind
    if kind == GateKind.CX:
      self._parities[gate.target] = \
        self._parities[gate.target] ^ self._parities[gate.control]
    elif kind == GateKind.X:
      self._parities[gate.target] = self._parities[gate.target].negate()
    elif kind == GateKind.H:
      self._parities[gate.target] = self.fresh()

  def value(self, q: QubitId) -> Parity:
    return self._parities[q]

  def __getitem__(self, q: QubitId) -> Parity:
    return self._parities[q]

  def evaluate(self, values: Sequence[BitString],
               mask: BitString) -> List[BitString]:
    r""" Evaluate every qubit's parity at the given variable values.
    """
    return [p.evaluate(values, mask) for p in self._parities]

  def __repr__(self) -> str:
    parities = ', '.join(f'q{q}={p}' for q, p in enumerate(self._parities))
    return f'{self.__class__.__name__}({parities})'


def symbolic_transfer(state: SymbolicState, gate: Gate):
  state.transfer(gate)


def parities_of(num_qubits: int, gates: Iterable[Gate]) -> SymbolicState:
  return SymbolicState(num_qubits).run(gates)
