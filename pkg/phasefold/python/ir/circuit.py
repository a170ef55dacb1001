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
from typing import Iterable, Iterator, List, NamedTuple

from ..typing import GateHandle
from .angle import AngleClass
from .gate import CircuitError, Gate, GateKind


_HANDLE_INDEX_BITS = 40
_HANDLE_INDEX_MASK = (1 << _HANDLE_INDEX_BITS) - 1

_circuit_serials = itertools.count(1)


class CircuitStats(NamedTuple):
  total_gates: int
  t_count: int
  rz_count: int
  cx_count: int
  h_count: int
  x_count: int
  num_qubits: int


class Circuit(object):
  r""" A Clifford+T circuit over one flat register of ``num_qubits`` qubits.

  Gates are kept in emission order. Every appended gate gets a stable
  :obj:`GateHandle` which can be used to delete it later in O(1): deleted
  gates are only tombstoned, iteration skips them and :meth:`compact`
  drops them physically.

  Args:
    num_qubits (int): The register size, must be positive.
    gates (Iterable[Gate], optional): Initial gates to append.
  """
  def __init__(self, num_qubits: int, gates: Iterable[Gate] = ()):
    if num_qubits < 1:
      raise ValueError(f"'{self.__class__.__name__}': number of qubits must "
                       f"be positive (got {num_qubits})")
    self.num_qubits = int(num_qubits)
    self._serial = next(_circuit_serials)
    self._gates: List[Gate] = []
    self._alive = bytearray()
    self._num_live = 0
    for g in gates:
      self.append(g)

  @classmethod
  def from_gates(cls, num_qubits: int, gates: Iterable[Gate],
                 check: bool = True) -> 'Circuit':
    r""" Build a circuit from a gate sequence. ``check=False`` skips the
    qubit range checks for gates taken from another valid circuit of the
    same register size.
    """
    if check:
      return cls(num_qubits, gates)
    out = cls(num_qubits)
    out._gates = list(gates)
    out._alive = bytearray(b'\x01') * len(out._gates)
    out._num_live = len(out._gates)
    return out

  def _check_qubits(self, gate: Gate):
    n = self.num_qubits
    if not 0 <= gate.target < n or (
      gate.kind == GateKind.CX and not 0 <= gate.control < n
    ):
      raise CircuitError(f"'{self.__class__.__name__}': gate {gate!r} "
                         f"addresses a qubit out of range [0, {n})")
    if gate.kind == GateKind.CX and gate.control == gate.target:
      raise CircuitError(f"'{self.__class__.__name__}': CX control and "
                         f"target must differ (got {gate!r})")

  def append(self, gate: Gate) -> GateHandle:
    self._check_qubits(gate)
    index = len(self._gates)
    self._gates.append(gate)
    self._alive.append(1)
    self._num_live += 1
    return GateHandle((self._serial << _HANDLE_INDEX_BITS) | index)

  def append_unchecked(self, gate: Gate) -> GateHandle:
    r""" Append without the qubit range check, for passes whose gates all
    come from a circuit over the same register.
    """
    index = len(self._gates)
    self._gates.append(gate)
    self._alive.append(1)
    self._num_live += 1
    return (self._serial << _HANDLE_INDEX_BITS) | index

  def extend(self, gates: Iterable[Gate]):
    for g in gates:
      self.append(g)

  def _index_of(self, handle: GateHandle) -> int:
    index = handle & _HANDLE_INDEX_MASK
    if (handle >> _HANDLE_INDEX_BITS) != self._serial or \
        index >= len(self._gates):
      raise CircuitError(f"'{self.__class__.__name__}': handle {handle} was "
                         f"not issued by this circuit")
    return index

  def delete(self, handle: GateHandle):
    r""" Tombstone the gate behind ``handle``. Deleting twice is an error.
    """
    index = self._index_of(handle)
    if not self._alive[index]:
      raise CircuitError(f"'{self.__class__.__name__}': gate #{index} "
                         f"({self._gates[index]!r}) is already deleted")
    self._alive[index] = 0
    self._num_live -= 1

  def gate(self, handle: GateHandle) -> Gate:
    return self._gates[self._index_of(handle)]

  def is_live(self, handle: GateHandle) -> bool:
    return bool(self._alive[self._index_of(handle)])

  def __iter__(self) -> Iterator[Gate]:
    return itertools.compress(self._gates, self._alive)

  def __len__(self) -> int:
    return self._num_live

  @property
  def num_slots(self) -> int:
    r""" Number of issued gate positions, tombstones included.
    """
    return len(self._gates)

  def gates(self) -> List[Gate]:
    return list(self)

  def rotations(self) -> List[Gate]:
    return [g for g in self if g.kind == GateKind.RZ]

  def compact(self) -> 'Circuit':
    r""" Return a new circuit holding the live gates only. Handles of this
    circuit are not valid for the returned one.
    """
    return Circuit.from_gates(self.num_qubits, self, check=False)

  def stats(self) -> CircuitStats:
    counts = [0, 0, 0, 0]
    t_count = 0
    for g in self:
      counts[g.kind] += 1
      if g.kind == GateKind.RZ and g.angle.t_class() == AngleClass.TGATE:
        t_count += 1
    return CircuitStats(
      total_gates=self._num_live,
      t_count=t_count,
      rz_count=counts[GateKind.RZ],
      cx_count=counts[GateKind.CX],
      h_count=counts[GateKind.H],
      x_count=counts[GateKind.X],
      num_qubits=self.num_qubits
    )

  def __eq__(self, other) -> bool:
    if not isinstance(other, Circuit):
      return NotImplemented
    return self.num_qubits == other.num_qubits and \
      self.gates() == other.gates()

  def __repr__(self) -> str:
    return (f'{self.__class__.__name__}(num_qubits={self.num_qubits}, '
            f'gates={self.gates()!r})')


def delete(c: Circuit, handle: GateHandle):
  c.delete(handle)

def stats(c: Circuit) -> CircuitStats:
  return c.stats()
