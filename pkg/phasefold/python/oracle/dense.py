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

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable

import torch

from ..ir import Circuit, Gate, GateKind


MAX_ORACLE_QUBITS = 10

_SQRT2_INV = 1.0 / math.sqrt(2.0)


class OracleSizeError(ValueError):
  r""" Raised when a circuit is too large for the dense oracle.
  """


@dataclass
class DenseUnitary:
  r""" The :math:`2^n \times 2^n` matrix of a circuit.

  Rows index output basis states, columns index input basis states, and
  qubit 0 is the least significant bit of a basis-state index.

  Args:
    num_qubits (int): The qubit count n.
    matrix (torch.Tensor): A ``torch.complex128`` tensor of shape
      ``(2**n, 2**n)``.
  """
  num_qubits: int
  matrix: torch.Tensor

  @property
  def dim(self) -> int:
    return 1 << self.num_qubits

  def __matmul__(self, other: 'DenseUnitary') -> 'DenseUnitary':
    if self.num_qubits != other.num_qubits:
      raise ValueError(f"'{self.__class__.__name__}': cannot compose "
                       f"{self.num_qubits} and {other.num_qubits} qubits")
    return DenseUnitary(self.num_qubits, self.matrix @ other.matrix)

  def max_abs_diff(self, other: 'DenseUnitary') -> float:
    return torch.max(torch.abs(self.matrix - other.matrix)).item()

  def is_unitary(self, tol: float = 1e-9) -> bool:
    eye = torch.eye(self.dim, dtype=torch.complex128)
    prod = self.matrix @ self.matrix.conj().T
    return torch.max(torch.abs(prod - eye)).item() <= tol

  def entry(self, out_state: int, in_state: int) -> complex:
    return complex(self.matrix[out_state, in_state].item())


class _BasisIndex(object):
  r""" Cached basis-state index tensors for one register size.
  """
  def __init__(self, num_qubits: int):
    self.dim = 1 << num_qubits
    self.index = torch.arange(self.dim, dtype=torch.int64)
    self._bits: Dict[int, torch.Tensor] = {}

  def bit(self, q: int) -> torch.Tensor:
    b = self._bits.get(q)
    if b is None:
      b = (self.index >> q) & 1
      self._bits[q] = b
    return b

_basis_cache: Dict[int, _BasisIndex] = {}

def _basis(num_qubits: int) -> _BasisIndex:
  basis = _basis_cache.get(num_qubits)
  if basis is None:
    basis = _BasisIndex(num_qubits)
    _basis_cache[num_qubits] = basis
  return basis


def apply_gate(matrix: torch.Tensor, gate: Gate,
               num_qubits: int) -> torch.Tensor:
  r""" Left-multiply ``matrix`` by the matrix of ``gate``.
  """
  basis = _basis(num_qubits)
  q = gate.target
  kind = gate.kind
  if kind == GateKind.X:
    return matrix[basis.index ^ (1 << q)]
  if kind == GateKind.CX:
    return matrix[basis.index ^ (basis.bit(gate.control) << q)]
  if kind == GateKind.RZ:
    # Basis state x picks up exp(i * theta * x_q).
    phase = torch.ones(basis.dim, dtype=torch.complex128)
    phase[basis.bit(q).bool()] = cmath.exp(1j * gate.angle.radians)
    return matrix * phase.unsqueeze(1)
  # H: rows x (x_q = 0) and x | 1 << q mix as (a + b, a - b) / sqrt(2).
  lo = basis.index[basis.bit(q) == 0]
  hi = lo | (1 << q)
  a, b = matrix[lo], matrix[hi]
  out = torch.empty_like(matrix)
  out[lo] = (a + b) * _SQRT2_INV
  out[hi] = (a - b) * _SQRT2_INV
  return out


def _check_size(num_qubits: int, owner: str):
  if num_qubits > MAX_ORACLE_QUBITS:
    logging.warning("'%s': refusing %d qubits, the dense oracle supports at "
                    "most %d", owner, num_qubits, MAX_ORACLE_QUBITS)
    raise OracleSizeError(f"'{owner}': {num_qubits} qubits exceed the dense "
                          f"oracle limit of {MAX_ORACLE_QUBITS}")


def simulate_gates(num_qubits: int, gates: Iterable[Gate]) -> DenseUnitary:
  _check_size(num_qubits, 'simulate')
  matrix = torch.eye(1 << num_qubits, dtype=torch.complex128)
  for g in gates:
    matrix = apply_gate(matrix, g, num_qubits)
  return DenseUnitary(num_qubits, matrix)


def simulate(circuit: Circuit) -> DenseUnitary:
  r""" The dense matrix of ``circuit``, gates applied in circuit order.
  Refuses circuits over more than 10 qubits with :class:`OracleSizeError`.
  """
  return simulate_gates(circuit.num_qubits, circuit)


def equivalent(a: Circuit, b: Circuit, tol: float = 1e-9) -> bool:
  r""" Exact equivalence test: the largest entrywise difference of the two
  matrices is at most ``tol``. No global phase is quotiented out.
  """
  if a.num_qubits != b.num_qubits:
    raise ValueError(f"'equivalent': qubit counts differ "
                     f"({a.num_qubits} vs {b.num_qubits})")
  _check_size(a.num_qubits, 'equivalent')
  return simulate(a).max_abs_diff(simulate(b)) <= tol
