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

from enum import IntEnum
from typing import NamedTuple, Optional, Tuple

from ..typing import QubitId
from .angle import (
  Angle, AngleLike, as_angle, T_ANGLE, TDG_ANGLE, S_ANGLE, SDG_ANGLE, Z_ANGLE
)


class CircuitError(RuntimeError):
  r""" Raised on a violated circuit contract, e.g. deleting a gate twice,
  deleting through a foreign handle or addressing a qubit out of range.
  """


class GateKind(IntEnum):
  CX = 0
  H = 1
  X = 2
  RZ = 3


class Gate(NamedTuple):
  r""" A gate of the Clifford+T gate set {CX, H, X, Rz}.

  Args:
    kind (GateKind): The gate kind.
    target (int): The qubit the gate acts on (the target qubit for CX).
    control (int): The control qubit of a CX, ``-1`` for other gates.
    angle (Angle, optional): The rotation angle of an Rz gate.
  """
  kind: GateKind
  target: QubitId
  control: QubitId = -1
  angle: Optional[Angle] = None

  @property
  def qubits(self) -> Tuple[QubitId, ...]:
    if self.kind == GateKind.CX:
      return (self.control, self.target)
    return (self.target,)

  @property
  def is_rotation(self) -> bool:
    return self.kind == GateKind.RZ

  def __repr__(self) -> str:
    if self.kind == GateKind.CX:
      return f'CX({self.control}, {self.target})'
    if self.kind == GateKind.RZ:
      return f'Rz({self.angle!r}, {self.target})'
    return f'{self.kind.name}({self.target})'


def cx(control: QubitId, target: QubitId) -> Gate:
  if control == target:
    raise CircuitError(f"'cx': control and target must differ "
                       f"(got {control})")
  return Gate(GateKind.CX, target, control)

def h(q: QubitId) -> Gate:
  return Gate(GateKind.H, q)

def x(q: QubitId) -> Gate:
  return Gate(GateKind.X, q)

def rz(angle: AngleLike, q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, as_angle(angle))

def t(q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, T_ANGLE)

def tdg(q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, TDG_ANGLE)

def s(q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, S_ANGLE)

def sdg(q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, SDG_ANGLE)

def z(q: QubitId) -> Gate:
  return Gate(GateKind.RZ, q, -1, Z_ANGLE)


def ccx_decomposition(a: QubitId, b: QubitId, c: QubitId) -> Tuple[Gate, ...]:
  r""" The standard 7-T Clifford+T network of a Toffoli with controls
  ``a``, ``b`` and target ``c`` (2 H, 6 CX, 7 T/Tdg).
  """
  return (
    h(c), cx(b, c), tdg(c), cx(a, c), t(c), cx(b, c), tdg(c), cx(a, c),
    t(b), t(c), h(c), cx(a, b), t(a), tdg(b), cx(a, b)
  )
