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

from typing import List

from ..ir import Angle, Circuit, Gate, GateKind
from ..typing import PathLike
from ..utils import write_text


HEADER = ('OPENQASM 2.0;', 'include "qelib1.inc";')

# Exact angles (as multiples of pi) printed as named gates.
NAMED_ROTATIONS = {
  (1, 4): 't', (7, 4): 'tdg', (1, 2): 's', (3, 2): 'sdg', (1, 1): 'z',
}


def format_angle(angle: Angle) -> str:
  r""" The ``rz`` argument of ``angle``: ``num*pi/den`` for exact angles
  and a 17-significant-digit literal otherwise.
  """
  if not angle.is_exact:
    return f'{angle.radians:.17g}'
  num, den = angle.num, angle.den
  if num == 0:
    return '0'
  if den == 1:
    return f'{num}*pi'
  return f'{num}*pi/{den}'


def emit_gate(g: Gate) -> str:
  if g.kind == GateKind.CX:
    return f'cx q[{g.control}],q[{g.target}];'
  if g.kind == GateKind.H:
    return f'h q[{g.target}];'
  if g.kind == GateKind.X:
    return f'x q[{g.target}];'
  angle = g.angle
  if angle.is_exact:
    name = NAMED_ROTATIONS.get((angle.num, angle.den))
    if name is not None:
      return f'{name} q[{g.target}];'
  return f'rz({format_angle(angle)}) q[{g.target}];'


def emit(circuit: Circuit) -> str:
  r""" Print ``circuit`` as OpenQASM 2.0 over a single register ``q``.
  Deleted gates are skipped. The output ends with a newline.
  """
  lines: List[str] = list(HEADER)
  lines.append(f'qreg q[{circuit.num_qubits}];')
  lines.extend(emit_gate(g) for g in circuit)
  return '\n'.join(lines) + '\n'


def write_qasm(path: PathLike, circuit: Circuit):
  write_text(path, emit(circuit))
