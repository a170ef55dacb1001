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

from abc import ABC, abstractmethod
from typing import Iterable, List

from ..ir import Gate
from ..typing import AbstractValue, QubitId


class AbstractDomain(ABC):
  r""" A per-qubit abstract state that the phase-folding scan propagates
  gate by gate.

  Two rotations may be folded when the values of their qubits, read right
  before each rotation, are equal. Values must therefore be hashable and
  equality of values must witness equality of the qubits' parities.
  """
  @property
  @abstractmethod
  def num_qubits(self) -> int:
    r""" Number of tracked qubits.
    """

  @abstractmethod
  def transfer(self, gate: Gate):
    r""" Update the state in place by the transfer function of ``gate``.
    Rz gates leave the state unchanged.
    """

  @abstractmethod
  def value(self, q: QubitId) -> AbstractValue:
    r""" The current abstract value of qubit ``q``.
    """

  @abstractmethod
  def reset(self):
    r""" Return to a freshly initialized state over the same qubits.
    """

  def run(self, gates: Iterable[Gate]) -> 'AbstractDomain':
    for g in gates:
      self.transfer(g)
    return self

  def values(self) -> List[AbstractValue]:
    return [self.value(q) for q in range(self.num_qubits)]
