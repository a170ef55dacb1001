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

from typing import Callable, List, Optional, Sequence, Tuple

from ..ir import Gate, GateKind
from ..typing import (
  BitString, DEFAULT_WIDTH, QubitId, check_width, format_bits, width_mask
)
from ..utils import BitDrawer

from .base import AbstractDomain


class AbstractState(AbstractDomain):
  r""" Randomized abstract state: every qubit holds a k-bit string.

  Initial strings are drawn independently and uniformly from the owned
  seeded generator. Transfer functions are one word operation per gate:

  * ``CX c t``: :math:`\sigma(t) \gets \sigma(t) \oplus \sigma(c)`
  * ``X q``: :math:`\sigma(q) \gets \sigma(q) \oplus 1^k`
  * ``H q``: :math:`\sigma(q)` gets a fresh uniform draw
  * ``Rz``: no change

  Two qubits with different parities hold equal strings with probability
  at most :math:`2^{-k}`, equal parities always give equal strings.

  Args:
    num_qubits (int): Number of qubits.
    width (int): The bit width k, in [1, 128]. (default: ``128``)
    seed (int, optional): Seed of the generator. A fresh seed is sampled
      if set to ``None``, see :attr:`seed`. (default: ``None``)
    record_draws (bool): If ``True``, every draw (the initial strings, then
      one per Hadamard) is appended to :attr:`draws` in draw order.
      (default: ``False``)
    drawer (BitDrawer, optional): Share an existing draw source instead of
      creating one from ``seed``. (default: ``None``)
  """
  def __init__(self,
               num_qubits: int,
               width: int = DEFAULT_WIDTH,
               seed: Optional[int] = None,
               record_draws: bool = False,
               drawer: Optional[BitDrawer] = None):
    check_width(width, self.__class__.__name__)
    if num_qubits < 1:
      raise ValueError(f"'{self.__class__.__name__}': number of qubits must "
                       f"be positive (got {num_qubits})")
    if drawer is not None and drawer.width != width:
      raise ValueError(f"'{self.__class__.__name__}': drawer width "
                       f"{drawer.width} does not match width {width}")
    self.width = width
    self.mask = width_mask(width)
    self._drawer = drawer if drawer is not None else BitDrawer(width, seed)
    self.seed = self._drawer.seed
    self.record_draws = record_draws
    self.draws: List[BitString] = []
    self._bits: List[BitString] = [0] * num_qubits
    self.reset()

  @classmethod
  def from_values(cls, values: Sequence[BitString], width: int,
                  seed: Optional[int] = None,
                  record_draws: bool = False) -> 'AbstractState':
    r""" Build a state with pinned initial strings. Later Hadamard draws
    still come from the seeded generator.
    """
    state = cls(len(values), width, seed, record_draws)
    for q, v in enumerate(values):
      if v < 0 or v > state.mask:
        raise ValueError(f"'{cls.__name__}': value {v} of qubit {q} does not "
                         f"fit in {width} bits")
    state._bits = list(values)
    if record_draws:
      state.draws = list(values)
    return state

  @property
  def num_qubits(self) -> int:
    return len(self._bits)

  def _draw(self) -> BitString:
    bits = self._drawer.draw()
    if self.record_draws:
      self.draws.append(bits)
    return bits

  def reset(self):
    self.draws = []
    self._bits = [self._draw() for _ in range(len(self._bits))]

  def transfer(self, gate: Gate):
    kind = gate.kind
    if kind == GateKind.CX:
      self._bits[gate.target] ^= self._bits[gate.control]
    elif kind == GateKind.X:
      self._bits[gate.target] ^= self.mask
    elif kind == GateKind.H:
      self._bits[gate.target] = self._draw()

  def scan_view(self) -> Tuple[List[BitString], Callable[[], BitString]]:
    r""" The live list of strings and the draw function. Scan loops update
    the list in place instead of calling :meth:`transfer` per gate; the
    list is replaced on :meth:`reset`.
    """
    return self._bits, self._draw

  def value(self, q: QubitId) -> BitString:
    return self._bits[q]

  def __getitem__(self, q: QubitId) -> BitString:
    return self._bits[q]

  def __repr__(self) -> str:
    bits = ', '.join(
      f'q{q}={format_bits(b, self.width)}' for q, b in enumerate(self._bits)
    )
    return f'{self.__class__.__name__}(k={self.width}, {bits})'


def init(num_qubits: int, width: int = DEFAULT_WIDTH,
         seed: Optional[int] = None) -> AbstractState:
  return AbstractState(num_qubits, width, seed)

def transfer(state: AbstractState, gate: Gate):
  state.transfer(gate)
