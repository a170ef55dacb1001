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

import math
from dataclasses import dataclass
from typing import Optional

from ..analysis import AbstractState, SymbolicState
from ..ir import Gate, cx, h, x
from ..utils import BitDrawer, make_generator

from .config import resolve_seed


@dataclass
class CollisionStats:
  r""" Observed rate of equal k-bit strings on pairs with different
  parities, against the expected :math:`2^{-k}`.

  Args:
    width (int): The bit width k.
    samples (int): Number of sampled pairs.
    collisions (int): Pairs whose strings were equal.
    seed (int): Seed of the experiment.
  """
  width: int
  samples: int
  collisions: int
  seed: int

  @property
  def rate(self) -> float:
    return self.collisions / self.samples if self.samples else 0.0

  @property
  def expected(self) -> float:
    return math.ldexp(1.0, -self.width)

  @property
  def band(self) -> float:
    r""" Five standard deviations of the rate over ``samples`` draws.
    """
    if not self.samples:
      return 1.0
    p = self.expected
    return 5.0 * math.sqrt(p * (1.0 - p) / self.samples)

  @property
  def within_band(self) -> bool:
    return abs(self.rate - self.expected) <= self.band

  def __str__(self) -> str:
    return (f'k={self.width} samples={self.samples} '
            f'collisions={self.collisions} rate={self.rate:.6f} '
            f'expected={self.expected:.6f} band={self.band:.6f}')


def collision_rate(width: int,
                   samples: int = 100000,
                   seed: Optional[int] = None,
                   num_qubits: int = 4,
                   depth: int = 12) -> CollisionStats:
  r""" Sample random ``{CX, X, H}`` circuits and, for qubits 0 and 1 after
  each circuit, keep the pair if the exact parities differ in their
  variables. Counts how often the randomized strings are equal anyway.

  One pair per circuit keeps the samples independent.
  """
  if num_qubits < 2:
    raise ValueError(f"'collision_rate': need at least 2 qubits "
                     f"(got {num_qubits})")
  seed = resolve_seed(seed)
  rng = make_generator(seed)
  drawer = BitDrawer(width, seed + 1)
  exact = SymbolicState(num_qubits)
  single = [(h(q), x(q)) for q in range(num_qubits)]
  taken = collisions = 0
  while taken < samples:
    kinds = rng.integers(0, 3, size=depth).tolist()
    qubits = rng.integers(0, num_qubits, size=depth).tolist()
    others = rng.integers(0, num_qubits - 1, size=depth).tolist()
    state = AbstractState(num_qubits, width, drawer=drawer)
    exact.reset()
    for kind, q, o in zip(kinds, qubits, others):
      if kind == 2:
        g: Gate = cx(q, o + (o >= q))
      else:
        g = single[q][kind]
      state.transfer(g)
      exact.transfer(g)
    if exact[0].differs_in_variables(exact[1]):
      taken += 1
      collisions += state[0] == state[1]
  return CollisionStats(width, taken, collisions, seed)


def fresh_draw_rate(width: int,
                    samples: int = 100000,
                    seed: Optional[int] = None) -> CollisionStats:
  r""" How often a Hadamard draws the string its qubit already held. The
  fresh draw is independent of the old one, so the rate is :math:`2^{-k}`.
  """
  seed = resolve_seed(seed)
  state = AbstractState(1, width, seed)
  gate = h(0)
  repeats = 0
  for _ in range(samples):
    before = state[0]
    state.transfer(gate)
    repeats += state[0] == before
  return CollisionStats(width, samples, repeats, seed)
