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

import time
from dataclasses import dataclass, field
from typing import List, Optional

from ..ir import Circuit
from ..typing import DEFAULT_WIDTH, check_width
from ..utils import fresh_seed

from .cancel import CancelAdjacentPass, CancelReport
from .fold import FoldReport, PhaseFoldPass


@dataclass
class OptimizeResult:
  r""" Output of the cancel-then-fold pipeline.

  Args:
    circuit (Circuit): The optimized circuit.
    fold_reports (List[FoldReport]): One fold report per round, convergence
      rounds included.
    cancel_reports (List[CancelReport]): One report per cancellation run.
    seed (int): The effective seed of the first round; round ``r`` uses
      ``seed + r``.
    width (int): The bit width k.
    pass_time_ns (int): Wall time spent inside the passes.
  """
  circuit: Circuit
  fold_reports: List[FoldReport] = field(default_factory=list)
  cancel_reports: List[CancelReport] = field(default_factory=list)
  seed: int = 0
  width: int = DEFAULT_WIDTH
  pass_time_ns: int = 0

  @property
  def merges(self) -> int:
    return sum(r.merges for r in self.fold_reports)

  @property
  def cancelled_pairs(self) -> int:
    return sum(r.cancelled_pairs for r in self.cancel_reports)

  @property
  def report(self) -> FoldReport:
    r""" The fold report of the first round.
    """
    return self.fold_reports[0]


def optimize(circuit: Circuit,
             width: int = DEFAULT_WIDTH,
             seed: Optional[int] = None,
             precancel: bool = True,
             rounds: int = 1,
             converge: bool = True) -> OptimizeResult:
  r""" Run adjacent-gate cancellation (optional) followed by randomized phase
  folding, ``rounds`` times.

  Removing rotations can leave self-inverse pairs adjacent. With
  ``precancel`` and ``converge`` set, cancellation runs again on the last
  fold output and every run that cancels a pair is followed by one more
  fold, until a cancellation finds nothing. Each extra fold continues the
  seed sequence. A second call on the result then has no pair to cancel.

  Args:
    circuit (Circuit): The input circuit, not modified.
    width (int): The bit width k. (default: ``128``)
    seed (int, optional): The seed of the first round, sampled from OS
      entropy if set to ``None``. (default: ``None``)
    precancel (bool): Run the cancellation prepass. (default: ``True``)
    rounds (int): Number of cancel+fold rounds. (default: ``1``)
    converge (bool): Repeat cancel+fold after the last round until
      cancellation removes nothing. (default: ``True``)
  """
  check_width(width, 'optimize')
  if rounds < 1:
    raise ValueError(f"'optimize': rounds must be at least 1 (got {rounds})")
  seed = fresh_seed() if seed is None else int(seed)
  result = OptimizeResult(circuit, seed=seed, width=width)
  current = circuit
  start = time.perf_counter_ns()
  r = 0
  while True:
    if precancel:
      if r >= rounds and not converge:
        break
      current, cancel_report = CancelAdjacentPass().run(current)
      result.cancel_reports.append(cancel_report)
      # Each extra round removes at least two gates.
      if r >= rounds and cancel_report.cancelled_pairs == 0:
        break
    elif r >= rounds:
      break
    current, fold_report = PhaseFoldPass(width, seed + r).run(current)
    result.fold_reports.append(fold_report)
    r += 1
  result.pass_time_ns = time.perf_counter_ns() - start
  result.circuit = current.compact()
  return result
