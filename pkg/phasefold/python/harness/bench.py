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

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..passes import optimize
from ..typing import DEFAULT_WIDTH

from .config import resolve_seed
from .generator import family_circuit
from .records import StatsRecord


def loglog_slope(sizes: Sequence[int],
                 times_ns: Sequence[int]) -> Optional[float]:
  r""" Least-squares slope of log(time) against log(size), ``None`` for
  fewer than two points.
  """
  if len(sizes) < 2:
    return None
  x = np.log(np.asarray(sizes, dtype=np.float64))
  y = np.log(np.maximum(np.asarray(times_ns, dtype=np.float64), 1.0))
  slope, _ = np.polyfit(x, y, 1)
  return float(slope)


@dataclass
class BenchResult:
  family: str
  records: List[StatsRecord] = field(default_factory=list)
  slope: Optional[float] = None


def bench(family: str,
          sizes: Sequence[int],
          seed: Optional[int] = None,
          width: int = DEFAULT_WIDTH,
          num_qubits: int = 16,
          h_period: int = 8,
          precancel: bool = True) -> BenchResult:
  r""" Time one cancel+fold round on one generated circuit per size, with
  no convergence rounds. Generation, parsing and emission are not timed.

  Args:
    family (str): ``random`` or ``tchain-cx``.
    sizes (Sequence[int]): Gate counts, strictly ascending.
    seed (int, optional): Seed of generation and folding. (default: ``None``)
    width (int): Bit width k. (default: ``128``)
    num_qubits (int): Register size of generated circuits. (default: ``16``)
    h_period (int): Hadamard period of ``tchain-cx``. (default: ``8``)
    precancel (bool): Include the cancellation prepass. (default: ``True``)
  """
  sizes = list(sizes)
  if any(a >= b for a, b in zip(sizes, sizes[1:])):
    raise ValueError(f"'bench': sizes must be strictly ascending "
                     f"(got {sizes})")
  seed = resolve_seed(seed)
  result = BenchResult(family)
  for m in sizes:
    circuit = family_circuit(family, m, seed, num_qubits, h_period)
    run = optimize(circuit, width, seed, precancel, converge=False)
    record = StatsRecord.from_result(f'{family}-{m}', circuit, run)
    logging.info("'bench': %s %d gates in %.3f ms, T %d -> %d (%.3f)",
                 family, m, record.wall_time_ns / 1e6, record.t_in,
                 record.t_out, record.t_ratio)
    result.records.append(record)
  result.slope = loglog_slope(
    [r.gates_in for r in result.records],
    [r.wall_time_ns for r in result.records]
  )
  if result.slope is not None:
    logging.info("'bench': log-log slope %.3f", result.slope)
  return result
