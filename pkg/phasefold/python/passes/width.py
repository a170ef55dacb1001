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
import math

from ..typing import MAX_WIDTH


def required_width(num_gates: int, epsilon: float) -> int:
  r""" Smallest bit width k with :math:`k > 2\log_2 m + \log_2(1/\varepsilon)`,
  which keeps the probability of any unsound merge over the at most
  :math:`\binom{m}{2}` rotation pairs below ``epsilon``.

  The result is capped at 128 with a warning.

  Args:
    num_gates (int): The gate count m, at least 1.
    epsilon (float): The target error probability, in (0, 1).
  """
  if num_gates < 1:
    raise ValueError(f"'required_width': gate count must be at least 1 "
                     f"(got {num_gates})")
  if not 0.0 < epsilon < 1.0:
    raise ValueError(f"'required_width': epsilon must be in (0, 1) "
                     f"(got {epsilon})")
  bound = 2.0 * math.log2(num_gates) + math.log2(1.0 / epsilon)
  width = math.floor(bound) + 1
  if width > MAX_WIDTH:
    logging.warning("'required_width': %d gates at epsilon=%g need %d bits, "
                    "capped at %d", num_gates, epsilon, width, MAX_WIDTH)
    width = MAX_WIDTH
  return width


def error_bound(num_gates: int, width: int) -> float:
  r""" Union bound :math:`\binom{m}{2} \cdot 2^{-k}` on the probability that
  a run merges some unsound pair, clipped to 1.
  """
  pairs = math.comb(max(num_gates, 0), 2)
  return min(1.0, math.ldexp(float(pairs), -width))
