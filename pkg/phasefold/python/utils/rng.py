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

from typing import Optional

import numpy as np

from ..typing import BitString, check_width, width_mask


SEED_BITS = 63

def fresh_seed() -> int:
  r""" Sample a seed from OS entropy, truncated to 63 bits so that it can be
  printed and passed back on the command line.
  """
  return int(np.random.SeedSequence().entropy) & ((1 << SEED_BITS) - 1)


def make_generator(seed: int) -> np.random.Generator:
  return np.random.Generator(np.random.PCG64(seed))


class BitDrawer(object):
  r""" Uniform k-bit string source backed by a seeded PCG64 generator.

  Raw 64-bit outputs are pulled from the generator in blocks and handed out
  one (``k <= 64``) or two (``k > 64``) words per draw, so the drawn sequence
  only depends on the seed and the width, never on the block size.

  Args:
    width (int): The bit width k of drawn strings, in [1, 128].
    seed (int, optional): The generator seed. A fresh seed is sampled from
      OS entropy if set to ``None``. (default: ``None``)
    block_size (int): Number of raw words fetched per refill.
      (default: ``4096``)
  """
  def __init__(self, width: int, seed: Optional[int] = None,
               block_size: int = 4096):
    check_width(width, self.__class__.__name__)
    self.width = width
    self.seed = fresh_seed() if seed is None else int(seed)
    self._mask = width_mask(width)
    self._wide = width > 64
    self._bit_generator = np.random.PCG64(self.seed)
    self._block_size = max(2, int(block_size))
    self._pool = []
    self._pos = 0

  def _refill(self):
    self._pool = self._bit_generator.random_raw(self._block_size).tolist()
    self._pos = 0

  def _word(self) -> int:
    if self._pos >= len(self._pool):
      self._refill()
    w = self._pool[self._pos]
    self._pos += 1
    return w

  def draw(self) -> BitString:
    if self._wide:
      lo = self._word()
      return ((self._word() << 64) | lo) & self._mask
    return self._word() & self._mask
