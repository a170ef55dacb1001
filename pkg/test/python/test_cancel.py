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

import unittest

from phasefold.harness import random_circuit
from phasefold.ir import Circuit, cx, h, t, x
from phasefold.oracle import equivalent
from phasefold.passes import CancelAdjacentPass, cancel_adjacent


class CancelAdjacentTestCase(unittest.TestCase):
  def test_pairs(self):
    self.assertEqual(len(cancel_adjacent(Circuit(1, [h(0), h(0)]))), 0)
    self.assertEqual(len(cancel_adjacent(Circuit(1, [x(0), x(0)]))), 0)
    self.assertEqual(len(cancel_adjacent(Circuit(2, [cx(0, 1), cx(0, 1)]))), 0)

  def test_cascade(self):
    out, report = CancelAdjacentPass().run(
      Circuit(1, [h(0), x(0), x(0), h(0)]))
    self.assertEqual(len(out), 0)
    self.assertEqual(report.cancelled_pairs, 2)
    self.assertEqual(report.gates_in, 4)
    self.assertEqual(report.gates_out, 0)

  def test_rotation_blocks(self):
    c = Circuit(1, [h(0), t(0), h(0)])
    self.assertEqual(cancel_adjacent(c), c)

  def test_adjacency_is_per_qubit(self):
    c = Circuit(2, [h(0), x(1), h(0)])
    self.assertEqual(cancel_adjacent(c).gates(), [x(1)])
    # A gate on the control blocks a CX pair.
    c = Circuit(2, [cx(0, 1), x(0), cx(0, 1)])
    self.assertEqual(cancel_adjacent(c), c)

  def test_cx_orientation(self):
    c = Circuit(2, [cx(0, 1), cx(1, 0)])
    self.assertEqual(cancel_adjacent(c), c)

  def test_preserves_semantics(self):
    for seed in range(50):
      c = random_circuit(1 + seed % 5, 40, seed)
      out = cancel_adjacent(c)
      self.assertLessEqual(len(out), len(c))
      self.assertTrue(equivalent(c, out), seed)

  def test_idempotent(self):
    for seed in range(50):
      once = cancel_adjacent(random_circuit(3, 60, seed))
      self.assertEqual(cancel_adjacent(once), once, seed)


if __name__ == "__main__":
  unittest.main()
