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

import cmath
import math
import unittest

import torch

from phasefold.ir import Angle, Circuit, ccx_decomposition, cx, h, rz, t, x
from phasefold.oracle import (
  DenseUnitary, OracleSizeError, equivalent, simulate
)
from phasefold.passes import fold


class DenseOracleTestCase(unittest.TestCase):
  def test_single_qubit_matrices(self):
    u = simulate(Circuit(1, [x(0)]))
    self.assertEqual(u.entry(1, 0), 1)
    self.assertEqual(u.entry(0, 1), 1)
    self.assertEqual(u.entry(0, 0), 0)
    u = simulate(Circuit(1, [h(0)]))
    r = 1 / math.sqrt(2)
    expected = torch.tensor([[r, r], [r, -r]], dtype=torch.complex128)
    self.assertTrue(torch.allclose(u.matrix, expected))
    u = simulate(Circuit(1, [t(0)]))
    self.assertAlmostEqual(u.entry(0, 0), 1)
    self.assertAlmostEqual(u.entry(1, 1), cmath.exp(1j * math.pi / 4))

  def test_cx_little_endian(self):
    u = simulate(Circuit(2, [cx(0, 1)]))
    # |x0=1, x1=0> is index 1 and maps to index 3.
    self.assertEqual(u.entry(3, 1), 1)
    self.assertEqual(u.entry(1, 3), 1)
    self.assertEqual(u.entry(0, 0), 1)
    self.assertEqual(u.entry(2, 2), 1)

  def test_gate_order(self):
    a = simulate(Circuit(1, [h(0)]))
    b = simulate(Circuit(1, [t(0)]))
    self.assertLess(simulate(Circuit(1, [h(0), t(0)])).max_abs_diff(b @ a),
                    1e-12)
    self.assertGreater(simulate(Circuit(1, [h(0), t(0)])).max_abs_diff(a @ b),
                       0.1)

  def test_unitary(self):
    c = Circuit(3, [h(0), cx(0, 2), t(2), rz(0.123, 1), x(1), cx(1, 0)])
    self.assertTrue(simulate(c).is_unitary())
    self.assertEqual(simulate(c).dim, 8)

  def test_toffoli(self):
    u = simulate(Circuit(3, ccx_decomposition(0, 1, 2)))
    perm = [0, 1, 2, 7, 4, 5, 6, 3]
    expected = torch.eye(8, dtype=torch.complex128)[perm]
    self.assertLess(u.max_abs_diff(DenseUnitary(3, expected)), 1e-9)

  def test_equivalent(self):
    self.assertTrue(equivalent(Circuit(1, [t(0), t(0)]),
                               Circuit(1, [rz(Angle.exact(1, 2), 0)])))
    self.assertTrue(equivalent(Circuit(1, [h(0), h(0)]), Circuit(1)))
    self.assertFalse(equivalent(Circuit(1, [t(0)]), Circuit(1)))
    # Global phase is not quotiented out.
    self.assertFalse(equivalent(Circuit(1, [x(0), rz(Angle.exact(1), 0),
                                            x(0), rz(Angle.exact(1), 0)]),
                                Circuit(1)))
    with self.assertRaises(ValueError):
      equivalent(Circuit(1), Circuit(2))

  def test_fold_preserves_unitary(self):
    c = Circuit(2, [t(0), cx(0, 1), cx(1, 0), cx(0, 1), t(1)])
    self.assertTrue(equivalent(c, fold(c, width=3, seed=0)[0]))
    c = Circuit(1, [t(0)] * 8)
    self.assertTrue(equivalent(c, fold(c, seed=0)[0]))

  def test_size_limit(self):
    simulate(Circuit(10, [h(9)]))
    with self.assertLogs(level='WARNING'):
      with self.assertRaises(OracleSizeError):
        simulate(Circuit(11))
    with self.assertRaises(ValueError):
      equivalent(Circuit(11), Circuit(11))


if __name__ == "__main__":
  unittest.main()
