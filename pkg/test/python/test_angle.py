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
import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from phasefold.ir import (
  Angle, AngleClass, S_ANGLE, T_ANGLE, TDG_ANGLE, Z_ANGLE, ZERO, as_angle
)


class AngleTestCase(unittest.TestCase):
  def test_exact_addition(self):
    self.assertEqual(T_ANGLE + T_ANGLE, S_ANGLE)
    self.assertEqual(S_ANGLE + S_ANGLE, Z_ANGLE)
    self.assertEqual(Angle.exact(3, 2) + Z_ANGLE, S_ANGLE)
    self.assertTrue((TDG_ANGLE + T_ANGLE).is_zero())
    self.assertEqual(repr(T_ANGLE + S_ANGLE), 'Exact(3,4)')

  def test_normalization(self):
    self.assertEqual(Angle.exact(-1, 4), TDG_ANGLE)
    self.assertEqual(Angle.exact(9, 4), T_ANGLE)
    self.assertEqual(Angle.exact(2, 1), ZERO)
    self.assertEqual(Angle.exact(2, 8), T_ANGLE)
    self.assertEqual(-T_ANGLE, TDG_ANGLE)
    self.assertEqual(S_ANGLE - T_ANGLE, T_ANGLE)

  def test_approx_demotes(self):
    a = Angle.approx(0.1) + T_ANGLE
    self.assertFalse(a.is_exact)
    self.assertAlmostEqual(a.radians, 0.1 + math.pi / 4, places=12)
    self.assertTrue(Angle.approx(2 * math.pi - 1e-12).is_zero())
    self.assertTrue(Angle.approx(-1e-13).is_zero())
    self.assertFalse(Angle.approx(1e-6).is_zero())
    with self.assertRaises(ValueError):
      _ = Angle.approx(0.5).num

  def test_from_radians(self):
    self.assertEqual(Angle.from_radians(math.pi / 4), T_ANGLE)
    self.assertEqual(Angle.from_radians(-math.pi / 2), Angle.exact(3, 2))
    self.assertFalse(Angle.from_radians(0.3).is_exact)
    self.assertEqual(as_angle(math.pi), Z_ANGLE)

  def test_t_class(self):
    self.assertEqual(T_ANGLE.t_class(), AngleClass.TGATE)
    self.assertEqual(Angle.exact(5, 4).t_class(), AngleClass.TGATE)
    self.assertEqual(S_ANGLE.t_class(), AngleClass.CLIFFORD)
    self.assertEqual(Z_ANGLE.t_class(), AngleClass.CLIFFORD)
    self.assertEqual(ZERO.t_class(), AngleClass.CLIFFORD)
    self.assertEqual(Angle.exact(1, 8).t_class(), AngleClass.OTHER)
    self.assertEqual(Angle.approx(0.3).t_class(), AngleClass.OTHER)

  def test_enumerated_algebra(self):
    angles = [Angle.exact(num, den) for den in (1, 2, 4, 8)
              for num in range(2 * den)]
    for a in angles:
      for b in angles:
        self.assertEqual(a + b, b + a)
        for c in angles:
          self.assertEqual((a + b) + c, a + (b + c))
    self.assertEqual(Angle.exact(3, 2) + Angle.exact(3, 4), T_ANGLE)

  def test_exact_values_are_cached(self):
    self.assertIs(Angle.exact(1, 4), T_ANGLE)
    self.assertIs(T_ANGLE + T_ANGLE, T_ANGLE + T_ANGLE)
    self.assertEqual(T_ANGLE + T_ANGLE, S_ANGLE)
    self.assertEqual(Angle.exact(10, 8), Angle.exact(5, 4))
    self.assertEqual(-TDG_ANGLE, T_ANGLE)
    # Constructor path builds an equal value.
    self.assertEqual(Angle(turns=Fraction(9, 4)), T_ANGLE)
    self.assertEqual(hash(Angle(turns=Fraction(9, 4))), hash(T_ANGLE))
    self.assertEqual(T_ANGLE.turns, Fraction(1, 4))
    self.assertIsNone(Angle.approx(0.5).turns)

  def test_bad_denominator(self):
    with self.assertRaises(ValueError):
      Angle.exact(1, 0)

  @given(st.integers(-64, 64), st.integers(-64, 64))
  def test_exact_sums_stay_exact(self, a, b):
    s = Angle.exact(a, 8) + Angle.exact(b, 8)
    self.assertTrue(s.is_exact)
    self.assertEqual(s, Angle.exact(a + b, 8))
    self.assertTrue((s - Angle.exact(a + b, 8)).is_zero())

  @given(st.floats(-100.0, 100.0, allow_nan=False))
  def test_inverse_cancels(self, r):
    a = Angle.approx(r)
    self.assertTrue((a + (-a)).is_zero())
    self.assertGreaterEqual(a.radians, 0.0)
    self.assertLess(a.radians, 2 * math.pi)


if __name__ == "__main__":
  unittest.main()
