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

from phasefold.analysis import (
  Parity, SymbolicState, parities_of, symbolic_transfer
)
from phasefold.harness import random_circuit
from phasefold.ir import Circuit, cx, h, t, x
from phasefold.oracle import (
  check_agreement, exact_merge_pairs, rotation_sites, symbolic_mergeable
)
from phasefold.passes import cancel_adjacent, fold


def swap_circuit() -> Circuit:
  return Circuit(2, [t(0), cx(0, 1), cx(1, 0), cx(0, 1), t(1)])


class SymbolicStateTestCase(unittest.TestCase):
  def test_cx(self):
    state = SymbolicState(2)
    state.transfer(cx(0, 1))
    self.assertEqual(state[1], Parity(0, frozenset((0, 1))))
    self.assertEqual(state[0], Parity.var(0))

  def test_x_involution(self):
    state = SymbolicState(1)
    state.transfer(x(0))
    self.assertEqual(state[0], Parity(1, frozenset((0,))))
    self.assertEqual(str(state[0]), '1 + v0')
    state.transfer(x(0))
    self.assertEqual(state[0], Parity.var(0))

  def test_hadamards_allocate_in_order(self):
    state = SymbolicState(2)
    state.transfer(h(0))
    self.assertEqual(state[0], Parity.var(2))
    state.transfer(h(0))
    self.assertEqual(state[0], Parity.var(3))
    self.assertEqual(state.next_fresh, 4)
    state.reset()
    self.assertEqual(state.values(), [Parity.var(0), Parity.var(1)])
    self.assertEqual(state.next_fresh, 2)

  def test_symbolic_transfer(self):
    state = SymbolicState(2)
    for g in swap_circuit():
      symbolic_transfer(state, g)
    self.assertEqual(state.values(), parities_of(2, swap_circuit()).values())
    symbolic_transfer(state, t(0))
    self.assertEqual(state[0], Parity.var(1))
    symbolic_transfer(state, x(1))
    self.assertEqual(state[1], Parity(1, frozenset((0,))))
    symbolic_transfer(state, h(1))
    self.assertEqual(state[1], Parity.var(2))

  def test_swap_parities(self):
    state = parities_of(2, swap_circuit())
    self.assertEqual(state[0], Parity.var(1))
    self.assertEqual(state[1], Parity.var(0))

  def test_evaluate(self):
    p = Parity(1, frozenset((0, 2)))
    self.assertEqual(p.evaluate([0b101, 0b000, 0b011], 0b111), 0b001)
    self.assertEqual(str(Parity(0, frozenset())), '0')

  def test_differs_in_variables(self):
    a = Parity.var(0)
    self.assertFalse(a.differs_in_variables(a.negate()))
    self.assertTrue(a.differs_in_variables(Parity.var(1)))


class SymbolicMergeableTestCase(unittest.TestCase):
  def test_swap(self):
    self.assertTrue(symbolic_mergeable(swap_circuit(), 0, 1))

  def test_hadamard_separates(self):
    self.assertFalse(symbolic_mergeable(Circuit(1, [t(0), h(0), t(0)]), 0, 1))

  def test_constant_separates(self):
    self.assertFalse(symbolic_mergeable(Circuit(1, [t(0), x(0), t(0)]), 0, 1))

  def test_adjacent_rotations(self):
    c = Circuit(2, [h(1), t(0), t(0), cx(1, 0)])
    self.assertTrue(symbolic_mergeable(c, 0, 1))

  def test_check_agreement(self):
    for seed in range(30):
      c = cancel_adjacent(random_circuit(1 + seed % 5, 50, seed))
      agreement = check_agreement(c, 64, seed)
      self.assertTrue(agreement.agree, seed)
      self.assertEqual(agreement.exact, exact_merge_pairs(c))
      merged = set(fold(c, 64, seed)[1].merged_pairs)
      self.assertEqual(check_agreement(c, 64, seed, merged), agreement)
    # One-bit strings of different qubits collide for about half the seeds.
    c = Circuit(2, [t(0), t(1)])
    self.assertFalse(all(check_agreement(c, 1, seed).agree
                         for seed in range(20)))

  def test_indices(self):
    sites = rotation_sites(swap_circuit())
    self.assertEqual([s.index for s in sites], [0, 4])
    self.assertEqual([s.qubit for s in sites], [0, 1])
    for i, j in ((0, 2), (1, 0), (-1, 1), (1, 1)):
      with self.assertRaises(IndexError):
        symbolic_mergeable(swap_circuit(), i, j)


if __name__ == "__main__":
  unittest.main()
