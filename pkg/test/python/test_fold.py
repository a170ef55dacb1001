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

from phasefold.analysis import AbstractState, SymbolicState
from phasefold.harness import random_circuit
from phasefold.ir import Angle, Circuit, GateKind, cx, h, rz, s, t, tdg, x
from phasefold.oracle import equivalent
from phasefold.passes import (
  PhaseFoldPass, cancel_adjacent, error_bound, exact_fold, fold, fold_with,
  optimize, required_width
)


def swap_circuit(theta1: Angle, theta2: Angle) -> Circuit:
  return Circuit(2, [rz(theta1, 0), cx(0, 1), cx(1, 0), cx(0, 1),
                     rz(theta2, 1)])


class FoldTestCase(unittest.TestCase):
  def test_swap_with_pinned_draws(self):
    c = swap_circuit(Angle.exact(1, 8), Angle.exact(1, 4))
    state = AbstractState.from_values([0b101, 0b011], width=3, seed=0)
    out, report = fold_with(c, state)
    self.assertEqual(out.gates(), [cx(0, 1), cx(1, 0), cx(0, 1),
                                   rz(Angle.exact(3, 8), 1)])
    self.assertEqual(report.merges, 1)
    self.assertEqual(report.merged_pairs, [(0, 4)])
    self.assertEqual(state.values(), [0b011, 0b101])

  def test_swap_any_seed(self):
    c = swap_circuit(Angle.exact(1, 4), Angle.exact(1, 4))
    for seed in range(20):
      out, report = fold(c, width=3, seed=seed)
      self.assertEqual(out.gates()[-1], s(1))
      self.assertEqual(out.stats().rz_count, 1)
      self.assertTrue(equivalent(c, out))

  def test_eight_t_gates(self):
    c = Circuit(1, [t(0)] * 8)
    out, report = fold(c, seed=1)
    self.assertEqual(len(out), 0)
    self.assertEqual(report.merges, 7)
    self.assertEqual(report.t_count_before, 8)
    self.assertEqual(report.t_count_after, 0)
    self.assertEqual(report.rotations_eliminated, 8)
    self.assertTrue(equivalent(c, out))

  def test_hadamard_blocks(self):
    c = Circuit(1, [t(0), h(0), t(0)])
    out, report = fold(c, seed=2)
    self.assertEqual(out, c)
    self.assertEqual(report.merges, 0)

  def test_x_blocks(self):
    c = Circuit(1, [t(0), x(0), t(0)])
    for seed in range(10):
      self.assertEqual(fold(c, width=1, seed=seed)[0], c)

  def test_two_t_gates(self):
    out, _ = fold(Circuit(1, [t(0), t(0)]), seed=3)
    self.assertEqual(out.gates(), [s(0)])

  def test_zero_sum_frees_key(self):
    out, report = fold(Circuit(1, [t(0), tdg(0), t(0)]), seed=4)
    self.assertEqual(out.gates(), [t(0)])
    self.assertEqual(report.merged_pairs, [(0, 1)])

  def test_zero_rotation_dropped(self):
    c = Circuit(2, [rz(Angle.exact(0), 1), h(0), rz(0.0, 0)])
    out, report = fold(c, seed=6)
    self.assertEqual(out.gates(), [h(0)])
    self.assertEqual(report.merges, 0)
    self.assertEqual(report.rotations_eliminated, 2)

  def test_approx_angles(self):
    c = Circuit(1, [rz(0.3, 0), rz(-0.3, 0)])
    self.assertEqual(len(fold(c, seed=5)[0]), 0)
    c = Circuit(1, [rz(0.3, 0), rz(0.2, 0)])
    out, _ = fold(c, seed=5)
    self.assertEqual(len(out), 1)
    self.assertAlmostEqual(out.gates()[0].angle.radians, 0.5, places=12)

  def test_counters(self):
    for seed in range(20):
      c = random_circuit(4, 80, seed)
      _, report = fold(c, width=64, seed=seed)
      stats = c.stats()
      self.assertEqual(report.transfers, len(c) - stats.rz_count)
      self.assertLessEqual(report.table_ops, 3 * stats.rz_count)
      self.assertLessEqual(report.t_count_after, report.t_count_before)
      self.assertEqual(report.width, 64)
      self.assertEqual(report.seed, seed)

  def test_counts_match_stats(self):
    for seed in range(20):
      c = random_circuit(3, 120, seed)
      out, report = fold(c, width=64, seed=seed)
      before, after = c.stats(), out.stats()
      self.assertEqual(report.t_count_before, before.t_count)
      self.assertEqual(report.t_count_after, after.t_count)
      self.assertEqual(report.rotations_in, before.rz_count)
      self.assertEqual(report.rotations_out, after.rz_count)
      _, exact_report = exact_fold(c)
      self.assertEqual(exact_report.t_count_after, after.t_count)

  def test_report_bound(self):
    _, report = fold(Circuit(1, [t(0)] * 10), width=8, seed=0)
    self.assertAlmostEqual(report.error_bound, 45 / 256)

  def test_domain_must_match(self):
    with self.assertRaises(ValueError):
      fold_with(Circuit(2), SymbolicState(3))
    with self.assertRaises(ValueError):
      PhaseFoldPass(width=0)

  def test_agrees_with_exact_fold(self):
    for seed in range(200):
      c = cancel_adjacent(random_circuit(1 + seed % 6, seed % 61, seed))
      out, report = fold(c, width=64, seed=seed)
      exact_out, exact_report = exact_fold(c)
      self.assertEqual(report.merged_pairs, exact_report.merged_pairs, seed)
      self.assertEqual(out, exact_out)
      self.assertTrue(equivalent(c, out), seed)


class WidthTestCase(unittest.TestCase):
  def test_required_width(self):
    self.assertEqual(required_width(10**6, 2.0**-30), 70)
    self.assertEqual(required_width(1, 0.5), 2)
    self.assertEqual(required_width(10**9, 2.0**-20), 80)

  def test_cap(self):
    with self.assertLogs(level='WARNING'):
      self.assertEqual(required_width(10**9, 1e-30), 128)

  def test_errors(self):
    with self.assertRaises(ValueError):
      required_width(0, 0.5)
    for eps in (0.0, 1.0, 1.5):
      with self.assertRaises(ValueError):
        required_width(10, eps)

  def test_error_bound(self):
    self.assertEqual(error_bound(2, 1), 0.5)
    self.assertEqual(error_bound(100, 1), 1.0)
    self.assertEqual(error_bound(1, 1), 0.0)


class OptimizeTestCase(unittest.TestCase):
  def test_precancel_resolves_hadamard_pair(self):
    c = Circuit(1, [t(0), h(0), h(0), t(0)])
    self.assertEqual(optimize(c, seed=0).circuit.gates(), [s(0)])
    result = optimize(c, seed=0, precancel=False)
    self.assertEqual(result.circuit, c)
    self.assertEqual(result.cancel_reports, [])

  def test_rounds(self):
    c = random_circuit(3, 50, 9)
    result = optimize(c, width=64, seed=9, rounds=3, converge=False)
    self.assertEqual(len(result.fold_reports), 3)
    self.assertEqual([r.seed for r in result.fold_reports], [9, 10, 11])
    self.assertEqual(result.merges, sum(r.merges for r in result.fold_reports))
    self.assertTrue(equivalent(c, result.circuit))
    with self.assertRaises(ValueError):
      optimize(c, rounds=0)

  def test_converge_cancels_exposed_pair(self):
    c = Circuit(1, [t(0), h(0), t(0), tdg(0), h(0)])
    once = optimize(c, seed=0, converge=False)
    self.assertEqual(once.circuit.gates(), [t(0), h(0), h(0)])
    result = optimize(c, seed=0)
    self.assertEqual(result.circuit.gates(), [t(0)])
    self.assertEqual([r.seed for r in result.fold_reports], [0, 1])
    self.assertEqual([r.cancelled_pairs for r in result.cancel_reports],
                     [0, 1, 0])
    self.assertEqual(result.merges, 1)
    self.assertTrue(equivalent(c, result.circuit))

  def test_second_run_is_a_fixpoint(self):
    for seed in range(40):
      c = random_circuit(1 + seed % 4, 80, seed)
      first = optimize(c, width=64, seed=seed)
      again = optimize(first.circuit, width=64, seed=seed + 1000)
      self.assertEqual(again.merges, 0, seed)
      self.assertEqual(again.cancelled_pairs, 0, seed)
      self.assertEqual(again.circuit, first.circuit, seed)

  def test_deterministic(self):
    c = random_circuit(5, 200, 1)
    a = optimize(c, width=16, seed=77)
    b = optimize(c, width=16, seed=77)
    self.assertEqual(a.circuit, b.circuit)
    self.assertEqual(a.report.merged_pairs, b.report.merged_pairs)
    self.assertEqual(a.circuit.num_slots, len(a.circuit))

  def test_gate_count_does_not_grow(self):
    for seed in range(30):
      c = random_circuit(4, 60, seed)
      out = optimize(c, width=64, seed=seed).circuit
      self.assertLessEqual(len(out), len(c))
      self.assertLessEqual(out.stats().t_count, c.stats().t_count)
      self.assertTrue(all(g.kind != GateKind.RZ or not g.angle.is_zero()
                          for g in out))


if __name__ == "__main__":
  unittest.main()
