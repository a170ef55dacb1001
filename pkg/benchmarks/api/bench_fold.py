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

import argparse
import time

import phasefold as pf


def bench_fold(family, num_gates, seed, width, num_qubits, h_period, repeats):
  circuit = pf.harness.family_circuit(family, num_gates, seed, num_qubits,
                                      h_period)
  total_time = 0
  merges = 0
  for r in range(repeats):
    start = time.perf_counter()
    _, report = pf.passes.fold(circuit, width, seed + r)
    total_time += time.perf_counter() - start
    merges += report.merges
  print('{} m={} k={}: {:.3f} M gates per sec, {:.1f} merges per run'.format(
    family, num_gates, width, num_gates * repeats / total_time / 1000000,
    merges / repeats))


def bench_exact(family, num_gates, seed, num_qubits, h_period):
  circuit = pf.harness.family_circuit(family, num_gates, seed, num_qubits,
                                      h_period)
  start = time.perf_counter()
  pf.passes.exact_fold(circuit)
  elapsed = time.perf_counter() - start
  print('{} m={} exact: {:.3f} M gates per sec'.format(
    family, num_gates, num_gates / elapsed / 1000000))


if __name__ == "__main__":
  parser = argparse.ArgumentParser('Phase folding throughput benchmarks.')
  parser.add_argument('--family', type=str, default='tchain-cx',
    choices=pf.harness.FAMILIES, help='generated circuit family')
  parser.add_argument('--num_gates', type=str, default='1M',
    help='gate count, unit suffixes allowed')
  parser.add_argument('--widths', type=str, default='16,64,128',
    help='comma separated bit widths')
  parser.add_argument('--num_qubits', type=int, default=16,
    help='register size of the generated circuit')
  parser.add_argument('--h_period', type=int, default=8,
    help='tchain-cx layers between Hadamards')
  parser.add_argument('--seed', type=int, default=0,
    help='seed of generation and folding')
  parser.add_argument('--repeats', type=int, default=3,
    help='timed runs per width')
  parser.add_argument('--with_exact', action='store_true',
    help='also time folding with exact parity keys')
  args = parser.parse_args()

  num_gates = pf.utils.parse_count(args.num_gates)
  for k in pf.utils.parse_count_list(args.widths):
    bench_fold(args.family, num_gates, args.seed, k, args.num_qubits,
               args.h_period, args.repeats)
  if args.with_exact:
    bench_exact(args.family, num_gates, args.seed, args.num_qubits,
                args.h_period)
