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

import yaml

import phasefold as pf


if __name__ == "__main__":
  parser = argparse.ArgumentParser('Run scaling benchmarks from a config.')
  parser.add_argument('--config', type=str, default='bench_config.yml',
    help='path to the benchmark configuration file')
  parser.add_argument('--output', type=str, default='bench_results.csv',
    help='CSV file the stats records are appended to')
  parser.add_argument('--seed', type=int, default=None,
    help='overrides the seed of the configuration file')
  args = parser.parse_args()

  with open(args.config, 'r') as f:
    config = yaml.safe_load(f)
  seed = pf.harness.resolve_seed(
    args.seed if args.seed is not None else config.get('seed'))
  sizes = pf.utils.parse_count_list(config['sizes'])
  print('seed={}'.format(seed))
  for family in config['families']:
    for k in config['widths']:
      result = pf.harness.bench(family, sizes, seed, k,
                                config.get('num_qubits', 16),
                                config.get('h_period', 8),
                                config.get('precancel', True))
      pf.harness.append_records(args.output, result.records)
      for r in result.records:
        print('{} k={}: {:.3f} ms, T {} -> {}'.format(
          r.name, k, r.wall_time_ns / 1e6, r.t_in, r.t_out))
      print('{} k={}: log-log slope {:.3f}'.format(family, k, result.slope)
            if result.slope is not None else
            '{} k={}: single size, no slope'.format(family, k))
