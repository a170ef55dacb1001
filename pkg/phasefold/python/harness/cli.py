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
import sys
from typing import Optional, Tuple

import click

from ..oracle import OracleSizeError
from ..qasm import QasmParseError
from ..utils import parse_count, write_text

from .bench import bench as run_bench
from .collision import collision_rate, fresh_draw_rate
from .commands import (
  VerifyOutcome, cmd_gen, cmd_optimize, cmd_stats, cmd_verify
)
from .config import (
  Command, DEFAULT_FUZZ_WIDTH, RunConfig, load_yaml, log_level_from_env,
  merge_config
)
from .fuzz import fuzz as run_fuzz
from .generator import FAMILIES
from .records import format_records


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _fail_parse(path: str, e: QasmParseError):
  for d in e.diagnostics:
    click.echo(f'{path}:{d}', err=True)
  sys.exit(EXIT_USAGE)


def _make_config(**kwargs) -> RunConfig:
  try:
    return RunConfig(**kwargs)
  except ValueError as e:
    raise click.UsageError(str(e))


def _width_options(f):
  f = click.option('--epsilon', type=float, default=None,
                   help='target failure probability, derives the width '
                        'from the gate count')(f)
  f = click.option('--width', '-k', type=int, default=None,
                   help='bit width k of the abstract strings (default 128)')(f)
  return f


def _seed_option(f):
  return click.option('--seed', type=click.IntRange(min=0), default=None,
                      help='seed, else $PHASEFOLD_SEED, else OS entropy')(f)


@click.group()
@click.option('--log-level', default=log_level_from_env, show_default='WARNING',
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                                case_sensitive=False),
              help='root logger level, also $PHASEFOLD_LOG_LEVEL')
def main(log_level: str):
  r""" Randomized phase folding for Clifford+T circuits.
  """
  logging.basicConfig(level=getattr(logging, log_level.upper()),
                      format='%(asctime)s %(levelname)s %(message)s')


@main.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='output QASM file, stdout if omitted')
@_seed_option
@_width_options
@click.option('--no-precancel', is_flag=True,
              help='skip the adjacent-gate cancellation prepass')
@click.option('--decompose-ccx', is_flag=True,
              help='accept ccx and lower it to Clifford+T')
@click.option('--rounds', type=int, default=1, show_default=True,
              help='number of cancel+fold rounds')
@click.option('--stats', 'stats_path', type=click.Path(dir_okay=False),
              default=None, help='append the stats record to this CSV')
def optimize(input_path, output, seed, width, epsilon, no_precancel,
             decompose_ccx, rounds, stats_path):
  r""" Optimize one QASM file and print its stats record.
  """
  cfg = _make_config(command=Command.OPTIMIZE, inputs=[input_path],
                     output=output, seed=seed, width=width, epsilon=epsilon,
                     precancel=not no_precancel, decompose_ccx=decompose_ccx,
                     rounds=rounds, stats_path=stats_path)
  try:
    record, text = cmd_optimize(cfg)
  except QasmParseError as e:
    _fail_parse(input_path, e)
  # The QASM owns stdout when no output file is given.
  to_stderr = output is None
  if to_stderr:
    click.echo(text, nl=False)
  click.echo(format_records([record]), nl=False, err=to_stderr)


@main.command()
@click.argument('input_paths', nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@click.option('--decompose-ccx', is_flag=True,
              help='accept ccx and lower it to Clifford+T')
def stats(input_paths, decompose_ccx):
  r""" Print gate statistics of QASM files.
  """
  cfg = _make_config(command=Command.STATS, inputs=list(input_paths),
                     decompose_ccx=decompose_ccx, seed=0)
  try:
    rows = cmd_stats(cfg)
  except QasmParseError as e:
    _fail_parse(' '.join(input_paths), e)
  click.echo('name,n_qubits,total_gates,t_count,rz_count,cx_count,h_count,'
             'x_count')
  for name, st in rows:
    click.echo(f'{name},{st.num_qubits},{st.total_gates},{st.t_count},'
               f'{st.rz_count},{st.cx_count},{st.h_count},{st.x_count}')


@main.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@_seed_option
@_width_options
@click.option('--no-precancel', is_flag=True,
              help='skip the adjacent-gate cancellation prepass')
@click.option('--decompose-ccx', is_flag=True,
              help='accept ccx and lower it to Clifford+T')
@click.option('--tol', type=float, default=1e-9, show_default=True,
              help='entrywise tolerance')
def verify(input_path, seed, width, epsilon, no_precancel, decompose_ccx, tol):
  r""" Optimize a circuit of at most 10 qubits and check that its matrix is
  unchanged.
  """
  cfg = _make_config(command=Command.VERIFY, inputs=[input_path], seed=seed,
                     width=width, epsilon=epsilon,
                     precancel=not no_precancel, decompose_ccx=decompose_ccx)
  try:
    result = cmd_verify(cfg, tol=tol)
  except QasmParseError as e:
    _fail_parse(input_path, e)
  except OracleSizeError as e:
    click.echo(f'REFUSED: {e}', err=True)
    sys.exit(EXIT_USAGE)
  if result.record is not None:
    click.echo(f'seed={result.record.seed} width={result.record.width}')
  click.echo(f'{result.outcome.value}: {result.message}')
  if result.outcome == VerifyOutcome.REFUSED:
    sys.exit(EXIT_USAGE)
  if result.outcome == VerifyOutcome.FAIL:
    sys.exit(EXIT_FAIL)


@main.command()
@click.option('--num-qubits', '-n', type=int, required=True,
              help='register size')
@click.option('--num-gates', '-m', type=str, required=True,
              help='gate count, unit suffixes allowed (e.g. 10K)')
@_seed_option
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='output QASM file, stdout if omitted')
def gen(num_qubits, num_gates, seed, output):
  r""" Generate a uniformly random Clifford+T circuit.
  """
  if num_qubits < 1:
    raise click.BadParameter('must be positive', param_hint='--num-qubits')
  cfg = _make_config(command=Command.GEN, seed=seed, num_qubits=num_qubits,
                     num_gates=parse_count(num_gates))
  text = cmd_gen(cfg.num_qubits, cfg.num_gates, cfg.seed)
  click.echo(f'seed={cfg.seed}', err=True)
  if output is None:
    click.echo(text, nl=False)
  else:
    write_text(output, text)


@main.command()
@click.option('--trials', type=str, default='1000', show_default=True,
              help='number of random circuits')
@click.option('--max-qubits', type=int, default=6, show_default=True)
@click.option('--max-gates', type=int, default=60, show_default=True)
@click.option('--width', '-k', type=int, default=DEFAULT_FUZZ_WIDTH,
              show_default=True, help='bit width k')
@_seed_option
@click.option('--num-workers', type=int, default=1, show_default=True,
              help='worker processes')
def fuzz(trials, max_qubits, max_gates, width, seed, num_workers):
  r""" Check random circuits against the dense oracle and exact folding.
  """
  cfg = _make_config(command=Command.FUZZ, seed=seed, width=width,
                     trials=parse_count(trials), max_qubits=max_qubits,
                     max_gates=max_gates, num_workers=num_workers)
  try:
    summary = run_fuzz(cfg.trials, cfg.max_qubits, cfg.max_gates, cfg.width,
                       cfg.seed, cfg.num_workers)
  except ValueError as e:
    raise click.UsageError(str(e))
  for f in summary.failures:
    click.echo(f'FAIL trial={f.trial} seed={f.seed} check={f.check}: '
               f'{f.detail}', err=True)
  click.echo(str(summary))
  if not summary.ok:
    sys.exit(EXIT_FAIL)


@main.command()
@click.option('--config', 'config_path', type=click.Path(exists=True),
              default=None, help='YAML file with defaults for these options')
@click.option('--family', type=click.Choice(FAMILIES), default=None,
              help='circuit family (default tchain-cx)')
@click.option('--sizes', type=str, default=None,
              help='ascending gate counts, e.g. 1e4,1e5,1M')
@_seed_option
@click.option('--width', '-k', type=int, default=None,
              help='bit width k (default 128)')
@click.option('--num-qubits', '-n', type=int, default=None,
              help='register size (default 16)')
@click.option('--h-period', type=int, default=None,
              help='tchain-cx layers between Hadamards (default 8)')
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='output CSV file, stdout if omitted')
def bench(config_path, family, sizes, seed, width, num_qubits, h_period,
          output):
  r""" Time cancel+fold on generated circuits of growing size.
  """
  base = load_yaml(config_path) if config_path else {}
  settings = merge_config(base, dict(
    family=family, sizes=sizes, seed=seed, width=width,
    num_qubits=num_qubits, h_period=h_period, output=output,
  ))
  settings.setdefault('sizes', '1e4,1e5')
  cfg = _make_config(command=Command.BENCH, **settings)
  try:
    result = run_bench(cfg.family, cfg.sizes, cfg.seed,
                       cfg.effective_width(max(cfg.sizes, default=1)),
                       cfg.num_qubits, cfg.h_period, cfg.precancel)
  except ValueError as e:
    raise click.UsageError(str(e))
  text = format_records(result.records)
  if cfg.output is None:
    click.echo(text, nl=False)
  else:
    write_text(cfg.output, text)
  slope = 'undefined' if result.slope is None else f'{result.slope:.4f}'
  click.echo(f'slope={slope}', err=True)


@main.command()
@click.option('--width', '-k', 'widths', type=int, multiple=True,
              default=(1, 2, 4), show_default=True, help='bit widths to test')
@click.option('--samples', type=str, default='100000', show_default=True,
              help='pairs sampled per width')
@_seed_option
def collisions(widths: Tuple[int, ...], samples: str, seed: Optional[int]):
  r""" Measure false-equality rates of the abstract strings.
  """
  cfg = _make_config(command=Command.COLLISIONS, seed=seed,
                     samples=parse_count(samples))
  outside = False
  for k in widths:
    for label, st in (('pairs', collision_rate(k, cfg.samples, cfg.seed)),
                      ('fresh', fresh_draw_rate(k, cfg.samples, cfg.seed))):
      mark = 'ok' if st.within_band else 'OUTSIDE'
      outside |= not st.within_band
      click.echo(f'{label} {st} {mark}')
  if outside:
    sys.exit(EXIT_FAIL)


if __name__ == '__main__':
  main()
