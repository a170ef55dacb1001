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
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import torch.multiprocessing as mp

from ..oracle import MAX_ORACLE_QUBITS, check_agreement, equivalent
from ..passes import CancelAdjacentPass, optimize
from ..qasm import emit
from ..utils import make_generator

from .config import DEFAULT_FUZZ_WIDTH, resolve_seed
from .generator import random_circuit


class FuzzFailure(NamedTuple):
  r""" A failed check with everything needed to reproduce it.
  """
  trial: int
  seed: int
  check: str
  detail: str
  qasm: str


class TrialOutcome(NamedTuple):
  trial: int
  seed: int
  num_qubits: int
  num_gates: int
  t_in: int
  t_out: int
  merges: int
  second_pass_merges: int
  second_pass_cancelled: int
  failures: List[FuzzFailure]


@dataclass
class FuzzSummary:
  r""" Counts over all fuzz trials.

  Args:
    trials (int): Number of trials run.
    seed (int): Base seed, trial ``i`` used ``seed + i``.
    width (int): Bit width of the randomized fold.
    unitary_failures (int): Optimized circuits not equivalent to the input.
    agreement_failures (int): Circuits where randomized and exact folding
      chose different merges.
    t_count_increases (int): Circuits whose T-count grew.
    reoptimized (int): Optimized circuits on which a second cancel+fold
      run still merged something.
    reoptimized_uncancelled (int): Those of :attr:`reoptimized` where the
      second run cancelled no pair first.
    merges (int): Total merges of the first runs.
    failures (List[FuzzFailure]): Every failed check.
  """
  trials: int = 0
  seed: int = 0
  width: int = DEFAULT_FUZZ_WIDTH
  unitary_failures: int = 0
  agreement_failures: int = 0
  t_count_increases: int = 0
  reoptimized: int = 0
  reoptimized_uncancelled: int = 0
  merges: int = 0
  failures: List[FuzzFailure] = field(default_factory=list)

  @property
  def ok(self) -> bool:
    return not self.failures

  @property
  def idempotent_rate(self) -> float:
    if self.trials == 0:
      return 1.0
    return 1.0 - self.reoptimized / self.trials

  def add(self, outcome: TrialOutcome):
    self.trials += 1
    self.merges += outcome.merges
    if outcome.second_pass_merges:
      self.reoptimized += 1
      if not outcome.second_pass_cancelled:
        self.reoptimized_uncancelled += 1
    for f in outcome.failures:
      if f.check == 'unitary':
        self.unitary_failures += 1
      elif f.check == 'agreement':
        self.agreement_failures += 1
      else:
        self.t_count_increases += 1
      self.failures.append(f)

  def __str__(self) -> str:
    return (f'trials={self.trials} seed={self.seed} width={self.width} '
            f'merges={self.merges} unitary_failures={self.unitary_failures} '
            f'agreement_failures={self.agreement_failures} '
            f't_count_increases={self.t_count_increases} '
            f'idempotent={self.idempotent_rate:.4f}')


def run_trial(trial: int, seed: int, max_qubits: int, max_gates: int,
              width: int) -> TrialOutcome:
  r""" Generate one random circuit from ``seed`` and run every check on it:
  unitary equivalence of the optimized circuit, equal merge sets of
  randomized and exact folding on the cancelled circuit, no T-count
  increase, and the merges of a second optimization run.
  """
  rng = make_generator(seed)
  num_qubits = int(rng.integers(1, max_qubits + 1))
  num_gates = int(rng.integers(0, max_gates + 1))
  circuit = random_circuit(num_qubits, num_gates, seed)
  result = optimize(circuit, width, seed, precancel=True)
  failures = []

  def fail(check: str, detail: str):
    failures.append(FuzzFailure(trial, seed, check, detail, emit(circuit)))

  if not equivalent(circuit, result.circuit):
    fail('unitary', 'optimized circuit is not equivalent to its input')
  # The first fold round ran on the cancelled input with this seed.
  cancelled, _ = CancelAdjacentPass().run(circuit)
  agreement = check_agreement(cancelled, width, seed,
                              set(result.report.merged_pairs))
  if not agreement.agree:
    spurious = agreement.randomized - agreement.exact
    missed = agreement.exact - agreement.randomized
    fail('agreement', f'spurious {sorted(spurious)}, missed {sorted(missed)}')
  t_in = circuit.stats().t_count
  t_out = result.circuit.stats().t_count
  if t_out > t_in:
    fail('t-count', f'T-count grew from {t_in} to {t_out}')
  again = optimize(result.circuit, width, seed + 1, precancel=True)
  return TrialOutcome(trial, seed, num_qubits, num_gates, t_in, t_out,
                      result.merges, again.merges, again.cancelled_pairs,
                      failures)


def _run_trial_star(args) -> TrialOutcome:
  return run_trial(*args)


def fuzz(trials: int,
         max_qubits: int = 6,
         max_gates: int = 60,
         width: int = DEFAULT_FUZZ_WIDTH,
         seed: Optional[int] = None,
         num_workers: int = 1) -> FuzzSummary:
  r""" Run ``trials`` independent fuzz trials, trial ``i`` seeded with
  ``seed + i``. Results do not depend on ``num_workers``.

  Args:
    trials (int): Number of trials, may be zero.
    max_qubits (int): Largest register, in [1, 10]. (default: ``6``)
    max_gates (int): Largest gate count. (default: ``60``)
    width (int): Bit width of the randomized fold. (default: ``64``)
    seed (int, optional): Base seed, resolved like the CLI seed if set to
      ``None``. (default: ``None``)
    num_workers (int): Worker processes. Trials run in this process if
      set to ``1``. (default: ``1``)
  """
  if not 1 <= max_qubits <= MAX_ORACLE_QUBITS:
    raise ValueError(f"'fuzz': max_qubits must be in [1, {MAX_ORACLE_QUBITS}] "
                     f"(got {max_qubits})")
  if trials < 0 or max_gates < 0:
    raise ValueError(f"'fuzz': trials and max_gates must be non-negative "
                     f"(got {trials}, {max_gates})")
  seed = resolve_seed(seed)
  summary = FuzzSummary(seed=seed, width=width)
  tasks = [(i, seed + i, max_qubits, max_gates, width) for i in range(trials)]
  if num_workers > 1 and trials > 1:
    with mp.get_context('spawn').Pool(num_workers) as pool:
      chunksize = max(1, trials // (num_workers * 8))
      outcomes = pool.imap(_run_trial_star, tasks, chunksize)
      for outcome in outcomes:
        _collect(summary, outcome)
  else:
    for task in tasks:
      _collect(summary, run_trial(*task))
  logging.info("'fuzz': %s", summary)
  return summary


def _collect(summary: FuzzSummary, outcome: TrialOutcome):
  for f in outcome.failures:
    logging.warning("'fuzz': trial %d (seed %d) failed the %s check: %s\n%s",
                    f.trial, f.seed, f.check, f.detail, f.qasm)
  summary.add(outcome)
