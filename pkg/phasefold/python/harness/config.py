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

import dataclasses
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import yaml

from ..passes import required_width
from ..typing import DEFAULT_WIDTH, check_width
from ..utils import env_int, fresh_seed, parse_count_list


SEED_ENV = 'PHASEFOLD_SEED'
LOG_LEVEL_ENV = 'PHASEFOLD_LOG_LEVEL'

DEFAULT_FUZZ_WIDTH = 64


class Command(Enum):
  OPTIMIZE = 'optimize'
  STATS = 'stats'
  VERIFY = 'verify'
  FUZZ = 'fuzz'
  GEN = 'gen'
  BENCH = 'bench'
  COLLISIONS = 'collisions'


def resolve_seed(seed: Optional[int] = None) -> int:
  r""" The effective seed: ``seed`` if given, else the environment variable
  ``PHASEFOLD_SEED``, else a fresh 63-bit seed from OS entropy. Negative
  seeds are rejected with a :class:`ValueError`.
  """
  if seed is None:
    seed = env_int(SEED_ENV)
    source = SEED_ENV
  else:
    source = 'seed'
  if seed is None:
    return fresh_seed()
  seed = int(seed)
  if seed < 0:
    raise ValueError(f"'resolve_seed': {source} must be non-negative "
                     f"(got {seed})")
  return seed


def resolve_width(num_gates: int,
                  width: Optional[int] = None,
                  epsilon: Optional[float] = None) -> int:
  r""" The effective bit width: ``required_width(num_gates, epsilon)`` if
  ``epsilon`` is given, else ``width``, else 128.
  """
  if width is not None and epsilon is not None:
    raise ValueError("'resolve_width': 'width' and 'epsilon' are mutually "
                     "exclusive")
  if epsilon is not None:
    return required_width(max(num_gates, 1), epsilon)
  width = DEFAULT_WIDTH if width is None else width
  check_width(width, 'resolve_width')
  return width


@dataclass
class RunConfig:
  r""" Settings of one harness command.

  Args:
    command (Command): The command to run.
    inputs (List[str]): Input QASM paths.
    output (str, optional): Output path (QASM for ``optimize`` and ``gen``,
      CSV for ``bench``). Standard output if set to ``None``.
    seed (int, optional): Seed of all random draws. Resolved through
      :func:`resolve_seed` when the config is built.
    width (int, optional): Bit width k. 128 if neither ``width`` nor
      ``epsilon`` is given.
    epsilon (float, optional): Target failure probability, selects the width
      from the gate count of the input.
    precancel (bool): Run the adjacent-gate cancellation prepass.
    decompose_ccx (bool): Accept and lower ``ccx`` while parsing.
    rounds (int): Number of cancel+fold rounds.
    stats_path (str, optional): CSV file the stats record is appended to.
    num_qubits (int): Qubits of generated circuits.
    num_gates (int): Gates of generated circuits (``gen``).
    trials (int): Fuzz trials.
    max_qubits (int): Largest fuzz register, at most 10.
    max_gates (int): Largest fuzz gate count.
    num_workers (int): Fuzz worker processes.
    family (str): Bench circuit family, ``random`` or ``tchain-cx``.
    sizes (List[int]): Bench gate counts, ascending.
    h_period (int): Layers between Hadamards in the ``tchain-cx`` family.
    samples (int): Pair samples of the collision experiment.
  """
  command: Command
  inputs: List[str] = field(default_factory=list)
  output: Optional[str] = None
  seed: Optional[int] = None
  width: Optional[int] = None
  epsilon: Optional[float] = None
  precancel: bool = True
  decompose_ccx: bool = False
  rounds: int = 1
  stats_path: Optional[str] = None
  num_qubits: int = 16
  num_gates: int = 0
  trials: int = 1000
  max_qubits: int = 6
  max_gates: int = 60
  num_workers: int = 1
  family: str = 'tchain-cx'
  sizes: List[int] = field(default_factory=list)
  h_period: int = 8
  samples: int = 100000

  def __post_init__(self):
    if not isinstance(self.command, Command):
      self.command = Command(self.command)
    if self.width is not None and self.epsilon is not None:
      raise ValueError(f"'{self.__class__.__name__}': 'width' and 'epsilon' "
                       f"are mutually exclusive")
    if self.width is not None:
      check_width(self.width, self.__class__.__name__)
    if self.rounds < 1:
      raise ValueError(f"'{self.__class__.__name__}': rounds must be at least "
                       f"1 (got {self.rounds})")
    self.sizes = parse_count_list(self.sizes)
    self.seed = resolve_seed(self.seed)

  def effective_width(self, num_gates: int) -> int:
    return resolve_width(num_gates, self.width, self.epsilon)


def load_yaml(path: str) -> Dict[str, Any]:
  r""" Read a YAML mapping of :class:`RunConfig` fields. Unknown keys are
  rejected.
  """
  with open(path, 'r', encoding='utf-8') as infile:
    data = yaml.safe_load(infile) or {}
  if not isinstance(data, dict):
    raise ValueError(f"'load_yaml': {path} must hold a mapping")
  known = {f.name for f in dataclasses.fields(RunConfig)} - {'command'}
  unknown = sorted(set(data) - known)
  if unknown:
    raise ValueError(f"'load_yaml': unknown keys {unknown} in {path}")
  return data


def merge_config(base: Dict[str, Any], overrides: Dict[str, Any]):
  r""" ``base`` updated by every override that is not ``None``.
  """
  merged = dict(base)
  merged.update({k: v for k, v in overrides.items() if v is not None})
  return merged


def log_level_from_env(default: str = 'WARNING') -> str:
  return os.environ.get(LOG_LEVEL_ENV, default).upper()
