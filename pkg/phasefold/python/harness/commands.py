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
import os
import time
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..ir import Circuit, CircuitStats, GateKind, t
from ..oracle import MAX_ORACLE_QUBITS, simulate
from ..passes import OptimizeResult, optimize
from ..qasm import emit, parse
from ..utils import read_text, write_text

from .config import RunConfig
from .generator import random_circuit
from .records import StatsRecord, append_records


def load_circuit(path: str, decompose_ccx: bool = False) -> Circuit:
  r""" Read and parse a QASM file, raising :class:`QasmParseError` with the
  diagnostics if it is rejected.
  """
  return parse(read_text(path), decompose_ccx)


def circuit_name(path: str) -> str:
  return os.path.splitext(os.path.basename(path))[0]


def run_optimize(cfg: RunConfig,
                 circuit: Circuit) -> OptimizeResult:
  width = cfg.effective_width(len(circuit))
  return optimize(circuit, width, cfg.seed, cfg.precancel, cfg.rounds)


def cmd_optimize(cfg: RunConfig) -> Tuple[StatsRecord, str]:
  r""" parse, optionally cancel, fold, emit. Writes the QASM to
  ``cfg.output`` when set and appends the record to ``cfg.stats_path``.

  Returns:
    The stats record and the emitted QASM text.
  """
  if len(cfg.inputs) != 1:
    raise ValueError(f"'cmd_optimize': expected one input "
                     f"(got {len(cfg.inputs)})")
  path = cfg.inputs[0]
  start = time.perf_counter_ns()
  circuit = load_circuit(path, cfg.decompose_ccx)
  result = run_optimize(cfg, circuit)
  text = emit(result.circuit)
  if cfg.output is not None:
    write_text(cfg.output, text)
  record = StatsRecord.from_result(circuit_name(path), circuit, result)
  record.total_time_ns = time.perf_counter_ns() - start
  logging.info("'cmd_optimize': %s seed=%d width=%d merges=%d T %d -> %d",
               record.name, record.seed, record.width, record.merges,
               record.t_in, record.t_out)
  if cfg.stats_path is not None:
    append_records(cfg.stats_path, [record])
  return record, text


def cmd_stats(cfg: RunConfig) -> List[Tuple[str, CircuitStats]]:
  return [
    (circuit_name(path), load_circuit(path, cfg.decompose_ccx).stats())
    for path in cfg.inputs
  ]


class VerifyOutcome(Enum):
  PASS = 'PASS'
  FAIL = 'FAIL'
  REFUSED = 'REFUSED'


@dataclass
class VerifyResult:
  outcome: VerifyOutcome
  message: str
  max_abs_diff: Optional[float] = None
  record: Optional[StatsRecord] = None


VERIFY_TOLERANCE = 1e-9


def corrupt(circuit: Circuit) -> Circuit:
  r""" A copy of ``circuit`` with its first rotation dropped, or with a T
  gate appended if it holds no rotation.
  """
  gates = circuit.gates()
  for i, g in enumerate(gates):
    if g.kind == GateKind.RZ:
      del gates[i]
      break
  else:
    gates.append(t(0))
  return Circuit.from_gates(circuit.num_qubits, gates, check=False)


def cmd_verify(cfg: RunConfig, corrupt_output: bool = False,
               tol: float = VERIFY_TOLERANCE) -> VerifyResult:
  r""" Optimize the input and compare both matrices entrywise with the
  dense oracle. Inputs over more than 10 qubits are refused, never failed.

  Args:
    cfg (RunConfig): Command settings, one input.
    corrupt_output (bool): Drop one rotation of the optimized circuit before
      the check. The result must then be ``FAIL``. (default: ``False``)
    tol (float): Entrywise tolerance. (default: ``1e-9``)
  """
  if len(cfg.inputs) != 1:
    raise ValueError(f"'cmd_verify': expected one input "
                     f"(got {len(cfg.inputs)})")
  path = cfg.inputs[0]
  circuit = load_circuit(path, cfg.decompose_ccx)
  if circuit.num_qubits > MAX_ORACLE_QUBITS:
    message = (f'{circuit.num_qubits} qubits exceed the oracle limit of '
               f'{MAX_ORACLE_QUBITS}, not verified')
    logging.warning("'cmd_verify': %s: %s", path, message)
    return VerifyResult(VerifyOutcome.REFUSED, message)
  result = run_optimize(cfg, circuit)
  record = StatsRecord.from_result(circuit_name(path), circuit, result)
  optimized = corrupt(result.circuit) if corrupt_output else result.circuit
  diff = simulate(circuit).max_abs_diff(simulate(optimized))
  outcome = VerifyOutcome.PASS if diff <= tol else VerifyOutcome.FAIL
  message = f'max |U_in - U_out| = {diff:.3e} (tolerance {tol:g})'
  if outcome == VerifyOutcome.FAIL:
    logging.warning("'cmd_verify': %s failed with seed %d: %s", path,
                    result.seed, message)
  return VerifyResult(outcome, message, diff, record)


def cmd_gen(num_qubits: int, num_gates: int, seed: int) -> str:
  r""" QASM text of :func:`random_circuit`.
  """
  return emit(random_circuit(num_qubits, num_gates, seed))
