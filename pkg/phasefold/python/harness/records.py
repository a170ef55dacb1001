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

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Iterable, List, TextIO

from ..ir import Circuit
from ..passes import OptimizeResult
from ..utils import ensure_dir


# Column order of the stats CSV. Scripts depend on it, do not reorder.
STATS_COLUMNS = (
  'name', 'n_qubits', 'gates_in', 't_in', 'gates_out', 't_out', 'merges',
  'wall_time_ns', 'seed', 'width',
)


@dataclass
class StatsRecord:
  r""" One CSV row describing an optimizer run.

  ``wall_time_ns`` covers the passes only. ``total_time_ns`` additionally
  covers parsing and emission and is not part of the CSV.
  """
  name: str
  n_qubits: int
  gates_in: int
  t_in: int
  gates_out: int
  t_out: int
  merges: int
  wall_time_ns: int
  seed: int
  width: int
  total_time_ns: int = field(default=0, compare=False)

  @classmethod
  def from_result(cls, name: str, circuit: Circuit,
                  result: OptimizeResult) -> 'StatsRecord':
    before = circuit.stats()
    after = result.circuit.stats()
    return cls(
      name=name,
      n_qubits=circuit.num_qubits,
      gates_in=before.total_gates,
      t_in=before.t_count,
      gates_out=after.total_gates,
      t_out=after.t_count,
      merges=result.merges,
      wall_time_ns=result.pass_time_ns,
      seed=result.seed,
      width=result.width,
    )

  def row(self) -> List[str]:
    return [str(getattr(self, c)) for c in STATS_COLUMNS]

  @property
  def t_ratio(self) -> float:
    return self.t_out / self.t_in if self.t_in else 1.0


def write_records(out: TextIO, records: Iterable[StatsRecord],
                  header: bool = True):
  writer = csv.writer(out, lineterminator='\n')
  if header:
    writer.writerow(STATS_COLUMNS)
  for r in records:
    writer.writerow(r.row())


def format_records(records: Iterable[StatsRecord],
                   header: bool = True) -> str:
  buf = io.StringIO()
  write_records(buf, records, header)
  return buf.getvalue()


def append_records(path: str, records: Iterable[StatsRecord]):
  r""" Append rows to the CSV at ``path``, writing the header first if the
  file is new or empty.
  """
  ensure_dir(os.path.dirname(os.path.abspath(path)))
  fresh = not os.path.exists(path) or os.path.getsize(path) == 0
  with open(path, 'a', encoding='utf-8', newline='') as out:
    write_records(out, records, header=fresh)


def read_records(path: str) -> List[StatsRecord]:
  with open(path, 'r', encoding='utf-8', newline='') as infile:
    reader = csv.DictReader(infile)
    if tuple(reader.fieldnames or ()) != STATS_COLUMNS:
      raise ValueError(f"'read_records': unexpected columns "
                       f"{reader.fieldnames} in {path}")
    return [
      StatsRecord(row['name'], *(int(row[c]) for c in STATS_COLUMNS[1:]))
      for row in reader
    ]
