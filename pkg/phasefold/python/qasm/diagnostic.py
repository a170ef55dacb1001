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

from enum import Enum
from typing import List, NamedTuple, Sequence


class DiagnosticKind(Enum):
  UNSUPPORTED_GATE = 'UnsupportedGate'
  SYNTAX_ERROR = 'SyntaxError'
  UNDECLARED_QUBIT = 'UndeclaredQubit'
  BAD_ANGLE = 'BadAngle'


class ParseDiagnostic(NamedTuple):
  r""" One problem found while reading OpenQASM source.

  Args:
    line (int): 1-based line of the offending statement or token.
    column (int): 1-based column on that line.
    message (str): Human-readable description.
    kind (DiagnosticKind): The problem class.
  """
  line: int
  column: int
  message: str
  kind: DiagnosticKind

  def __str__(self) -> str:
    return f'{self.line}:{self.column}: {self.kind.value}: {self.message}'


class QasmParseError(ValueError):
  r""" Raised by :func:`parse` when the source is rejected. Carries every
  diagnostic of the source, in source order.
  """
  def __init__(self, diagnostics: Sequence[ParseDiagnostic]):
    self.diagnostics: List[ParseDiagnostic] = list(diagnostics)
    super().__init__('\n'.join(str(d) for d in self.diagnostics))

  @property
  def kinds(self) -> List[DiagnosticKind]:
    return [d.kind for d in self.diagnostics]
