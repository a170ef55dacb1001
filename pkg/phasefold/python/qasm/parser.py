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

import re
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from pyparsing import (
  Empty, Group, Keyword, Optional as Opt, ParseException, QuotedString,
  Regex, Suppress, Word, alphanums, alphas, col, delimitedList, lineno,
  nestedExpr, nums, originalTextFor
)

from ..ir import (
  Circuit, Gate, ccx_decomposition, cx, h, rz, s, sdg, t, tdg, x, z
)
from ..typing import QubitId

from .diagnostic import DiagnosticKind, ParseDiagnostic, QasmParseError
from .expr import AngleError, parse_angle


# Grammar of single statements, without the terminating ';' ###################

_ident = Word(alphas + '_', alphanums + '_')
_lbra, _rbra = map(Suppress, '[]')

header_stmt = Keyword('OPENQASM') + Regex(r'\d+(\.\d+)?')('version')
include_stmt = Keyword('include') + QuotedString('"')('path')
qreg_stmt = (
  Keyword('qreg') + _ident('name') + _lbra + Word(nums)('length') + _rbra
)

# An operand keeps its offset so diagnostics can point at it.
operand = Group(
  Empty().setParseAction(lambda s, loc, toks: [loc])('loc') +
  _ident('reg') + Opt(_lbra + Word(nums)('idx') + _rbra)
)
params = originalTextFor(nestedExpr('(', ')'))('params')
gate_stmt = (
  _ident('name') + Opt(params) +
  Group(delimitedList(operand))('operands')
)

# Offsets reported by the grammar must match source offsets.
for _stmt in (header_stmt, include_stmt, qreg_stmt, gate_stmt):
  _stmt.parseWithTabs()

# Statements that are valid OpenQASM 2.0 but outside the accepted subset.
UNSUPPORTED_KEYWORDS = frozenset((
  'measure', 'barrier', 'reset', 'creg', 'if', 'gate', 'opaque', 'U', 'CX'
))

_word_re = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


class Statement(NamedTuple):
  r""" A source statement: ``text`` without its terminator, starting at
  offset ``start``. ``terminator`` is one of ``;``, ``{`` (the body up to the
  matching brace is dropped) or empty for trailing text.
  """
  text: str
  start: int
  terminator: str

  @property
  def block(self) -> bool:
    return self.terminator == '{'


def strip_comments(source: str) -> str:
  r""" Blank out ``//`` comments, keeping every other offset in place.
  """
  return re.sub(r'//[^\n]*', lambda m: ' ' * len(m.group(0)), source)


def split_statements(source: str) -> Iterator[Statement]:
  r""" Split comment-free source on ``;``. A ``{`` ends the statement too,
  and its body up to the matching ``}`` is swallowed with it.
  """
  pos, end = 0, len(source)
  while pos < end:
    while pos < end and source[pos].isspace():
      pos += 1
    if pos >= end:
      return
    semi = source.find(';', pos)
    brace = source.find('{', pos)
    if brace != -1 and (semi == -1 or brace < semi):
      depth, i = 0, brace
      while i < end:
        if source[i] == '{':
          depth += 1
        elif source[i] == '}':
          depth -= 1
          if depth == 0:
            break
        i += 1
      yield Statement(source[pos:brace], pos, '{')
      pos = i + 1
    elif semi == -1:
      yield Statement(source[pos:], pos, '')
      return
    else:
      yield Statement(source[pos:semi], pos, ';')
      pos = semi + 1


class _Register(NamedTuple):
  offset: int
  size: int


class QasmReader(object):
  r""" Reads one OpenQASM 2.0 source into a :class:`Circuit`, collecting
  every diagnostic instead of stopping at the first one.

  Args:
    source (str): The program text.
    decompose_ccx (bool): Accept ``ccx`` and lower it to its 7-T Clifford+T
      network. (default: ``False``)
  """
  def __init__(self, source: str, decompose_ccx: bool = False):
    self.source = source
    self.decompose_ccx = decompose_ccx
    self.diagnostics: List[ParseDiagnostic] = []
    self.registers: Dict[str, _Register] = {}
    self.num_qubits = 0
    self.gates: List[Gate] = []

  def _report(self, offset: int, kind: DiagnosticKind, message: str):
    offset = min(offset, max(len(self.source) - 1, 0))
    self.diagnostics.append(ParseDiagnostic(
      lineno(offset, self.source), col(offset, self.source), message, kind
    ))

  def read(self) -> Tuple[Optional[Circuit], List[ParseDiagnostic]]:
    text = strip_comments(self.source)
    seen_header = False
    for index, stmt in enumerate(split_statements(text)):
      if not stmt.terminator:
        self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                     "statement is not terminated by ';'")
        continue
      if index == 0:
        seen_header = self._read_header(stmt)
        if seen_header:
          continue
      self._read_statement(stmt)
    if not seen_header:
      self.diagnostics.insert(0, ParseDiagnostic(
        1, 1, "missing 'OPENQASM 2.0;' header", DiagnosticKind.SYNTAX_ERROR
      ))
    if self.num_qubits == 0 and not self.diagnostics:
      self._report(0, DiagnosticKind.SYNTAX_ERROR, 'no qreg declared')
    if self.diagnostics:
      self.diagnostics.sort(key=lambda d: (d.line, d.column))
      return None, self.diagnostics
    return Circuit.from_gates(self.num_qubits, self.gates, check=False), []

  def _read_header(self, stmt: Statement) -> bool:
    words = stmt.text.split()
    if not words or words[0] != 'OPENQASM':
      return False
    try:
      toks = header_stmt.parseString(stmt.text, parseAll=True)
    except ParseException as e:
      self._report(stmt.start + e.loc, DiagnosticKind.SYNTAX_ERROR,
                   'malformed OPENQASM header')
      return True
    if toks.version != '2.0':
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"unsupported OpenQASM version '{toks.version}'")
    return True

  def _read_statement(self, stmt: Statement):
    m = _word_re.match(stmt.text)
    offset = stmt.start
    if m is None:
      self._report(offset, DiagnosticKind.SYNTAX_ERROR,
                   'expected a statement')
      return
    word = m.group(0)
    if stmt.block or word in UNSUPPORTED_KEYWORDS:
      self._report(offset, DiagnosticKind.UNSUPPORTED_GATE,
                   f"unsupported statement '{word}'")
      return
    if word == 'OPENQASM':
      self._report(offset, DiagnosticKind.SYNTAX_ERROR,
                   'OPENQASM header must be the first statement')
    elif word == 'include':
      self._read_include(stmt)
    elif word == 'qreg':
      self._read_qreg(stmt)
    else:
      self._read_gate(stmt)

  def _read_include(self, stmt: Statement):
    try:
      toks = include_stmt.parseString(stmt.text, parseAll=True)
    except ParseException as e:
      self._report(stmt.start + e.loc, DiagnosticKind.SYNTAX_ERROR,
                   'malformed include')
      return
    if toks.path != 'qelib1.inc':
      self._report(stmt.start, DiagnosticKind.UNSUPPORTED_GATE,
                   f"unsupported include '{toks.path}'")

  def _read_qreg(self, stmt: Statement):
    try:
      toks = qreg_stmt.parseString(stmt.text, parseAll=True)
    except ParseException as e:
      self._report(stmt.start + e.loc, DiagnosticKind.SYNTAX_ERROR,
                   'malformed qreg declaration')
      return
    name, size = toks.name, int(toks.length)
    if name in self.registers:
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"register '{name}' is declared twice")
      return
    if size < 1:
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"register '{name}' must hold at least one qubit")
      return
    self.registers[name] = _Register(self.num_qubits, size)
    self.num_qubits += size

  def _resolve(self, stmt: Statement, op) -> Optional[QubitId]:
    offset = stmt.start + op.loc
    reg = self.registers.get(op.reg)
    if reg is None:
      self._report(offset, DiagnosticKind.UNDECLARED_QUBIT,
                   f"undeclared register '{op.reg}'")
      return None
    if not op.idx:
      self._report(offset, DiagnosticKind.SYNTAX_ERROR,
                   f"whole-register operand '{op.reg}' is not supported, "
                   f"index every qubit")
      return None
    i = int(op.idx)
    if i >= reg.size:
      self._report(offset, DiagnosticKind.UNDECLARED_QUBIT,
                   f"index {i} out of range for '{op.reg}[{reg.size}]'")
      return None
    return reg.offset + i

  def _read_gate(self, stmt: Statement):
    try:
      toks = gate_stmt.parseString(stmt.text, parseAll=True)
    except ParseException as e:
      self._report(stmt.start + e.loc, DiagnosticKind.SYNTAX_ERROR,
                   'malformed gate statement')
      return
    name = toks.name
    arity = GATE_ARITY.get(name)
    if arity is None or (name == 'ccx' and not self.decompose_ccx):
      hint = ' (enable ccx decomposition)' if name == 'ccx' else ''
      self._report(stmt.start, DiagnosticKind.UNSUPPORTED_GATE,
                   f"unsupported gate '{name}'{hint}")
      return
    param_text = toks.params[1:-1] if toks.params else None
    if (param_text is not None) != (name == 'rz'):
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"gate '{name}' takes "
                   f"{'one angle' if name == 'rz' else 'no parameters'}")
      return
    operands = toks.operands
    if len(operands) != arity:
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"gate '{name}' takes {arity} qubit(s), "
                   f"got {len(operands)}")
      return
    qubits = [self._resolve(stmt, op) for op in operands]
    if any(q is None for q in qubits):
      return
    if len(set(qubits)) != len(qubits):
      self._report(stmt.start, DiagnosticKind.SYNTAX_ERROR,
                   f"gate '{name}' repeats a qubit")
      return
    if name == 'rz':
      try:
        angle = parse_angle(param_text)
      except AngleError as e:
        self._report(stmt.start + stmt.text.index('(') + 1,
                     DiagnosticKind.BAD_ANGLE, str(e))
        return
      self.gates.append(rz(angle, qubits[0]))
    elif name == 'ccx':
      self.gates.extend(ccx_decomposition(*qubits))
    elif name == 'cx':
      self.gates.append(cx(qubits[0], qubits[1]))
    else:
      self.gates.append(NAMED_GATES[name](qubits[0]))


NAMED_GATES = {
  'h': h, 'x': x, 't': t, 'tdg': tdg, 's': s, 'sdg': sdg, 'z': z,
}

GATE_ARITY = dict({name: 1 for name in NAMED_GATES}, rz=1, cx=2, ccx=3)


def parse_with_diagnostics(
  source: str,
  decompose_ccx: bool = False
) -> Tuple[Optional[Circuit], List[ParseDiagnostic]]:
  r""" Parse OpenQASM 2.0 source. Returns the circuit and an empty list on
  success, ``None`` and every diagnostic otherwise.
  """
  return QasmReader(source, decompose_ccx).read()


def parse(source: str, decompose_ccx: bool = False) -> Circuit:
  r""" Parse the accepted OpenQASM 2.0 subset into a :class:`Circuit`.

  Accepted: the ``OPENQASM 2.0;`` header, ``include "qelib1.inc";``, any
  number of ``qreg`` declarations (flattened in declaration order) and the
  gates ``h x cx t tdg s sdg z rz(expr)``, plus ``ccx`` if
  ``decompose_ccx`` is set. Every operand must be indexed.

  Raises:
    QasmParseError: if the source is rejected, with all diagnostics.
  """
  circuit, diagnostics = parse_with_diagnostics(source, decompose_ccx)
  if diagnostics:
    raise QasmParseError(diagnostics)
  return circuit
