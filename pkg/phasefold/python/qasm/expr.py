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

import math
from fractions import Fraction
from typing import NamedTuple, Union

from pyparsing import (
  CaselessKeyword, ParseResults, Regex, Word, alphanums, alphas, infixNotation,
  oneOf, opAssoc
)

from ..ir import Angle


Scalar = Union[Fraction, float]


class AngleError(ValueError):
  r""" Raised when an angle expression cannot be evaluated.
  """


class PiLinear(NamedTuple):
  r""" The value ``pi_coeff * pi + const`` of an angle expression. Both
  parts stay rational while the expression is linear in pi with rational
  coefficients; anything else degrades to floats.
  """
  pi_coeff: Scalar
  const: Scalar

  @property
  def is_rational(self) -> bool:
    return isinstance(self.pi_coeff, Fraction) and \
      isinstance(self.const, Fraction)

  def radians(self) -> float:
    return float(self.pi_coeff) * math.pi + float(self.const)

  def __neg__(self) -> 'PiLinear':
    return PiLinear(-self.pi_coeff, -self.const)

  def __add__(self, other: 'PiLinear') -> 'PiLinear':
    return PiLinear(self.pi_coeff + other.pi_coeff, self.const + other.const)

  def __sub__(self, other: 'PiLinear') -> 'PiLinear':
    return self + (-other)

  def __mul__(self, other: 'PiLinear') -> 'PiLinear':
    if self.pi_coeff == 0:
      return PiLinear(self.const * other.pi_coeff, self.const * other.const)
    if other.pi_coeff == 0:
      return PiLinear(self.pi_coeff * other.const, self.const * other.const)
    return PiLinear(0, self.radians() * other.radians())

  def __truediv__(self, other: 'PiLinear') -> 'PiLinear':
    if other.pi_coeff == 0:
      if other.const == 0:
        raise AngleError('division by zero')
      return PiLinear(self.pi_coeff / other.const, self.const / other.const)
    return PiLinear(0, self.radians() / other.radians())

  def to_angle(self) -> Angle:
    if self.is_rational and self.const == 0:
      return Angle.exact(self.pi_coeff.numerator, self.pi_coeff.denominator)
    r = self.radians()
    if not math.isfinite(r):
      raise AngleError(f'angle is not finite ({r})')
    return Angle.from_radians(r)


PI = PiLinear(Fraction(1), Fraction(0))

# Larger decimal exponents are refused before building the exact value.
MAX_LITERAL_EXPONENT = 1000

_number = Regex(r'(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?')
_pi = CaselessKeyword('pi')
_ident = Word(alphas + '_', alphanums + '_')

# Results nest as [operand], [op, operand] or [operand, op, operand, ...].
angle_expr = infixNotation(_pi | _number | _ident, [
  (oneOf('- +'), 1, opAssoc.RIGHT),
  (oneOf('* /'), 2, opAssoc.LEFT),
  (oneOf('+ -'), 2, opAssoc.LEFT),
])


def _evaluate_atom(token: str) -> PiLinear:
  if token.lower() == 'pi':
    return PI
  if token[0].isdigit() or token[0] == '.':
    _, _, exponent = token.lower().partition('e')
    if exponent and abs(int(exponent)) > MAX_LITERAL_EXPONENT:
      raise AngleError(f"numeric literal '{token}' is out of range")
    return PiLinear(Fraction(0), Fraction(token))
  raise AngleError(f"unknown identifier '{token}'")


def evaluate(tokens) -> PiLinear:
  r""" Evaluate parse results of :data:`angle_expr`.
  """
  if isinstance(tokens, str):
    return _evaluate_atom(tokens)
  if isinstance(tokens, ParseResults):
    tokens = tokens.asList()
  if len(tokens) == 1:
    return evaluate(tokens[0])
  if len(tokens) == 2:
    value = evaluate(tokens[1])
    return -value if tokens[0] == '-' else value
  value = evaluate(tokens[0])
  for op, rhs in zip(tokens[1::2], tokens[2::2]):
    rhs = evaluate(rhs)
    if op == '*':
      value = value * rhs
    elif op == '/':
      value = value / rhs
    elif op == '+':
      value = value + rhs
    else:
      value = value - rhs
  return value


def parse_angle(text: str) -> Angle:
  r""" Parse and evaluate one angle expression such as ``-3*pi/4``.
  """
  try:
    tokens = angle_expr.parseString(text, parseAll=True)
  except Exception as e:
    raise AngleError(f"malformed angle expression '{text.strip()}'") from e
  try:
    return evaluate(tokens).to_angle()
  except AngleError:
    raise
  except (ArithmeticError, ValueError) as e:
    raise AngleError(f"angle expression '{text.strip()}' cannot be "
                     f"evaluated: {e}") from e
