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

import functools
import math
from enum import Enum
from fractions import Fraction
from typing import Optional, Union


TWO_PI = 2.0 * math.pi

# Tolerance of the zero test for approximate angles, in radians.
ANGLE_TOLERANCE = 1e-10

# Tolerance used to recognize a radian value as a rational multiple of pi.
RATIONAL_TOLERANCE = 1e-12
RATIONAL_MAX_DENOMINATOR = 1 << 12


class AngleClass(Enum):
  r""" Cost class of a Z-rotation angle.
  """
  TGATE = 'T'
  CLIFFORD = 'Clifford'
  OTHER = 'Other'


class Angle(object):
  r""" A Z-rotation angle, taken modulo :math:`2\pi`.

  An angle is either *exact*, i.e. a rational multiple ``num/den`` of
  :math:`\pi` kept in lowest terms with ``0 <= num/den < 2``, or
  *approximate*, i.e. a float number of radians normalized into
  :math:`[0, 2\pi)`. Exact angles are closed under addition, adding an
  approximate angle demotes the sum to an approximate one.

  Exact angles are stored as a pair of ints. Building one from the same
  ``(num, den)`` pair twice returns the same cached object.

  Use :meth:`exact`, :meth:`approx` or :meth:`from_radians` to build angles.
  """
  # ``_den == 0`` marks an approximate angle.
  __slots__ = ('_num', '_den', '_radians')

  def __init__(self, turns: Optional[Fraction] = None,
               radians: Optional[float] = None):
    if (turns is None) == (radians is None):
      raise ValueError(f"'{self.__class__.__name__}': exactly one of 'turns' "
                       f"and 'radians' must be given")
    if turns is not None:
      turns = Fraction(turns) % 2
      self._num = turns.numerator
      self._den = turns.denominator
      self._radians = None
    else:
      r = float(radians) % TWO_PI
      # A tiny negative input may round up to exactly 2*pi.
      if r >= TWO_PI:
        r = 0.0
      self._num = 0
      self._den = 0
      self._radians = r

  @classmethod
  def exact(cls, num: int, den: int = 1) -> 'Angle':
    if den <= 0:
      raise ValueError(f"'{cls.__name__}': denominator must be positive "
                       f"(got {den})")
    return _exact(num, den)

  @classmethod
  def approx(cls, radians: float) -> 'Angle':
    return cls(radians=radians)

  @classmethod
  def from_radians(cls, radians: float) -> 'Angle':
    r""" Build an angle from radians, recognizing rational multiples of
    :math:`\pi` (denominator up to 4096) within ``1e-12`` as exact angles.
    """
    turns = Fraction(radians / math.pi).limit_denominator(
      RATIONAL_MAX_DENOMINATOR)
    if abs(float(turns) * math.pi - radians) < RATIONAL_TOLERANCE:
      return _exact(turns.numerator, turns.denominator)
    return cls(radians=radians)

  @property
  def is_exact(self) -> bool:
    return self._den != 0

  @property
  def num(self) -> int:
    self._require_exact('num')
    return self._num

  @property
  def den(self) -> int:
    self._require_exact('den')
    return self._den

  @property
  def turns(self) -> Optional[Fraction]:
    r""" The rational multiple of :math:`\pi`, ``None`` for approximate
    angles.
    """
    if self._den:
      return Fraction(self._num, self._den)
    return None

  @property
  def radians(self) -> float:
    if self._den:
      return (self._num / self._den) * math.pi
    return self._radians

  def _require_exact(self, what: str):
    if not self._den:
      raise ValueError(f"'{self.__class__.__name__}': '{what}' is only "
                       f"defined for exact angles (got {self!r})")

  def __add__(self, other: 'Angle') -> 'Angle':
    if not isinstance(other, Angle):
      return NotImplemented
    d1 = self._den
    d2 = other._den
    if d1 and d2:
      if d1 == d2:
        return _exact(self._num + other._num, d1)
      return _exact(self._num * d2 + other._num * d1, d1 * d2)
    return Angle(radians=self.radians + other.radians)

  def __neg__(self) -> 'Angle':
    if self._den:
      return _exact(-self._num, self._den)
    return Angle(radians=-self._radians)

  def __sub__(self, other: 'Angle') -> 'Angle':
    if not isinstance(other, Angle):
      return NotImplemented
    return self + (-other)

  def is_zero(self, tolerance: float = ANGLE_TOLERANCE) -> bool:
    if self._den:
      return self._num == 0
    return self._radians < tolerance or TWO_PI - self._radians < tolerance

  def t_class(self) -> AngleClass:
    den = self._den
    if den == 4:
      return AngleClass.TGATE
    if den == 1 or den == 2:
      return AngleClass.CLIFFORD
    return AngleClass.OTHER

  def __eq__(self, other) -> bool:
    if not isinstance(other, Angle):
      return NotImplemented
    return (self._num == other._num and self._den == other._den
            and self._radians == other._radians)

  def __hash__(self) -> int:
    return hash((self._num, self._den, self._radians))

  def __repr__(self) -> str:
    if self._den:
      return f'Exact({self._num},{self._den})'
    return f'Approx({self._radians!r})'


@functools.lru_cache(maxsize=1 << 14)
def _exact(num: int, den: int) -> Angle:
  g = math.gcd(num, den)
  if g != 1:
    num //= g
    den //= g
  a = Angle.__new__(Angle)
  a._num = num % (2 * den)
  a._den = den
  a._radians = None
  return a


AngleLike = Union[Angle, float, Fraction]

def as_angle(value: AngleLike) -> Angle:
  r""" Convert a float (radians) or a fraction (multiple of pi) to an angle.
  """
  if isinstance(value, Angle):
    return value
  if isinstance(value, Fraction):
    return Angle.exact(value.numerator, value.denominator)
  return Angle.from_radians(float(value))


def angle_add(a: Angle, b: Angle) -> Angle:
  return a + b

def negate(a: Angle) -> Angle:
  return -a

def is_zero(a: Angle, tolerance: float = ANGLE_TOLERANCE) -> bool:
  return a.is_zero(tolerance)

def t_class(a: Angle) -> AngleClass:
  return a.t_class()


ZERO = Angle.exact(0)
T_ANGLE = Angle.exact(1, 4)
TDG_ANGLE = Angle.exact(7, 4)
S_ANGLE = Angle.exact(1, 2)
SDG_ANGLE = Angle.exact(3, 2)
Z_ANGLE = Angle.exact(1)
