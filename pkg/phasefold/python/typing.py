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

from typing import Hashable, List, NewType, Tuple, Union


# Types for circuit entities ###################################################

# Qubits of the single flat register are denoted by their index.
QubitId = int

# Opaque handle of one emitted gate position, issued by a ``Circuit``.
GateHandle = NewType('GateHandle', int)

# Types for abstract values ####################################################

# A k-bit string packed into a python integer, upper bits beyond k are zero.
BitString = int

# Key used by the fold table, either a ``BitString`` or an exact ``Parity``.
AbstractValue = Hashable

MAX_WIDTH = 128
DEFAULT_WIDTH = 128

def width_mask(width: int) -> BitString:
  return (1 << width) - 1

def check_width(width: int, owner: str = 'width'):
  if not isinstance(width, int) or width < 1 or width > MAX_WIDTH:
    raise ValueError(f"'{owner}': bit width must be in [1, {MAX_WIDTH}] "
                     f"(got {width})")

def format_bits(bits: BitString, width: int) -> str:
  return format(bits, f'0{width}b')

# Types for reports ############################################################

# (input index of the earlier rotation, input index of the later rotation)
MergePair = Tuple[int, int]
MergePairs = List[MergePair]

PathLike = Union[str, bytes]
