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

from abc import ABC, abstractmethod
from typing import Any, Tuple

from ..ir import Circuit


class BasePass(ABC):
  r""" A base class for single-scan circuit passes.

  A pass never mutates its input: :meth:`run` returns a new circuit together
  with a pass-specific report.
  """
  @abstractmethod
  def run(self, circuit: Circuit) -> Tuple[Circuit, Any]:
    r""" Transform ``circuit``.

    Returns:
      The transformed circuit and the report of this run.
    """

  def __call__(self, circuit: Circuit) -> Circuit:
    return self.run(circuit)[0]
