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

from typing import List, Union

UNITS = {
  "K": 10**3,
  "M": 10**6,
  "G": 10**9,
}

def parse_count(cnt: Union[int, float, str]) -> int:
  r""" Parse a gate or trial count, e.g. ``10000``, ``'10K'``, ``'1e6'``.
  """
  if isinstance(cnt, bool):
    raise ValueError(f"invalid count: {cnt}")
  if isinstance(cnt, int):
    return cnt
  if isinstance(cnt, float):
    return int(cnt)
  if isinstance(cnt, str):
    cnt = cnt.strip()
    for suf, u in UNITS.items():
      if cnt.upper().endswith(suf):
        return int(float(cnt[:-len(suf)]) * u)
    try:
      return int(cnt)
    except ValueError:
      return int(float(cnt))
  raise ValueError(f"invalid count: {cnt}")


def parse_count_list(spec: Union[str, List]) -> List[int]:
  r""" Parse a comma separated list of counts, e.g. ``'1e4,1e5,1M'``.
  """
  if isinstance(spec, (list, tuple)):
    return [parse_count(c) for c in spec]
  return [parse_count(c) for c in str(spec).split(',') if c.strip()]
