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

import os
from typing import Optional


def ensure_dir(dir_path: str):
  if dir_path and not os.path.exists(dir_path):
    os.makedirs(dir_path)


def read_text(path: str) -> str:
  r""" Read a UTF-8 text file with newlines normalized to ``\n``.
  """
  with open(path, 'r', encoding='utf-8', newline=None) as infile:
    return infile.read()


def write_text(path: str, text: str):
  r""" Write a UTF-8 text file with ``\n`` newlines, creating parent
  directories as needed.
  """
  ensure_dir(os.path.dirname(os.path.abspath(path)))
  with open(path, 'w', encoding='utf-8', newline='\n') as outfile:
    outfile.write(text)


def env_int(name: str) -> Optional[int]:
  r""" Read an integer environment variable, ``None`` if it is unset.
  """
  value = os.environ.get(name)
  if value is None or value.strip() == '':
    return None
  try:
    return int(value, 0)
  except ValueError:
    raise ValueError(f"'env_int': environment variable {name} must be an "
                     f"integer (got {value!r})")
