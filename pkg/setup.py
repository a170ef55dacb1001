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
# =============================================================================

import os

from setuptools import setup

# This version string should be updated when releasing a new version.
_VERSION = '0.1.0'

ROOT_PATH = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(ROOT_PATH, 'README.md'), encoding='utf-8') as f:
  long_description = f.read()

setup(
  name='phasefold',
  version=_VERSION,
  description='Randomized phase folding for Clifford+T circuits',
  long_description=long_description,
  long_description_content_type='text/markdown',
  python_requires='>=3.8',
  install_requires=[
    'torch',
    'numpy',
    'pyyaml',
    'click',
    'pyparsing>=2.4',
  ],
  extras_require={
    'test': ['hypothesis'],
  },
  entry_points={
    'console_scripts': ['phasefold=phasefold.harness.cli:main'],
  },
  package_dir={'phasefold' : 'phasefold/python'},
  packages=[
    'phasefold',
    'phasefold.analysis',
    'phasefold.harness',
    'phasefold.ir',
    'phasefold.oracle',
    'phasefold.passes',
    'phasefold.qasm',
    'phasefold.utils'
  ]
)
