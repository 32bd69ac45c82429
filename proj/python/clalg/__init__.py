# Copyright 2026 The clalg Authors
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

"""Finite CL-algebra workbench: validation, ideals, quotients and model search."""

import json

from ._clalg import (
    Algebra,
    ClalgError,
    all_ideals,
    census,
    classify,
    export_dot,
    generated_ideal,
    identities,
    is_ideal,
    load,
    parse,
    quotient,
    theorems,
    validate,
)
from ._clalg import run_command as _run_command

__all__ = [
    "Algebra",
    "ClalgError",
    "all_ideals",
    "census",
    "classify",
    "export_dot",
    "generated_ideal",
    "identities",
    "is_ideal",
    "load",
    "parse",
    "quotient",
    "run_command",
    "theorems",
    "validate",
]


def run_command(argv):
    """Run a cla subcommand; returns (exit_code, report dict)."""
    code, report, _ = _run_command([str(a) for a in argv])
    return code, json.loads(report)
