#!/usr/bin/env python3
# Copyright 2026 The Tatami Authors.
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
"""Competition-style front end for the CaDiCaL build shipped with python-sat.

Usage: external_solver.py FILE.cnf
Prints "s SATISFIABLE"/"s UNSATISFIABLE" and "v" lines, exits 10/20.
"""
import sys

from pysat.formula import CNF
from pysat.solvers import Cadical153


def main():
    cnf = CNF(from_file=sys.argv[1])
    with Cadical153(bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            model = s.get_model() or []
            seen = {abs(l) for l in model}
            model += [v for v in range(1, cnf.nv + 1) if v not in seen]
            print("v " + " ".join(map(str, model)) + " 0")
            return 10
        print("s UNSATISFIABLE")
        return 20


if __name__ == "__main__":
    sys.exit(main())
