# Copyright 2026 The quadplane Authors
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

"""End-to-end CLI checks: exit codes, schemas, export grids, determinism."""

import filecmp
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def schema(name):
    return json.loads((SCHEMA / name).read_text())


report_schema = schema("report.schema.json")

r = run("verify", "--field", "2", "--kind", "dual", "--checks", "haxioms,census")
expect(r.returncode == 0, "dual haxioms,census exits 0")
rep = json.loads(r.stdout)
jsonschema.validate(rep, report_schema)
expect(rep["census"]["n"] == 28 and rep["census"]["g_x"] == 3 and rep["census"]["n_x"] == 6,
       "census (n, g_x, n_x) = (28, 3, 6)")

r = run("verify", "--field", "2", "--kind", "split", "--checks", "saxioms,equivalence")
expect(r.returncode == 0, "split saxioms,equivalence exits 0")
rep = json.loads(r.stdout)
jsonschema.validate(rep, report_schema)
proj = rep["checks"]["equivalence"]["data"]["projectivities"]
expect(all(len(m) == 9 and len(m[0]) == 9 for m in proj.values()), "fitted 9x9 matrices reported")

expect(run("verify", "--field", "2", "--kind", "dual", "--checks", "saxioms").returncode == 2,
       "kind/check mismatch exits 2")
expect(run("verify", "--field", "6", "--kind", "dual").returncode == 2, "bad field exits 2")
expect(run("verify", "--field", "2", "--kind", "dual", "--t", "0", "--n", "0").returncode == 2,
       "--kind with --t/--n exits 2")
expect(run("verify", "--field", "2", "--kind", "dual", "--format", "xml").returncode == 2,
       "bad format exits 2")

r = run("verify", "--field", "2", "--kind", "dual", "--checks", "uniqueness")
expect(r.returncode == 1, "failing check exits 1 and still writes the report")
jsonschema.validate(json.loads(r.stdout), report_schema)

r = run("verify", "--field", "3", "--t", "0", "--n", "1", "--format", "text",
        "--construction", "matrices,parametrization")
expect(r.returncode == 0 and "overall  PASS" in r.stdout, "text format, explicit (t, n)")

with tempfile.TemporaryDirectory() as d:
    a, b = pathlib.Path(d) / "a", pathlib.Path(d) / "b"
    for out in (a, b):
        r = run("export", "--field", "2", "--kind", "dual", "--out", str(out),
                "--construction", "matrices,reduction,juxtaposition,parametrization")
        expect(r.returncode == 0, "export exits 0")
    cmp = filecmp.dircmp(a, b)
    same = not cmp.diff_files and not cmp.left_only and not cmp.right_only
    expect(same and all(filecmp.cmp(a / f, b / f, shallow=False) for f in cmp.common_files),
           "exports are byte-identical")
    grid = [list(map(int, l.split())) for l in (a / "incidence.txt").read_text().splitlines()]
    expect(len(grid) == 28 and {sum(r) for r in grid} == {6} and {sum(c) for c in zip(*grid)} == {6},
           "dual F2 grid is 28x28 with all sums 6")
    jsonschema.validate(json.loads((a / "plane.json").read_text()), schema("plane.schema.json"))
    for f in a.glob("vset_*.json"):
        jsonschema.validate(json.loads(f.read_text()), schema("vset.schema.json"))
    expect(True, "export schemas validate")

    c = pathlib.Path(d) / "c"
    run("export", "--field", "2", "--kind", "extension", "--out", str(c))
    grid = [list(map(int, l.split())) for l in (c / "incidence.txt").read_text().splitlines()]
    expect(len(grid) == 21 and {sum(r) for r in grid} == {5}, "extension F4 grid is 21x21, row sums 5")

    r1 = pathlib.Path(d) / "r1.json"
    r2 = pathlib.Path(d) / "r2.json"
    for p in (r1, r2):
        run("verify", "--field", "2", "--kind", "split", "--checks", "algebra,plane,vaxioms",
            "--out", str(p))
    j1, j2 = json.loads(r1.read_text()), json.loads(r2.read_text())
    j1.pop("timings")
    j2.pop("timings")
    expect(j1 == j2, "reports identical apart from timings")

sys.exit(1 if failures else 0)
