"""End-to-end runs of the parablat executable against the bundled fixtures."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

EXE = sys.argv[1]
failures = []


def run(*args, expect=0):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    if p.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, wanted {expect}\n{p.stderr}")
    return p


def check(cond, what):
    if not cond:
        failures.append(what)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    run("fixtures", "--out", str(tmp))
    for name in ["fix-h", "fix-g3", "fix-l5", "fix-l5b", "fix-l7", "fix-g5"]:
        check((tmp / f"{name}.json").exists(), f"fixture {name} not written")
        check((tmp / f"{name}-frame.json").exists(), f"frame {name} not written")

    a = json.loads(run("analyze", "--lattice", str(tmp / "fix-l5.json")).stdout)
    check(a["signature"] == [3, 2], "FIX-L5 signature")
    check(a["discriminant_order"] == "2", "FIX-L5 discriminant order")

    g3 = json.loads(run("analyze", "--lattice", "FIX-G3").stdout)
    check(g3["discriminant_order"] == "8", "FIX-G3 discriminant order")

    f = json.loads(run("frame", "--lattice", "fix-g3").stdout)
    check(f["alpha"] == [["1/16"]], f"FIX-G3 alpha {f.get('alpha')}")
    check(f["iota_class_trivial"] is False, "FIX-G3 iota class")

    run("frame", "--lattice", str(tmp / "fix-g5.json"), "--frame", str(tmp / "fix-g5-frame.json"))

    coords = tmp / "id.json"
    coords.write_text(json.dumps({"M": [["1"]], "gamma": [["1"]], "psi": [["0"]], "eta": [["0"]]}))
    m = json.loads(run("member", "--lattice", "fix-g3", "--coords", str(coords)).stdout)
    check(m["conditions"]["member"] and m["oracle_agrees"], "identity is a member")

    bad_psi = tmp / "bad.json"
    bad_psi.write_text(json.dumps({"M": [["1"]], "gamma": [["1"]], "psi": [["1/3"]], "eta": [["0"]]}))
    m = json.loads(run("member", "--lattice", "fix-g3", "--coords", str(bad_psi)).stdout)
    check(not m["conditions"]["member"] and m["oracle_agrees"], "perturbed psi is not a member")

    d = json.loads(run("decompose", "--lattice", "fix-g3", "--vector", "0,1,0").stdout)
    check(d is not None, "decompose output")

    b = run("boundary", "--lattice", "fix-g5", "--text")
    check("b-table" in b.stdout, "boundary text")

    run("boundary", "--lattice", "fix-g3", expect=2)
    run("analyze", "--lattice", "no-such-fixture", expect=1)
    garbage = tmp / "garbage.json"
    garbage.write_text("{ not json")
    run("analyze", "--lattice", str(garbage), expect=1)
    odd = tmp / "odd.json"
    odd.write_text(json.dumps({"name": "odd", "gram": [[1]]}))
    run("analyze", "--lattice", str(odd), expect=2)

for f in failures:
    print("FAIL", f)
print("ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
