#!/usr/bin/env python3
"""End-to-end checks of the rankinv command line and its JSON schemas."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
failures = []


def run(*args, code=0, env=None):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, expected {code}: {p.stderr.strip()}")
    return p.stdout


def check(cond, what):
    if not cond:
        failures.append(what)


def validated(name, text):
    doc = json.loads(text)
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        failures.append(f"{name}: schema violation: {e.message}")
    return doc


tmp = Path(tempfile.mkdtemp())

# gen
gab = tmp / "gab.txt"
run("gen", "--field", "gf8", "--family", "gabidulin", "--n", "3", "--k", "2", "--out", str(gab))
check(gab.read_text().count("\n") >= 4, "gen wrote a short file")
a = run("gen", "--field", "gf16", "--family", "random", "--n", "4", "--k", "2", "--seed", "7")
b = run("gen", "--field", "gf16", "--family", "random", "--n", "4", "--k", "2", "--seed", "7")
check(a == b and a, "gen --seed 7 is not deterministic")
run("gen", "--field", "gf8", "--n", "9", "--k", "2", code=4)
run("gen", "--field", "gf8", "--family", "nope", "--n", "3", "--k", "2", code=2)
run("gen", "--field", "no-such-field", "--n", "3", "--k", "2", code=2)

# hseq on the basic example
basic = tmp / "basic.txt"
basic.write_text("# field gf8\n2 3 3 2\n100 000 010\n000 100 100\n")
rows = run("hseq", str(basic), "--max-degree", "7").strip().splitlines()
check(rows[0] == "i,h_i,ideal_dim_i", "hseq header")
seq = [int(r.split(",")[1]) for r in rows[1:-2]]
ideal = [int(r.split(",")[2]) for r in rows[1:-2]]
check(seq == [1, 2, 3, 4, 5, 5, 5, 5], f"hseq values {seq}")
check(ideal == [0, 0, 0, 0, 0, 1, 2, 3], f"hseq ideal dims {ideal}")
check(rows[-1] == "4,5", f"hseq summary {rows[-1]}")
short = run("hseq", str(basic)).strip().splitlines()
check(short[-3:] == ["4,5,0", "# regularity,point_count", "4,5"], f"hseq default rows {short[-3:]}")
pts = run("hseq", str(basic), "--emit-linear-set").strip().splitlines()
check(len(pts) == 5, f"linear set has {len(pts)} lines")
empty = tmp / "empty.txt"
empty.write_text("")
run("hseq", str(empty), code=2)
degenerate = tmp / "deg.txt"
degenerate.write_text("# field gf8\n2 3 2 1\n100 100\n")
run("hseq", str(degenerate), code=4)

# classify
c = validated("classify", run("classify", str(gab)))
check(c["verdict"] == "other" and "note" in c, "classify [3,2] should be other")
g6 = tmp / "g6.txt"
run("gen", "--field", "gf256", "--family", "gabidulin", "--n", "6", "--k", "3", "--out", str(g6))
c = validated("classify", run("classify", str(g6)))
check(c["verdict"] == "gabidulin_like" and c["r"] == 1, f"classify gabidulin {c}")
r6 = tmp / "r6.txt"
run("gen", "--field", "gf256", "--family", "random", "--n", "6", "--k", "3", "--seed", "1", "--out", str(r6))
c = validated("classify", run("classify", str(r6), "--measure"))
check(c["verdict"] == "random_like" and c["r"] == 3, f"classify random {c}")
check(c.get("measured_h") == c["predicted_h"], "classify measured h differs from prediction")
full = tmp / "full.txt"
full.write_text("# field gf8\n2 3 2 2\n100 000\n000 100\n")
run("classify", str(full), code=4)

# qsum
q = run("qsum", str(g6)).strip().splitlines()
check(q[0] == "i,qsum_dim" and q[2] == "1,4", f"qsum rows {q[:3]}")

# fsdim
f = validated("fsdim", run("fsdim", str(r6), "--s", "1"))
check(f["system"] == f["eval"] == f["predicted"] == 0, f"fsdim {f}")
f = validated("fsdim", run("fsdim", str(g6), "--s", "1", "--no-eval"))
check(f["system"] == 1 and "eval" not in f, f"fsdim gabidulin {f}")
run("fsdim", str(g6), "--s", "8", code=4)

# zeros
z = validated("zeros", run("zeros", "--tightness", "--k", "3", "--field", "gf16", "--s", "1"))
check(z["tight"] and z["zero_count"] == 8, f"zeros tightness {z}")
z = validated("zeros", run("zeros", "--k", "2", "--field", "gf16", "--seed", "3"))
check(z["zero_count"] == 1, f"zeros k=2 {z}")
z = validated("zeros", run("zeros", "--k", "2", "--field", "gf16", "--s", "2", "--seed", "1"))
check(z["delta"] == 2, f"zeros delta {z}")
run("--max-enum", "1000", "zeros", "--k", "4", "--field", "gf256", code=3)

# experiment
e = validated("experiment", run("experiment", "--field", "gf8", "--n", "3", "--k", "2", "--trials", "1"))
check(e["modal_fraction"] == 1.0, "experiment trials=1 modal fraction")
csv = tmp / "trials.csv"
args = ("experiment", "--field", "gf256", "--n", "6", "--k", "3", "--trials", "20", "--seed", "5")
e1 = validated("experiment", run(*args, "--csv", str(csv)))
e2 = run(*args)
check(json.loads(e2) == e1, "experiment not deterministic")
check(sum(e1["h_qplus1_histogram"].values()) == 20, "histogram total")
check(sum(d["count"] for d in e1["sequence_distribution"]) == 20, "distribution total")
check(len(csv.read_text().strip().splitlines()) == 21, "experiment csv rows")
validated("experiment", run(*args, "--no-sequence"))
run("experiment", "--field", "gf8", "--n", "3", "--k", "2", "--trials", "0", code=2)

# catalog override
cat = tmp / "catalog.txt"
cat.write_text("tiny 2 1 1 1 3 1 1 0 1\n")
env = dict(os.environ, RANKINV_CATALOG=str(cat))
out = run("gen", "--field", "tiny", "--n", "3", "--k", "2", env=env)
check("# field tiny" in out, "catalog override not applied")

# worked examples
out = run("paper-examples")
check("FAIL" not in out and out.strip(), "worked examples")

for msg in failures:
    print("FAIL", msg)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
