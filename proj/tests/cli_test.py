"""Contract tests for the stableperm CLI: exit codes, JSON schema, CSV header,
--out, and byte-determinism.

usage: cli_test.py <stableperm binary> <report.schema.json>
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)
jsonschema.Draft202012Validator.check_schema(SCHEMA)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def expect_exit(code, *args):
    p = run(*args)
    check(p.returncode == code, f"exit {code} (got {p.returncode}): {' '.join(args)}")
    return p


def expect_json(code, *args):
    p = expect_exit(code, *args, "--format", "json")
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        check(False, f"valid JSON: {' '.join(args)}: {e}")
        return None
    errors = list(VALIDATOR.iter_errors(doc))
    check(not errors, f"schema: {' '.join(args)}" + (f": {errors[0].message}" if errors else ""))
    check(p.stdout.endswith("}\n"), f"newline-terminated: {' '.join(args)}")
    keys = list(doc.keys())
    check(keys[:4] == ["command", "inputs", "result", "tool_version"], f"key order: {keys}")
    return doc


II = "((1,1),(1,2))((2,1),(2,2))"
CASE1 = "((1,1),(1,3))((2,3),(2,4))"

# check
expect_exit(0, "check", "--n", "2", "--k", "2", "--perm", II, "--exact-rank1")
p = expect_exit(3, "check", "--n", "4", "--k", "2", "--perm", CASE1, "--exact-rank1")
check("witness" in p.stdout, "check prints witness")
p = expect_exit(2, "check", "--n", "2", "--k", "2", "--perm", "((1,3),(1,2))")
check("position" in p.stderr and "letter 3" in p.stderr, "check reports parse position")
expect_exit(2, "check", "--n", "2", "--k", "3", "--perm", "((1,1,1),(1,1,2))", "--exact-rank1")
expect_exit(2, "check", "--n", "11", "--k", "2", "--perm", "()")
expect_exit(0, "check", "--n", "3", "--k", "1", "--perm", "((1),(2),(3))")
doc = expect_json(0, "check", "--n", "2", "--k", "2", "--perm", II)
check(doc and doc["result"]["status"] == "StableWithRank" and doc["result"]["rank"] == 1,
      "bounded check gives rank 1")
doc = expect_json(3, "check", "--n", "4", "--k", "2", "--perm", CASE1, "--exact-rank1")
check(doc and doc["result"]["witness"]["lhs"] != doc["result"]["witness"]["rhs"], "witness separates")

# family
doc = expect_json(0, "family", "--n", "5", "--a1", "1", "--a2", "2", "--b1", "3", "--b2", "4",
                  "--b3", "3", "--b4", "5")
check(doc and doc["result"]["condition_i"] and doc["result"]["verified_stable"], "family condition (i)")
doc = expect_json(3, "family", "--n", "4", "--a1", "1", "--a2", "2", "--b1", "1", "--b2", "3",
                  "--b3", "3", "--b4", "4")
check(doc and doc["result"]["witness"]["case"] == "L2.2-C1"
      and doc["result"]["witness"]["alpha"] == [1, 1, 3], "family case L2.2-C1 alpha")
p = expect_exit(2, "family", "--n", "3", "--a1", "1", "--a2", "1", "--b1", "1", "--b2", "2",
                "--b3", "2", "--b4", "3")
check("a_1 != a_2 violated" in p.stderr, "family names violated hypothesis")

# psi
doc = expect_json(0, "psi", "--n", "3", "--k", "2", "--perm", "()", "--upto", "2")
check(doc and all(l["cycles"] == "()" for l in doc["result"]["levels"])
      and all(l["settled"] for l in doc["result"]["levels"][1:]), "psi identity")
doc = expect_json(0, "psi", "--n", "2", "--k", "2", "--perm", II, "--upto", "2")
check(doc and [l["settled"] for l in doc["result"]["levels"]] == [None, True, True], "psi (ii) settles")
doc = expect_json(0, "psi", "--n", "4", "--k", "2", "--perm", CASE1, "--upto", "1")
check(doc and doc["result"]["levels"][1]["settled"] is False, "psi case (1) does not settle")
expect_exit(2, "psi", "--n", "10", "--k", "2", "--perm", "()", "--upto", "6")

# enumerate
doc = expect_json(0, "enumerate", "--mode", "family", "--n", "2")
r = doc["result"] if doc else {}
check(r.get("examined") == 8 and r.get("theorem", {}).get("condition_ii") == 8
      and r.get("mismatches") == [], "family n=2 all condition (ii)")
doc = expect_json(0, "enumerate", "--mode", "t1", "--n", "5")
check(doc and doc["result"]["stable_count"] == 120 and doc["result"]["examined"] == 120, "t1 n=5 120/120")
doc = expect_json(0, "enumerate", "--mode", "family", "--n", "6", "--samples", "300", "--seed", "9")
check(doc and doc.get("seed") == 9 and list(doc.keys())[-1] == "seed", "sampled run echoes seed last")
doc = expect_json(0, "enumerate", "--mode", "rank1", "--n", "2")
check(doc and "()" in doc["result"]["stable_elements"], "census contains identity")
doc = expect_json(0, "enumerate", "--mode", "rank1", "--n", "3", "--space", "involutions")
check(doc and doc["result"]["stable_count"] == 12, "involution census n=3")
p = expect_exit(2, "enumerate", "--mode", "rank1", "--n", "4")
check("about" in p.stderr, "refusal gives cardinality estimate")
expect_exit(2, "enumerate", "--mode", "bogus", "--n", "2")

p = expect_exit(0, "enumerate", "--mode", "family", "--n", "3", "--format", "csv")
rows = list(csv.reader(io.StringIO(p.stdout)))
check(rows and rows[0] == ["space", "n", "class", "examined", "stable"], "csv header")
check(sum(int(r[3]) for r in rows[1:]) == 216, "csv rows cover every tuple")

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "report.json")
    p = expect_exit(0, "enumerate", "--mode", "t1", "--n", "4", "--out", out)
    check(p.stdout == "" and os.path.exists(out), "--out writes file")
    with open(out) as f:
        check(not list(VALIDATOR.iter_errors(json.load(f))), "--out file validates")

    env = dict(os.environ, STABLEPERM_JOBS="3")
    a = run("enumerate", "--mode", "family", "--n", "4", env=env).stdout
    b = run("enumerate", "--mode", "family", "--n", "4", "--jobs", "1").stdout
    check(a == b and a, "STABLEPERM_JOBS does not change output")

doc = expect_json(0, "enumerate", "--mode", "t1", "--n", "3", "--timing")
check(doc and "wall_time_ms" in doc["result"], "--timing adds wall time")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
