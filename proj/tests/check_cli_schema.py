#!/usr/bin/env python3
"""Run the CLI over every subcommand and validate its JSON against the schema.

usage: check_cli_schema.py <skewdual binary> <schemas/output.json>
"""

import json
import os
import subprocess
import sys

import jsonschema

CASES = [
    ["field", "info", "--p", "2", "--m", "3"],
    ["field", "info", "--p", "3", "--m", "2", "--modulus", "2,2,1"],
    ["field", "arith", "--p", "3", "--m", "2", "--op", "mul", "--x", "4", "--y", "5"],
    ["field", "arith", "--p", "2", "--m", "4", "--op", "pow", "--x", "2", "--y", "-1"],
    ["field", "arith", "--p", "2", "--m", "4", "--op", "inv", "--x", "7"],
    ["field", "frobenius", "--p", "2", "--m", "3", "--s", "1", "--x", "2"],
    ["field", "trace", "--p", "2", "--m", "4", "--d", "2", "--x", "7"],
    ["field", "hilbert90", "--p", "2", "--m", "4", "--d", "1", "--mu", "1"],
    ["basis", "--p", "2", "--m", "3", "--d", "1", "--alpha", "3"],
    ["basis", "--p", "2", "--m", "3", "--d", "1", "--alpha", "2"],
    ["basis", "--p", "2", "--m", "4", "--d", "1", "--elements", "1,2,4,8"],
    ["basis", "--p", "2", "--m", "3", "--d", "1", "--find-self-dual-normal"],
    ["basis", "--p", "2", "--m", "4", "--d", "1", "--find-self-dual-normal"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "mul", "--f", "1,2", "--g", "2,1"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "divr", "--f", "1,0,1", "--g", "2,1"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "divl", "--f", "1,0,1", "--g", "2,1"],
    ["skewpoly", "--p", "2", "--m", "3", "--op", "gcrd", "--f", "1,0,0,1", "--g", "3,1"],
    ["skewpoly", "--p", "2", "--m", "3", "--op", "lclm", "--f", "2,1", "--g", "3,1"],
    ["skewpoly", "--p", "2", "--m", "3", "--op", "gcld", "--f", "1,0,0,1", "--g", "3,1"],
    ["skewpoly", "--p", "2", "--m", "3", "--op", "lcrm", "--f", "2,1", "--g", "3,1", "--convention", "right"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "eval", "--f", "1,0,1", "--a", "2"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "norm", "--a", "2", "--i", "3"],
    ["skewpoly", "--p", "2", "--m", "2", "--op", "convert", "--f", "1,2,1"],
    ["code", "constacyclic", "--p", "2", "--m", "2", "--n", "2", "--gen", "1,1"],
    ["code", "constacyclic", "--p", "2", "--m", "3", "--n", "3", "--gen", "1,0,0,1"],
    ["code", "skewrs", "--p", "2", "--m", "3", "--alpha", "3", "--delta", "2"],
    ["code", "skewrs", "--p", "2", "--m", "3", "--alpha", "3", "--delta", "3", "--mindist", "--dual", "--eval"],
    ["code", "conv", "--p", "2", "--d", "1", "--t", "2", "--n", "2", "--idem", "1,0;0,0"],
    ["code", "conv", "--p", "2", "--d", "1", "--t", "2", "--n", "2", "--h", "1", "--U", "1,1;0,1",
     "--idem", "1,0;0,0"],
    ["--seed", "7", "verify", "skewrs"],
]

ERRORS = [
    (["field", "info", "--p", "4", "--m", "1"], "CompositeCharacteristic"),
    (["field", "arith", "--p", "2", "--m", "2", "--op", "inv", "--x", "0"], "DivisionByZero"),
    (["code", "skewrs", "--p", "2", "--m", "3", "--alpha", "2", "--delta", "2"], "NotNormal"),
    (["code", "skewrs", "--p", "2", "--m", "3", "--alpha", "3", "--delta", "9"], "BadDelta"),
    (["code", "conv", "--p", "2", "--d", "1", "--t", "2", "--n", "2", "--idem", "1,1;0,1"], "BadCertificate"),
    (["verify", "nosuch"], "InvalidArgument"),
    (["field"], ""),
    (["field", "info", "--p", "2"], ""),
    (["--output", "xml", "field", "info", "--p", "2", "--m", "1"], ""),
]

failures = []


def run(cli, args, env=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    if not cond:
        failures.append(what)


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    for args in CASES:
        proc = run(cli, args)
        label = " ".join(args)
        check(proc.returncode == 0, f"{label}: exit {proc.returncode}: {proc.stderr.strip()}")
        if proc.returncode != 0:
            continue
        doc = json.loads(proc.stdout)
        errs = [e.message for e in validator.iter_errors(doc)]
        check(not errs, f"{label}: schema: {errs[:3]}")
        again = run(cli, args)
        check(again.stdout == proc.stdout, f"{label}: output not deterministic")
        table = run(cli, ["--output", "table", *args])
        check(table.returncode == 0 and table.stdout.strip(), f"{label}: table output")

    for args, kind in ERRORS:
        proc = run(cli, args)
        label = " ".join(args)
        check(proc.returncode == 1, f"{label}: expected exit 1, got {proc.returncode}")
        check(proc.stdout == "", f"{label}: unexpected stdout")
        check(kind in proc.stderr, f"{label}: expected {kind} in stderr: {proc.stderr.strip()}")

    rs = run(cli, ["code", "skewrs", "--p", "2", "--m", "3", "--alpha", "3", "--delta", "3", "--mindist"])
    doc = json.loads(rs.stdout)
    check(doc["min_distance"] == 3 and doc["mds"] is True, "skewrs example: min_distance 3, mds true")

    full = run(cli, ["verify", "all", "--seed", "1"])
    doc = json.loads(full.stdout)
    check(full.returncode == 0, f"verify all: exit {full.returncode}")
    check(not list(validator.iter_errors(doc)), "verify all: schema")
    check(doc["passed"] and len(doc["suites"]) == 6 and all(s["passed"] for s in doc["suites"]),
          "verify all: every suite passed")

    # Seed from the environment, overridden by the flag.
    env = dict(os.environ, SKEWDUAL_SEED="5")
    by_env = run(cli, ["verify", "convolutional"], env=env)
    by_flag = run(cli, ["--seed", "5", "verify", "convolutional"])
    check(json.loads(by_env.stdout)["seed"] == 5, "SKEWDUAL_SEED is read")
    check(by_env.stdout == by_flag.stdout, "env seed and flag seed agree")
    overridden = run(cli, ["--seed", "9", "verify", "convolutional"], env=env)
    check(json.loads(overridden.stdout)["seed"] == 9, "--seed overrides SKEWDUAL_SEED")

    for f in failures:
        print("FAIL:", f)
    print(f"{len(CASES)} commands, {len(ERRORS)} error cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
