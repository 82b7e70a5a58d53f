"""Run every JSON-producing subcommand and validate the payload against its schema."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

qmetal, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    Draft202012Validator.check_schema(doc)
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)


def validator(name):
    return Draft202012Validator({"$ref": name + ".schema.json"}, registry=registry)


runs = [
    ("series", ["series", "--n", "3", "--prec", "20"]),
    ("series", ["series", "--n", "2", "--ell", "4"]),
    ("hfrac_output", ["hfrac", "--n", "1"]),
    ("hfrac_output", ["hfrac", "--n", "4", "--ell", "5", "--trace", "--profile"]),
    ("hankel_report", ["hankel", "--n", "2"]),
    ("hankel_report", ["hankel", "--n", "3", "--ell", "2", "--source", "both"]),
    ("hankel_report", ["hankel", "--n", "2", "--ell", "7", "--source", "brute", "--horizon", "20"]),
    ("verify_report", ["verify", "--suite", "thmA", "--n", "1..3"]),
    ("verify_report", ["verify", "--suite", "baselines", "--n", "1"]),
    ("modp_report", ["modp", "--n", "3", "--p", "2"]),
    ("modp_report", ["modp", "--n", "4", "--ell", "7", "--p", "5"]),
    ("modp_report", ["modp", "--n", "5", "--p", "7", "--max-steps", "3"]),
    ("scan_report", ["scan", "--n", "3", "--ell", "5"]),
    ("scan_report", ["scan", "--n", "4", "--ell", "7", "--horizon", "30"]),
]

failures = 0
for schema, args in runs:
    proc = subprocess.run([qmetal, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    errors = list(validator(schema).iter_errors(json.loads(proc.stdout)))
    if errors:
        failures += 1
        print(f"FAIL {label}: {errors[0].message}")
    else:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
