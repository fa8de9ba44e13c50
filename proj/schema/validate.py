#!/usr/bin/env python3
"""Validate cesaro verify reports against suite_report.schema.json.

usage: validate.py REPORT.json [OTHER.json]

With two reports, also checks that they are identical once runtime_ms is
removed, and that every case's pass flag agrees with abs_err <= tol.
"""
import json
import math
import pathlib
import sys

import jsonschema

SCHEMA = pathlib.Path(__file__).with_name("suite_report.schema.json")


def number(v):
    return {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}.get(v, v)


def check_pass_flags(report):
    for suite in report["suites"]:
        for case in suite["cases"]:
            err, tol = number(case["abs_err"]), number(case["tol"])
            if case["pass"] != (err <= tol):
                raise SystemExit(f"{case['name']}: pass={case['pass']} but abs_err={err}, tol={tol}")
    overall = all(c["pass"] for s in report["suites"] for c in s["cases"])
    if report["pass"] != overall:
        raise SystemExit("top-level pass flag disagrees with the cases")


def strip_runtime(report):
    return [{k: v for k, v in s.items() if k != "runtime_ms"} for s in report["suites"]]


def main(argv):
    if len(argv) not in (2, 3):
        raise SystemExit(__doc__)
    schema = json.loads(SCHEMA.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    reports = [json.loads(pathlib.Path(p).read_text()) for p in argv[1:]]
    for r in reports:
        jsonschema.validate(r, schema, cls=jsonschema.Draft202012Validator)
        check_pass_flags(r)
    if len(reports) == 2 and strip_runtime(reports[0]) != strip_runtime(reports[1]):
        raise SystemExit("reports differ beyond runtime_ms")
    n = sum(len(s["cases"]) for s in reports[0]["suites"])
    print(f"ok: {n} cases")


if __name__ == "__main__":
    main(sys.argv)
