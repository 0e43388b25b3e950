#!/usr/bin/env python3
"""Runs the CLI over the fixtures and validates every .cat.json document and
--json run report against the schemas."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

moncat, root = sys.argv[1], sys.argv[2]
fixtures = os.path.join(root, "fixtures")


def schema(name):
    with open(os.path.join(root, "schema", name)) as f:
        s = json.load(f)
    jsonschema.Draft202012Validator.check_schema(s)
    return jsonschema.Draft202012Validator(s)


doc_schema = schema("catdoc.schema.json")
report_schema = schema("run_report.schema.json")
failures = 0


def run(*args, expect):
    global failures
    p = subprocess.run([moncat, "--json", *args], capture_output=True, text=True)
    report = json.loads(p.stdout) if p.stdout.strip().startswith("{") else None
    if p.returncode != expect or report is None:
        print(f"FAIL {args}: exit {p.returncode}, expected {expect}")
        failures += 1
        return
    errors = list(report_schema.iter_errors(report))
    if errors or report["exit_status"] != p.returncode:
        print(f"FAIL {args}: {errors[:1] or 'exit_status mismatch'}")
        failures += 1
    for out in report["outputs"]:
        if out.endswith(".json"):
            with open(out) as f:
                errors = list(doc_schema.iter_errors(json.load(f)))
            if errors:
                print(f"FAIL {out}: {errors[0].message} at {list(errors[0].absolute_path)}")
                failures += 1
            run("check", out, expect=0)


monoidal = ["t1", "z2d", "z2fat", "bz2", "bidem", "arrow"]
with tempfile.TemporaryDirectory() as tmp:
    for name in sorted(os.listdir(fixtures)):
        if name.endswith(".cat"):
            run("check", os.path.join(fixtures, name), expect=1 if name == "broken_pentagon.cat" else 0)
    for name in monoidal:
        src = os.path.join(fixtures, name + ".cat")
        run("complete", src, "-o", os.path.join(tmp, name + ".rezk.cat.json"), expect=0)
        run("skeletalize", src, "-o", os.path.join(tmp, name + ".skel.cat.json"), expect=0)
        run("compare", src, expect=0)
        run("day", src, "--presheaf", "1", "--presheaf", "0+1", expect=0)
    run("skeletalize", os.path.join(fixtures, "wi.cat"), "-o", os.path.join(tmp, "wi.skel.cat.json"), expect=0)
    run("precomp", os.path.join(fixtures, "z2fat.cat"), os.path.join(fixtures, "z2d.cat"), "--timing", expect=0)
    run("precomp", os.path.join(fixtures, "z2fat.cat"), os.path.join(fixtures, "z2fat.cat"), expect=2)
    run("check", os.path.join(tmp, "missing.cat"), expect=2)
    run("complete", os.path.join(fixtures, "broken_pentagon.cat"), "-o", os.path.join(tmp, "x.cat.json"), expect=1)

print("schema validation:", "ok" if failures == 0 else f"{failures} failure(s)")
sys.exit(1 if failures else 0)
