#!/usr/bin/env python3
"""Runs the CLI over the corpus and validates every JSON output against schemas/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli = pathlib.Path(sys.argv[1])
root = pathlib.Path(sys.argv[2])
schema_dir = root / "schemas"
corpus = root / "tests" / "data" / "corpus"

registry = Registry()
schemas = {}
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    schemas[path.name] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = 0
checked = 0


def check(schema, doc, label):
    global failures, checked
    checked += 1
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        failures += 1
        print(f"FAIL {label}: {errors[0].message}")


def run(*args):
    out = subprocess.run([str(cli), *map(str, args)], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        raise SystemExit(f"{' '.join(map(str, args))} exited {out.returncode}: {out.stderr}")
    return out.stdout


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    for inst in sorted(corpus.glob("*.json")):
        doc = json.loads(inst.read_text())
        check("instance.schema.json", doc, inst.name)
        check("graph.schema.json", doc["graph"], inst.name + " graph")
        check("solve-result.schema.json", json.loads(run("solve", "-i", inst, "--json")), inst.name + " solve")
        if doc["kind"] == "mmei":
            trace = tmp / "trace.json"
            summary = json.loads(run("kernelize", "-i", inst, "--json", "--trace", trace))
            check("kernel-summary.schema.json", summary, inst.name + " kernelize")
            check("kernel-trace.schema.json", json.loads(trace.read_text()), inst.name + " trace")
            check("solve-result.schema.json", json.loads(run("solve", "-i", inst, "--algo", "kernel", "--json")),
                  inst.name + " solve kernel")
            reduced = json.loads(run("reduce", "--reduction", "pvc-to-mmei", "-i", inst, "-k", 1, "-x", 1))
            check("reduce-output.schema.json", reduced, inst.name + " reduce")
            target = tmp / "target.json"
            run("reduce", "--reduction", "pvc-to-mmei", "-i", inst, "-k", 1, "-x", 1, "-o", target)
            check("instance.schema.json", json.loads(target.read_text()), inst.name + " reduce target")
            check("reduce-output.schema.json", json.loads((tmp / "target.json.witness.json").read_text()),
                  inst.name + " reduce witness")
        if doc["kind"] == "mve":
            check("solve-result.schema.json", json.loads(run("solve", "-i", inst, "--algo", "fpt", "--json")),
                  inst.name + " solve fpt")
    for family in ("cycle", "path", "clique"):
        check("graph.schema.json", json.loads(run("generate", "--family", family, "--n", 5, "--json")), family)
    check("graph.schema.json", json.loads(run("generate", "--family", "bipartite-random", "--nx", 3, "--ny", 3,
                                              "--edges", 5, "--seed", 9, "--json")), "bipartite-random")
    check("instance.schema.json", json.loads(run("generate", "--family", "gadget:is-to-peds", "--source", "c4",
                                                 "-k", 2, "--json")), "gadget")
    check("verify-report.schema.json", json.loads(run("verify", "--reduction", "mmei-to-fei", "--max-side", 2)),
          "verify one")
    check("verify-report.schema.json", json.loads(run("verify", "--reduction", "all", "--max-n", 3,
                                                      "--max-side", 2)), "verify all")
    capped = json.loads(subprocess.run([str(cli), "solve", "-i", str(corpus / "mve01_4.json"), "--cap-edges", "3",
                                        "--json"], capture_output=True, text=True).stdout)
    check("solve-result.schema.json", capped, "cap error")

print(f"{checked} documents checked, {failures} failures")
sys.exit(1 if failures else 0)
