"""Runs the CLI and validates its JSON output against docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main():
    kk, schema_dir, data, work = sys.argv[1:5]
    schema_dir, data, work = pathlib.Path(schema_dir), pathlib.Path(data), pathlib.Path(work)
    schemas = {}
    resources = []
    for path in sorted(schema_dir.glob("*.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.stem] = doc
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)

    table = work / "schemas_table.csk"
    table.unlink(missing_ok=True)
    trefoil, hopf = str(data / "trefoil.pd"), str(data / "hopf.pd")
    runs = [
        ("validate", ["validate", "--in", trefoil]),
        ("polynomial", ["bracket", "--in", hopf]),
        ("polynomial", ["jones", "--in", trefoil]),
        ("wrapping", ["wrapping", "--in", hopf]),
        ("entangle", ["entangle", "--pattern", hopf, "--companion", trefoil]),
        ("entangle", ["entangle", "--core-circles", "2", "--companion", trefoil, "--no-reduce"]),
        ("bounds", ["bounds"]),
        ("bounds", ["bounds", "--crk", "1", "--P", "2,4,8,16,32,64,128,256"]),
        ("census", ["census", "--max-n", "3", "--table", str(table)]),
        ("census", ["census", "--max-n", "2", "--distinguish-mirrors"]),
        ("budget", ["budget", "--x", "3/4", "--card", "114"]),
        ("budget", ["budget", "--x", "1", "--card", "1", "--factors", "304", "--composite", "1"]),
    ]
    failures = 0
    for name, args in runs:
        out = subprocess.run([kk, *args], capture_output=True, text=True)
        label = " ".join(args[:1] + [a for a in args[1:] if not a.startswith("/")])
        if out.returncode != 0:
            print(f"FAIL {label}: exit {out.returncode}\n{out.stderr}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        for e in errors[:3]:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
