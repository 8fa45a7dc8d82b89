"""Runs the CLI over a set of commands and validates every JSON output."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("graph_output", ["graph", "-g", "path-family:pot_both_ends:4"]),
    ("graph_output", ["graph", "-g", "cycle:5", "--hamiltonian", "-k", "laplacian"]),
    ("spectrum", ["spectrum", "-g", "cycle:6", "--projectors"]),
    ("evolve", ["evolve", "-g", "path:3", "--t", "0.5", "--u", "v:0"]),
    ("evolve", ["evolve", "-g", "path:3", "--t", "0.5"]),
    ("witness", ["check-pst", "-g", "cycle:4", "--u", "v:0", "--v", "v:2", "--tau", "pi/2"]),
    ("witness", ["check-fr", "-g", "path:2", "--u", "v:0", "--v", "v:1", "--tau", "pi/4"]),
    ("witness", ["periodic", "-g", "cycle:4", "--u", "v:0", "--tau", "pi"]),
    ("trace", ["search-pgst", "-g", "path:2", "--u", "v:0", "--v", "v:1", "--t-max", "3", "--samples", "31", "--trace"]),
    ("trace", ["search-pgst", "-g", "cycle:3", "--u", "v:0", "--v", "v:1", "--t-max", "20"]),
    ("certificate_report", ["certify-no-pgst", "-g", "cycle:12", "--u", "plus:0,1", "--v", "plus:6,7", "--rotation", "6"]),
    ("certificate_report", ["certify-no-pgst", "-g", "cycle:8", "--u", "plus:0,1", "--v", "plus:4,5", "--rotation", "4"]),
    ("cycle_verdict", ["cycle-verdict", "12", "--query", "plus"]),
    ("cycle_verdict", ["cycle-verdict", "10", "--query", "pair", "--complement"]),
    ("cycle_verdict", ["cycle-verdict", "4", "--query", "plus", "--complement"]),
    ("cycle_verdict", ["cycle-verdict", "40", "--query", "vertex"]),
    ("quotient", ["quotient", "-g", "cycle:8", "--partition", "[[0],[1,7],[2,6],[3,5],[4]]", "--check-times", "5"]),
    ("quotient", ["quotient", "-g", "path:4", "--partition", "[[0,1],[2,3]]"]),
    ("suite", ["verify-suite", "paths"]),
    ("suite", ["verify-suite", "cycles"]),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
    failures = 0
    for name, args in CASES:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[f"{name}.schema.json"], registry=registry)
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        status = "ok  " if not errors else "FAIL"
        print(f"{status} {name:<20} {' '.join(args)}")
        for e in errors[:3]:
            print(f"     {e.json_path}: {e.message}")
        failures += bool(errors)
    for name, schema in schemas.items():
        jsonschema.Draft202012Validator.check_schema(schema)
    print(f"{len(CASES) - failures}/{len(CASES)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
