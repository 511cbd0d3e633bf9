"""Runs each JSON-emitting subcommand of the unate CLI and validates the output
against the schemas shipped in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

    def schema(name):
        return json.loads((schema_dir / f"{name}.schema.json").read_text())

    cases = [
        ("test_report", ["test", "--fn", "builtin:parity:n=2", "--eps", "1/4", "--seed", "1", "--format", "json"], 1),
        ("test_report", ["test", "--fn", "builtin:dictator:n=4", "--eps", "1/2", "--format", "json"], 0),
        ("distance_report", ["distance", "--fn", "builtin:random-table:n=4,seed=2,hi=2", "--format", "json"], 0),
        ("profile_report", ["profile", "--fn", "builtin:parity:n=3", "--format", "json"], 0),
        ("analyze_report", ["analyze", "--fn", "builtin:planted-far:n=4,eps=1/8,seed=1", "--eps", "1/8", "--format", "json"], 0),
        ("experiment_result", ["experiment", "--fn", "builtin:parity:n=2", "--trials", "50", "--format", "json"], 0),
        ("experiment_result", ["experiment", "--fn", "builtin:dictator:n=30", "--trials", "3", "--eps", "1", "--format", "json"], 0),
        ("truth_table", ["gen", "--fn", "builtin:weighted-threshold:n=5,seed=4"], 0),
    ]
    failures = 0
    for name, args, code in cases:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        try:
            if proc.returncode != code:
                raise AssertionError(f"exit {proc.returncode}, expected {code}: {proc.stderr}")
            jsonschema.validate(json.loads(proc.stdout), schema(name))
            print(f"PASS {name}: {' '.join(args)}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL {name}: {' '.join(args)}: {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
