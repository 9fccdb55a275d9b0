"""Run the CLI with --format json and validate each payload against its schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("classify", ["classify", "0", "0", "0", "0"], 0),
    ("classify", ["classify", "1", "0", "0", "0"], 0),
    ("classify", ["classify", "0", "0", "1", "2"], 0),
    ("classify", ["classify", "1", "0", "1", "0"], 0),
    ("classify", ["classify", "-1/3", "0", "2/5", "0"], 0),
    ("classify", ["classify", "1", "0", "0", "-2"], 0),
    ("pair", ["pair", "--r", "1", "2", "3", "4", "--s", "5", "6", "7", "8"], 0),
    ("moment", ["moment", "--r", "1", "0", "0", "0", "--s", "5", "7", "0", "0"], 0),
    ("kernel", ["kernel", "0", "0", "0", "0"], 0),
    ("kernel", ["kernel", "1", "0", "1", "0"], 0),
    ("stabilizer", ["stabilizer", "0", "1", "0", "0"], 0),
    ("stabilizer", ["stabilizer", "1", "0", "1", "0"], 0),
    ("stabilizer", ["stabilizer", "0", "1", "0", "0", "--s", "0", "0", "0", "1"], 0),
    ("lambda_regular", ["lambda-regular", "--r", "0", "1", "0", "0", "--s", "0", "0", "0", "1"], 0),
    ("lambda_regular", ["lambda-regular", "--r", "1", "0", "1", "0", "--s", "0", "1", "0", "1"], 0),
    ("packet", ["packets", "show", "--psi", "3"], 0),
    ("stable", ["stable", "--psi", "2"], 0),
    ("stable", ["packets", "stable", "--psi", "1", "--basis", "standard"], 0),
    ("aubert", ["aubert"], 0),
    ("formal_degree", ["formal-degree", "--q", "3"], 0),
    ("roots", ["roots"], 0),
    ("verify", ["verify", "all"], 0),
    ("verify", ["verify", "all", "--inject-fault", "evs"], 1),
] + [("table", ["tables", "emit", "--which", w], 0)
     for w in ("stalks", "geomult", "repmult", "evs", "nevs", "fourier")] + [
    ("packet", ["packets", "show", "--psi", str(p)], 0) for p in range(3)
]


def main() -> int:
    cli, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for schema_name, args, expected in CASES:
        schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {str(e).splitlines()[0]}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
