"""Runs a galinv subcommand with --json and validates the report against the schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    schema_path, binary, *args = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"exit code {proc.returncode}: {proc.stderr}")
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    if report["pass"] != (proc.returncode == 0):
        sys.exit("exit code does not match the pass field")
    print(f"{' '.join(args)}: {len(report['checks'])} checks, schema ok")


if __name__ == "__main__":
    main()
