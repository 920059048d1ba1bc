"""Runs a galinv subcommand twice with --json and compares the reports without timings."""
import json
import subprocess
import sys


def report(cmd):
    out = json.loads(subprocess.run(cmd, capture_output=True, text=True).stdout)
    out.pop("timing")
    return out


def main():
    cmd = [*sys.argv[1:], "--json"]
    if report(cmd) != report(cmd):
        sys.exit("reports differ between runs")
    print("deterministic")


if __name__ == "__main__":
    main()
