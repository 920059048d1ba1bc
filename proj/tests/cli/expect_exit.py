"""Runs a command and checks its exit code."""
import subprocess
import sys


def main():
    expected, *cmd = sys.argv[1:]
    code = subprocess.run(cmd, capture_output=True).returncode
    if code != int(expected):
        sys.exit(f"expected exit code {expected}, got {code}")


if __name__ == "__main__":
    main()
