#!/usr/bin/env python3
"""End-to-end checks of the command-line tool. Invoked by ctest with the
binary path as the only argument."""

import csv
import json
import subprocess
import sys
import tempfile
from pathlib import Path

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data"


def run(binary, *args, cwd):
    return subprocess.run([binary, *args], cwd=cwd, capture_output=True, text=True)


def check(condition, message):
    if not condition:
        print(f"FAIL: {message}")
        sys.exit(1)
    print(f"ok: {message}")


def main():
    binary = sys.argv[1]
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        proc = run(binary, "generate", "--genes", "60", "--experiments", "10",
                   "--modules", "4", "--classes", "2", "--noise", "0.3",
                   "--seed", "42", "--out", "data", cwd=tmp)
        check(proc.returncode == 0, f"generate succeeds: {proc.stderr.strip()}")
        check((tmp / "data/expression.tsv").exists(), "expression.tsv written")
        check((tmp / "data/annotations.tsv").exists(), "annotations.tsv written")

        proc = run(binary, "run", "--expression", "data/expression.tsv",
                   "--annotations", "data/annotations.tsv", "--out", "results", cwd=tmp)
        check(proc.returncode == 0, f"default run succeeds: {proc.stderr.strip()}")
        check((tmp / "results/report.json").exists(), "report.json written")
        with open(tmp / "results/report.csv") as fh:
            rows = list(csv.reader(fh))
        check(len(rows) == 2 and len(rows[0]) == 5,
              "report.csv has four method columns and one accuracy row")
        report = json.loads((tmp / "results/report.json").read_text())
        check(report["schema_version"] == 1, "report schema version present")
        check(len(report["methods"]) == 4, "all four methods reported")
        check((tmp / "results/assignments.tsv").exists(), "assignments.tsv written")
        check((tmp / "results/adjacency.tsv").exists(), "adjacency.tsv written")

        proc = run(binary, "run", "--expression", "data/expression.tsv",
                   "--annotations", "data/annotations.tsv", "--out", "results_b", cwd=tmp)
        check(proc.returncode == 0, "second default run succeeds")
        check((tmp / "results/report.csv").read_bytes() ==
              (tmp / "results_b/report.csv").read_bytes(),
              "default run is bit-reproducible")

        proc = run(binary, "run", "--expression", "data/expression.tsv",
                   "--annotations", "data/annotations.tsv",
                   "--methods", "nonsense", "--out", "bad", cwd=tmp)
        check(proc.returncode != 0, "unknown method fails")
        check("unknown method" in proc.stderr, "unknown method is named")
        check(not (tmp / "bad/report.json").exists(), "no partial report for a bad run")

        proc = run(binary, "run", "--expression", "data/expression.tsv",
                   "--annotations", "data/annotations.tsv",
                   "--alpha", "1.0", "--out", "bad2", cwd=tmp)
        check(proc.returncode != 0, "alpha = 1.0 rejected")
        check("(0,1)" in proc.stderr, "rejection cites the (0,1) requirement")

        proc = run(binary, "run", "--expression", "missing.tsv",
                   "--annotations", "data/annotations.tsv", cwd=tmp)
        check(proc.returncode != 0 and "missing.tsv" in proc.stderr,
              "missing input file is named")

        proc = run(binary, "build", "--expression", "data/expression.tsv",
                   "--out", "artifacts", cwd=tmp)
        check(proc.returncode == 0, "build succeeds")
        for name in ("assignments.tsv", "incidence.tsv", "adjacency.tsv"):
            check((tmp / "artifacts" / name).exists(), f"{name} written by build")

        proc = run(binary, "inspect", "--expression", "data/expression.tsv", cwd=tmp)
        check(proc.returncode == 0, "inspect succeeds")
        check("hypergraph:" in proc.stdout and "spectrum" in proc.stdout,
              "inspect prints degree and spectrum summaries")

        # Committed fixture: the default run must reproduce it byte for byte.
        proc = run(binary, "generate", "--genes", "60", "--experiments", "10",
                   "--modules", "4", "--classes", "2", "--noise", "0.3",
                   "--seed", "42", "--out", "regen", cwd=tmp)
        check(proc.returncode == 0, "fixture regeneration succeeds")
        for name in ("expression.tsv", "annotations.tsv"):
            committed = (FIXTURE_DIR / f"sample_{name}").read_bytes()
            regenerated = (tmp / "regen" / name).read_bytes()
            check(committed == regenerated, f"committed fixture matches regenerated {name}")

    print("cli: all checks passed")


if __name__ == "__main__":
    main()
