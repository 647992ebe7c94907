"""Run the CLI in-process with captured streams; shared by the CLI tests
and the golden-file regeneration script."""

import contextlib
import io
import json
import sys
from pathlib import Path

from arrcomp.cli import run

CORPUS = Path(__file__).resolve().parent / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"


def corpus_text(stem):
    return (CORPUS / f"{stem}.arr").read_text(encoding="utf-8")


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(argv)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


# golden cases: name -> (argv, corpus stem piped to stdin, or None)
GOLDEN_CASES = {
    "lattice-point": (["--json", "lattice", "-"], "point"),
    "lattice-braid2": (["--json", "lattice", "-"], "braid2"),
    "lattice-generic4": (["--json", "lattice", "-"], "generic4"),
    "charpoly-braid3": (["--json", "charpoly", "-"], "braid3"),
    "charpoly-generic4": (["--json", "charpoly", "-"], "generic4"),
    "betti-braid2": (["--json", "betti", "-"], "braid2"),
    "betti-coords3": (["--json", "betti", "-"], "coords3"),
    "betti-two-points": (["--json", "betti", "-"], "two-points"),
    "fibertype-braid3": (["--json", "fibertype", "-"], "braid3"),
    "fibertype-generic4": (["--json", "fibertype", "-"], "generic4"),
    "fibertype-shifted-center": (["--json", "fibertype", "-"], "shifted-center"),
    "fibertype-parallel-mixed": (["--json", "fibertype", "-"], "parallel-mixed"),
    "suspension-braid2": (["--json", "suspension", "-"], "braid2"),
    "suspension-full-braid2": (
        ["--json", "suspension", "--full-poset", "-"], "braid2",
    ),
    "suspension-full-coords2": (
        ["--json", "suspension", "--full-poset", "-"], "coords2",
    ),
    "lgroups-braid2": (["--json", "lgroups", "-"], "braid2"),
    "lgroups-complex-coeff": (["--json", "lgroups", "-"], "complex-coeff"),
    "lgroups-generic4-forced": (
        ["--json", "lgroups", "--force-N", "4", "-"], "generic4",
    ),
    "braid-2": (["--json", "braid", "2"], None),
    "surgery-pb-1": (["--json", "surgery-pb", "1"], None),
    "surgery-pb-2": (["--json", "surgery-pb", "2"], None),
    "surgery-pb-10": (["--json", "surgery-pb", "10"], None),
    "spf-pb-3": (["--json", "spf-pb", "3"], None),
}


def run_golden_case(name):
    """Execute one manifest entry; return (exit code, parsed envelope)."""
    argv, stem = GOLDEN_CASES[name]
    stdin_text = corpus_text(stem) if stem is not None else None
    code, out, _ = run_cli(argv, stdin_text)
    return code, json.loads(out)
