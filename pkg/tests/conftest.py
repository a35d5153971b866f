# tests/conftest.py
import io
from contextlib import redirect_stderr, redirect_stdout

from hypothesis import settings

from nilmult.cli.main import main

settings.register_profile("nilmult", max_examples=60, deadline=None)
settings.load_profile("nilmult")


def run_cli(argv):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()
