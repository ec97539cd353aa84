import io
import sys

import pytest


@pytest.fixture
def run_cli(monkeypatch, capsys):
    """Run the command line entry point with captured streams.

    Returns (exit_code, stdout, stderr); `stdin_text` feeds the command's
    standard input.
    """
    from centrostoch.cli import run_command

    def run(argv, stdin_text=""):
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
        code = run_command(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
