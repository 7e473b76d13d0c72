"""Shared fixtures: oracle import path and the acceptance-criteria recorder."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))


def pytest_configure(config):
    # Scans at the exact interval limits hit even-multiplicity zeros on
    # purpose; the informative warning is noise in test output.
    config.addinivalue_line(
        "filterwarnings", "ignore::gradnotch.eigensolver.NoSignChange")


class AcceptanceRecorder:
    """Collects one pass/fail row per acceptance criterion."""

    def __init__(self):
        self.rows = []

    def record(self, number: int, label: str, passed, detail: str = ""):
        self.rows.append((int(number), label, bool(passed), detail))
        return bool(passed)


_RECORDER = AcceptanceRecorder()


@pytest.fixture(scope="session")
def acceptance() -> AcceptanceRecorder:
    return _RECORDER


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RECORDER.rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed, detail in sorted(_RECORDER.rows):
        tag = "PASS" if passed else "FAIL"
        line = f"[{tag}] criterion {number}: {label}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
