from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Time a block and record one PASS/FAIL line for the terminal summary."""

    @contextmanager
    def run(label: str, budget: float):
        start = time.perf_counter()
        info: dict[str, str] = {}
        ok = False
        try:
            yield info
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"{label} took {elapsed:.1f} s, budget {budget:.0f} s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            detail = f"  {info['detail']}" if "detail" in info else ""
            line = f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f} s / {budget:.0f} s){detail}"
            _LINES.append(line)
            print(line)

    return run


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
