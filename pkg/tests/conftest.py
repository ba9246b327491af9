from __future__ import annotations

import pytest

from supermf import charengine as ce

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def no_disk_cache():
    previous = ce.get_disk_cache()
    ce.set_disk_cache(None)
    yield
    ce.set_disk_cache(previous)


@pytest.fixture
def acceptance_line():
    """Record the one-line verdict of an acceptance criterion."""

    def record(number: int, ok: bool, title: str, detail: str = "") -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        _ACCEPTANCE[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[n])
