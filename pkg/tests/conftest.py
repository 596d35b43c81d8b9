import numpy as np
import pytest

_RESULTS: list[tuple[int, str, bool, str]] = []


def record(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}" + (f" ({detail})" if detail else "")
    print(line)
    _RESULTS.append((number, name, ok, detail))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(_RESULTS):
        tail = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}{tail}")
