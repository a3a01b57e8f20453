import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Time a block against its bound and record a one-line verdict for the summary."""

    @contextmanager
    def run(number: int, title: str, bound: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            _ACCEPTANCE[number] = f"FAIL  {number:2d}. {title} ({elapsed:.3f}s, bound {bound:g}s): {type(exc).__name__}"
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed < bound
        _ACCEPTANCE[number] = f"{'PASS' if ok else 'FAIL'}  {number:2d}. {title} ({elapsed:.3f}s, bound {bound:g}s)"
        assert ok, f"took {elapsed:.3f}s, bound is {bound}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
