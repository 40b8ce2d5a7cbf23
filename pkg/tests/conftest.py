import io

import pytest
from hypothesis import settings

from avsieve.cli import run

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return _run


_criteria: dict[int, tuple[str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    _criteria[mark.args[0]] = ("PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, dur = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {status} ({dur:.2f}s)")
