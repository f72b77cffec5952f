import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion: call with (label, detail) once the checks ran."""
    state = {}

    def record(label, detail=""):
        state["label"], state["detail"] = label, detail

    yield record
    report = getattr(request.node, "rep_call", None)
    passed = report is not None and report.passed
    _acceptance[request.node.name] = (
        f"{'PASS' if passed else 'FAIL'}  {state.get('label', request.node.name)}",
        state.get("detail", ""),
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        line, detail = _acceptance[name]
        terminalreporter.write_line(f"{line}  {detail}".rstrip())
