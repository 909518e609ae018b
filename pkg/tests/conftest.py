import pytest

_LINES = []


class _Recorder:
    def __init__(self, name):
        self.name = name
        self.notes = []

    def note(self, text):
        self.notes.append(text)


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    rec = _Recorder(request.node.name.removeprefix("test_"))
    yield rec
    report = getattr(request.node, "_call_report", None)
    ok = report is not None and report.passed
    detail = f" ({'; '.join(rec.notes)})" if rec.notes else ""
    line = f"{'PASS' if ok else 'FAIL'}  {rec.name}{detail}"
    _LINES.append(line)
    print(line)


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        item._call_report = report
    return report


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
