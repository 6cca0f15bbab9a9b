import os

import pytest

# one line per acceptance criterion, printed after the run
CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    def record(label: str, ok: bool, detail: str = ""):
        CRITERIA.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)


def pytest_configure(config):
    config.addinivalue_line("markers", "long_run: hours-scale runs, enabled with RSBEYOND_LONG=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RSBEYOND_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="set RSBEYOND_LONG=1 to run")
    for item in items:
        if "long_run" in item.keywords:
            item.add_marker(skip)
