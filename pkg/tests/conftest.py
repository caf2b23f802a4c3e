import sys

import pytest


@pytest.fixture(autouse=True)
def _no_shared_cache(monkeypatch):
    # tests opt in to the on-disk a_ell cache explicitly
    monkeypatch.delenv("TWINCURVE_CACHE_DIR", raising=False)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
