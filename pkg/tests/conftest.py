import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polychi.corpus import exhaustive  # noqa: E402


@pytest.fixture(scope="session")
def corpus7():
    return list(exhaustive(7))


@pytest.fixture(scope="session")
def corpus6():
    return list(exhaustive(6))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
