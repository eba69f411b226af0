import os
import sys

from hypothesis import settings

# first calls pay for numba compilation and oracle caches
settings.register_profile("default", deadline=None)
settings.load_profile("default")

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
