import sys
from collections import defaultdict
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion (tests named test_c<k>_*)."""
    buckets: dict[str, dict[str, int]] = defaultdict(lambda: {"passed": 0, "failed": 0})
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            name = report.nodeid.rsplit("::", 1)[-1]
            if "test_acceptance" in report.nodeid and name.startswith("test_c"):
                crit = name.split("_")[1]
                buckets[crit][outcome] += 1
    if not buckets:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(buckets, key=lambda c: int(c[1:])):
        counts = buckets[crit]
        total = counts["passed"] + counts["failed"]
        verdict = "PASS" if counts["failed"] == 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {crit[1:]}: {verdict} ({counts['passed']}/{total} checks)"
        )
