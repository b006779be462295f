import os

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def mp800():
    """mpmath at 800 bits, restored afterwards."""
    old = mpmath.mp.prec
    mpmath.mp.prec = 800
    try:
        yield mpmath.mp
    finally:
        mpmath.mp.prec = old


def to_mpf(x):
    """BigFloat -> mpmath.mpf without going through decimal strings."""
    return mpmath.mpf(x._mpf)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
