import sys

import pytest

from picount import oracle


@pytest.fixture(scope="session")
def tables_1e4():
    return oracle.sieve_primes(10_000)


@pytest.fixture(scope="session")
def tables_1e5():
    return oracle.sieve_primes(100_000)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "CRITERION_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
