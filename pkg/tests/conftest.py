import pytest

from pzeta.primes import sieve


@pytest.fixture(scope="session")
def table():
    """Prime table up to 1e6, the CLI default."""
    return sieve(10**6)


@pytest.fixture(scope="session")
def table_1e8():
    return sieve(10**8)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    """Log one PASS/FAIL line for the acceptance summary, then assert."""
    def _record(label, passed, detail):
        _ACCEPTANCE.append(f"{'PASS' if passed else 'FAIL'}  {label}: {detail}")
        assert passed, f"{label}: {detail}"
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
