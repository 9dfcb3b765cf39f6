import pytest

from edwardsproof.identities import build_symbols, run_all


@pytest.fixture(scope="session")
def cd():
    return build_symbols("cd")


@pytest.fixture(scope="session")
def tf():
    return build_symbols("t")


@pytest.fixture(scope="session")
def full_report(cd, tf):
    return run_all(cd=cd, tf=tf)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(line(n, *RESULTS[n]))
