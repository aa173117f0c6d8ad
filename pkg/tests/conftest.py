import pytest

from qmacd.polyring import XPoly


@pytest.fixture
def x2():
    """x_1, x_2 in two variables."""
    return XPoly.variable(2, 1), XPoly.variable(2, 2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])
