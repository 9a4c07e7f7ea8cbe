import pytest

from curvepoincare.newton import germ_diagram
from curvepoincare.poly import parse_poly

F_STAR_TEXT = "y^5 + x*y^2 + x^2*y + x^5"


@pytest.fixture
def f_star():
    return parse_poly(F_STAR_TEXT)


@pytest.fixture
def f_star_diagram(f_star):
    return germ_diagram(f_star)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
