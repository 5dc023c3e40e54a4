import pytest

from qdbezout.gallery import gallery_lookup
from qdbezout.poly import Polynomial

# lines recorded by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture
def quartic():
    """z^4 + 5z^3 - 2z^2 + 3z - 4, low-to-high."""
    return Polynomial([-4, 3, -2, 5, 1])


@pytest.fixture
def quadratic():
    """z^2 - 4."""
    return Polynomial([-4, 0, 1])


@pytest.fixture(params=["disc", "cardioid", "neumann", "order3"])
def domain(request):
    return gallery_lookup(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
