from __future__ import annotations

import pytest

import acceptance_report
from trifrac import ResidueClass
from trifrac.intmath import gcd


def pytest_terminal_summary(terminalreporter):
    if acceptance_report.RESULTS:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in acceptance_report.RESULTS:
            terminalreporter.write_line(line)


def smallest_coprime_modulus(m: int, n0: int) -> int:
    """Smallest n1 >= 2 making (m, n0, n1) a valid residue class."""
    n1 = 2
    while gcd(n1, n0) != 1 or gcd(n1, m) != 1:
        n1 += 1
    return n1


def build_grid(m_range=range(4, 9), n1_max=60) -> list[ResidueClass]:
    grid = []
    for m in m_range:
        for n1 in range(2, n1_max + 1):
            if gcd(m, n1) != 1:
                continue
            for n0 in range(1, n1):
                if gcd(n0, n1) == 1:
                    grid.append(ResidueClass(m, n0, n1))
    return grid


@pytest.fixture(scope="session")
def full_grid() -> list[ResidueClass]:
    """The m in {4..8}, n1 <= 60 grid used by the sweep-style checks."""
    return build_grid()


@pytest.fixture(scope="session")
def small_grid() -> list[ResidueClass]:
    return build_grid(n1_max=20)
