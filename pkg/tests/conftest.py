import pytest

from inclics.scheme_core import FatComponent, FatSchemeSpec, LinearSubspace


def pt(*coords):
    return LinearSubspace.point(coords)


def fat(n, *pairs):
    """FatSchemeSpec from (subspace, multiplicity) pairs."""
    return FatSchemeSpec(n, [FatComponent(s, m) for s, m in pairs])


@pytest.fixture
def three_general_points():
    return [pt(1, 2, 3), pt(1, 5, -1), pt(2, 7, 1)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
