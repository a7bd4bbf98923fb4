import pytest

from parity600.constructions import default_constructions
from parity600.facets import default_facets
from parity600.polytope import default_polytope
from parity600.search import search

ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def P():
    return default_polytope()


@pytest.fixture(scope="session")
def F():
    return default_facets()


@pytest.fixture(scope="session")
def C():
    return default_constructions()


@pytest.fixture(scope="session")
def proofs_26_13():
    return search((26, 13))


@pytest.fixture(scope="session")
def proofs_30_15():
    return search((30, 15))


@pytest.fixture(scope="session")
def global_bound(proofs_26_13):
    from parity600.contextuality import global_bound as gb

    return gb(proofs_26_13)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
