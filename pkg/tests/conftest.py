import pytest

from ksforge.enumeration import enumerate_parity_proofs, kernel_catalog
from ksforge.geometry import default_geometry

EQ1_BASES = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (1, 2, 3, 4, 13, 14, 15, 16),
    (1, 2, 5, 6, 21, 22, 23, 24),
    (1, 3, 5, 7, 29, 30, 31, 32),
    (2, 3, 5, 8, 33, 34, 35, 36),
    (9, 10, 13, 14, 19, 20, 23, 24),
    (9, 11, 13, 15, 27, 28, 31, 32),
    (10, 11, 13, 16, 33, 35, 37, 40),
    (17, 19, 21, 23, 26, 28, 30, 32),
    (17, 20, 22, 23, 35, 36, 37, 39),
    (26, 27, 29, 32, 34, 35, 39, 40),
)

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite tests/golden from current output")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture(scope="session")
def geom():
    return default_geometry()


@pytest.fixture(scope="session")
def eq1_bids(geom):
    """Bids of the eleven identity resolutions in the worked 36-ray proof."""
    lookup = {tuple(geom[b].sorted_rays()): b for b in geom.bids}
    return [lookup[rays] for rays in EQ1_BASES]


@pytest.fixture(scope="session")
def catalog(geom):
    return enumerate_parity_proofs(geom)


@pytest.fixture(scope="session")
def kcatalog(geom):
    return kernel_catalog(geom)


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")
