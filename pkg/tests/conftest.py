import csv
import random
from pathlib import Path

import pytest

from bridgepass.codecs import parse_diagram
from bridgepass.fixtures import all_fixtures, table_diagrams
from bridgepass.passes import inflate

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fixtures():
    return all_fixtures()


@pytest.fixture(scope="session")
def trefoil(fixtures):
    return fixtures["trefoil"]


@pytest.fixture(scope="session")
def table():
    return table_diagrams()


@pytest.fixture(scope="session")
def knotinfo_jones():
    with open(DATA / "knotinfo_jones.csv", newline="") as fh:
        return {row["name"]: row["jones_polynomial"] for row in csv.DictReader(fh)}


def random_inflations(count, seed=7):
    """Random nontrivial table or fixture diagrams with 1..5 spiral kinks added."""
    rng = random.Random(seed)
    pool = [d for d in all_fixtures().values() if d.c] + [d for _, d in table_diagrams()[:20]]
    return [inflate(rng.choice(pool), rng.randint(1, 5)) for _ in range(count)]


# -- acceptance summary --------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    # a setup error also marks the criterion as failed
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        n, title = m.args
        _CRITERIA[n] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
