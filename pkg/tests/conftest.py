import random

import pytest
from hypothesis import strategies as st

from bupoly import Poly, parse_poly
from bupoly.mersenne import BUP_NAMES, catalog_polys

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def P(text: str) -> Poly:
    return parse_poly(text, catalog_polys())


def random_poly(rng: random.Random, max_degree: int, nonzero: bool = True) -> Poly:
    while True:
        m = rng.getrandbits(rng.randint(1, max_degree + 1))
        if m or not nonzero:
            return Poly(m)


def polys(max_degree: int = 64, nonzero: bool = False):
    lo = 1 if nonzero else 0
    return st.integers(min_value=lo, max_value=(1 << (max_degree + 1)) - 1).map(Poly)


@pytest.fixture(scope="session")
def catalog():
    return catalog_polys()


@pytest.fixture(scope="session")
def bup_catalog(catalog):
    return {name: catalog[name] for name in BUP_NAMES}
