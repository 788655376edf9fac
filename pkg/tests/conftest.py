import random
from fractions import Fraction

import pytest

from tropsym.poly import TropPoly

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_poly(rng, nvars, count, lo=-3, hi=3, coeffs=(-4, 4), halves=False):
    terms = []
    for _ in range(count):
        c = Fraction(rng.randint(*coeffs), rng.choice([1, 2]) if halves else 1)
        terms.append((c, [rng.randint(lo, hi) for _ in range(nvars)]))
    return TropPoly.from_terms(nvars, terms)


def random_point(rng, nvars, R=20, denoms=(1, 2, 3)):
    return tuple(Fraction(rng.randint(-R, R), rng.choice(denoms)) for _ in range(nvars))


@pytest.fixture
def rng():
    return random.Random(20261016)
