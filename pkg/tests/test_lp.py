import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from tropsym import lp


def test_textbook_problem():
    # maximize 3x + 5y with x <= 4, 2y <= 12, 3x + 2y <= 18
    res = lp.maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.status == lp.OPTIMAL
    assert res.value == 36
    assert res.x == [2, 6]


def test_infeasible_and_unbounded():
    assert lp.maximize([1], [[1], [-1]], [1, -2]).status == lp.INFEASIBLE
    assert lp.maximize([1, 0], [[-1, 1]], [0]).status == lp.UNBOUNDED


def test_origin_infeasible_needs_first_phase():
    # x + y >= 2 written as -x - y <= -2, maximize -x - 2y
    res = lp.maximize([-1, -2], [[-1, -1], [1, 0]], [-2, 5])
    assert res.status == lp.OPTIMAL
    assert res.value == -2
    assert res.x == [2, 0]


def test_degenerate_cycling_example_terminates():
    # Beale's example cycles under the largest-coefficient rule
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    res = lp.maximize(c, A, [0, 0, 1])
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(1, 20)


def test_target_stops_early():
    res = lp.maximize([1, 1], [[1, 0], [0, 1]], [5, 5], target=0)
    assert res.status in (lp.REACHED, lp.OPTIMAL)
    assert res.value > 0


def test_agrees_with_floating_point_solver():
    rng = random.Random(5)
    for _ in range(150):
        n, m = rng.randint(1, 4), rng.randint(1, 6)
        c = [rng.randint(-5, 5) for _ in range(n)]
        A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-3, 8) for _ in range(m)]
        exact = lp.maximize(c, A, b)
        ref = linprog(-np.array(c, float), A_ub=np.array(A, float), b_ub=np.array(b, float),
                      bounds=[(0, None)] * n, method="highs")
        if ref.status == 2:
            assert exact.status == lp.INFEASIBLE
        elif ref.status == 3:
            assert exact.status == lp.UNBOUNDED
        else:
            assert exact.status == lp.OPTIMAL
            assert float(exact.value) == pytest.approx(-ref.fun, abs=1e-7)
            x = exact.x
            assert all(v >= 0 for v in x)
            assert all(sum(a * v for a, v in zip(row, x)) <= bi for row, bi in zip(A, b))
            assert sum(ci * v for ci, v in zip(c, x)) == exact.value
