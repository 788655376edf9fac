from fractions import Fraction

import pytest

from tropsym.canon import rational_equiv
from tropsym.errors import ParseError
from tropsym.expr import (
    Add,
    Const,
    Max,
    Min,
    Neg,
    Var,
    eval_expr,
    normalize_to_rational,
    parse_expr,
    parse_expr_info,
)
from tropsym.poly import TropPoly, TropRational, eval_rational

from conftest import random_point


def test_parse_min_of_sums():
    assert parse_expr("min(x1+x1, x2+x2)") == Min(
        (Add((Var(0), Var(0))), Add((Var(1), Var(1))))
    )


def test_parse_negated_min():
    ast = parse_expr("-min(x2+x1, x1)")
    assert ast == Neg(Min((Add((Var(1), Var(0))), Var(0))))


def test_parse_block_variable_and_fraction():
    ast, n, block = parse_expr_info("3/2 + x[1,2]")
    assert ast == Add((Const(Fraction(3, 2)), Var(1)))
    assert (n, block) == (2, True)


def test_binary_minus_is_negation():
    assert parse_expr("x1 - x2") == Add((Var(0), Neg(Var(1))))


@pytest.mark.parametrize(
    "text,pos",
    [("min(x1", 6), ("x1 + ", 4), ("x1 $ x2", 3), ("min(x1,)", 7), ("x1 x2", 3)],
)
def test_syntax_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == pos


def test_unknown_names_and_bad_indices():
    with pytest.raises(ParseError, match="unknown variable name"):
        parse_expr("y1 + x1")
    with pytest.raises(ParseError):
        parse_expr("x0")
    with pytest.raises(ParseError):
        parse_expr("x[1,3]")
    with pytest.raises(ParseError):
        parse_expr("x3", nvars=2)
    with pytest.raises(ParseError):
        parse_expr("x1 + x[1,1]")


def test_constant_and_max_normalization():
    r = normalize_to_rational(Const(Fraction(5)), 2)
    assert r.num == TropPoly.constant(2, 5)
    assert r.den == TropPoly.constant(2, 0)
    # max(a, b) = -min(-a, -b) = (x1 x2) / (x1 ⊕ x2)
    r = normalize_to_rational(Max((Var(0), Var(1))), 2)
    assert r.num == TropPoly.from_terms(2, [(0, (1, 1))])
    assert r.den == TropPoly.from_terms(2, [(0, (1, 0)), (0, (0, 1))])
    assert eval_rational(r, [Fraction(2), Fraction(7)]) == 7
    neg_min = TropRational(TropPoly.constant(2, 0), r.den)
    assert not rational_equiv(r, neg_min)


def test_nested_example_is_equivalent_to_its_fifth_line():
    """The nested expression agrees with min(3x2, 2x2, x1+x2, x1, x2) - min(2x2+x1, x1+x2)."""
    r = normalize_to_rational(parse_expr("min(x2 - x1, -x2, -min(x2 + x1, x1))"), 2)
    line = TropRational(
        TropPoly.from_terms(2, [(0, (0, 3)), (0, (0, 2)), (0, (1, 1)), (0, (1, 0)), (0, (0, 1))]),
        TropPoly.from_terms(2, [(0, (1, 2)), (0, (1, 1))]),
    )
    assert rational_equiv(r, line)
    # dropping the x1*x2 numerator term changes the value at (-3, -1)
    short = TropRational(
        TropPoly.from_terms(2, [(0, (0, 3)), (0, (1, 0)), (0, (0, 1))]), line.den
    )
    x = (Fraction(-3), Fraction(-1))
    assert eval_rational(r, x) == 1
    assert eval_rational(short, x) == 2


TEXTS = [
    "min(x2 - x1, -x2, -min(x2 + x1, x1))",
    "max(x1, x2 + 1/2) - min(x1 + x1, 3)",
    "-max(min(x1, x2), x3 - 2) + x2",
    "min(max(x1, x2, x3), x1 + x2 - x3, 7/3)",
    "max(-x1, -min(x2, -x3)) + min(x1 + x2, x3)",
]


@pytest.mark.parametrize("text", TEXTS)
def test_normalization_matches_direct_evaluation(text, rng):
    ast, n, _ = parse_expr_info(text, 3)
    r = normalize_to_rational(ast, n)
    assert r.num.is_normalized() and r.den.is_normalized()
    for _ in range(100):
        x = random_point(rng, n)
        assert eval_rational(r, x) == eval_expr(ast, x)


def test_random_trees_normalize_exactly(rng):
    def tree(depth):
        if depth == 0 or rng.random() < 0.3:
            if rng.random() < 0.3:
                return Const(Fraction(rng.randint(-3, 3), rng.choice([1, 2])))
            return Var(rng.randrange(2))
        kind = rng.choice([Add, Neg, Min, Max])
        if kind is Neg:
            return Neg(tree(depth - 1))
        return kind(tuple(tree(depth - 1) for _ in range(rng.randint(1, 3))))

    for _ in range(60):
        ast = tree(3)
        r = normalize_to_rational(ast, 2)
        for _ in range(5):
            x = random_point(rng, 2)
            assert eval_rational(r, x) == eval_expr(ast, x)
