import itertools
from fractions import Fraction
from math import comb

import pytest

from tropsym.blocksym import (
    Barcode,
    BlockMonomial,
    DecompositionTrace,
    Gen2Expr,
    OrbitRep,
    compare_s,
    correction_terms,
    decompose2_symmetric,
    decompose2_symmetric_rational,
    elementary2,
    enumerate_orbits,
    gate_expression,
    is_2symmetric,
    non_generation_witness,
    orbit_fingerprint2,
    parse_orbit_label,
    row_permute,
    symmetrize2,
)
from tropsym.canon import is_essential, minimal_representation, poly_equiv, rational_equiv
from tropsym.errors import DimensionError, DomainError, NotSymmetricError, ParseError, ResourceError
from tropsym.poly import TropPoly, TropRational, eval_poly, poly_add

from conftest import random_point, random_poly


def P(n, *terms):
    return TropPoly.from_terms(n, terms)


def rows_monomials(n, max_sum):
    """All n x 2 nonnegative exponent matrices with entry sum <= max_sum, up to row order."""
    seen = set()
    for exps in itertools.product(range(max_sum + 1), repeat=2 * n):
        if sum(exps) <= max_sum:
            b = BlockMonomial.from_exps(exps).canonical()
            seen.add(b.rows)
    return [BlockMonomial(r) for r in sorted(seen)]


# x11, x12, x21, x22 are coordinates 0..3
def test_orbit_counts():
    assert len(enumerate_orbits(1)) == 3
    assert {o.label for o in enumerate_orbits(1)} == {"[(1,0)]", "[(0,1)]", "[(1,1)]"}
    assert len(enumerate_orbits(2)) == 9
    assert len(enumerate_orbits(3)) == 19
    for n in range(1, 7):
        assert len(enumerate_orbits(n)) == comb(n + 3, 3) - 1
        assert len(set(enumerate_orbits(n))) == len(enumerate_orbits(n))
    with pytest.raises(ResourceError):
        enumerate_orbits(9)
    with pytest.raises(DomainError):
        enumerate_orbits(0)


def test_two_row_orbit_order_and_labels():
    labels = [o.label for o in enumerate_orbits(2)]
    assert labels == [
        "[(1,0)]", "[(0,1)]", "[(1,1)]", "[(1,0)^2]", "[(1,0)(0,1)]",
        "[(0,1)^2]", "[(1,1)(1,0)]", "[(1,1)(0,1)]", "[(1,1)^2]",
    ]


def test_orbit_rep_is_row_order_invariant(rng):
    for _ in range(100):
        n = rng.randint(1, 5)
        rows = [rng.choice([(0, 0), (1, 0), (0, 1), (1, 1)]) for _ in range(n)]
        if not any(any(r) for r in rows):
            continue
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert OrbitRep(tuple(rows)) == OrbitRep(tuple(shuffled))
        assert parse_orbit_label(OrbitRep(tuple(rows)).label, n) == OrbitRep(tuple(rows))


def test_label_parsing():
    assert parse_orbit_label("[(1,0)(1,1)]", 2) == parse_orbit_label("[(1,1) (1,0)]", 2)
    assert parse_orbit_label("[(1,0)(0,0)]", 2) == parse_orbit_label("[(1,0)]", 2)
    assert parse_orbit_label("[(0,1)^3]", 3).rows == ((0, 1),) * 3
    with pytest.raises(ParseError):
        parse_orbit_label("(1,0)", 2)
    with pytest.raises(ParseError):
        parse_orbit_label("[(2,0)]", 2)
    with pytest.raises(DimensionError):
        parse_orbit_label("[(1,0)^3]", 2)
    with pytest.raises(DomainError):
        OrbitRep(((0, 0), (0, 0)))


def test_displayed_two_row_generators():
    assert elementary2("[(1,1)(1,1)]", 2) == P(4, (0, (1, 1, 1, 1)))
    assert elementary2("[(1,0)(1,1)]", 2) == P(4, (0, (1, 0, 1, 1)), (0, (1, 1, 1, 0)))
    assert elementary2("[(1,1)(0,1)]", 2) == P(4, (0, (1, 1, 0, 1)), (0, (0, 1, 1, 1)))
    assert elementary2("[(1,0)(0,0)]", 2) == P(4, (0, (1, 0, 0, 0)), (0, (0, 0, 1, 0)))
    for o in enumerate_orbits(2):
        g = elementary2(o)
        assert minimal_representation(g) == g


def test_symmetrize2_examples():
    assert symmetrize2(P(4, (0, (1, 0, 0, 1)))) == P(4, (0, (1, 0, 0, 1)), (0, (0, 1, 1, 0)))
    assert symmetrize2(P(4, (0, (1, 0, 0, 0)))) == elementary2("[(1,0)]", 2)
    with pytest.raises(DimensionError):
        symmetrize2(P(3, (0, (1, 0, 0))))


def test_elementary_generators_are_fixed_points():
    for n in range(1, 4):
        for o in enumerate_orbits(n):
            g = elementary2(o)
            assert symmetrize2(g) == g


def test_symmetrize2_laws(rng):
    for _ in range(30):
        n = rng.randint(1, 3)
        p, q = random_poly(rng, 2 * n, 2, lo=0), random_poly(rng, 2 * n, 2, lo=0)
        sp = symmetrize2(p)
        assert minimal_representation(symmetrize2(sp)) == minimal_representation(sp)
        assert minimal_representation(symmetrize2(poly_add(p, q))) == minimal_representation(
            poly_add(sp, symmetrize2(q))
        )
        a = Fraction(rng.randint(-6, 6), 3)
        assert poly_equiv(sp.shift(a), symmetrize2(p.shift(a)))
        assert is_2symmetric(sp)


def test_row_swap_not_column_swap():
    # swapping the two coordinates inside each row is not a symmetry
    p = elementary2("[(1,0)]", 2)
    assert is_2symmetric(p)
    assert not poly_equiv(p, p.permute((1, 0, 3, 2)))
    assert row_permute(P(4, (0, (1, 2, 3, 4))), (1, 0)) == P(4, (0, (3, 4, 1, 2)))


def test_order_example():
    m1 = BlockMonomial(((1, 1), (1, 0)))
    m2 = BlockMonomial(((1, 2), (0, 0)))
    assert compare_s(m2, m1) == 1
    assert compare_s(m1, m2) == -1
    assert compare_s(m1, m1) == 0
    assert compare_s(BlockMonomial(((3, 0), (0, 0))), BlockMonomial(((1, 1), (0, 0)))) == 1


def test_order_axioms(rng):
    def rand_mono():
        return BlockMonomial(tuple((rng.randint(0, 2), rng.randint(0, 2)) for _ in range(2)))

    for _ in range(2000):
        a, b, c = rand_mono(), rand_mono(), rand_mono()
        ab = compare_s(a, b)
        assert ab == -compare_s(b, a)
        assert (ab == 0) == (a.exps == b.exps)
        if ab > 0 and compare_s(b, c) > 0:
            assert compare_s(a, c) > 0


def test_correction_terms_shape():
    for m in rows_monomials(2, 4) + rows_monomials(3, 3):
        own = m.canonical().rows
        for p in correction_terms(m):
            assert p.deg == m.deg
            assert p.spread >= m.spread
            assert p.rows != own


def test_decompose_base_cases():
    zero = decompose2_symmetric(BlockMonomial(((0, 0), (0, 0))))
    assert zero.expand().num == TropPoly.constant(4, 0)
    g = decompose2_symmetric(BlockMonomial(((1, 0), (1, 1))))
    assert g == Gen2Expr.generator(parse_orbit_label("[(1,1)(1,0)]", 2))
    # all positive entries equal on a {0,1} support: a plain generator power
    g = decompose2_symmetric(BlockMonomial(((3, 3), (0, 3))))
    assert g == Gen2Expr.generator(parse_orbit_label("[(1,1)(0,1)]", 2), 3)


def test_decompose_square_times_neighbour():
    m = BlockMonomial(((2, 1), (0, 0)))
    g = decompose2_symmetric(m)
    target = P(4, (0, (2, 1, 0, 0)), (0, (0, 0, 2, 1)))
    assert symmetrize2(m.poly()) == target
    assert rational_equiv(g.expand(), TropRational.from_poly(target))


def test_decompose_exhaustive_two_rows():
    for m in rows_monomials(2, 4):
        trace = DecompositionTrace()
        g = decompose2_symmetric(m, trace)
        assert rational_equiv(g.expand(), TropRational.from_poly(symmetrize2(m.poly())))
        for call in trace.calls:
            if call["parent"] is not None:
                assert compare_s(BlockMonomial(call["rows"]), BlockMonomial(call["parent"])) < 0


def test_decompose_three_rows_by_evaluation(rng):
    for m in rows_monomials(3, 3):
        g = decompose2_symmetric(m)
        target = symmetrize2(m.poly())
        for _ in range(25):
            x = random_point(rng, 6, R=10)
            assert g.evaluate(x) == eval_poly(target, x)


def test_decompose_caps_and_domain():
    with pytest.raises(ResourceError):
        decompose2_symmetric(BlockMonomial(((1, 0),) * 4))
    with pytest.raises(ResourceError):
        decompose2_symmetric(BlockMonomial(((3, 3), (0, 0))), max_degree=5)
    with pytest.raises(DomainError):
        BlockMonomial(((-1, 0), (0, 0)))


def test_coefficient_is_carried():
    m = BlockMonomial(((2, 1), (1, 0)), Fraction(5, 2))
    g = decompose2_symmetric(m)
    assert rational_equiv(g.expand(), TropRational.from_poly(symmetrize2(m.poly())))


def test_gate_expression_evaluates_to_the_orbit_min(rng):
    for rows in [((2, 1), (0, 0)), ((2, 0), (0, 1)), ((1, 2), (1, 0)), ((2, 1), (1, 0), (0, 0))]:
        n = len(rows)
        g = Gen2Expr.laurent(n, gate_expression(rows))
        target = symmetrize2(BlockMonomial(rows).poly())
        for _ in range(60):
            x = random_point(rng, 2 * n, R=8)
            assert g.evaluate(x) == eval_poly(target, x)


def test_rational_decomposition():
    e10 = elementary2("[(1,0)]", 2)
    e01 = elementary2("[(0,1)]", 2)
    r = TropRational(e10, e01)
    g = decompose2_symmetric_rational(r)
    assert rational_equiv(g.expand(), r)
    r = TropRational.from_poly(symmetrize2(P(4, (0, (2, 0, 0, 1)))))
    assert rational_equiv(decompose2_symmetric_rational(r).expand(), r)


def test_rational_with_negative_exponents(rng):
    for _ in range(10):
        num = symmetrize2(random_poly(rng, 4, 2, lo=-1, hi=2))
        den = symmetrize2(random_poly(rng, 4, 2, lo=-1, hi=2))
        r = TropRational(num, den)
        assert rational_equiv(decompose2_symmetric_rational(r).expand(), r)


def test_non_symmetric_block_input():
    with pytest.raises(NotSymmetricError) as info:
        decompose2_symmetric_rational(P(4, (0, (1, 0, 0, 0))))
    err = info.value
    p = P(4, (0, (1, 0, 0, 0)))
    assert eval_poly(p, err.point) != eval_poly(row_permute(p, err.permutation), err.point)


def test_fingerprint_examples():
    a = orbit_fingerprint2(Barcode(((0, 1), (2, 3))))
    b = orbit_fingerprint2(Barcode(((2, 3), (0, 1))))
    c = orbit_fingerprint2(Barcode(((0, 3), (2, 1))))
    assert a == b
    assert a != c
    assert [k for k in a if a[k] != c[k]]
    assert orbit_fingerprint2(Barcode(((Fraction(1, 2), 4),))) == {
        "[(1,0)]": Fraction(1, 2), "[(0,1)]": 4, "[(1,1)]": Fraction(9, 2),
    }
    with pytest.raises(DomainError):
        Barcode((("inf", 1),))


def test_fingerprint_separates_barcodes(rng):
    for _ in range(500):
        n = rng.randint(1, 4)
        xs = [(Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2))) for _ in range(n)]
        if rng.random() < 0.5:
            ys = xs[:]
            rng.shuffle(ys)
            if rng.random() < 0.4:
                # keep both column multisets but change the pairing
                i, j = rng.randrange(n), rng.randrange(n)
                ys[i], ys[j] = (ys[i][0], ys[j][1]), (ys[j][0], ys[i][1])
        else:
            ys = [(Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2))) for _ in range(n)]
        same = sorted(xs) == sorted(ys)
        assert (orbit_fingerprint2(Barcode(tuple(xs))) == orbit_fingerprint2(Barcode(tuple(ys)))) == same


def test_witness_two():
    rep = non_generation_witness(2)
    w = rep["witnesses"][1]
    x11, x12, x21, x22 = w["point"]
    assert x11 - x21 == 1 and x22 - x12 == 2
    assert w["min"] == 1
    assert rep["essential"] == [True, True]
    assert rep["ok"]


@pytest.mark.parametrize("d", [2, 3, 4, 7])
def test_witness_points(d):
    rep = non_generation_witness(d)
    assert [w["a"] for w in rep["witnesses"]] == list(range(d))
    poly = P(4, (0, (d, 1, 0, 0)), (0, (0, 0, d, 1)))
    for w in rep["witnesses"]:
        x11, x12, x21, x22 = w["point"]
        a = w["a"]
        assert min((d - a) * (x11 - x21), a * (x21 - x11) + x22 - x12) > 0
        cross = a * x11 + x12 + (d - a) * x21
        assert cross < eval_poly(poly, w["point"])
    for j in range(2):
        assert is_essential(poly, j).essential
    with pytest.raises(DomainError):
        non_generation_witness(1)


def test_cross_terms_can_tie_the_spread():
    m = BlockMonomial(((1, 1), (0, 2)))
    ties = [p for p in correction_terms(m) if p.spread == m.spread]
    assert ties and any(compare_s(p, m) > 0 for p in ties)
