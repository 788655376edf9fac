"""Symmetrization, elementary symmetric tropical polynomials and decomposition.

Every symmetric tropical polynomial (Laurent exponents allowed) is a tropical
polynomial in ``e_1, ..., e_n`` and ``e_n^-1``. :func:`decompose_symmetric`
produces that expression constructively: clear negative exponents with a
power of ``e_n``, split into symmetrized monomials, and read each one off its
sorted exponent vector, since

    Sym(x_1^{i_1} ... x_n^{i_n}) = e_1^{i_1 - i_2} ⊙ e_2^{i_2 - i_3} ⊙ ... ⊙ e_n^{i_n}

for ``i_1 >= i_2 >= ... >= i_n >= 0``.
"""
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .canon import poly_equiv, rational_equiv
from .errors import DimensionError, DomainError, NotSymmetricError, ResourceError
from .poly import (
    TropPoly,
    TropRational,
    frobenius_pow,
    poly_mul,
)

DEFAULT_FACTORIAL_CAP = 8


def factorial_cap() -> int:
    """Largest n for which n!-sized symmetrizations are attempted."""
    raw = os.environ.get("TROPSYM_FACTORIAL_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_FACTORIAL_CAP
    try:
        return int(raw)
    except ValueError:
        raise ResourceError(f"TROPSYM_FACTORIAL_CAP must be an integer, got {raw!r}")


def check_cap(n: int, what="symmetrization"):
    cap = factorial_cap()
    if n > cap:
        raise ResourceError(
            f"{what} over {n}! permutations exceeds the cap n <= {cap} "
            "(set TROPSYM_FACTORIAL_CAP to raise it)"
        )


def distinct_permutations(seq) -> List[tuple]:
    return sorted(set(itertools.permutations(seq)))


def symmetrize(p: TropPoly) -> TropPoly:
    """⊕ of ``p`` over all permutations of its variables."""
    check_cap(p.nvars)
    terms = {}
    for m in p.monomials:
        for e in distinct_permutations(m.exps):
            old = terms.get(e)
            if old is None or m.coeff < old:
                terms[e] = m.coeff
    return TropPoly.from_dict(p.nvars, terms)


def elementary(k: int, n: int) -> TropPoly:
    """``e_k`` in ``n`` variables: ⊕ of all products of ``k`` distinct variables."""
    if n < 1 or not 1 <= k <= n:
        raise DomainError(f"elementary polynomial e_{k} needs 1 <= k <= n (n={n})")
    terms = {}
    for subset in itertools.combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = Fraction(0)
    return TropPoly.from_dict(n, terms)


def adjacent_transpositions(n: int):
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = i + 1, i
        yield tuple(perm)


def symmetry_witness(p) -> Optional[Tuple[tuple, tuple]]:
    """``(perm, point)`` where ``p`` and ``p`` permuted differ, or None.

    Works for polynomials and rational expressions. Adjacent transpositions
    generate the symmetric group, so checking them is enough.
    """
    equiv = rational_equiv if isinstance(p, TropRational) else poly_equiv
    for perm in adjacent_transpositions(p.nvars):
        res = equiv(p, p.permute(perm))
        if not res:
            return perm, res.witness
    return None


def is_symmetric(p) -> bool:
    return symmetry_witness(p) is None


def _require_symmetric(p):
    found = symmetry_witness(p)
    if found is not None:
        perm, point = found
        raise NotSymmetricError("input is not symmetric", perm, point)


@dataclass(frozen=True)
class GeneratorExpr:
    """Tropical polynomial in ``e_1..e_n``; ``poly`` stores generator exponents.

    Only the exponent of ``e_n`` (the last slot) may be negative.
    """

    n: int
    poly: TropPoly

    def __post_init__(self):
        if self.poly.nvars != self.n:
            raise DimensionError("generator exponent vectors must have length n")
        for m in self.poly.monomials:
            if any(g < 0 for g in m.exps[:-1]):
                raise DomainError("only e_n may carry a negative exponent")

    @property
    def terms(self):
        return self.poly.monomials

    def expand(self) -> TropPoly:
        """Substitute the elementary polynomials; the result is a polynomial in x."""
        gens = [elementary(k, self.n) for k in range(1, self.n + 1)]
        out = {}
        for m in self.poly.monomials:
            term = TropPoly.constant(self.n, m.coeff)
            for g, k in zip(gens, m.exps):
                if k:
                    term = poly_mul(term, frobenius_pow(g, k))
            for t in term.monomials:
                old = out.get(t.exps)
                if old is None or t.coeff < old:
                    out[t.exps] = t.coeff
        return TropPoly.from_dict(self.n, out)

    def drop(self, index) -> "GeneratorExpr":
        return GeneratorExpr(self.n, self.poly.drop(index))

    def __str__(self):
        return format_generator_expr(self)


def format_generator_expr(g: GeneratorExpr) -> str:
    from .semiring import format_scalar

    parts = []
    for m in g.poly.monomials:
        fac = []
        for k, e in enumerate(m.exps):
            if e == 0:
                continue
            fac.append(f"e{k + 1}" if e == 1 else f"e{k + 1}^{e}")
        if m.coeff != 0 or not fac:
            fac.insert(0, format_scalar(m.coeff))
        parts.append(" ⊙ ".join(fac))
    return " ⊕ ".join(parts)


def sorted_exponent_to_generators(exps: Sequence[int]) -> Tuple[int, ...]:
    """Generator exponents of ``Sym(x^exps)`` for nonnegative ``exps``."""
    i = sorted(exps, reverse=True) + [0]
    return tuple(i[k] - i[k + 1] for k in range(len(exps)))


def decompose_symmetric(p: TropPoly, check: bool = True) -> GeneratorExpr:
    """Write a symmetric ``p`` as a polynomial in ``e_1..e_n`` and ``e_n^-1``."""
    if check:
        _require_symmetric(p)
    n = p.nvars
    if n == 0:
        return GeneratorExpr(0, p)
    j = max(0, -p.min_exponent)
    # group by orbit, keeping the cheapest representative of each
    orbits = {}
    for m in p.monomials:
        key = tuple(sorted((e + j for e in m.exps), reverse=True))
        old = orbits.get(key)
        if old is None or m.coeff < old:
            orbits[key] = m.coeff
    terms = {}
    for key, c in orbits.items():
        g = list(sorted_exponent_to_generators(key))
        g[-1] -= j
        terms[tuple(g)] = c
    return GeneratorExpr(n, TropPoly.from_dict(n, terms))


def decompose_symmetric_rational(r: TropRational, check: bool = True):
    """``(G_num, G_den)`` with ``r`` equivalent to expand(G_num) - expand(G_den)."""
    if check:
        _require_symmetric(r)
    return (
        decompose_symmetric(symmetrize(r.num), check=False),
        decompose_symmetric(symmetrize(r.den), check=False),
    )


def orbit_fingerprint(x) -> Tuple[Fraction, ...]:
    """``(e_1(x), ..., e_n(x))``: partial sums of the sorted coordinates."""
    from .semiring import as_scalar

    vals = sorted(as_scalar(v) for v in x)
    if any(not isinstance(v, Fraction) for v in vals):
        raise DomainError("fingerprints need finite coordinates")
    out, acc = [], Fraction(0)
    for v in vals:
        acc += v
        out.append(acc)
    return tuple(out)
