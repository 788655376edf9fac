"""Tropical monomials, polynomial expressions and rational expressions.

A polynomial expression is kept as a tuple of monomials. Operations return
dedup-normalized results: equal exponent vectors are merged keeping the
minimum coefficient, and monomials are ordered lexicographically by exponent
vector.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .errors import DimensionError, DomainError
from .semiring import INF, as_scalar

Exps = Tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    coeff: Fraction
    exps: Exps

    def __post_init__(self):
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", as_scalar(self.coeff))
        if self.coeff is INF:
            raise DomainError("monomial coefficients must be finite")
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @property
    def degree(self):
        return sum(self.exps)

    def value(self, x):
        """Value at a finite point: coeff + <exps, x>."""
        v = self.coeff
        for e, xi in zip(self.exps, x):
            if e:
                v += e * xi
        return v


def _merge(terms: Iterable[Tuple[Exps, Fraction]]) -> Dict[Exps, Fraction]:
    out: Dict[Exps, Fraction] = {}
    for e, c in terms:
        old = out.get(e)
        if old is None or c < old:
            out[e] = c
    return out


@dataclass(frozen=True)
class TropPoly:
    """Finite tropical sum of monomials in ``nvars`` variables."""

    nvars: int
    monomials: Tuple[Monomial, ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise DimensionError("nvars must be nonnegative")
        mons = tuple(self.monomials)
        if not mons:
            raise DomainError("a tropical polynomial needs at least one monomial")
        for m in mons:
            if len(m.exps) != self.nvars:
                raise DimensionError(
                    f"monomial has {len(m.exps)} exponents, expected {self.nvars}"
                )
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_dict(cls, nvars, terms):
        """Build a dedup-normalized polynomial from ``{exps: coeff}``."""
        return cls(nvars, tuple(Monomial(c, e) for e, c in sorted(terms.items())))

    @classmethod
    def from_terms(cls, nvars, terms):
        """Build from ``(coeff, exps)`` pairs, merging duplicates."""
        return cls.from_dict(
            nvars, _merge((tuple(e), as_scalar(c)) for c, e in terms)
        )

    @classmethod
    def constant(cls, nvars, c=0):
        return cls(nvars, (Monomial(as_scalar(c), (0,) * nvars),))

    @classmethod
    def variable(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(nvars, (Monomial(Fraction(0), tuple(e)),))

    def as_dict(self) -> Dict[Exps, Fraction]:
        return _merge((m.exps, m.coeff) for m in self.monomials)

    def normalized(self):
        return TropPoly.from_dict(self.nvars, self.as_dict())

    def is_normalized(self):
        exps = [m.exps for m in self.monomials]
        return all(a < b for a, b in zip(exps, exps[1:]))

    def __len__(self):
        return len(self.monomials)

    @property
    def degree(self):
        return max(m.degree for m in self.monomials)

    @property
    def min_exponent(self):
        return min((e for m in self.monomials for e in m.exps), default=0)

    def is_constant(self):
        return all(not any(m.exps) for m in self.monomials)

    def permute(self, perm):
        """Substitute ``x_i -> x_{perm[i]}``; ``perm`` is a sequence of indices."""
        if len(perm) != self.nvars:
            raise DimensionError("permutation length does not match nvars")
        terms = {}
        for m in self.monomials:
            e = [0] * self.nvars
            for i, k in enumerate(m.exps):
                e[perm[i]] += k
            terms[tuple(e)] = m.coeff
        return TropPoly.from_dict(self.nvars, _merge((k, v) for k, v in terms.items()))

    def shift(self, c):
        """Tropical product with the scalar ``c``."""
        c = as_scalar(c)
        return TropPoly.from_dict(self.nvars, {m.exps: m.coeff + c for m in self.monomials})

    def drop(self, index):
        mons = self.monomials[:index] + self.monomials[index + 1:]
        return TropPoly(self.nvars, mons)

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class TropRational:
    """Quotient ``num ⊙ den^{-1}`` of two polynomial expressions."""

    num: TropPoly
    den: TropPoly

    def __post_init__(self):
        if self.num.nvars != self.den.nvars:
            raise DimensionError("numerator and denominator differ in nvars")

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def from_poly(cls, p):
        return cls(p, TropPoly.constant(p.nvars))

    def permute(self, perm):
        return TropRational(self.num.permute(perm), self.den.permute(perm))

    def __str__(self):
        return f"({format_poly(self.num)}) ⊙ ({format_poly(self.den)})^-1"


def _check_same(p, q):
    if p.nvars != q.nvars:
        raise DimensionError(f"dimension mismatch: {p.nvars} vs {q.nvars} variables")


def poly_add(p: TropPoly, q: TropPoly) -> TropPoly:
    _check_same(p, q)
    terms = p.as_dict()
    for m in q.monomials:
        old = terms.get(m.exps)
        if old is None or m.coeff < old:
            terms[m.exps] = m.coeff
    return TropPoly.from_dict(p.nvars, terms)


def poly_sum(polys: Sequence[TropPoly]) -> TropPoly:
    polys = list(polys)
    if not polys:
        raise DomainError("empty tropical sum")
    out = polys[0].as_dict()
    for q in polys[1:]:
        _check_same(polys[0], q)
        for m in q.monomials:
            old = out.get(m.exps)
            if old is None or m.coeff < old:
                out[m.exps] = m.coeff
    return TropPoly.from_dict(polys[0].nvars, out)


def poly_mul(p: TropPoly, q: TropPoly) -> TropPoly:
    _check_same(p, q)
    out: Dict[Exps, Fraction] = {}
    qd = q.as_dict()
    for e1, c1 in p.as_dict().items():
        for e2, c2 in qd.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = c1 + c2
            old = out.get(e)
            if old is None or c < old:
                out[e] = c
    return TropPoly.from_dict(p.nvars, out)


def poly_prod(polys: Sequence[TropPoly], nvars=None) -> TropPoly:
    polys = list(polys)
    if not polys:
        if nvars is None:
            raise DomainError("empty product needs nvars")
        return TropPoly.constant(nvars)
    out = polys[0]
    for q in polys[1:]:
        out = poly_mul(out, q)
    return out


def poly_pow(p: TropPoly, k: int) -> TropPoly:
    """Expression-level power by repeated squaring (full distributive expansion)."""
    if k < 0:
        if len(p.monomials) != 1:
            raise DomainError("negative powers are only defined for monomials")
        return monomial_pow(p, k)
    result = TropPoly.constant(p.nvars)
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def monomial_pow(p: TropPoly, k: int) -> TropPoly:
    (m,) = p.monomials
    return TropPoly(p.nvars, (Monomial(m.coeff * k, tuple(e * k for e in m.exps)),))


def frobenius_pow(p: TropPoly, k: int) -> TropPoly:
    """``p`` to the power ``k >= 0`` via ``(a ⊕ b)^k = a^k ⊕ b^k``.

    Functionally equal to :func:`poly_pow` but with no more monomials than
    ``p``; negative ``k`` is only allowed for a single monomial.
    """
    if k < 0 and len(p.monomials) != 1:
        raise DomainError("negative powers are only defined for monomials")
    if k == 0:
        return TropPoly.constant(p.nvars)
    return TropPoly.from_dict(
        p.nvars, {tuple(e * k for e in m.exps): m.coeff * k for m in p.monomials}
    )


def eval_poly(p: TropPoly, x):
    """Evaluate at ``x`` (scalars or INF). Returns a scalar, possibly INF."""
    if len(x) != p.nvars:
        raise DimensionError(f"point has {len(x)} coordinates, expected {p.nvars}")
    x = [as_scalar(v) for v in x]
    inf_idx = [i for i, v in enumerate(x) if v is INF]
    best = INF
    for m in p.monomials:
        hit_inf = False
        for i in inf_idx:
            e = m.exps[i]
            if e < 0:
                raise DomainError(
                    f"negative exponent on variable {i + 1} evaluated at INF"
                )
            if e > 0:
                hit_inf = True
        if hit_inf:
            continue
        v = m.coeff
        for e, xi in zip(m.exps, x):
            if e:
                v += e * xi
        if best is INF or v < best:
            best = v
    return best


def eval_rational(r: TropRational, x):
    x = [as_scalar(v) for v in x]
    if any(v is INF for v in x):
        raise DomainError("rational expressions are evaluated at finite points only")
    return eval_poly(r.num, x) - eval_poly(r.den, x)


def rational_mul(r: TropRational, s: TropRational) -> TropRational:
    return TropRational(poly_mul(r.num, s.num), poly_mul(r.den, s.den))


def rational_add(r: TropRational, s: TropRational) -> TropRational:
    """Common-denominator tropical sum."""
    num = poly_add(poly_mul(r.num, s.den), poly_mul(s.num, r.den))
    return TropRational(num, poly_mul(r.den, s.den))


def rational_inv(r: TropRational) -> TropRational:
    return TropRational(r.den, r.num)


def cancel_monomial_content(r: TropRational) -> TropRational:
    """Divide numerator and denominator by their common monomial factor.

    The factor takes, per variable, the smallest exponent over all monomials
    of both parts, and the smallest denominator coefficient.
    """
    mons = r.num.monomials + r.den.monomials
    low = [min(m.exps[i] for m in mons) for i in range(r.nvars)]
    c = min(m.coeff for m in r.den.monomials)

    def strip(p):
        return TropPoly.from_dict(
            p.nvars,
            {tuple(e - l for e, l in zip(m.exps, low)): m.coeff - c for m in p.monomials},
        )

    return TropRational(strip(r.num), strip(r.den))


def var_name(i, nvars, block=False):
    if block:
        return f"x[{i // 2 + 1},{i % 2 + 1}]"
    return f"x{i + 1}"


def format_monomial(m: Monomial, block=False):
    from .semiring import format_scalar

    parts = []
    for i, e in enumerate(m.exps):
        if e == 0:
            continue
        name = var_name(i, len(m.exps), block)
        parts.append(name if e == 1 else f"{name}^{e}")
    if m.coeff != 0 or not parts:
        parts.insert(0, format_scalar(m.coeff))
    return " ⊙ ".join(parts)


def format_poly(p: TropPoly, block=False):
    return " ⊕ ".join(format_monomial(m, block) for m in p.monomials)
