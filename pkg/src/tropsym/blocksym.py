"""Block (2-)symmetric tropical polynomials.

Variables come in ``n`` rows of two, ``x[i,1], x[i,2]``, stored flat at
index ``2(i-1) + (j-1)``. The symmetric group acts by permuting rows. An
exponent matrix is an ``n x 2`` integer matrix; its row-permutation orbit is
represented by the rows sorted in decreasing order.
"""
import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .canon import poly_equiv, rational_equiv, is_essential
from .errors import DimensionError, DomainError, NotSymmetricError, ParseError, ResourceError
from .poly import (
    Monomial,
    TropPoly,
    TropRational,
    eval_poly,
    frobenius_pow,
    poly_add,
    poly_mul,
)
from .semiring import as_scalar
from .sym import check_cap

Row = Tuple[int, int]
ROW_TYPES: Tuple[Row, ...] = ((1, 1), (1, 0), (0, 1))
ORBIT_CAP = 8
DEFAULT_DECOMPOSE_CAP = 3


# ---------------------------------------------------------------- orbits


def _rows_of(exps: Sequence[int]) -> Tuple[Row, ...]:
    if len(exps) % 2:
        raise DimensionError("block variables come in pairs; nvars must be even")
    return tuple((exps[2 * i], exps[2 * i + 1]) for i in range(len(exps) // 2))


def _flat(rows: Sequence[Row]) -> Tuple[int, ...]:
    return tuple(v for r in rows for v in r)


def canonical_rows(rows: Sequence[Row]) -> Tuple[Row, ...]:
    return tuple(sorted((tuple(r) for r in rows), reverse=True))


@dataclass(frozen=True, order=True)
class OrbitRep:
    """Row-permutation orbit of a {0,1} exponent matrix (rows sorted descending)."""

    rows: Tuple[Row, ...]

    def __post_init__(self):
        rows = canonical_rows(self.rows)
        for r in rows:
            if len(r) != 2 or any(v not in (0, 1) for v in r):
                raise DomainError(f"orbit rows must be pairs over {{0,1}}, got {r}")
        if not any(any(r) for r in rows):
            raise DomainError("the all-zero matrix is not an orbit generator")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self):
        return len(self.rows)

    @property
    def degree(self):
        return sum(a + b for a, b in self.rows)

    @property
    def label(self) -> str:
        counts = Counter(r for r in self.rows if any(r))
        parts = []
        for r in sorted(counts, reverse=True):
            k = counts[r]
            parts.append(f"({r[0]},{r[1]})" + (f"^{k}" if k > 1 else ""))
        return "[" + "".join(parts) + "]"

    def monomial(self) -> TropPoly:
        """``P(E)`` for the representative matrix."""
        return TropPoly(2 * self.n, (Monomial(Fraction(0), _flat(self.rows)),))

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class ExponentMatrix:
    """An ``n x 2`` matrix over {0,1} that is not all zero."""

    rows: Tuple[Row, ...]

    def __post_init__(self):
        OrbitRep(self.rows)  # validates
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def orbit(self) -> OrbitRep:
        return OrbitRep(self.rows)


_LABEL_ROW = re.compile(r"\(\s*([01])\s*,\s*([01])\s*\)(?:\s*\^\s*(\d+))?")


def parse_orbit_label(text: str, n: int) -> OrbitRep:
    """Read ``[(1,0)(1,1)]`` style labels; rows may come in any order."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"orbit label must be bracketed: {text!r}", 0)
    body = s[1:-1]
    pos = 0
    rows: List[Row] = []
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = _LABEL_ROW.match(body, pos)
        if not m:
            raise ParseError(f"bad orbit label {text!r}", pos + 1)
        k = int(m.group(3) or 1)
        rows.extend([(int(m.group(1)), int(m.group(2)))] * k)
        pos = m.end()
    if len(rows) > n:
        raise DimensionError(f"orbit {text} has more than n={n} rows")
    return OrbitRep(tuple(rows) + ((0, 0),) * (n - len(rows)))


def orbit_count(n: int) -> int:
    return comb(n + 3, 3) - 1


def enumerate_orbits(n: int) -> List[OrbitRep]:
    """All orbits of nonzero {0,1} ``n x 2`` matrices, by degree then rows."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if n > ORBIT_CAP:
        raise ResourceError(f"orbit enumeration is capped at n <= {ORBIT_CAP}")
    return _orbits_cached(n)


@lru_cache(maxsize=None)
def _orbits_cached(n):
    out = []
    for combo in itertools.combinations_with_replacement(ROW_TYPES + ((0, 0),), n):
        if any(any(r) for r in combo):
            out.append(OrbitRep(combo))
    out.sort(key=lambda o: (o.degree, [(-a, -b) for a, b in o.rows]))
    return out


# ------------------------------------------------------ symmetrization


def row_permute(p: TropPoly, perm: Sequence[int]) -> TropPoly:
    """Move row ``i`` of every exponent matrix to row ``perm[i]``."""
    n = p.nvars // 2
    flat = [0] * (2 * n)
    for i, k in enumerate(perm):
        flat[2 * i], flat[2 * i + 1] = 2 * k, 2 * k + 1
    return p.permute(flat)


def symmetrize2(p: TropPoly) -> TropPoly:
    """⊕ of ``p`` over all row permutations."""
    if p.nvars % 2:
        raise DimensionError("block polynomials need an even number of variables")
    check_cap(p.nvars // 2, "block symmetrization")
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for m in p.monomials:
        for rows in set(itertools.permutations(_rows_of(m.exps))):
            e = _flat(rows)
            old = terms.get(e)
            if old is None or m.coeff < old:
                terms[e] = m.coeff
    return TropPoly.from_dict(p.nvars, terms)


def elementary2(orbit, n: Optional[int] = None) -> TropPoly:
    """The elementary 2-symmetric polynomial of an orbit (or orbit label)."""
    if isinstance(orbit, str):
        if n is None:
            raise DomainError("n is required with an orbit label")
        orbit = parse_orbit_label(orbit, n)
    if n is not None and orbit.n != n:
        raise DimensionError(f"orbit has {orbit.n} rows, expected {n}")
    return _elementary2_cached(orbit)


@lru_cache(maxsize=None)
def _elementary2_cached(orbit: OrbitRep) -> TropPoly:
    return symmetrize2(orbit.monomial())


def adjacent_row_swaps(n: int):
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = i + 1, i
        yield tuple(perm)


def block_symmetry_witness(p):
    """``(row_perm, point)`` breaking 2-symmetry of ``p``, or None."""
    if p.nvars % 2:
        raise DimensionError("block expressions need an even number of variables")
    rational = isinstance(p, TropRational)
    for perm in adjacent_row_swaps(p.nvars // 2):
        if rational:
            q = TropRational(row_permute(p.num, perm), row_permute(p.den, perm))
            res = rational_equiv(p, q)
        else:
            res = poly_equiv(p, row_permute(p, perm))
        if not res:
            return perm, res.witness
    return None


def is_2symmetric(p) -> bool:
    return block_symmetry_witness(p) is None


# ------------------------------------------------------ monomials and >_S


@dataclass(frozen=True)
class BlockMonomial:
    """Coefficient plus an ``n x 2`` matrix of nonnegative exponents."""

    rows: Tuple[Row, ...]
    coeff: Fraction = Fraction(0)

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        if any(a < 0 or b < 0 for a, b in rows):
            raise DomainError("block monomials need nonnegative exponents")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "coeff", as_scalar(self.coeff))

    @classmethod
    def from_exps(cls, exps, coeff=0):
        return cls(_rows_of(tuple(exps)), coeff)

    @property
    def n(self):
        return len(self.rows)

    @property
    def exps(self):
        return _flat(self.rows)

    @property
    def deg(self):
        return sum(self.exps)

    @property
    def spread(self):
        return sum(1 for v in self.exps if v)

    def canonical(self) -> "BlockMonomial":
        return BlockMonomial(canonical_rows(self.rows), self.coeff)

    def poly(self) -> TropPoly:
        return TropPoly(2 * self.n, (Monomial(self.coeff, self.exps),))


def compare_s(m1: BlockMonomial, m2: BlockMonomial) -> int:
    """1 if ``m1 >_S m2``, -1 if ``m1 <_S m2``, 0 if equal exponents.

    Higher degree ranks higher; at equal degree fewer nonzero entries ranks
    higher; remaining ties go to the lexicographically larger exponent tuple.
    """
    if m1.n != m2.n:
        raise DimensionError("monomials have different numbers of rows")
    k1 = (m1.deg, -m1.spread, m1.exps)
    k2 = (m2.deg, -m2.spread, m2.exps)
    return (k1 > k2) - (k1 < k2)


def support_pattern(m: BlockMonomial) -> Tuple[Row, ...]:
    return tuple((int(a > 0), int(b > 0)) for a, b in m.rows)


def correction_terms(m: BlockMonomial) -> List[BlockMonomial]:
    """Orbits of the cross terms produced when ``e^a ⊙ Sym2(m')`` is expanded.

    ``e`` is the orbit generator of the support of ``m``, ``a`` its smallest
    positive entry and ``m' = m - a * support``. The products
    ``ρ(E)^a ⊙ π(m')`` are taken over those ``π`` that move the support to
    different positions; products lying in the orbit of ``m`` itself are
    left out. By row-permutation equivariance ``ρ`` may be fixed to the
    identity. Results are canonical representatives in >_S decreasing order.
    """
    E = support_pattern(m)
    positive = [v for v in m.exps if v]
    if not positive:
        return []
    a = min(positive)
    reduced = [(x - a * ex, y - a * ey) for (x, y), (ex, ey) in zip(m.rows, E)]
    own = canonical_rows(m.rows)
    support = {(i, c) for i, r in enumerate(E) for c in (0, 1) if r[c]}
    seen = set()
    for perm in itertools.permutations(range(m.n)):
        moved = {(perm[i], c) for i, c in support}
        if moved == support:
            continue
        rows = [[0, 0] for _ in range(m.n)]
        for i, (x, y) in enumerate(reduced):
            rows[perm[i]][0] += x
            rows[perm[i]][1] += y
        for i, (ex, ey) in enumerate(E):
            rows[i][0] += a * ex
            rows[i][1] += a * ey
        key = canonical_rows([tuple(r) for r in rows])
        if key != own:
            seen.add(key)
    out = [BlockMonomial(k) for k in seen]
    out.sort(key=lambda b: (-b.deg, b.spread, tuple(-v for v in b.exps)))
    return out


# ------------------------------------------------------ generator expressions


def _alphabet_index(n):
    return {o: i for i, o in enumerate(enumerate_orbits(n))}


@dataclass(frozen=True)
class Gen2Expr:
    """Quotient ``num ⊙ den^-1`` of Laurent polynomials in the orbit generators.

    ``num`` and ``den`` are polynomials whose variables are the orbits of
    :func:`enumerate_orbits` (in that order); exponents may be negative.
    """

    n: int
    num: TropPoly
    den: TropPoly

    def __post_init__(self):
        size = orbit_count(self.n)
        if self.num.nvars != size or self.den.nvars != size:
            raise DimensionError("generator polynomials must range over all orbits")

    @property
    def alphabet(self) -> List[OrbitRep]:
        return enumerate_orbits(self.n)

    @classmethod
    def constant(cls, n, c=0):
        size = orbit_count(n)
        return cls(n, TropPoly.constant(size, c), TropPoly.constant(size))

    @classmethod
    def generator(cls, orbit: OrbitRep, power=1, coeff=0):
        size = orbit_count(orbit.n)
        e = [0] * size
        e[_alphabet_index(orbit.n)[orbit]] = power
        mono = TropPoly(size, (Monomial(as_scalar(coeff), tuple(e)),))
        return cls(orbit.n, mono, TropPoly.constant(size))

    @classmethod
    def laurent(cls, n, poly: TropPoly):
        return cls(n, poly, TropPoly.constant(poly.nvars))

    def simplified(self) -> "Gen2Expr":
        """Fold a single-monomial denominator into the numerator."""
        if len(self.den.monomials) != 1:
            return self
        (d,) = self.den.monomials
        inv = TropPoly(self.den.nvars, (Monomial(-d.coeff, tuple(-v for v in d.exps)),))
        return Gen2Expr.laurent(self.n, poly_mul(self.num, inv))

    def __mul__(self, other: "Gen2Expr") -> "Gen2Expr":
        return Gen2Expr(
            self.n, poly_mul(self.num, other.num), poly_mul(self.den, other.den)
        ).simplified()

    def inverse(self) -> "Gen2Expr":
        return Gen2Expr(self.n, self.den, self.num).simplified()

    def __add__(self, other: "Gen2Expr") -> "Gen2Expr":
        a, b = self.simplified(), other.simplified()
        if a.den.is_constant() and b.den.is_constant() and len(a.den) == len(b.den) == 1:
            return Gen2Expr.laurent(self.n, poly_add(a.num, b.num))
        num = poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den))
        return Gen2Expr(self.n, num, poly_mul(a.den, b.den))

    def shift(self, c) -> "Gen2Expr":
        return Gen2Expr(self.n, self.num.shift(c), self.den)

    def _cleared(self):
        """Multiply both parts by one generator monomial so exponents are >= 0."""
        size = self.num.nvars
        low = [0] * size
        for m in self.num.monomials + self.den.monomials:
            for k, v in enumerate(m.exps):
                low[k] = min(low[k], v)

        def lift(p):
            return TropPoly.from_dict(
                size, {tuple(v - l for v, l in zip(m.exps, low)): m.coeff for m in p.monomials}
            )

        return lift(self.num), lift(self.den)

    def expand(self) -> TropRational:
        """Substitute the generators; the result is a rational expression in x."""
        num, den = self._cleared()
        return TropRational(self._expand_poly(num), self._expand_poly(den))

    def _expand_poly(self, p: TropPoly) -> TropPoly:
        gens = self.alphabet
        nv = 2 * self.n
        out: Dict[Tuple[int, ...], Fraction] = {}
        for m in p.monomials:
            term = TropPoly.constant(nv, m.coeff)
            for g, k in zip(gens, m.exps):
                if k:
                    term = poly_mul(term, frobenius_pow(elementary2(g), k))
            for t in term.monomials:
                old = out.get(t.exps)
                if old is None or t.coeff < old:
                    out[t.exps] = t.coeff
        return TropPoly.from_dict(nv, out)

    def evaluate(self, x) -> Fraction:
        """Value at a finite point of ``R^{2n}`` via the generators' values."""
        if len(x) != 2 * self.n:
            raise DimensionError(f"point has {len(x)} coordinates, expected {2 * self.n}")
        vals = [eval_poly(elementary2(g), x) for g in self.alphabet]

        def ev(p):
            return min(
                m.coeff + sum(k * v for k, v in zip(m.exps, vals) if k) for m in p.monomials
            )

        return ev(self.num) - ev(self.den)

    def __str__(self):
        return format_gen2(self)


def _format_gen_poly(p: TropPoly, alphabet) -> str:
    from .semiring import format_scalar

    parts = []
    for m in p.monomials:
        fac = []
        for g, k in zip(alphabet, m.exps):
            if k:
                fac.append(f"e{g.label}" if k == 1 else f"e{g.label}^{k}")
        if m.coeff != 0 or not fac:
            fac.insert(0, format_scalar(m.coeff))
        parts.append(" ⊙ ".join(fac))
    return " ⊕ ".join(parts)


def format_gen2(g: Gen2Expr) -> str:
    num = _format_gen_poly(g.num, g.alphabet)
    if g.den.is_constant() and len(g.den) == 1 and g.den.monomials[0].coeff == 0:
        return num
    return f"({num}) ⊙ ({_format_gen_poly(g.den, g.alphabet)})^-1"


# ------------------------------------------------------ decomposition


def _orbit_of_counts(n, ones_both, ones_x, ones_y) -> OrbitRep:
    rest = n - ones_both - ones_x - ones_y
    return OrbitRep(((1, 1),) * ones_both + ((1, 0),) * ones_x + ((0, 1),) * ones_y + ((0, 0),) * rest)


def gate_expression(rows: Sequence[Row]) -> TropPoly:
    """Laurent generator polynomial equal to ``Sym2`` of the monomial ``rows``.

    Sort the first and second coordinates separately: ``s_k`` and ``t_l`` are
    the k-th smallest of each, with ``s_k = X_k - X_{k-1}`` where
    ``X_k = e[(1,0)^k]`` (likewise ``t_l`` from ``Y_l = e[(0,1)^l]``). A
    pairing ``σ`` of the sorted columns defines a candidate point with rows
    ``(s_k, t_σ(k))``, and

        D_σ = Σ_{k,l<n} (Z_{k,l,N_σ(k,l)} - X_k - Y_l),
        Z_{k,l,j} = e[(1,1)^j (1,0)^{k-j} (0,1)^{l-j}],
        N_σ(k,l) = #{k' <= k : σ(k') <= l}

    is nonnegative, and zero exactly when the candidate is the actual point
    up to row order. Then ``Sym2(m) = min_σ (Sym2(m)(candidate σ) + K D_σ)``
    for ``K`` at least the Lipschitz constant of the monomial times the
    transport bound; each term is a Laurent monomial in the generators.
    """
    n = len(rows)
    index = _alphabet_index(n)
    size = len(index)
    top = max(max(r) for r in rows)
    K = 2 * top * max(1, n - 1)

    def X(k):
        return index[_orbit_of_counts(n, 0, k, 0)]

    def Y(l):
        return index[_orbit_of_counts(n, 0, 0, l)]

    terms: Dict[Tuple[int, ...], Fraction] = {}
    arrangements = sorted(set(itertools.permutations(rows)))
    for sigma in itertools.permutations(range(n)):
        base = [0] * size
        for k in range(1, n):
            for l in range(1, n):
                j = sum(1 for kk in range(k) if sigma[kk] < l)
                base[index[_orbit_of_counts(n, j, k - j, l - j)]] += K
                base[X(k)] -= K
                base[Y(l)] -= K
        for arr in arrangements:
            e = list(base)
            for i, (A, B) in enumerate(arr):
                if A:
                    e[X(i + 1)] += A
                    if i:
                        e[X(i)] -= A
                if B:
                    l = sigma[i]
                    e[Y(l + 1)] += B
                    if l:
                        e[Y(l)] -= B
            terms[tuple(e)] = Fraction(0)
    return TropPoly.from_dict(size, terms)


@dataclass
class DecompositionTrace:
    """Every recursive call of :func:`decompose2_symmetric`."""

    calls: List[dict] = field(default_factory=list)

    @property
    def max_depth(self):
        return max((c["depth"] for c in self.calls), default=0)


def decompose2_symmetric(
    m: BlockMonomial,
    trace: Optional[DecompositionTrace] = None,
    max_n: int = DEFAULT_DECOMPOSE_CAP,
    max_degree: Optional[int] = None,
) -> Gen2Expr:
    """Write ``Sym2(m)`` as a quotient of polynomials in the orbit generators.

    Recursion on the >_S order: degree 0 and {0,1} matrices are the base
    cases. Otherwise, with ``e`` the generator of the support and ``a`` the
    smallest positive entry, ``e^a ⊙ Sym2(m - a*support)`` is used whenever
    it equals ``Sym2(m)`` (the cross terms of the product never undercut it);
    failing that the monomial is written directly by :func:`gate_expression`.
    """
    if not isinstance(m, BlockMonomial):
        raise TypeError("expected a BlockMonomial")
    if m.n > max_n:
        raise ResourceError(f"block decomposition is capped at n <= {max_n}")
    if max_degree is not None and m.deg > max_degree:
        raise ResourceError(f"monomial degree {m.deg} exceeds the cap {max_degree}")
    check_cap(m.n, "block symmetrization")
    calls = trace.calls if trace is not None else None
    result = _decompose(canonical_rows(m.rows), None, 0, calls)
    return result.shift(m.coeff) if m.coeff else result


def _record(calls, rows, parent, depth, rule):
    if parent is not None:
        child, up = BlockMonomial(rows), BlockMonomial(parent)
        if compare_s(child, up) >= 0:
            raise AssertionError(f"recursion does not descend: {rows} from {parent}")
    if calls is not None:
        calls.append({"rows": rows, "parent": parent, "depth": depth, "rule": rule})


def _decompose(rows, parent, depth, calls) -> Gen2Expr:
    n = len(rows)
    m = BlockMonomial(rows)
    if m.deg == 0:
        _record(calls, rows, parent, depth, "constant")
        return Gen2Expr.constant(n)
    if all(v in (0, 1) for v in m.exps):
        _record(calls, rows, parent, depth, "generator")
        return Gen2Expr.generator(OrbitRep(rows))
    E = support_pattern(m)
    a = min(v for v in m.exps if v)
    reduced = canonical_rows([(x - a * ex, y - a * ey) for (x, y), (ex, ey) in zip(rows, E)])
    e = OrbitRep(E)
    if not any(any(r) for r in reduced):
        _record(calls, rows, parent, depth, "power")
        return Gen2Expr.generator(e, a)
    if _peel_is_exact(rows, e, a, reduced):
        _record(calls, rows, parent, depth, "peel")
        inner = _decompose(reduced, rows, depth + 1, calls)
        return Gen2Expr.generator(e, a) * inner
    _record(calls, rows, parent, depth, "gate")
    return _gate_cached(rows)


@lru_cache(maxsize=4096)
def _peel_is_exact(rows, e, a, reduced) -> bool:
    target = symmetrize2(BlockMonomial(rows).poly())
    product = poly_mul(
        frobenius_pow(elementary2(e), a), symmetrize2(BlockMonomial(reduced).poly())
    )
    return bool(poly_equiv(product, target))


@lru_cache(maxsize=4096)
def _gate_cached(rows) -> Gen2Expr:
    return Gen2Expr.laurent(len(rows), gate_expression(rows))


def _group_by_orbit(p: TropPoly) -> Dict[Tuple[Row, ...], Fraction]:
    groups: Dict[Tuple[Row, ...], Fraction] = {}
    for mono in p.monomials:
        key = canonical_rows(_rows_of(mono.exps))
        old = groups.get(key)
        if old is None or mono.coeff < old:
            groups[key] = mono.coeff
    return groups


def decompose2_polynomial(p: TropPoly, trace=None, **caps) -> Gen2Expr:
    """``Sym2(p)`` for ``p`` with nonnegative exponents, via additivity."""
    if p.min_exponent < 0:
        raise DomainError("negative exponents must be cleared before decomposing")
    out = None
    for rows, c in sorted(_group_by_orbit(p).items()):
        g = decompose2_symmetric(BlockMonomial(rows, c), trace, **caps)
        out = g if out is None else out + g
    return out


def decompose2_symmetric_rational(r, trace=None, check: bool = True, **caps) -> Gen2Expr:
    """Rational expression in the orbit generators equal to a 2-symmetric ``r``."""
    if isinstance(r, TropPoly):
        r = TropRational.from_poly(r)
    if r.nvars % 2:
        raise DimensionError("block expressions need an even number of variables")
    if check:
        found = block_symmetry_witness(r)
        if found is not None:
            perm, point = found
            raise NotSymmetricError("input is not 2-symmetric", perm, point)
    n = r.nvars // 2
    j = max(0, -min(r.num.min_exponent, r.den.min_exponent))
    full = tuple([j] * (2 * n))

    def lift(p):
        return TropPoly.from_dict(
            p.nvars, {tuple(v + s for v, s in zip(m.exps, full)): m.coeff for m in p.monomials}
        )

    num = decompose2_polynomial(lift(r.num), trace, **caps)
    den = decompose2_polynomial(lift(r.den), trace, **caps)
    return num * den.inverse()


# ------------------------------------------------------ fingerprints


@dataclass(frozen=True)
class Barcode:
    """Multiset of (birth, death) intervals; order is irrelevant."""

    intervals: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        ivs = tuple((as_scalar(b), as_scalar(d)) for b, d in self.intervals)
        for b, d in ivs:
            if not isinstance(b, Fraction) or not isinstance(d, Fraction):
                raise DomainError("barcode endpoints must be finite")
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self):
        return len(self.intervals)

    def point(self) -> Tuple[Fraction, ...]:
        return tuple(v for iv in self.intervals for v in iv)


def orbit_fingerprint2(points) -> Dict[str, Fraction]:
    """Every elementary 2-symmetric polynomial evaluated at the rows of ``points``.

    Accepts a :class:`Barcode` or a flat point of ``R^{2n}``. Keys are orbit
    labels in :func:`enumerate_orbits` order.
    """
    x = points.point() if isinstance(points, Barcode) else tuple(as_scalar(v) for v in points)
    if len(x) % 2:
        raise DimensionError("block points need an even number of coordinates")
    n = len(x) // 2
    if n == 0:
        raise DomainError("empty barcode")
    check_cap(n, "block symmetrization")
    return {o.label: eval_poly(elementary2(o), x) for o in enumerate_orbits(n)}


# ------------------------------------------------------ non-generation witness


def non_generation_witness(d: int) -> dict:
    """Points showing ``x11^a x12 x21^(d-a)`` is never dominated, for ``a < d``.

    For each ``a`` the point ``x11 = 1, x12 = 0, x21 = 0, x22 = a + 1`` makes

        min((d - a)(x11 - x21), a(x21 - x11) + x22 - x12)

    equal to 1 > 0, so there the cross term ``a`` lies strictly below
    ``x11^d x12 ⊕ x21^d x22`` (value ``min(d, a + 1)``). Both monomials of
    that polynomial are also certified essential.
    """
    if not isinstance(d, int) or d < 2:
        raise DomainError("d must be an integer >= 2")
    poly = TropPoly.from_dict(4, {(d, 1, 0, 0): Fraction(0), (0, 0, d, 1): Fraction(0)})
    rows = []
    for a in range(d):
        x11, x12, x21, x22 = Fraction(1), Fraction(0), Fraction(0), Fraction(a + 1)
        gap = min((d - a) * (x11 - x21), a * (x21 - x11) + x22 - x12)
        cross = a * x11 + x12 + (d - a) * x21
        value = eval_poly(poly, (x11, x12, x21, x22))
        rows.append(
            {
                "a": a,
                "point": (x11, x12, x21, x22),
                "min": gap,
                "cross_term": cross,
                "polynomial": value,
                "holds": gap > 0 and cross < value,
            }
        )
    certs = [is_essential(poly, j) for j in range(len(poly.monomials))]
    return {
        "d": d,
        "witnesses": rows,
        "essential": [c.essential for c in certs],
        "certificates": certs,
        "ok": all(r["holds"] for r in rows) and all(c.essential for c in certs),
    }
