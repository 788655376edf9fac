"""Essential monomials, minimal representations and functional equivalence.

A monomial of ``p`` is *essential* when some point makes it the strict unique
minimizer among the monomials of ``p``. The essential monomials, after
merging duplicate exponent vectors, determine the function and are
determined by it, so comparing essential sets decides equivalence.

Essentiality of monomial ``j`` is the strict feasibility of::

    a_j + <i_j, x> < a_s + <i_s, x>    for every s != j

decided exactly by maximizing the smallest slack ``t`` (capped at 1).
Random integer sampling finds most witnesses cheaply; the linear programs
settle the rest.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from . import lp
from .errors import DimensionError
from .poly import TropPoly, TropRational, eval_poly, poly_mul

Point = Tuple[Fraction, ...]

# Sampling is an accelerator only; it never decides non-essentiality.
_SAMPLE_SCALES = (1, 4, 32, 512)
_SAMPLES_PER_SCALE = 256
_INT64_SAFE = 2 ** 62
# Float LPs only propose; every answer is re-checked in exact arithmetic.
_FLOAT_TOL = 1e-7
_DENOM_LIMIT = 10 ** 6
_EXACT_ONLY_BELOW = 6


@dataclass(frozen=True)
class EssentialityCertificate:
    monomial_index: int
    witness: Optional[Point]
    essential: bool

    def __post_init__(self):
        if self.essential != (self.witness is not None):
            raise ValueError("essential certificates carry a witness, others do not")


@dataclass(frozen=True)
class EquivResult:
    """Outcome of an equivalence test; truthy iff equivalent."""

    equivalent: bool
    witness: Optional[Point] = None

    def __bool__(self):
        return self.equivalent


def _values(mons, x):
    return [m.value(x) for m in mons]


def _unique_argmin(vals):
    best = min(vals)
    hits = [i for i, v in enumerate(vals) if v == best]
    return hits[0] if len(hits) == 1 else None


def _exact_witness(mons, j, others) -> Optional[Point]:
    """Exact LP: a point where ``mons[j]`` is strictly below every ``mons[s]``."""
    mj = mons[j]
    n = len(mj.exps)
    if not others:
        return (Fraction(0),) * n
    gaps = [mons[s].coeff - mj.coeff for s in others]
    # t = t0 + u with u >= 0 keeps the origin feasible
    t0 = min(Fraction(1), min(gaps))
    if t0 > 0:
        return (Fraction(0),) * n
    A, b = [], []
    for s, g in zip(others, gaps):
        d = [es - ej for es, ej in zip(mons[s].exps, mj.exps)]
        A.append([-v for v in d] + d + [1])
        b.append(g - t0)
    A.append([0] * (2 * n) + [1])
    b.append(1 - t0)
    res = lp.maximize([0] * (2 * n) + [1], A, b, target=-t0)
    if t0 + res.value <= 0:
        return None
    x = res.x
    return tuple(x[i] - x[n + i] for i in range(n))


def _is_strict_witness(mons, j, others, x) -> bool:
    v = mons[j].value(x)
    return all(mons[s].value(x) > v for s in others)


def _float_proposal(mons, j, others):
    """Floating-point LP; returns ``("witness", point)`` or ``("support", indices)``."""
    mj = mons[j]
    n = len(mj.exps)
    D = np.array([[es - ej for es, ej in zip(mons[s].exps, mj.exps)] for s in others], dtype=float)
    gaps = np.array([float(mons[s].coeff - mj.coeff) for s in others])
    A = np.hstack([-D, np.ones((len(others), 1))])
    c = np.zeros(n + 1)
    c[-1] = -1.0
    bounds = [(None, None)] * n + [(None, 1.0)]
    res = linprog(c, A_ub=A, b_ub=gaps, bounds=bounds, method="highs")
    if res.status != 0:
        return None
    t = -res.fun
    if t > _FLOAT_TOL:
        return "witness", tuple(Fraction(v).limit_denominator(_DENOM_LIMIT) for v in res.x[:n])
    duals = -np.asarray(res.ineqlin.marginals)
    support = [s for s, lam in zip(others, duals) if lam > _FLOAT_TOL]
    return "support", support


def _lp_witness(mons, j, others) -> Optional[Point]:
    """Decide strict feasibility exactly, using a float LP only as a guide."""
    if len(others) > _EXACT_ONLY_BELOW:
        proposal = _float_proposal(mons, j, others)
        if proposal is not None:
            kind, data = proposal
            if kind == "witness":
                if _is_strict_witness(mons, j, others, data):
                    return data
            elif data and _exact_witness(mons, j, data) is None:
                # dominated by a sub-collection, hence by all of them
                return None
    return _exact_witness(mons, j, others)


def is_essential(p: TropPoly, j: int) -> EssentialityCertificate:
    """Decide whether monomial ``j`` of ``p`` is essential, with a witness point."""
    if not 0 <= j < len(p.monomials):
        raise IndexError(f"monomial index {j} out of range")
    mons = p.monomials
    target = mons[j]
    for k, m in enumerate(mons):
        # a repeated exponent vector keeps only its cheapest, earliest copy
        if k != j and m.exps == target.exps and (m.coeff, k) < (target.coeff, j):
            return EssentialityCertificate(j, None, False)
    others = [s for s, m in enumerate(mons) if m.exps != target.exps]
    w = _lp_witness(mons, j, others)
    return EssentialityCertificate(j, w, w is not None)


def _sample_minimizers(mons, rng) -> dict:
    """Map monomial index -> witness point for unique minimizers at sampled points."""
    n = len(mons[0].exps)
    if n == 0:
        return {}
    scale = lcm(*(m.coeff.denominator for m in mons))
    C = [int(m.coeff * scale) for m in mons]
    E = [list(m.exps) for m in mons]
    big_c = max(abs(c) for c in C)
    big_e = max((abs(e) for row in E for e in row), default=0)
    found = {}
    for R in _SAMPLE_SCALES:
        if big_c + scale * big_e * n * R >= _INT64_SAFE:
            break
        pts = np.array(
            [[rng.randint(-R, R) for _ in range(n)] for _ in range(_SAMPLES_PER_SCALE)],
            dtype=np.int64,
        )
        vals = np.asarray(C, dtype=np.int64)[:, None] + scale * (
            np.asarray(E, dtype=np.int64) @ pts.T
        )
        order = np.argsort(vals, axis=0, kind="stable")
        first = order[0]
        cols = np.arange(vals.shape[1])
        low = vals[first, cols]
        if len(mons) > 1:
            unique = vals[order[1], cols] > low
        else:
            unique = np.ones_like(low, dtype=bool)
        for k in np.nonzero(unique)[0]:
            i = int(first[k])
            if i not in found:
                found[i] = tuple(Fraction(int(v)) for v in pts[k])
    return found


def _swap(v, perm):
    out = list(v)
    for i, k in enumerate(perm):
        out[k] = v[i]
    return tuple(out)


def _candidate_symmetries(nvars):
    for a in range(nvars):
        for b in range(a + 1, nvars):
            perm = list(range(nvars))
            perm[a], perm[b] = b, a
            yield tuple(perm)
    if nvars % 2 == 0:
        rows = nvars // 2
        for a in range(rows):
            for b in range(a + 1, rows):
                perm = list(range(nvars))
                perm[2 * a], perm[2 * b] = 2 * b, 2 * a
                perm[2 * a + 1], perm[2 * b + 1] = 2 * b + 1, 2 * a + 1
                yield tuple(perm)


def _orbits(mons):
    """Group monomial indices under coordinate swaps that fix the polynomial.

    Returns ``(rep, route)`` per orbit member: ``route`` is the list of swaps
    carrying the representative onto the member.
    """
    terms = {m.exps: m.coeff for m in mons}
    nvars = len(mons[0].exps)
    gens = []
    for perm in _candidate_symmetries(nvars):
        if all(terms.get(_swap(e, perm)) == c for e, c in terms.items()):
            gens.append(perm)
    index = {m.exps: i for i, m in enumerate(mons)}
    info = {}
    for i, m in enumerate(mons):
        if i in info:
            continue
        info[i] = (i, ())
        queue = [i]
        while queue:
            cur = queue.pop()
            route = info[cur][1]
            for g in gens:
                nxt = index[_swap(mons[cur].exps, g)]
                if nxt not in info:
                    info[nxt] = (i, route + (g,))
                    queue.append(nxt)
    return info


def essential_certificates(p: TropPoly, seed: int = 0) -> List[EssentialityCertificate]:
    """Certificates for every monomial of the dedup-normalized form of ``p``.

    Indices refer to ``p.normalized().monomials``. Witnesses come from random
    sampling where possible; otherwise ``j`` is first tested against the
    monomials already known to be essential (if it cannot beat those it
    cannot beat all of them) and only then against everything.
    """
    mons = p.normalized().monomials
    m = len(mons)
    if m == 1:
        return [EssentialityCertificate(0, (Fraction(0),) * p.nvars, True)]
    info = _orbits(mons)
    members = {}
    for i, (rep, _) in info.items():
        members.setdefault(rep, []).append(i)

    found = {}
    dead = set()

    def spread(j, w):
        rep, route = info[j]
        # undo the route to get a witness for the representative
        for g in reversed(route):
            w = _swap(w, g)
        for k in members[rep]:
            x = w
            for g in info[k][1]:
                x = _swap(x, g)
            found[k] = x

    rng = random.Random(seed)
    for j, w in sorted(_sample_minimizers(mons, rng).items()):
        if j not in found:
            spread(j, w)
    for rep in sorted(members):
        if rep in found:
            continue
        while True:
            known = sorted(found)
            w = _lp_witness(mons, rep, known)
            if w is None:
                break
            k = _unique_argmin(_values(mons, w))
            if k == rep:
                spread(rep, w)
                break
            if k is not None and k not in found:
                spread(k, w)
                continue
            w = _lp_witness(mons, rep, [s for s in range(m) if s != rep])
            if w is not None:
                spread(rep, w)
            break
        if rep not in found:
            dead.update(members[rep])
    return [EssentialityCertificate(j, found.get(j), j in found) for j in range(m)]


def minimal_representation(p: TropPoly) -> TropPoly:
    """The essential monomials of ``p``, ordered lexicographically."""
    mons = p.normalized().monomials
    certs = essential_certificates(p)
    return TropPoly(p.nvars, tuple(mons[c.monomial_index] for c in certs if c.essential))


def _random_points(nvars, rng, count=12):
    pts = []
    for R in (3, 50):
        for _ in range(count // 2):
            pts.append(tuple(Fraction(rng.randint(-R, R)) for _ in range(nvars)))
    return pts


def _separate(P: TropPoly, Q: TropPoly, mu, x) -> Optional[Point]:
    """Near an essential witness ``x`` of ``mu`` in ``P`` find a point where P != Q."""
    if eval_poly(Q, x) != eval_poly(P, x):
        return x
    vmu = mu.value(x)
    slack = min((m.value(x) - vmu for m in P.monomials if m is not mu), default=None)
    n = P.nvars
    big = max((abs(a - b) for m in P.monomials for a, b in zip(m.exps, mu.exps)), default=0)
    eps = Fraction(1) if slack is None or big == 0 else slack / (2 * big)
    for k in range(n):
        for sign in (1, -1):
            y = list(x)
            y[k] += sign * eps
            y = tuple(y)
            if eval_poly(P, y) != eval_poly(Q, y):
                return y
    return None


def poly_equiv(p: TropPoly, q: TropPoly) -> EquivResult:
    """Functional equivalence on finite points, with a separating point if not."""
    if p.nvars != q.nvars:
        raise DimensionError(f"dimension mismatch: {p.nvars} vs {q.nvars} variables")
    rng = random.Random(0x5EED)
    for x in _random_points(p.nvars, rng):
        if eval_poly(p, x) != eval_poly(q, x):
            return EquivResult(False, x)
    P_certs = essential_certificates(p)
    Q_certs = essential_certificates(q)
    P_mons, Q_mons = p.normalized().monomials, q.normalized().monomials
    P = {P_mons[c.monomial_index]: c.witness for c in P_certs if c.essential}
    Q = {Q_mons[c.monomial_index]: c.witness for c in Q_certs if c.essential}
    if set(P) == set(Q):
        return EquivResult(True)
    Pmin = TropPoly(p.nvars, tuple(P))
    Qmin = TropPoly(q.nvars, tuple(Q))
    for mu in sorted(set(P) - set(Q), key=lambda m: m.exps):
        x = _separate(Pmin, Qmin, mu, P[mu])
        if x is not None:
            return EquivResult(False, x)
    for mu in sorted(set(Q) - set(P), key=lambda m: m.exps):
        x = _separate(Qmin, Pmin, mu, Q[mu])
        if x is not None:
            return EquivResult(False, x)
    raise AssertionError("essential sets differ but no separating point was found")


def rational_equiv(r: TropRational, s: TropRational) -> EquivResult:
    """``r`` and ``s`` agree on finite points iff r.num*s.den and s.num*r.den do."""
    if r.nvars != s.nvars:
        raise DimensionError(f"dimension mismatch: {r.nvars} vs {s.nvars} variables")
    return poly_equiv(poly_mul(r.num, s.den), poly_mul(s.num, r.den))


def canonical_rational(r: TropRational) -> TropRational:
    """Minimal numerator and denominator of ``r`` (no common-factor search)."""
    return TropRational(minimal_representation(r.num), minimal_representation(r.den))
