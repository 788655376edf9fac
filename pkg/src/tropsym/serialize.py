"""JSON encodings for scalars, polynomials, generator expressions and barcodes.

Rationals are strings in lowest terms (``"3/2"``, ``"-4"``); the tropical
zero is ``"inf"``. Monomials are listed lexicographically by exponent vector.
"""
import json
from fractions import Fraction

from .blocksym import Barcode, Gen2Expr, enumerate_orbits, parse_orbit_label
from .errors import ParseError
from .poly import TropPoly, TropRational
from .semiring import as_scalar, format_scalar
from .sym import GeneratorExpr


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None


def _scalar(v, what="coefficient"):
    try:
        return as_scalar(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"bad {what} {v!r}") from None


def _int_list(v, what):
    if not isinstance(v, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in v):
        raise ParseError(f"{what} must be a list of integers")
    return v


def point_to_json(x):
    return [format_scalar(v) for v in x]


def poly_to_json(p: TropPoly) -> dict:
    p = p.normalized()
    return {
        "nvars": p.nvars,
        "monomials": [{"coeff": format_scalar(m.coeff), "exps": list(m.exps)} for m in p.monomials],
    }


def poly_from_json(obj) -> TropPoly:
    if not isinstance(obj, dict) or "monomials" not in obj:
        raise ParseError("polynomial JSON needs 'nvars' and 'monomials'")
    nvars = obj.get("nvars")
    if not isinstance(nvars, int) or nvars < 0:
        raise ParseError("'nvars' must be a nonnegative integer")
    mons = obj["monomials"]
    if not isinstance(mons, list) or not mons:
        raise ParseError("'monomials' must be a nonempty list")
    terms = []
    for m in mons:
        if not isinstance(m, dict):
            raise ParseError("each monomial must be an object")
        exps = _int_list(m.get("exps"), "'exps'")
        if len(exps) != nvars:
            raise ParseError(f"monomial has {len(exps)} exponents, expected {nvars}")
        c = _scalar(m.get("coeff", "0"))
        if not isinstance(c, Fraction):
            raise ParseError("monomial coefficients must be finite")
        terms.append((c, exps))
    return TropPoly.from_terms(nvars, terms)


def rational_to_json(r: TropRational) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rational_from_json(obj) -> TropRational:
    """Accepts the rational format or a bare polynomial (denominator 0)."""
    if isinstance(obj, dict) and "num" in obj:
        if "den" not in obj:
            raise ParseError("rational JSON needs 'num' and 'den'")
        r = TropRational(poly_from_json(obj["num"]), poly_from_json(obj["den"]))
        return r
    return TropRational.from_poly(poly_from_json(obj))


def generator_expr_to_json(g: GeneratorExpr) -> dict:
    return {
        "n": g.n,
        "terms": [{"coeff": format_scalar(m.coeff), "e_exps": list(m.exps)} for m in g.poly.monomials],
    }


def generator_expr_from_json(obj) -> GeneratorExpr:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise ParseError("generator JSON needs 'n' and 'terms'")
    n = obj["n"]
    terms = []
    for t in obj["terms"]:
        exps = _int_list(t.get("e_exps"), "'e_exps'")
        if len(exps) != n:
            raise ParseError(f"'e_exps' must have length {n}")
        terms.append((_scalar(t.get("coeff", "0")), exps))
    if not terms:
        raise ParseError("'terms' must be nonempty")
    return GeneratorExpr(n, TropPoly.from_terms(n, terms))


def _gen_poly_to_json(p: TropPoly, alphabet):
    out = []
    for m in p.monomials:
        gens = {g.label: k for g, k in zip(alphabet, m.exps) if k}
        out.append({"coeff": format_scalar(m.coeff), "gens": gens})
    return out


def _gen_poly_from_json(items, n):
    alphabet = enumerate_orbits(n)
    index = {o: i for i, o in enumerate(alphabet)}
    if not isinstance(items, list) or not items:
        raise ParseError("generator polynomial must be a nonempty list")
    terms = []
    for t in items:
        e = [0] * len(alphabet)
        gens = t.get("gens", {})
        if not isinstance(gens, dict):
            raise ParseError("'gens' must map orbit labels to exponents")
        for label, k in gens.items():
            if not isinstance(k, int) or isinstance(k, bool):
                raise ParseError(f"exponent of {label} must be an integer")
            e[index[parse_orbit_label(label, n)]] += k
        terms.append((_scalar(t.get("coeff", "0")), e))
    return TropPoly.from_terms(len(alphabet), terms)


def gen2_to_json(g: Gen2Expr) -> dict:
    return {
        "n": g.n,
        "num": _gen_poly_to_json(g.num, g.alphabet),
        "den": _gen_poly_to_json(g.den, g.alphabet),
    }


def gen2_from_json(obj) -> Gen2Expr:
    if not isinstance(obj, dict) or not {"n", "num", "den"} <= set(obj):
        raise ParseError("block generator JSON needs 'n', 'num' and 'den'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    return Gen2Expr(n, _gen_poly_from_json(obj["num"], n), _gen_poly_from_json(obj["den"], n))


def barcode_to_json(b: Barcode) -> dict:
    return {
        "intervals": [
            {"birth": format_scalar(s), "death": format_scalar(t)} for s, t in b.intervals
        ]
    }


def barcode_from_json(obj) -> Barcode:
    if not isinstance(obj, dict) or not isinstance(obj.get("intervals"), list):
        raise ParseError("barcode JSON needs an 'intervals' list")
    ivs = []
    for iv in obj["intervals"]:
        if not isinstance(iv, dict) or "birth" not in iv or "death" not in iv:
            raise ParseError("each interval needs 'birth' and 'death'")
        ivs.append((_scalar(iv["birth"], "birth"), _scalar(iv["death"], "death")))
    if not ivs:
        raise ParseError("a barcode needs at least one interval")
    return Barcode(tuple(ivs))


def fingerprint2_to_json(fp) -> dict:
    return {k: format_scalar(v) for k, v in fp.items()}


def certificate_to_json(c) -> dict:
    return {
        "monomial_index": c.monomial_index,
        "essential": c.essential,
        "witness": None if c.witness is None else point_to_json(c.witness),
    }
