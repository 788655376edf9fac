"""Command-line interface: ``tropsym <command> ...``.

Exit status is 0 on success, 1 for domain errors (for example a
non-symmetric input or a dimension mismatch) and 2 for unparsable input.
Errors are printed to stderr as JSON objects with a stable ``code``.
"""
import argparse
import sys

from . import serialize as ser
from .blocksym import (
    DecompositionTrace,
    decompose2_polynomial,
    decompose2_symmetric_rational,
    enumerate_orbits,
    non_generation_witness,
    orbit_count,
    orbit_fingerprint2,
    symmetrize2,
)
from .canon import minimal_representation, rational_equiv
from .errors import DimensionError, DomainError, ParseError, TropError
from .expr import eval_expr, normalize_to_rational, parse_expr_info
from .poly import (
    Monomial,
    TropPoly,
    TropRational,
    cancel_monomial_content,
    eval_poly,
    eval_rational,
    format_poly,
    poly_mul,
)
from .semiring import as_scalar, format_scalar, is_inf
from .sym import decompose_symmetric, decompose_symmetric_rational, orbit_fingerprint, symmetrize

COMMANDS = (
    "eval",
    "canon",
    "equiv",
    "sym",
    "decompose",
    "sym2",
    "decompose2",
    "orbits",
    "fingerprint",
    "barcode-features",
    "witness",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(ser.dumps({"code": "usage_error", "message": message}) + "\n")
        sys.exit(2)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of variables (rows with --block)")
    common.add_argument("--block", action="store_true", help="use 2n block variables x[i,j]")
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="accepted for scripting; internal sampling is fixed-seed, so output never depends on it",
    )
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--input", help="read the input from a file ('-' for stdin)")
    common.add_argument("--output", help="write the result to a file")
    common.add_argument("--max-degree", type=int, help="degree cap for decompositions")

    parser = _Parser(prog="tropsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression at a point")
    p.add_argument("expr", nargs="?")
    p.add_argument("--at", required=True, help="comma-separated point, e.g. 1,2,3/2")

    p = sub.add_parser("canon", parents=[common], help="minimal numerator and denominator")
    p.add_argument("expr", nargs="?")

    p = sub.add_parser("equiv", parents=[common], help="functional equivalence of two expressions")
    p.add_argument("left")
    p.add_argument("right")

    for name, text in (
        ("sym", "symmetrize a polynomial"),
        ("decompose", "write a symmetric expression in e_1..e_n"),
        ("sym2", "block-symmetrize a polynomial"),
        ("decompose2", "write a 2-symmetric expression in orbit generators"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("expr", nargs="?")
        if name == "decompose2":
            p.add_argument(
                "--symmetrize",
                action="store_true",
                help="decompose the block symmetrization of the input",
            )
            p.add_argument("--trace", action="store_true", help="include the recursion trace")

    p = sub.add_parser("orbits", parents=[common], help="list the orbit generators")
    p.add_argument("--count", action="store_true", help="print only the number of orbits")

    p = sub.add_parser("fingerprint", parents=[common], help="orbit coordinates of a point")
    p.add_argument("point", nargs="?")
    p.add_argument("--at", help="comma-separated point (alternative to the positional)")

    p = sub.add_parser("barcode-features", parents=[common], help="features of a barcode")
    p.add_argument("barcode", nargs="?", help="barcode JSON (or use --input)")

    p = sub.add_parser("witness", parents=[common], help="non-domination witness points")
    p.add_argument("--d", type=int, required=True)
    return parser


# ---------------------------------------------------------------- helpers


def _read_input(args, positional):
    if positional is not None and args.input is not None:
        raise ParseError("give the input either inline or with --input, not both")
    if positional is not None:
        return positional
    if args.input is None:
        raise ParseError("no input given")
    if args.input == "-":
        return sys.stdin.read()
    try:
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {args.input}: {exc.strerror}") from None


def _declared_nvars(args):
    if args.n is None:
        return None
    if args.n < 1:
        raise DomainError("--n must be positive")
    return 2 * args.n if args.block else args.n


def _parse_point(text):
    parts = [t.strip() for t in text.split(",")]
    try:
        return [as_scalar(t) for t in parts]
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"bad point {text!r}") from None


def _load(text, args, nvars=None):
    """Parse an expression or JSON payload into ``(rational, nvars, block)``."""
    block = True if args.block else None
    declared = nvars if nvars is not None else _declared_nvars(args)
    if text.lstrip().startswith("{"):
        r = ser.rational_from_json(ser.loads(text))
        if declared is not None and r.nvars != declared:
            raise DimensionError(f"input has {r.nvars} variables, expected {declared}")
        return r, r.nvars, bool(args.block)
    ast, n, is_block = parse_expr_info(text, declared, block)
    return normalize_to_rational(ast, n), n, is_block


def _as_laurent(r: TropRational) -> TropPoly:
    if len(r.den.monomials) != 1:
        raise DomainError("expected a polynomial expression (monomial denominator)")
    (d,) = r.den.monomials
    inv = TropPoly(r.nvars, (Monomial(-d.coeff, tuple(-e for e in d.exps)),))
    return poly_mul(r.num, inv)


def _emit(args, payload, text):
    out = ser.dumps(payload) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


# ---------------------------------------------------------------- commands


def cmd_eval(args):
    text = _read_input(args, args.expr)
    x = _parse_point(args.at)
    if text.lstrip().startswith("{"):
        r, _, _ = _load(text, args)
        if r.den.is_constant() and len(r.den) == 1:
            value = eval_poly(r.num, x)
            if not is_inf(value):
                value = value - r.den.monomials[0].coeff
        else:
            value = eval_rational(r, x)
    else:
        declared = _declared_nvars(args)
        ast, n, _ = parse_expr_info(text, declared, True if args.block else None)
        if len(x) != n if declared is not None else len(x) < n:
            raise DimensionError(f"point has {len(x)} coordinates, expression uses {n}")
        if any(not hasattr(v, "denominator") for v in x):
            raise DomainError("expressions are evaluated at finite points only")
        value = eval_expr(ast, x)
    _emit(args, {"value": format_scalar(value)}, format_scalar(value))


def cmd_canon(args):
    r, _, block = _load(_read_input(args, args.expr), args)
    r = cancel_monomial_content(r)
    c = TropRational(minimal_representation(r.num), minimal_representation(r.den))
    text = f"({format_poly(c.num, block)}) ⊙ ({format_poly(c.den, block)})^-1"
    _emit(args, ser.rational_to_json(c), text)


def cmd_equiv(args):
    declared = _declared_nvars(args)
    sizes = []
    for t in (args.left, args.right):
        if declared is None and not t.lstrip().startswith("{"):
            sizes.append(parse_expr_info(t, None, True if args.block else None)[1])
    nvars = declared if declared is not None else (max(sizes) if sizes else None)
    r, _, _ = _load(args.left, args, nvars)
    s, _, _ = _load(args.right, args, nvars if nvars is not None else r.nvars)
    res = rational_equiv(r, s)
    payload = {"equivalent": res.equivalent}
    if not res.equivalent:
        payload["witness"] = ser.point_to_json(res.witness)
    text = "equivalent" if res.equivalent else "not equivalent at " + ", ".join(payload["witness"])
    _emit(args, payload, text)


def cmd_sym(args, block=False):
    args.block = args.block or block
    r, _, _ = _load(_read_input(args, args.expr), args)
    p = _as_laurent(r)
    s = symmetrize2(p) if block else symmetrize(p)
    s = minimal_representation(s)
    _emit(args, ser.poly_to_json(s), format_poly(s, block))


def cmd_decompose(args):
    r, _, _ = _load(_read_input(args, args.expr), args)
    if len(r.den.monomials) == 1:
        p = minimal_representation(_as_laurent(r))
        g = decompose_symmetric(p)
        _emit(args, ser.generator_expr_to_json(g), str(g))
        return
    gn, gd = decompose_symmetric_rational(r)
    payload = {"num": ser.generator_expr_to_json(gn), "den": ser.generator_expr_to_json(gd)}
    _emit(args, payload, f"({gn}) ⊙ ({gd})^-1")


def cmd_decompose2(args):
    args.block = True
    r, nvars, _ = _load(_read_input(args, args.expr), args)
    trace = DecompositionTrace() if args.trace else None
    caps = {"max_degree": args.max_degree}
    if args.symmetrize:
        p = _as_laurent(r)
        if p.min_exponent < 0:
            raise DomainError("--symmetrize needs nonnegative exponents")
        g = decompose2_polynomial(p, trace, **caps)
    else:
        g = decompose2_symmetric_rational(r, trace, **caps)
    payload = ser.gen2_to_json(g)
    if trace is not None:
        payload["trace"] = [
            {
                "rows": [list(row) for row in c["rows"]],
                "depth": c["depth"],
                "rule": c["rule"],
            }
            for c in trace.calls
        ]
    _emit(args, payload, str(g))


def cmd_orbits(args):
    if args.n is None:
        raise DomainError("orbits needs --n")
    orbits = enumerate_orbits(args.n)
    if args.count:
        _emit(args, orbit_count(args.n), str(len(orbits)))
        return
    labels = [o.label for o in orbits]
    _emit(args, labels, "\n".join(labels))


def cmd_fingerprint(args):
    raw = args.point if args.point is not None else args.at
    if raw is None:
        raw = _read_input(args, None)
    x = _parse_point(raw)
    if args.n is not None and len(x) != _declared_nvars(args):
        raise DimensionError(f"point has {len(x)} coordinates, expected {_declared_nvars(args)}")
    if any(not hasattr(v, "denominator") for v in x):
        raise DomainError("fingerprints need finite coordinates")
    if args.block:
        fp = orbit_fingerprint2(x)
        _emit(args, ser.fingerprint2_to_json(fp), "\n".join(f"{k} {format_scalar(v)}" for k, v in fp.items()))
    else:
        fp = orbit_fingerprint(x)
        vals = [format_scalar(v) for v in fp]
        _emit(args, vals, " ".join(vals))


def cmd_barcode_features(args):
    b = ser.barcode_from_json(ser.loads(_read_input(args, args.barcode)))
    fp = orbit_fingerprint2(b)
    _emit(args, ser.fingerprint2_to_json(fp), "\n".join(f"{k} {format_scalar(v)}" for k, v in fp.items()))


def cmd_witness(args):
    rep = non_generation_witness(args.d)
    payload = {
        "d": rep["d"],
        "ok": rep["ok"],
        "essential": rep["essential"],
        "witnesses": [
            {
                "a": w["a"],
                "point": ser.point_to_json(w["point"]),
                "min": format_scalar(w["min"]),
                "cross_term": format_scalar(w["cross_term"]),
                "polynomial": format_scalar(w["polynomial"]),
            }
            for w in rep["witnesses"]
        ],
    }
    lines = [
        f"a={w['a']} point=({', '.join(w['point'])}) min={w['min']}" for w in payload["witnesses"]
    ]
    lines.append("both monomials essential" if all(rep["essential"]) else "not all essential")
    _emit(args, payload, "\n".join(lines))


HANDLERS = {
    "eval": cmd_eval,
    "canon": cmd_canon,
    "equiv": cmd_equiv,
    "sym": cmd_sym,
    "decompose": cmd_decompose,
    "sym2": lambda a: cmd_sym(a, block=True),
    "decompose2": cmd_decompose2,
    "orbits": cmd_orbits,
    "fingerprint": cmd_fingerprint,
    "barcode-features": cmd_barcode_features,
    "witness": cmd_witness,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        HANDLERS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(ser.dumps(exc.to_json()) + "\n")
        return 2
    except TropError as exc:
        sys.stderr.write(ser.dumps(exc.to_json()) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
