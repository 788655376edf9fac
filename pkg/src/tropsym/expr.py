"""Min/max/+ expression trees, their text syntax, and normalization to p ⊙ q^-1.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := '-' term | atom
    atom    := NUMBER | VAR | ('min' | 'max') '(' expr (',' expr)* ')' | '(' expr ')'
    NUMBER  := integer or p/q
    VAR     := 'x' INT            (flat, 1-based)
             | 'x[' INT ',' INT ']'  (block; second index 1 or 2)

Binary ``a - b`` is read as ``a + (-b)``.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DimensionError, ParseError
from .poly import TropPoly, TropRational, rational_add, rational_inv, rational_mul
from .semiring import as_scalar


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Add:
    children: Tuple["Node", ...]


@dataclass(frozen=True)
class Neg:
    child: "Node"


@dataclass(frozen=True)
class Min:
    children: Tuple["Node", ...]


@dataclass(frozen=True)
class Max:
    children: Tuple["Node", ...]


Node = object  # any of the node classes above


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<block>x\[\s*(?P<bi>\d+)\s*,\s*(?P<bj>\d+)\s*\])"
    r"|(?P<var>x(?P<vi>\d+))"
    r"|(?P<func>min|max)\b"
    r"|(?P<name>[A-Za-z_]\w*)"
    r"|(?P<op>[-+(),])"
    r")"
)


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        if kind == "num":
            tokens.append(("num", Fraction(m.group("num")), start))
        elif kind == "block":
            i, j = int(m.group("bi")), int(m.group("bj"))
            if i < 1 or j not in (1, 2):
                raise ParseError(f"bad block variable x[{i},{j}]", start)
            tokens.append(("var", (i, j), start))
        elif kind == "var":
            i = int(m.group("vi"))
            if i < 1:
                raise ParseError("variables are numbered from 1", start)
            tokens.append(("var", i, start))
        elif kind == "func":
            tokens.append(("func", m.group("func"), start))
        elif kind == "name":
            raise ParseError(f"unknown variable name {m.group('name')!r}", start)
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, nvars, block):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.block = block
        self.max_index = -1

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def expr(self):
        terms = [self.term()]
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                terms.append(t if val == "+" else Neg(t))
            else:
                break
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return Neg(self.term())
        return self.atom()

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Const(val)
        if kind == "var":
            return Var(self.resolve(val, pos))
        if kind == "func":
            self.expect("(")
            args = [self.expr()]
            while self.peek()[:2] == ("op", ","):
                self.take()
                args.append(self.expr())
            self.expect(")")
            return (Min if val == "min" else Max)(tuple(args))
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)

    def resolve(self, val, pos):
        if isinstance(val, tuple):
            i, j = val
            if self.block is False:
                raise ParseError("block variable in a flat expression", pos)
            self.block = True
            index = 2 * (i - 1) + (j - 1)
        else:
            if self.block is True:
                raise ParseError("flat variable in a block expression", pos)
            self.block = False
            index = val - 1
        if self.nvars is not None and index >= self.nvars:
            raise ParseError(f"unknown variable (only {self.nvars} declared)", pos)
        self.max_index = max(self.max_index, index)
        return index


def parse_expr(text: str, nvars: Optional[int] = None, block: Optional[bool] = None):
    """Parse ``text`` into an AST.

    ``nvars`` is the number of declared variables (``2n`` for block
    expressions); when omitted it is inferred as the largest index used.
    ``block`` forces flat (False) or block (True) variable syntax.
    """
    return parse_expr_info(text, nvars, block)[0]


def parse_expr_info(text, nvars=None, block=None):
    """Like :func:`parse_expr` but also returns ``(nvars, block)``."""
    p = _Parser(text, nvars, block)
    ast = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos)
    n = nvars
    if n is None:
        n = p.max_index + 1
        if p.block and n % 2:
            n += 1
    return ast, n, bool(p.block)


def eval_expr(node, x):
    """Direct evaluation at a finite rational point."""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        if node.index >= len(x):
            raise DimensionError(f"variable {node.index + 1} outside the point")
        return as_scalar(x[node.index])
    if isinstance(node, Add):
        return sum((eval_expr(c, x) for c in node.children), Fraction(0))
    if isinstance(node, Neg):
        return -eval_expr(node.child, x)
    if isinstance(node, Min):
        return min(eval_expr(c, x) for c in node.children)
    if isinstance(node, Max):
        return max(eval_expr(c, x) for c in node.children)
    raise TypeError(f"not an expression node: {node!r}")


def max_var_index(node):
    if isinstance(node, Var):
        return node.index
    if isinstance(node, Const):
        return -1
    if isinstance(node, Neg):
        return max_var_index(node.child)
    return max(max_var_index(c) for c in node.children)


def normalize_to_rational(node, nvars: Optional[int] = None) -> TropRational:
    """Rewrite an AST as ``p ⊙ q^-1`` by tropical common denominators.

    Add multiplies, Neg swaps numerator and denominator, Min cross-multiplies,
    and Max is rewritten as ``-min(-a, -b, ...)``.
    """
    if nvars is None:
        nvars = max_var_index(node) + 1
    one = TropPoly.constant(nvars)

    def go(nd):
        if isinstance(nd, Const):
            return TropRational(TropPoly.constant(nvars, nd.value), one)
        if isinstance(nd, Var):
            if nd.index >= nvars:
                raise DimensionError(f"variable {nd.index + 1} exceeds nvars={nvars}")
            return TropRational(TropPoly.variable(nvars, nd.index), one)
        if isinstance(nd, Neg):
            return rational_inv(go(nd.child))
        if isinstance(nd, Add):
            acc = go(nd.children[0])
            for c in nd.children[1:]:
                acc = rational_mul(acc, go(c))
            return acc
        if isinstance(nd, Min):
            acc = go(nd.children[0])
            for c in nd.children[1:]:
                acc = rational_add(acc, go(c))
            return acc
        if isinstance(nd, Max):
            return go(Neg(Min(tuple(Neg(c) for c in nd.children))))
        raise TypeError(f"not an expression node: {nd!r}")

    return go(node)
