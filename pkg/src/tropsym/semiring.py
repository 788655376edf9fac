"""Exact min-plus scalars.

Finite values are :class:`fractions.Fraction`; the tropical zero (+inf) is the
singleton :data:`INF`.
"""
from fractions import Fraction
from functools import total_ordering

from .errors import DomainError, ParseError


@total_ordering
class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("tropsym.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ZERO = Fraction(0)


def is_inf(a):
    return a is INF


def as_scalar(value):
    """Coerce ints, Fractions, ``"p/q"`` strings or ``"inf"`` to a scalar."""
    if value is INF:
        return INF
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ("inf", "+inf", "infinity", "∞"):
            return INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational number: {value!r}") from None
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use an exact rational")
    raise TypeError(f"cannot interpret {value!r} as a tropical scalar")


def trop_add(a, b):
    """Tropical sum: ``min(a, b)`` with INF as identity."""
    if a is INF:
        return b
    if b is INF:
        return a
    return a if a <= b else b


def trop_mul(a, b):
    """Tropical product: ``a + b`` with INF absorbing."""
    if a is INF or b is INF:
        return INF
    return a + b


def trop_inv(a):
    if a is INF:
        raise DomainError("no tropical inverse of INF")
    return -a


def trop_pow(a, k):
    """``a`` tropically raised to the integer ``k`` (i.e. ``k*a``)."""
    if a is INF:
        if k > 0:
            return INF
        if k == 0:
            return ZERO
        raise DomainError("no tropical inverse of INF")
    return a * k


def format_scalar(a):
    """Serialize as ``"p/q"`` in lowest terms, ``"p"`` when integral."""
    if a is INF:
        return "inf"
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
