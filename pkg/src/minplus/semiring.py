"""Exact scalar arithmetic over the min-plus semiring (R ∪ {inf}, min, +).

Finite values are stored as exact rationals so that averages and slopes
compare without rounding. The additive identity ``inf`` (written ε in the
tropical-algebra literature) is a dedicated singleton, never a numeric
sentinel, because sentinel arithmetic breaks the absorbing law a ⊗ ε = ε.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = [
    "MinPlusValue",
    "EPSILON",
    "E",
    "as_value",
    "oplus",
    "otimes",
    "otimes_inverse",
    "power",
    "parse_value",
    "format_rational",
]

_EPSILON_TOKENS = {"inf", "+inf", "infinity", "eps", "epsilon", "ε"}


class MinPlusValue:
    """An element of R_min: an exact rational, or the top element ``inf``.

    Instances are immutable and hashable. Ordering is total, with ``inf``
    greater than every finite value (it is the identity for ``min``).
    """

    __slots__ = ("_q",)

    def __init__(self, value):
        if isinstance(value, MinPlusValue):
            self._q = value._q
        elif value is None:
            self._q = None
        elif isinstance(value, bool):
            raise TypeError("booleans are not min-plus values")
        elif isinstance(value, Rational):
            self._q = Fraction(value)
        elif isinstance(value, str):
            self._q = _parse_token(value)
        elif isinstance(value, float):
            raise TypeError(
                "floats are rejected to keep arithmetic exact; "
                "pass an int, Fraction, or a decimal/rational string"
            )
        else:
            raise TypeError(f"cannot interpret {value!r} as a min-plus value")

    @property
    def is_epsilon(self) -> bool:
        return self._q is None

    @property
    def rational(self) -> Fraction:
        """The finite value as a Fraction; raises on ``inf``."""
        if self._q is None:
            raise ValueError("inf has no finite rational value")
        return self._q

    def __eq__(self, other):
        try:
            other = as_value(other)
        except TypeError:
            return NotImplemented
        return self._q == other._q

    def __lt__(self, other):
        other = as_value(other)
        if self._q is None:
            return False
        if other._q is None:
            return True
        return self._q < other._q

    def __le__(self, other):
        other = as_value(other)
        return self == other or self < other

    def __gt__(self, other):
        return as_value(other) < self

    def __ge__(self, other):
        return as_value(other) <= self

    def __hash__(self):
        return hash(self._q)

    def __repr__(self):
        return f"MinPlusValue({str(self)!r})"

    def __str__(self):
        if self._q is None:
            return "inf"
        return format_rational(self._q)

    def to_json(self):
        """JSON-ready form: int for integers, "p/q" string otherwise, "inf" for ε."""
        if self._q is None:
            return "inf"
        if self._q.denominator == 1:
            return int(self._q)
        return str(self._q)


def _parse_token(token: str) -> Fraction | None:
    text = token.strip()
    if text.lower() in _EPSILON_TOKENS:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a min-plus value: {token!r}") from exc


EPSILON = MinPlusValue(None)
E = MinPlusValue(0)


def as_value(x) -> MinPlusValue:
    """Coerce an int, Fraction, string, or None to a MinPlusValue."""
    if isinstance(x, MinPlusValue):
        return x
    return MinPlusValue(x)


def parse_value(text: str) -> MinPlusValue:
    """Parse a textual value: integer, exact decimal, "p/q", or an ε token."""
    return MinPlusValue(_parse_token(text))


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", or plain integer when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def oplus(a, b) -> MinPlusValue:
    """Min-plus addition: the minimum of the two operands."""
    a, b = as_value(a), as_value(b)
    return a if a <= b else b


def otimes(a, b) -> MinPlusValue:
    """Min-plus multiplication: ordinary addition, with ε absorbing."""
    a, b = as_value(a), as_value(b)
    if a._q is None or b._q is None:
        return EPSILON
    return MinPlusValue(a._q + b._q)


def otimes_inverse(a) -> MinPlusValue:
    """The ⊗-inverse (negation) of a finite value."""
    a = as_value(a)
    if a._q is None:
        raise ValueError("epsilon has no ⊗-inverse")
    return MinPlusValue(-a._q)


def power(a, k: int) -> MinPlusValue:
    """k-fold ⊗-product of a with itself: k·a, with a^0 = 0 for every a."""
    a = as_value(a)
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    if k == 0:
        return E
    if a._q is None:
        return EPSILON
    return MinPlusValue(a._q * k)
