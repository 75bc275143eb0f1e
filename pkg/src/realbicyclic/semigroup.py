"""Exact arithmetic for the pair semigroup on the non-negative rational quadrant.

Elements are pairs (a, b) of non-negative rationals with the operation

    (a, b) * (c, d) = (a + c - min(b, c), b + d - min(b, c))

under which the quadrant is a bisimple inverse monoid with identity (0, 0).
Restricted to non-negative integers this is the bicyclic monoid.  Every
coordinate is an exact ``fractions.Fraction``, so equality of values is
structural equality and no comparison ever touches floating point.

Besides multiplication the module provides the adjoined absorbing zero,
inversion (coordinate swap), idempotents, the natural partial order, and the
partition of the quadrant into diagonal lines of constant offset ``b - a``.
All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to a non-negative exact rational.

    Accepts Fractions, ints, and strings such as ``"3/4"`` or ``"1.25"``
    (finite decimal expansions convert exactly).  Raises ``ValueError`` for
    negative inputs.
    """
    f = value if type(value) is Fraction else Fraction(value)
    if f < 0:
        raise ValueError(f"negative scalar: {value!r}")
    return f


def format_scalar(f: Fraction) -> str:
    """Render a rational compactly: ``3`` when integral, else ``3/2``."""
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True, slots=True)
class Elem:
    """A point (a, b) of the quadrant."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if type(a) is not Fraction or type(b) is not Fraction:
            a, b = scalar(a), scalar(b)
        elif a < 0 or b < 0:
            raise ValueError(f"negative coordinate: ({a}, {b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __str__(self) -> str:
        return f"({format_scalar(self.a)},{format_scalar(self.b)})"

    def __repr__(self) -> str:
        return f"Elem({format_scalar(self.a)!r}, {format_scalar(self.b)!r})"

    def __mul__(self, other: "Elem") -> "Elem":
        return mul(self, other)

    def inv(self) -> "Elem":
        return inv(self)

    def __le__(self, other: "Elem"):
        if not isinstance(other, Elem):
            return NotImplemented
        return natural_leq(self, other)

    def __ge__(self, other: "Elem"):
        if not isinstance(other, Elem):
            return NotImplemented
        return natural_leq(other, self)


class ZeroType:
    """The adjoined absorbing zero.  A singleton; use the ``ZERO`` constant."""

    _instance: Optional["ZeroType"] = None

    def __new__(cls) -> "ZeroType":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "0"


ZERO = ZeroType()

ExtElem = Union[Elem, ZeroType]

IDENTITY = Elem(0, 0)


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class LineRef:
    """Handle for one diagonal line: all (x, x+alpha) for PLUS, (x+alpha, x) for MINUS.

    The two lines with alpha = 0 coincide, so that case is canonicalised to PLUS.
    """

    sign: Sign
    alpha: Fraction

    def __post_init__(self) -> None:
        alpha = scalar(self.alpha)
        sign = self.sign if alpha != 0 else Sign.PLUS
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "sign", sign)

    def __str__(self) -> str:
        return f"L{self.sign.value}{format_scalar(self.alpha)}"


def mul(e1: Elem, e2: Elem) -> Elem:
    """Semigroup product (a+c-min(b,c), b+d-min(b,c))."""
    m = e1.b if e1.b <= e2.a else e2.a
    return Elem(e1.a + e2.a - m, e1.b + e2.b - m)


def mul_branch(e1: Elem, e2: Elem) -> str:
    """Which case of the product's case split applies: ``lt``/``eq``/``gt``
    according as the left factor's second coordinate compares to the right
    factor's first."""
    if e1.b < e2.a:
        return "lt"
    if e1.b == e2.a:
        return "eq"
    return "gt"


def mul_ext(e1: ExtElem, e2: ExtElem) -> ExtElem:
    """Product on the quadrant with adjoined zero; zero absorbs."""
    if e1 is ZERO or e2 is ZERO:
        return ZERO
    return mul(e1, e2)


def inv(e: Elem) -> Elem:
    """The unique inverse: coordinate swap."""
    return Elem(e.b, e.a)


def inv_ext(e: ExtElem) -> ExtElem:
    return ZERO if e is ZERO else inv(e)


def is_idempotent(e: Elem) -> bool:
    """True exactly for diagonal points (u, u)."""
    return e.a == e.b


def natural_leq(e1: Elem, e2: Elem) -> bool:
    """Natural partial order of the inverse semigroup.

    (a, b) lies below (c, d) iff a >= c and a - b = c - d, i.e. e1 is e2
    pushed up the diagonal by a non-negative amount.
    """
    return e1.a >= e2.a and e1.a - e1.b == e2.a - e2.b


def natural_leq_ext(e1: ExtElem, e2: ExtElem) -> bool:
    """Order on the extension: zero is the least element."""
    if e1 is ZERO:
        return True
    if e2 is ZERO:
        return False
    return natural_leq(e1, e2)


def leq_witness(e1: Elem, e2: Elem) -> Optional[Elem]:
    """If e1 lies below e2, the canonical idempotent f with e2 * f = e1.

    Returns (b1, b1), the right-multiplier witness; None when incomparable.
    """
    if not natural_leq(e1, e2):
        return None
    return Elem(e1.b, e1.b)


def classify_line(e: Elem) -> Tuple[LineRef, Fraction]:
    """The unique diagonal line through ``e`` and its line parameter x."""
    if e.b >= e.a:
        return LineRef(Sign.PLUS, e.b - e.a), e.a
    return LineRef(Sign.MINUS, e.a - e.b), e.b


def line_point(line: LineRef, x: ScalarLike) -> Elem:
    """The point of ``line`` with parameter ``x`` (inverse of classify_line)."""
    x = scalar(x)
    if line.sign is Sign.PLUS:
        return Elem(x, x + line.alpha)
    return Elem(x + line.alpha, x)
