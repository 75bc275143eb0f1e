"""Symbolic set algebra over the natural partial order of the quadrant.

The pieces are the order-defined subsets that one-sided multiplication can
produce from diagonal lines: down-rays (principal down-sets, optionally
punctured at the base), up-segments (principal up-sets, which are closed
segments reaching the quadrant boundary), single points, and full diagonal
lines.  A ``Region`` is a finite union of such parts in a normal form with
decidable structural equality.

The operations compute, in exact rational arithmetic: products of lines with
constructive factorisations, the right/left shrink witnesses that squeeze a
translated down-ray below a prescribed point, exact translation images of
down-rays, and exact preimages of up-segments under one-sided multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .semigroup import (
    Elem,
    LineRef,
    Sign,
    classify_line,
    inv,
    mul,
    natural_leq,
)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class DownRay:
    """All points lying below ``base``:  {base + (t, t) : t >= 0}.

    With ``punctured`` the base itself is excluded.
    """

    base: Elem
    punctured: bool = False

    def member(self, e: Elem) -> bool:
        if self.punctured and e == self.base:
            return False
        return natural_leq(e, self.base)

    def __str__(self) -> str:
        mark = "*" if self.punctured else ""
        return f"down{mark}{self.base}"


@dataclass(frozen=True)
class UpSegment:
    """All points lying above ``top``: the segment from ``top`` to the boundary,
    {top - (t, t) : 0 <= t <= min(top.a, top.b)}."""

    top: Elem

    def member(self, e: Elem) -> bool:
        return natural_leq(self.top, e)

    def __str__(self) -> str:
        return f"up{self.top}"


@dataclass(frozen=True)
class SinglePoint:
    point: Elem

    def member(self, e: Elem) -> bool:
        return e == self.point

    def __str__(self) -> str:
        return f"point{self.point}"


@dataclass(frozen=True)
class FullLine:
    line: LineRef

    def member(self, e: Elem) -> bool:
        return classify_line(e)[0] == self.line

    def __str__(self) -> str:
        return str(self.line)


RegionPart = Union[DownRay, UpSegment, SinglePoint, FullLine]

_PART_RANK = {DownRay: 0, UpSegment: 1, SinglePoint: 2, FullLine: 3}


def _part_key(part: RegionPart):
    rank = _PART_RANK[type(part)]
    if isinstance(part, DownRay):
        return (rank, part.base.a, part.base.b, part.punctured)
    if isinstance(part, UpSegment):
        return (rank, part.top.a, part.top.b)
    if isinstance(part, SinglePoint):
        return (rank, part.point.a, part.point.b)
    return (rank, part.line.sign.value, part.line.alpha)


@dataclass(frozen=True)
class Region:
    """Finite union of parts; empty tuple denotes the empty set.

    Parts are stored sorted by kind then coordinates with duplicates dropped,
    so equal sets built the same way compare equal structurally.
    """

    parts: Tuple[RegionPart, ...] = ()

    def __post_init__(self) -> None:
        normalised = tuple(sorted(set(self.parts), key=_part_key))
        object.__setattr__(self, "parts", normalised)

    def member(self, e: Elem) -> bool:
        return any(part.member(e) for part in self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def __str__(self) -> str:
        if not self.parts:
            return "empty"
        return " | ".join(str(p) for p in self.parts)


EMPTY_REGION = Region(())


def down_set(e: Elem, punctured: bool = False) -> DownRay:
    return DownRay(e, punctured)


def up_set(e: Elem) -> UpSegment:
    return UpSegment(e)


def line_product(l1: LineRef, l2: LineRef) -> Region:
    """The exact product set of two diagonal lines.

    Like-signed lines multiply to the line with the offsets added; a PLUS
    followed by a MINUS collapses to the line of the offset difference; a
    MINUS followed by a PLUS is not a whole line but the down-ray below
    (alpha1, alpha2).
    """
    a1, a2 = l1.alpha, l2.alpha
    if l1.sign is Sign.PLUS and l2.sign is Sign.PLUS:
        return Region((FullLine(LineRef(Sign.PLUS, a1 + a2)),))
    if l1.sign is Sign.MINUS and l2.sign is Sign.MINUS:
        return Region((FullLine(LineRef(Sign.MINUS, a1 + a2)),))
    if l1.sign is Sign.PLUS:
        if a1 >= a2:
            return Region((FullLine(LineRef(Sign.PLUS, a1 - a2)),))
        return Region((FullLine(LineRef(Sign.MINUS, a2 - a1)),))
    return Region((DownRay(Elem(a1, a2)),))


class NotInProduct(ValueError):
    """Raised when a factorisation target is outside the stated product set."""


def factor_in_line_product(target: Elem, l1: LineRef, l2: LineRef) -> Tuple[Elem, Elem]:
    """Split ``target`` as e1 * e2 with e1 on ``l1`` and e2 on ``l2``.

    The choice is deterministic: one factor sits at the start of its line or
    ties its middle coordinate to the other's, which pins both factors given
    the target's parameter.
    """
    prod = line_product(l1, l2)
    if not prod.member(target):
        raise NotInProduct(f"{target} is not in {l1} * {l2} = {prod}")
    a1, a2 = l1.alpha, l2.alpha
    if l1.sign is Sign.PLUS and l2.sign is Sign.PLUS:
        x = target.a
        return Elem(x, x + a1), Elem(0, a2)
    if l1.sign is Sign.MINUS and l2.sign is Sign.MINUS:
        x = target.b
        return Elem(a1, 0), Elem(x + a2, x)
    if l1.sign is Sign.PLUS:
        if a1 >= a2:
            x = target.a
            return Elem(x, x + a1), Elem(x + a1, x + a1 - a2)
        x = target.b
        return Elem(x + a2 - a1, x + a2), Elem(x + a2, x)
    t = target.a - a1
    return Elem(a1 + t, t), Elem(t, t + a2)


def shrink_witness(e0: Elem, e1: Elem) -> Elem:
    """The least (c, d) with e0 * (c, d) below e1, hereditarily.

    c is pinned to e1.a + e0.a + e0.b (the smallest choice that works) and d
    follows so the diagonal offsets match.  Every point below the returned
    witness keeps the containment: e0 * s lies below e1 whenever s lies below
    the witness.
    """
    c = e1.a + e0.a + e0.b
    d = e0.a + c - e0.b - e1.a + e1.b
    return Elem(c, d)


def shrink_witness_dual(e0: Elem, e1: Elem) -> Elem:
    """Mirror witness for right multiplication: (c, d) * e0 lies below e1.

    Obtained from ``shrink_witness`` through the coordinate-swap involution,
    which reverses products and preserves the order.
    """
    return inv(shrink_witness(inv(e0), inv(e1)))


def translate_down_ray(side: Side, t: Elem, r: DownRay) -> DownRay:
    """The exact image of a down-ray under one-sided multiplication by ``t``.

    The image is always the full down-ray below the translated base.  When the
    translation folds an initial piece of the ray onto the image base (left:
    t.b exceeds the base's first coordinate; right: t.a exceeds the base's
    second), a punctured source still covers the image base, so the image is
    unpunctured; otherwise the translation is injective on the ray and
    puncturing is preserved.
    """
    if side is Side.LEFT:
        base = mul(t, r.base)
        collapsed = t.b > r.base.a
    else:
        base = mul(r.base, t)
        collapsed = t.a > r.base.b
    return DownRay(base, punctured=r.punctured and not collapsed)


def preimage_up_segment(side: Side, t: Elem, u: UpSegment) -> Region:
    """Exact solution set of ``t * s in u`` (left) or ``s * t in u`` (right).

    Both product coordinates subtract the same min term, so the image lands on
    u's diagonal iff s sits on one fixed diagonal; the threshold coordinate is
    piecewise affine and monotone along it, which makes the preimage a single
    up-segment, or empty when the translator already overshoots the segment's
    top.
    """
    p, q = u.top.a, u.top.b
    if side is Side.LEFT:
        if t.a > p:
            return EMPTY_REGION
        return Region((UpSegment(Elem(p - t.a + t.b, q)),))
    if t.b > q:
        return EMPTY_REGION
    return Region((UpSegment(Elem(p, q - t.b + t.a)),))
