"""Neighbourhood models for topologies on the quadrant and its zero extension.

Four basic-neighbourhood shapes, all with exact rational membership:

* ``NbhdUsual`` -- open axis-aligned box around a point, a base for the plane
  topology restricted to the quadrant;
* ``NbhdOrder`` -- interval of one diagonal line around a point, a base for
  the topology generated by the natural partial order (each line is open and
  closed there);
* ``NbhdAc1`` -- zero neighbourhood in the one-point compactification of the
  plane topology: zero together with every point with a coordinate beyond a
  threshold;
* ``NbhdAc2`` -- zero neighbourhood in the one-point compactification of the
  order topology: the complement of a finite union of up-segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .semigroup import (
    Elem,
    ExtElem,
    ZERO,
    ZeroType,
    classify_line,
    inv,
    natural_leq,
    scalar,
)


def _positive(value) -> Fraction:
    f = scalar(value)
    if f == 0:
        raise ValueError("size parameter must be positive")
    return f


@dataclass(frozen=True)
class NbhdUsual:
    """Open box |a - center.a| < radius, |b - center.b| < radius, within the quadrant."""

    center: Elem
    radius: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius", _positive(self.radius))

    def member(self, e: ExtElem) -> bool:
        if e is ZERO or isinstance(e, ZeroType):
            return False
        return (
            abs(e.a - self.center.a) < self.radius
            and abs(e.b - self.center.b) < self.radius
        )


@dataclass(frozen=True)
class NbhdOrder:
    """Points of the center's diagonal line whose parameter is within epsilon."""

    center: Elem
    epsilon: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", _positive(self.epsilon))

    def member(self, e: ExtElem) -> bool:
        if e is ZERO or isinstance(e, ZeroType):
            return False
        line_e, x_e = classify_line(e)
        line_c, x_c = classify_line(self.center)
        return line_e == line_c and abs(x_e - x_c) < self.epsilon


@dataclass(frozen=True)
class NbhdAc1:
    """Zero plus every point with a coordinate strictly beyond ``n``."""

    n: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", _positive(self.n))

    def member(self, e: ExtElem) -> bool:
        if e is ZERO or isinstance(e, ZeroType):
            return True
        return e.a > self.n or e.b > self.n


@dataclass(frozen=True)
class NbhdAc2:
    """Zero plus every point outside the up-segments of the listed tops."""

    tops: Tuple[Elem, ...]

    def __post_init__(self) -> None:
        tops = tuple(self.tops)
        if not tops:
            raise ValueError("neighbourhood needs at least one excluded up-segment")
        object.__setattr__(self, "tops", tops)

    def member(self, e: ExtElem) -> bool:
        if e is ZERO or isinstance(e, ZeroType):
            return True
        return all(not natural_leq(top, e) for top in self.tops)


Nbhd = Union[NbhdUsual, NbhdOrder, NbhdAc1, NbhdAc2]
ZeroNbhd = Union[NbhdAc1, NbhdAc2]


def nbhd_member(nbhd: Nbhd, e: ExtElem) -> bool:
    return nbhd.member(e)


def nbhd_invert(nbhd: ZeroNbhd) -> ZeroNbhd:
    """The pointwise inverse image of a zero neighbourhood.

    Threshold neighbourhoods are fixed (the defining condition is symmetric in
    the coordinates); up-segment complements swap each excluded top.
    """
    if isinstance(nbhd, NbhdAc1):
        return nbhd
    if isinstance(nbhd, NbhdAc2):
        return NbhdAc2(tuple(inv(top) for top in nbhd.tops))
    raise TypeError(f"cannot invert neighbourhood of type {type(nbhd).__name__}")


def nbhd_intersect_ac2(n1: NbhdAc2, n2: NbhdAc2) -> NbhdAc2:
    """Intersection: exclude the union of both top lists (deduplicated)."""
    seen = []
    for top in n1.tops + n2.tops:
        if top not in seen:
            seen.append(top)
    return NbhdAc2(tuple(seen))
