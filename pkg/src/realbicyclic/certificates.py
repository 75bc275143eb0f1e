"""Machine-checkable continuity certificates for zero neighbourhoods.

A certificate claims that one-sided multiplication by a fixed translator maps
a *chosen* zero neighbourhood into a *target* zero neighbourhood.  The
generator builds the chosen neighbourhood together with explicit evidence; the
validators re-derive every claim from exact rational arithmetic and are
written independently of the generator, so a tampered certificate is rejected
on its merits.  ``falsify`` is a third, randomized route: it hunts for a
concrete point of the chosen neighbourhood whose image escapes the target,
double-checking any hit by direct evaluation before reporting it.

For threshold neighbourhoods the evidence is a case split of the chosen set
into boxes, each carrying the affine image formula of the product's applicable
branch and the exact infimum of the coordinate that stays beyond the target
threshold.  For up-segment-complement neighbourhoods the evidence records, per
excluded target segment, the preimage segment and the chosen segment covering
it; inclusion of up-segments lying on one diagonal is decided by comparing
offsets and furthest points.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .semigroup import Elem, mul
from .order_geometry import (
    Side,
    preimage_up_segment,
    shrink_witness,
    shrink_witness_dual,
    up_set,
)
from .topology import NbhdAc1, NbhdAc2, ZeroNbhd

F0 = Fraction(0)
F1 = Fraction(1)

Affine = Tuple[Fraction, Fraction, Fraction]  # coefficient of a, of b, constant


class MalformedCert(ValueError):
    """Certificate is structurally broken (unknown ids, mismatched shape)."""


@dataclass(frozen=True)
class Interval:
    """One-dimensional constraint lo <(=) var <(=) hi; hi None means unbounded."""

    lo: Fraction
    lo_strict: bool
    hi: Optional[Fraction]
    hi_strict: bool

    def contains(self, v: Fraction) -> bool:
        if v < self.lo or (v == self.lo and self.lo_strict):
            return False
        if self.hi is None:
            return True
        if v > self.hi or (v == self.hi and self.hi_strict):
            return False
        return True


FULL = Interval(F0, False, None, True)


def _iv_meet(i1: Interval, i2: Interval) -> Interval:
    if i1.lo > i2.lo:
        lo, lo_strict = i1.lo, i1.lo_strict
    elif i2.lo > i1.lo:
        lo, lo_strict = i2.lo, i2.lo_strict
    else:
        lo, lo_strict = i1.lo, i1.lo_strict or i2.lo_strict
    if i1.hi is None:
        hi, hi_strict = i2.hi, i2.hi_strict
    elif i2.hi is None:
        hi, hi_strict = i1.hi, i1.hi_strict
    elif i1.hi < i2.hi:
        hi, hi_strict = i1.hi, i1.hi_strict
    elif i2.hi < i1.hi:
        hi, hi_strict = i2.hi, i2.hi_strict
    else:
        hi, hi_strict = i1.hi, i1.hi_strict or i2.hi_strict
    return Interval(lo, lo_strict, hi, hi_strict)


def _iv_nonempty(iv: Interval) -> bool:
    if iv.hi is None:
        return True
    if iv.lo < iv.hi:
        return True
    return iv.lo == iv.hi and not iv.lo_strict and not iv.hi_strict


@dataclass(frozen=True)
class BranchEvidence:
    """One branch of the product's case split over a case region.

    ``image_a``/``image_b`` give the product coordinates as affine functions
    of the input point; ``witness`` names the coordinate claimed to stay
    beyond the target threshold, with its exact infimum over the region."""

    branch: str  # "lt" | "eq" | "gt"
    image_a: Affine
    image_b: Affine
    witness: str  # "a" | "b"
    inf_value: Fraction
    inf_attained: bool


@dataclass(frozen=True)
class CaseEvidence:
    case_id: str
    a_range: Interval
    b_range: Interval
    branches: Tuple[BranchEvidence, ...]


@dataclass(frozen=True)
class TopEvidence:
    """Per excluded target segment: its preimage and the chosen cover."""

    target_top: Elem
    preimage_top: Optional[Elem]  # None when the preimage is empty
    offset: Fraction  # diagonal offset (b - a) of the preimage line
    covering_top: Optional[Elem]


Evidence = Union[Tuple[CaseEvidence, ...], Tuple[TopEvidence, ...]]


@dataclass(frozen=True)
class ContinuityCert:
    topology: str  # "ac1" | "ac2"
    side: Side
    translator: Elem
    target: ZeroNbhd  # as requested
    chosen: ZeroNbhd
    evidence: Evidence
    effective: Optional[NbhdAc1] = None  # ac1 only: target after threshold adjustment


# ---------------------------------------------------------------------------
# threshold-neighbourhood certificates
# ---------------------------------------------------------------------------

_CASE_IDS = {
    Side.LEFT: ("big-a", "mid-a", "low-a"),
    Side.RIGHT: ("big-b", "mid-b", "low-b"),
}

_BRANCH_ORDER = ("lt", "eq", "gt")


def continuity_cert_ac1(side: Side, translator: Elem, target: NbhdAc1) -> ContinuityCert:
    """Certify that translating the doubled-threshold neighbourhood lands in
    the target.

    If the requested threshold is not past max(translator) + 1 it is first
    enlarged to max(translator) + 2 (a smaller neighbourhood, so the requested
    inclusion still follows); both thresholds are recorded.
    """
    hyp = max(translator.a, translator.b) + 1
    n = target.n if target.n > hyp else hyp + 1
    m = 2 * n
    x, y = translator.a, translator.b
    if side is Side.LEFT:
        cases = _cases_left(x, y, n, m)
    else:
        cases = _cases_right(x, y, n, m)
    return ContinuityCert(
        topology="ac1",
        side=side,
        translator=translator,
        target=target,
        chosen=NbhdAc1(m),
        evidence=cases,
        effective=NbhdAc1(n),
    )


def _cases_left(x: Fraction, y: Fraction, n: Fraction, m: Fraction) -> Tuple[CaseEvidence, ...]:
    big = CaseEvidence(
        "big-a",
        a_range=Interval(m, True, None, True),
        b_range=FULL,
        branches=(
            BranchEvidence("lt", (F1, F0, x - y), (F0, F1, F0), "a", x - y + m, False),
        ),
    )
    mid = CaseEvidence(
        "mid-a",
        a_range=Interval(n, False, m, False),
        b_range=Interval(m, True, None, True),
        branches=(
            BranchEvidence("lt", (F1, F0, x - y), (F0, F1, F0), "b", m, False),
        ),
    )
    low_branches: List[BranchEvidence] = [
        BranchEvidence("lt", (F1, F0, x - y), (F0, F1, F0), "b", m, False),
        BranchEvidence("eq", (F0, F0, x), (F0, F1, F0), "b", m, False),
    ]
    if y > 0:
        low_branches.append(
            BranchEvidence("gt", (F0, F0, x), (-F1, F1, y), "b", m, False)
        )
    low = CaseEvidence(
        "low-a",
        a_range=Interval(F0, False, n, True),
        b_range=Interval(m, True, None, True),
        branches=tuple(low_branches),
    )
    return (big, mid, low)


def _cases_right(x: Fraction, y: Fraction, n: Fraction, m: Fraction) -> Tuple[CaseEvidence, ...]:
    big = CaseEvidence(
        "big-b",
        a_range=FULL,
        b_range=Interval(m, True, None, True),
        branches=(
            BranchEvidence("gt", (F1, F0, F0), (F0, F1, y - x), "b", m + y - x, False),
        ),
    )
    mid = CaseEvidence(
        "mid-b",
        a_range=Interval(m, True, None, True),
        b_range=Interval(n, False, m, False),
        branches=(
            BranchEvidence("gt", (F1, F0, F0), (F0, F1, y - x), "a", m, False),
        ),
    )
    low_branches: List[BranchEvidence] = []
    if x > 0:
        low_branches.append(
            BranchEvidence("lt", (F1, -F1, x), (F0, F0, y), "a", m, False)
        )
    low_branches.append(BranchEvidence("eq", (F1, F0, F0), (F0, F0, y), "a", m, False))
    low_branches.append(
        BranchEvidence("gt", (F1, F0, F0), (F0, F1, y - x), "a", m, False)
    )
    low = CaseEvidence(
        "low-b",
        a_range=Interval(m, True, None, True),
        b_range=Interval(F0, False, n, True),
        branches=tuple(low_branches),
    )
    return (big, mid, low)


def _branch_interval(side: Side, branch: str, pivot: Fraction) -> Interval:
    """The constraint a branch places on the driving input coordinate.

    Left translation branches on the input's first coordinate against the
    translator's second; right translation branches on the input's second
    coordinate against the translator's first.
    """
    if branch == "eq":
        return Interval(pivot, False, pivot, False)
    below = Interval(F0, False, pivot, True)
    above = Interval(pivot, True, None, True)
    if side is Side.LEFT:
        return above if branch == "lt" else below
    return below if branch == "lt" else above


def _expected_images(side: Side, translator: Elem, branch: str) -> Tuple[Affine, Affine]:
    x, y = translator.a, translator.b
    if side is Side.LEFT:
        if branch == "lt":
            return (F1, F0, x - y), (F0, F1, F0)
        if branch == "eq":
            return (F0, F0, x), (F0, F1, F0)
        return (F0, F0, x), (-F1, F1, y)
    if branch == "lt":
        return (F1, -F1, x), (F0, F0, y)
    if branch == "eq":
        return (F1, F0, F0), (F0, F0, y)
    return (F1, F0, F0), (F0, F1, y - x)


def _affine_inf(
    coeffs: Affine, iv_a: Interval, iv_b: Interval
) -> Optional[Tuple[Fraction, bool]]:
    ca, cb, const = coeffs
    total = const
    attained = True
    for c, iv in ((ca, iv_a), (cb, iv_b)):
        if c == 0:
            continue
        if c > 0:
            total += c * iv.lo
            attained = attained and not iv.lo_strict
        else:
            if iv.hi is None:
                return None
            total += c * iv.hi
            attained = attained and not iv.hi_strict
    return total, attained


def _axis_reps(values: Sequence[Fraction]) -> List[Fraction]:
    """Exact decision points for interval unions along one axis: every finite
    endpoint, a midpoint between each consecutive pair, and one point beyond."""
    vals = sorted(set(values))
    reps = list(vals)
    for v1, v2 in zip(vals, vals[1:]):
        reps.append((v1 + v2) / 2)
    reps.append(vals[-1] + 1)
    return reps


def _covers_chosen(cases: Sequence[CaseEvidence], m: Fraction) -> bool:
    """Do the case boxes cover everything with a coordinate beyond m?

    Membership in a union of boxes is constant on the cells of the endpoint
    grid, so testing one representative per cell decides coverage exactly.
    """
    a_vals = [F0, m]
    b_vals = [F0, m]
    for c in cases:
        for iv, vals in ((c.a_range, a_vals), (c.b_range, b_vals)):
            vals.append(iv.lo)
            if iv.hi is not None:
                vals.append(iv.hi)
    for ra in _axis_reps(a_vals):
        for rb in _axis_reps(b_vals):
            if ra <= m and rb <= m:
                continue  # not in the chosen set
            if not any(
                c.a_range.contains(ra) and c.b_range.contains(rb) for c in cases
            ):
                return False
    return True


def _corner_scan_ok(side: Side, translator: Elem, m: Fraction, n_eff: Fraction) -> bool:
    """Push the extreme points of the chosen set's inner boundary through the
    translation and demand every image clears the closed target box.

    The boundary is two segments meeting at (m, m); the piecewise-affine
    translation can only switch branches where the driving coordinate equals
    the pivot, which adds at most one more corner.
    """
    corners = [Elem(m, F0), Elem(m, m), Elem(F0, m)]
    pivot = translator.b if side is Side.LEFT else translator.a
    if pivot <= m:
        if side is Side.LEFT:
            corners.append(Elem(pivot, m))
        else:
            corners.append(Elem(m, pivot))
    for corner in corners:
        img = mul(translator, corner) if side is Side.LEFT else mul(corner, translator)
        if img.a <= n_eff and img.b <= n_eff:
            return False
    return True


def validate_cert_ac1(cert: ContinuityCert) -> bool:
    """Re-derive an ac1 certificate from scratch.

    Checks, in order: structural sanity, the threshold relation between the
    requested and effective targets, per-case branch completeness with exact
    affine images and infima, coverage of the chosen set by the case boxes,
    and a corner scan of the chosen set's boundary.
    """
    if cert.topology != "ac1":
        raise MalformedCert("not a threshold-neighbourhood certificate")
    if not isinstance(cert.target, NbhdAc1) or not isinstance(cert.chosen, NbhdAc1):
        raise MalformedCert("threshold certificate carries wrong neighbourhood kinds")
    if cert.effective is None:
        raise MalformedCert("missing effective target threshold")
    known_ids = _CASE_IDS[cert.side]
    seen_ids = [c.case_id for c in cert.evidence]
    for cid in seen_ids:
        if cid not in known_ids:
            raise MalformedCert(f"unknown case id {cid!r}")
    if len(set(seen_ids)) != len(seen_ids):
        raise MalformedCert("duplicate case id")

    n_req = cert.target.n
    n_eff = cert.effective.n
    m = cert.chosen.n
    if n_eff < n_req:
        return False

    pivot = cert.translator.b if cert.side is Side.LEFT else cert.translator.a
    for case in cert.evidence:
        seen_branches = [b.branch for b in case.branches]
        for tag in seen_branches:
            if tag not in _BRANCH_ORDER:
                raise MalformedCert(f"unknown branch tag {tag!r}")
        if len(set(seen_branches)) != len(seen_branches):
            raise MalformedCert("duplicate branch record")
        for tag in _BRANCH_ORDER:
            driver = case.a_range if cert.side is Side.LEFT else case.b_range
            meet = _iv_meet(driver, _branch_interval(cert.side, tag, pivot))
            required = _iv_nonempty(meet)
            record = next((b for b in case.branches if b.branch == tag), None)
            if required != (record is not None):
                return False
            if record is None:
                continue
            exp_a, exp_b = _expected_images(cert.side, cert.translator, tag)
            if record.image_a != exp_a or record.image_b != exp_b:
                return False
            if record.witness not in ("a", "b"):
                raise MalformedCert(f"unknown witness coordinate {record.witness!r}")
            if cert.side is Side.LEFT:
                iv_a, iv_b = meet, case.b_range
            else:
                iv_a, iv_b = case.a_range, meet
            coeffs = record.image_a if record.witness == "a" else record.image_b
            derived = _affine_inf(coeffs, iv_a, iv_b)
            if derived is None:
                return False
            inf_value, attained = derived
            if inf_value != record.inf_value or attained != record.inf_attained:
                return False
            if attained:
                if inf_value <= n_eff:
                    return False
            elif inf_value < n_eff:
                return False
    if not _covers_chosen(cert.evidence, m):
        return False
    if not _corner_scan_ok(cert.side, cert.translator, m, n_eff):
        return False
    return True


# ---------------------------------------------------------------------------
# up-segment-complement certificates
# ---------------------------------------------------------------------------


def continuity_cert_ac2(side: Side, translator: Elem, target: NbhdAc2) -> ContinuityCert:
    """Certify the translated complement-of-up-segments neighbourhood.

    The chosen neighbourhood excludes, per target segment, the shrink witness
    for the translator; the evidence records the exact preimage of each target
    segment and which chosen segment swallows it.
    """
    chosen_tops: List[Elem] = []
    evidence: List[TopEvidence] = []
    for u in target.tops:
        if side is Side.LEFT:
            w = shrink_witness(translator, u)
        else:
            w = shrink_witness_dual(translator, u)
        if w not in chosen_tops:
            chosen_tops.append(w)
        delta = (translator.a - translator.b) + (u.b - u.a)
        pre = preimage_up_segment(side, translator, up_set(u))
        if pre.is_empty():
            evidence.append(TopEvidence(u, None, delta, None))
        else:
            seg = pre.parts[0]
            evidence.append(TopEvidence(u, seg.top, delta, w))
    return ContinuityCert(
        topology="ac2",
        side=side,
        translator=translator,
        target=target,
        chosen=NbhdAc2(tuple(chosen_tops)),
        evidence=tuple(evidence),
    )


def _segment_covered(seg_top: Elem, tops: Sequence[Elem]) -> Optional[Elem]:
    """The first top whose up-segment contains the whole segment below seg_top.

    Up-segments on one diagonal all reach the same boundary point, so
    containment is: same offset, and the covering top at least as far out.
    """
    offset = seg_top.b - seg_top.a
    for c in tops:
        if c.b - c.a == offset and c.a >= seg_top.a:
            return c
    return None


def validate_cert_ac2(cert: ContinuityCert) -> bool:
    """Re-derive an ac2 certificate: recompute each target segment's preimage
    and decide its containment in the chosen segments exactly."""
    if cert.topology != "ac2":
        raise MalformedCert("not an up-segment-complement certificate")
    if not isinstance(cert.target, NbhdAc2) or not isinstance(cert.chosen, NbhdAc2):
        raise MalformedCert("segment certificate carries wrong neighbourhood kinds")
    if not cert.chosen.tops:
        raise MalformedCert("chosen neighbourhood must exclude at least one segment")
    if tuple(ev.target_top for ev in cert.evidence) != cert.target.tops:
        raise MalformedCert("evidence tops do not match the target")
    for ev in cert.evidence:
        u = ev.target_top
        delta = (cert.translator.a - cert.translator.b) + (u.b - u.a)
        if ev.offset != delta:
            return False
        pre = preimage_up_segment(cert.side, cert.translator, up_set(u))
        if pre.is_empty():
            if ev.preimage_top is not None:
                return False
            continue
        seg = pre.parts[0]
        if ev.preimage_top != seg.top:
            return False
        if _segment_covered(seg.top, cert.chosen.tops) is None:
            return False
        if ev.covering_top is None or ev.covering_top not in cert.chosen.tops:
            return False
        if _segment_covered(seg.top, [ev.covering_top]) is None:
            return False
    return True


def validate_cert(cert: ContinuityCert) -> bool:
    if cert.topology == "ac1":
        return validate_cert_ac1(cert)
    if cert.topology == "ac2":
        return validate_cert_ac2(cert)
    raise MalformedCert(f"unknown certificate topology {cert.topology!r}")


# ---------------------------------------------------------------------------
# randomized falsifier
# ---------------------------------------------------------------------------


def falsify(
    side: Side,
    translator: Elem,
    chosen: ZeroNbhd,
    target: ZeroNbhd,
    samples: int,
    seed: int,
) -> Optional[Elem]:
    """Hunt for s in the chosen neighbourhood whose image escapes the target.

    Deterministic for a given seed.  The search runs on a common-denominator
    integer grid (exact, and much faster than rational objects); a handful of
    structural probes near the boundary of the chosen set go first, then
    seeded random draws.  Any candidate is re-verified with exact rational
    membership
    before being returned, so a returned point is always a true violation.
    Returns None when the budget is exhausted without a hit.
    """
    if isinstance(chosen, NbhdAc1) and isinstance(target, NbhdAc1):
        return _falsify_ac1(side, translator, chosen, target, samples, seed)
    if isinstance(chosen, NbhdAc2) and isinstance(target, NbhdAc2):
        return _falsify_ac2(side, translator, chosen, target, samples, seed)
    raise TypeError("chosen and target must be zero neighbourhoods of the same kind")


def _falsify_ac1(
    side: Side,
    t: Elem,
    chosen: NbhdAc1,
    target: NbhdAc1,
    samples: int,
    seed: int,
) -> Optional[Elem]:
    D = math.lcm(
        t.a.denominator,
        t.b.denominator,
        chosen.n.denominator,
        target.n.denominator,
    )
    ta, tb = int(t.a * D), int(t.b * D)
    nc, nt = int(chosen.n * D), int(target.n * D)
    left = side is Side.LEFT
    # the first grid point past the threshold and the translator's pivot row
    # are, between them, guaranteed to expose any failing inclusion with
    # chosen threshold >= target threshold; the random modes cover the rest
    probes = (
        (nc + 1, 0),
        (0, nc + 1),
        (tb, 0),
        (0, ta),
        (nc + 1, nt + 1),
        (nt + 1, nc + 1),
        (nc + 1, nc + 1),
    )
    span = 3 * max(nc, nt) + 4 * D + 1
    near = 2 * D
    bwin = nt + 2 * D + 1
    rng = random.Random(seed)
    grb = rng.getrandbits
    checked = 0
    idx = 0
    nprobes = len(probes)
    while checked < samples:
        if idx < nprobes:
            xs, ys = probes[idx]
            idx += 1
        else:
            bits = grb(70)
            r1 = bits & 0x7FFFFFFF
            rest = bits >> 31
            mode = rest % 5
            r2 = (rest >> 3) & 0x7FFFFFFF
            if mode == 0:
                xs, ys = nc + 1 + r1 % span, r2 % span
            elif mode == 1:
                xs, ys = r2 % span, nc + 1 + r1 % span
            elif mode == 2:
                xs, ys = nc + 1 + r1 % span, nc + 1 + r2 % span
            elif mode == 3:
                xs, ys = nc + 1 + r1 % near, r2 % bwin
            else:
                xs, ys = r2 % bwin, nc + 1 + r1 % near
        checked += 1
        if xs <= nc and ys <= nc:
            continue
        if left:
            mm = tb if tb < xs else xs
            ia, ib = ta + xs - mm, tb + ys - mm
        else:
            mm = ys if ys < ta else ta
            ia, ib = xs + ta - mm, ys + tb - mm
        if ia > nt or ib > nt:
            continue
        s = Elem(Fraction(xs, D), Fraction(ys, D))
        img = mul(t, s) if left else mul(s, t)
        if chosen.member(s) and not target.member(img):
            return s
    return None


def _falsify_ac2(
    side: Side,
    t: Elem,
    chosen: NbhdAc2,
    target: NbhdAc2,
    samples: int,
    seed: int,
) -> Optional[Elem]:
    dens = [t.a.denominator, t.b.denominator]
    for e in chosen.tops + target.tops:
        dens.append(e.a.denominator)
        dens.append(e.b.denominator)
    D = math.lcm(*dens)
    ta, tb = int(t.a * D), int(t.b * D)
    ch = [(int(c.a * D), int(c.b * D)) for c in chosen.tops]
    tg = [(int(u.a * D), int(u.b * D)) for u in target.tops]
    left = side is Side.LEFT
    # every image on a target segment's diagonal pulls back to one source
    # diagonal, since both product coordinates subtract the same min term
    deltas = [(ub - ua) + (ta - tb) for ua, ub in tg]
    probes: List[Tuple[int, int]] = []
    for ca, cb in ch:
        probes.append((ca + 1, cb + 1))
        probes.append((ca + D, cb + D))
    for d in deltas:
        x0 = -d if d < 0 else 0
        probes.append((x0, x0 + d))
        probes.append((x0 + 1, x0 + 1 + d))
        probes.append((x0 + D, x0 + D + d))
    maxcoord = max([1] + [v for pair in ch + tg for v in pair])
    span = 3 * maxcoord + 4 * D + 1
    rng = random.Random(seed)
    grb = rng.getrandbits
    nd = len(deltas)
    checked = 0
    idx = 0
    nprobes = len(probes)
    while checked < samples:
        if idx < nprobes:
            xs, ys = probes[idx]
            idx += 1
        else:
            bits = grb(70)
            r1 = bits & 0x7FFFFFFF
            rest = bits >> 31
            mode = rest % (nd + 1)
            r2 = (rest >> 3) & 0x7FFFFFFF
            if mode == 0:
                xs, ys = r1 % span, r2 % span
            else:
                d = deltas[mode - 1]
                x0 = -d if d < 0 else 0
                xs = x0 + r1 % span
                ys = xs + d
        checked += 1
        if xs < 0 or ys < 0:
            continue
        inside = False
        for ca, cb in ch:
            if ca >= xs and ca - cb == xs - ys:
                inside = True
                break
        if inside:
            continue
        if left:
            mm = tb if tb < xs else xs
            ia, ib = ta + xs - mm, tb + ys - mm
        else:
            mm = ys if ys < ta else ta
            ia, ib = xs + ta - mm, ys + tb - mm
        hit = False
        for ua, ub in tg:
            if ua >= ia and ua - ub == ia - ib:
                hit = True
                break
        if not hit:
            continue
        s = Elem(Fraction(xs, D), Fraction(ys, D))
        img = mul(t, s) if left else mul(s, t)
        if chosen.member(s) and not target.member(img):
            return s
    return None
