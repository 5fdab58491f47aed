"""Exact predicates for closed disks centered on the real axis.

Two facts carry the module.  A disk centered on the axis that contains
(x, y) also contains (x, y') for every |y'| <= |y|, so covering a disk (or
any axis-symmetric region whose vertical sections are intervals about the
axis) reduces to covering its upper boundary.  And for two axis-centered
circles the test "is the point of the upper semicircle of D above x inside
D'" is linear in x, because the x**2 terms cancel.  So every coverage
question on a circle becomes a question about rational x-intervals; only the
flat top of a swept region needs endpoints of the form c +- sqrt(s).
"""

from __future__ import annotations

import enum
import functools
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

__all__ = [
    "Rational",
    "Disk",
    "QuadraticReal",
    "Order",
    "IntervalSet",
    "point_in_disk",
    "compare_quadratic",
    "upper_chord_interval",
    "interval_union_covers",
    "disk_covered_by_union",
    "swept_region_certificate",
]


@dataclass(frozen=True)
class Disk:
    center: Fraction
    radius: Fraction
    provenance: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.provenance is not None:
            a, b = self.provenance
            if math.gcd(a, b) != 1 or self.center != Fraction(a, b) or self.radius != Fraction(1, b):
                raise ValueError(f"provenance {self.provenance} does not match disk")

    @classmethod
    def ford(cls, a: int, b: int) -> "Disk":
        """The Ford disk D(a/b, 1/b)."""
        return cls(Fraction(a, b), Fraction(1, b), (a, b))

    @property
    def left(self) -> Fraction:
        return self.center - self.radius

    @property
    def right(self) -> Fraction:
        return self.center + self.radius

    @property
    def pole(self) -> tuple[Fraction, Fraction]:
        return self.center, self.radius


def point_in_disk(x, y, disk: Disk, mode: str = "closed") -> bool:
    lhs = (Fraction(x) - disk.center) ** 2 + Fraction(y) ** 2
    rhs = disk.radius**2
    if mode == "closed":
        return lhs <= rhs
    if mode == "open":
        return lhs < rhs
    raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class QuadraticReal:
    """p + q*sqrt(d) with rational p, q and d >= 0."""

    p: Fraction
    q: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        p, q, d = Fraction(self.p), Fraction(self.q), Fraction(self.d)
        if d < 0:
            raise ValueError("d must be nonnegative")
        if d == 0 or q == 0:
            q, d = Fraction(0), Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def _cmp(self, other) -> int:
        return compare_quadratic(self, _lift(other))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (QuadraticReal, Fraction, int)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        return hash((self.p, self.q, self.d))


Endpoint = Union[Fraction, int, QuadraticReal]


def _lift(v: Endpoint) -> QuadraticReal:
    return v if isinstance(v, QuadraticReal) else QuadraticReal(Fraction(v))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _sign_rs(r: Fraction, c: Fraction, d: Fraction) -> int:
    """Sign of r + c*sqrt(d)."""
    sc = _sgn(c) if d else 0
    sr = _sgn(r)
    if sc == 0:
        return sr
    if sr == 0 or sr == sc:
        return sc
    diff = r * r - c * c * d
    if diff == 0:
        return 0
    return sr if diff > 0 else sc


def _sign_two(a: Fraction, b: Fraction, d1: Fraction, c: Fraction, d2: Fraction) -> int:
    """Sign of a + b*sqrt(d1) + c*sqrt(d2)."""
    sx = _sgn(b) if d1 else 0
    sz = _sgn(c) if d2 else 0
    if sx == 0:
        return _sign_rs(a, c, d2)
    if sz == 0:
        return _sign_rs(a, b, d1)
    x2, z2 = b * b * d1, c * c * d2
    if sx == sz:
        ss = sx
    else:
        ss = sx if x2 > z2 else (0 if x2 == z2 else sz)
    sa = _sgn(a)
    if sa == 0:
        return ss
    if ss == 0 or sa == ss:
        return sa
    # opposite signs: compare a**2 with (X + Z)**2 = x2 + z2 + 2XZ
    s = _sign_rs(a * a - x2 - z2, -2 * b * c, d1 * d2)
    return sa if s > 0 else (0 if s == 0 else ss)


def compare_quadratic(u: QuadraticReal, v: QuadraticReal) -> Order:
    """Exact order of u and v; no floating point anywhere."""
    u, v = _lift(u), _lift(v)
    return Order(_sign_two(u.p - v.p, u.q, u.d, -v.q, v.d))


def _cmp_endpoints(a: Endpoint, b: Endpoint) -> int:
    if not isinstance(a, QuadraticReal) and not isinstance(b, QuadraticReal):
        return _sgn(a - b)
    return int(compare_quadratic(_lift(a), _lift(b)))


Interval = tuple  # (lo, hi), closed, lo <= hi


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint, sorted closed intervals."""

    intervals: tuple[Interval, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)


def upper_chord_interval(target: Disk, coverer: Disk) -> tuple[Fraction, Fraction] | None:
    """x-range of the upper semicircle of ``target`` lying in ``coverer``.

    Returns None when empty.  Uses 2(c - c')x + c'^2 - c^2 + r^2 - r'^2 <= 0.
    """
    c, r = target.center, target.radius
    ci, ri = coverer.center, coverer.radius
    lo, hi = c - r, c + r
    slope = 2 * (c - ci)
    const = ci * ci - c * c + r * r - ri * ri
    if slope == 0:
        return (lo, hi) if const <= 0 else None
    root = -const / slope
    if slope > 0:
        hi = min(hi, root)
    else:
        lo = max(lo, root)
    return (lo, hi) if lo <= hi else None


def interval_union_covers(
    base: Interval, pieces: Iterable[Interval]
) -> tuple[bool, IntervalSet]:
    """Does the union of closed ``pieces`` cover closed ``base``?

    Returns the flag and the closure of what is left uncovered; only gaps
    with distinct endpoints are reported, so touching pieces count as
    covering.
    """
    lo, hi = base
    order = functools.cmp_to_key(lambda s, t: _cmp_endpoints(s[0], t[0]))
    cur = lo
    gaps = []
    for plo, phi in sorted(pieces, key=order):
        if _cmp_endpoints(plo, hi) > 0:
            break
        if _cmp_endpoints(plo, cur) > 0:
            gaps.append((cur, plo))
        if _cmp_endpoints(phi, cur) > 0:
            cur = phi
        if _cmp_endpoints(cur, hi) >= 0:
            break
    if _cmp_endpoints(cur, hi) < 0:
        gaps.append((cur, hi))
    return not gaps, IntervalSet(tuple(gaps))


def _overlapping(disk: Disk, others: Sequence[Disk]) -> Iterable[Disk]:
    return (o for o in others if abs(o.center - disk.center) <= o.radius + disk.radius)


def disk_covered_by_union(disk: Disk, others: Iterable[Disk]) -> tuple[bool, IntervalSet]:
    """Is ``disk`` contained in the union of ``others``?

    The exposed set is reported as x-intervals of the upper semicircle; it
    is empty exactly when the disk is covered.
    """
    others = list(others)
    pieces = []
    for o in _overlapping(disk, others):
        iv = upper_chord_interval(disk, o)
        if iv is not None:
            pieces.append(iv)
    return interval_union_covers((disk.left, disk.right), pieces)


class DiskIndex:
    """Disks sorted by center for overlap queries."""

    def __init__(self, disks: Iterable[Disk]):
        self.disks = sorted(disks, key=lambda d: d.center)
        self.centers = [d.center for d in self.disks]
        self.rmax = max((d.radius for d in self.disks), default=Fraction(0))

    def near(self, disk: Disk) -> list[Disk]:
        reach = disk.radius + self.rmax
        i = bisect_left(self.centers, disk.center - reach)
        j = bisect_right(self.centers, disk.center + reach)
        return self.disks[i:j]


def swept_region_certificate(
    lo, hi, k: int, N, union: Iterable[Disk]
) -> bool:
    """Is the region swept by D(x, 1/(kN)), lo + 1/(kN) <= x <= hi - 1/(kN), inside the union?

    Checked on the upper boundary: both cap semicircles through chord
    intervals, the flat top at height h through c +- sqrt(r^2 - h^2).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    h = Fraction(1, k * int(N))
    index = DiskIndex(union)
    if not index.disks:
        return False
    if hi - lo < 2 * h:
        cap = Disk((lo + hi) / 2, h)
        return disk_covered_by_union(cap, index.near(cap))[0]
    for cap in (Disk(lo + h, h), Disk(hi - h, h)):
        if not disk_covered_by_union(cap, index.near(cap))[0]:
            return False
    h2 = h * h
    pieces = []
    for d in index.disks:
        s = d.radius * d.radius - h2
        if s < 0:
            continue
        pieces.append((QuadraticReal(d.center, -1, s), QuadraticReal(d.center, 1, s)))
    return interval_union_covers((lo + h, hi - h), pieces)[0]
