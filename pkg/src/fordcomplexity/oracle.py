"""Brute-force cross-check of boundary sets by angular arc subtraction.

Works in the original plane with multiprecision floats.  For a disk D_i the
part of its upper semicircle inside another disk D_j is an angular interval
[0, phi] or [pi - phi, pi] with cos(phi) = (d^2 + r_i^2 - r_j^2) / (2 d r_i);
the disk is exposed when these intervals leave a gap.  Angles in [0, pi]
are handled through their cosines, which are rational.  Each sign is first
taken in floating point; a value within 2**(-prec/2) of zero is recomputed
at the next precision, and past the last one decided exactly.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import DomainError, UnresolvedRegion
from .geometry import QuadraticReal, compare_quadratic
from .numtheory import factorize, psi_breakpoints
from .region import DEFAULT_KMAX, Region
from .complexity import pair_complexity

__all__ = [
    "OracleResult",
    "CrossReport",
    "oracle_boundary_set",
    "compare_region",
    "sample_regions",
    "cross_validate",
    "PRECISIONS",
]

PRECISIONS = (64, 256, 1024)


@dataclass(frozen=True)
class OracleResult:
    region: tuple[int, int, int]
    disks: frozenset[tuple[int, int]]
    pole_counts: dict = field(hash=False)
    precision: int
    exact_fallbacks: int


def _mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


class _Arith:
    """Sign decisions that climb the precision ladder one comparison at a time."""

    def __init__(self):
        self.precision = PRECISIONS[0]
        self.fallbacks = 0

    def sign(self, value, exact: Fraction) -> int:
        """Sign of ``value()`` evaluated in floating point, whose exact value is ``exact``."""
        for prec in PRECISIONS:
            with mpmath.workprec(prec):
                x = value()
                if abs(x) > mpmath.mpf(2) ** (-(prec // 2)):
                    self.precision = max(self.precision, prec)
                    return 1 if x > 0 else -1
        self.precision = PRECISIONS[-1]
        self.fallbacks += 1
        return int(compare_quadratic(QuadraticReal(exact), QuadraticReal(0)))


def _candidates(N: int, n: int, n_next: int, k_cap: int) -> list[tuple[int, int]]:
    out = []
    for k in range(1, k_cap + 1):
        b = k * N
        for a in range(k * n + 1, k * n_next):
            if math.gcd(a, b) == 1:
                out.append((a, b))
    return out


def _arc(ar: _Arith, ci, ri, cj, rj) -> tuple | str | None:
    """Covered angular interval of the upper semicircle of disk i by disk j.

    Angles in [0, pi] are carried as their cosines, which decrease with the
    angle: (cos start, cos end) as exact rationals, or ``"all"`` or None.
    """
    d = abs(ci - cj)
    if d == 0:
        return "all" if ri <= rj else None

    def kappa_mp():
        md, mi, mj = _mp(d), _mp(ri), _mp(rj)
        return (md * md + mi * mi - mj * mj) / (2 * md * mi)

    kappa = (d * d + ri * ri - rj * rj) / (2 * d * ri)
    # kappa <= -1: disk i inside disk j
    if ar.sign(lambda: kappa_mp() + 1, kappa + 1) <= 0:
        return "all"
    # kappa >= 1: disjoint, or touching at a single point
    if ar.sign(lambda: kappa_mp() - 1, kappa - 1) >= 0:
        return None
    if cj > ci:
        return Fraction(1), kappa
    return -kappa, Fraction(-1)


class _Window:
    """Disks sorted by center; ``near(c, reach)`` lists indices with |center - c| <= reach.

    The float window is widened by a margin, so it can only over-include;
    every decision is still made by ``_Arith.sign``.
    """

    def __init__(self, disks: list):
        self.order = sorted(range(len(disks)), key=lambda i: disks[i][0])
        self.centers = [float(disks[i][0]) for i in self.order]
        self.rmax = max((float(r) for _, r in disks), default=0.0)

    def near(self, c: float, reach: float) -> list[int]:
        pad = 1e-9 * (1 + abs(c))
        lo = bisect_left(self.centers, c - reach - pad)
        hi = bisect_right(self.centers, c + reach + pad)
        return self.order[lo:hi]


def _exposed(ar: _Arith, i: int, disks: list, win: _Window) -> bool:
    ci, ri = disks[i]
    arcs = []
    for j in win.near(float(ci), float(ri) + win.rmax):
        cj, rj = disks[j]
        if j == i or abs(ci - cj) > ri + rj:
            continue
        arc = _arc(ar, ci, ri, cj, rj)
        if arc == "all":
            return False
        if arc is not None:
            arcs.append(arc)
    # sweep in increasing angle, i.e. decreasing cosine; the sort order only
    # matters up to ties, which the sweep handles
    arcs.sort(key=lambda a: -float(a[0]))
    cur = Fraction(1)
    for s, e in arcs:
        if ar.sign(lambda: _mp(cur) - _mp(s), cur - s) > 0:
            return True
        if ar.sign(lambda: _mp(cur) - _mp(e), cur - e) > 0:
            cur = e
    return ar.sign(lambda: _mp(cur) + 1, cur + 1) > 0


def _pole_count(ar: _Arith, i: int, disks: list, win: _Window) -> int:
    ci, ri = disks[i]
    count = 0
    for j in win.near(float(ci), win.rmax):
        cj, rj = disks[j]
        if j == i or abs(ci - cj) > rj:
            continue
        exact = ((ci - cj) ** 2 + ri * ri - rj * rj) / (rj * rj)

        def value():
            return ((_mp(ci) - _mp(cj)) ** 2 + _mp(ri) ** 2 - _mp(rj) ** 2) / _mp(rj) ** 2

        if ar.sign(value, exact) <= 0:
            count += 1
    return count


def oracle_boundary_set(region: Region | tuple[int, int, int], k_cap: int) -> OracleResult:
    """Boundary set of a region from all candidates of level <= k_cap."""
    if isinstance(region, Region):
        region = (region.N.require_value(), region.n, region.n_next)
    N, n, n_next = region
    cands = _candidates(N, n, n_next, k_cap)
    ar = _Arith()
    disks = [(Fraction(a, b), Fraction(1, b)) for a, b in cands]
    win = _Window(disks)
    keep = [i for i in range(len(cands)) if _exposed(ar, i, disks, win)]
    kept = [disks[i] for i in keep]
    kwin = _Window(kept)
    poles = {cands[i]: _pole_count(ar, t, kept, kwin) for t, i in enumerate(keep)}
    return OracleResult(region, frozenset(cands[i] for i in keep), poles, ar.precision, ar.fallbacks)


@dataclass
class CrossReport:
    lo: int
    hi: int
    sample_rate: float
    checked: int = 0
    mismatches: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    fallbacks: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unresolved


def compare_region(N: int, n: int, k_max: int = DEFAULT_KMAX, memo: bool = True):
    """Engine and oracle on one region; returns (mismatch description or None, oracle result)."""
    res = pair_complexity(Region.at(factorize(N), n), k_max, memo=memo)
    bs = res.boundary
    orc = oracle_boundary_set(bs.region, bs.certificate_k)
    eng_disks = bs.provenance
    eng_poles = {p.alpha.provenance(N, n): p.count for p in res.poles}
    if orc.disks != eng_disks or orc.pole_counts != eng_poles:
        return (
            {
                "N": N,
                "n": n,
                "engine": sorted(eng_disks),
                "oracle": sorted(orc.disks),
                "engine_poles": sorted(eng_poles.items()),
                "oracle_poles": sorted(orc.pole_counts.items()),
            },
            orc,
        )
    return None, orc


def _check_many(args) -> tuple[int, int, list, list]:
    regions, k_max = args
    checked = fallbacks = 0
    mismatches, unresolved = [], []
    for N, n in regions:
        try:
            mismatch, orc = compare_region(N, n, k_max)
        except UnresolvedRegion as exc:
            unresolved.append({"N": N, "n": n, "error": str(exc)})
            continue
        checked += 1
        fallbacks += orc.exact_fallbacks
        if mismatch:
            mismatches.append(mismatch)
    return checked, fallbacks, mismatches, unresolved


def sample_regions(lo: int, hi: int, sample_rate: float = 1.0, seed: int = 0) -> list[tuple[int, int]]:
    """(N, n) for the regions of lo..hi, each kept with probability sample_rate."""
    rng = random.Random(seed)
    out = []
    for N in range(lo, hi + 1):
        for n, _ in psi_breakpoints(N).regions():
            if sample_rate >= 1.0 or rng.random() < sample_rate:
                out.append((N, n))
    return out


def cross_validate(
    lo: int,
    hi: int,
    sample_rate: float = 1.0,
    seed: int = 0,
    k_max: int = DEFAULT_KMAX,
    jobs: int = 1,
) -> CrossReport:
    """Engine versus oracle on a seeded sample of the regions of lo..hi."""
    if not 2 <= lo <= hi:
        raise DomainError("need 2 <= lo <= hi")
    regions = sample_regions(lo, hi, sample_rate, seed)
    chunks = [regions[i:i + 64] for i in range(0, len(regions), 64)]
    work = [(c, k_max) for c in chunks]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_check_many, work))
    else:
        parts = [_check_many(w) for w in work]
    rep = CrossReport(lo, hi, sample_rate)
    for checked, fallbacks, mismatches, unresolved in parts:
        rep.checked += checked
        rep.fallbacks += fallbacks
        rep.mismatches.extend(mismatches)
        rep.unresolved.extend(unresolved)
    return rep
