"""North-pole complexity of boundary disks, per pair and per N."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError, UnresolvedRegion
from .geometry import Disk, point_in_disk
from .numtheory import FactoredInt, PairClass, factorize, psi_breakpoints
from .region import (
    DEFAULT_KMAX,
    BoundarySet,
    Candidate,
    Region,
    RegionShape,
    classify_shape,
    compute_boundary_set,
)

log = logging.getLogger(__name__)

__all__ = [
    "PoleReport",
    "PairComplexity",
    "PairEntry",
    "ComplexityReport",
    "RangeReport",
    "pole_complexity",
    "pair_complexity",
    "total_complexity",
    "predicted_zero",
    "verify_range",
]


@dataclass(frozen=True)
class PoleReport:
    alpha: Candidate
    coverers: tuple[Candidate, ...]
    tangential: tuple[Candidate, ...]

    @property
    def count(self) -> int:
        return len(self.coverers)

    @property
    def pole(self) -> tuple:
        """The north pole in region coordinates."""
        d = self.alpha.scaled
        return d.center, d.radius


def pole_complexity(alpha: Candidate | Disk, bs: BoundarySet) -> PoleReport:
    """Other members of ``bs`` whose closed disk contains the pole of ``alpha``.

    Disks through the pole are counted and also listed under ``tangential``.
    """
    if isinstance(alpha, Disk):
        alpha = bs.region.candidate_of(alpha)
    if alpha not in bs.members:
        raise DomainError(f"{alpha} is not in the boundary set")
    x, y = alpha.scaled.pole
    cov, tan = [], []
    for beta in bs.members:
        if beta == alpha:
            continue
        d = beta.scaled
        if point_in_disk(x, y, d, "closed"):
            cov.append(beta)
            if not point_in_disk(x, y, d, "open"):
                tan.append(beta)
    return PoleReport(alpha, tuple(cov), tuple(tan))


class PairComplexity(NamedTuple):
    complexity: int
    shape: RegionShape
    boundary: BoundarySet
    poles: tuple[PoleReport, ...]


def pair_complexity(region: Region, k_max: int = DEFAULT_KMAX, memo: bool = True) -> PairComplexity:
    bs = compute_boundary_set(region, k_max, memo=memo)
    poles = tuple(pole_complexity(c, bs) for c in bs.members)
    return PairComplexity(max(p.count for p in poles), classify_shape(bs), bs, poles)


def predicted_zero(N: FactoredInt | int) -> bool:
    """c(N) = 0 iff omega(N) <= 3, or omega(N) = 4 with N odd."""
    if not isinstance(N, FactoredInt):
        N = factorize(N)
    return N.omega <= 3 or (N.omega == 4 and N.p1 >= 3)


@dataclass(frozen=True)
class PairEntry:
    n: int
    n_next: int
    cls: PairClass
    shape: RegionShape
    complexity: int
    members: tuple[Candidate, ...]
    certificate_k: int | None
    mirrored: bool = False

    def provenance(self, N: int) -> list[tuple[int, int]]:
        return [c.provenance(N, self.n) for c in self.members]


@dataclass(frozen=True)
class ComplexityReport:
    N: FactoredInt
    pairs: tuple[PairEntry, ...]
    c: int
    predicted_zero: bool

    @property
    def agreement(self) -> bool:
        return (self.c == 0) == self.predicted_zero

    @property
    def bad(self) -> tuple[PairEntry, ...]:
        return tuple(p for p in self.pairs if p.cls is PairClass.BAD)


def total_complexity(N: FactoredInt | int, k_max: int = DEFAULT_KMAX, memo: bool = True) -> ComplexityReport:
    """c(N) from the bad pairs; good regions are the level-1 disks.

    Only the bad pairs with n <= N - n - 1 are computed; their mirror images
    are filled in by reflection.
    """
    if not isinstance(N, FactoredInt):
        N = factorize(N)
    v = N.require_value()
    entries: dict[int, PairEntry] = {}
    for n, n_next in psi_breakpoints(N).regions():
        if n_next > n + 1:
            members = tuple(Candidate(1, m) for m in range(1, n_next - n))
            entries[n] = PairEntry(n, n_next, PairClass.GOOD, RegionShape.GOOD_FULL, 0, members, None)
            continue
        mirror = v - n - 1
        if mirror < n:
            src = entries[mirror]
            members = tuple(sorted((c.mirrored(1) for c in src.members), key=lambda c: c.center))
            shape = _mirror_shape(src.shape)
            entries[n] = PairEntry(n, n + 1, PairClass.BAD, shape, src.complexity, members, src.certificate_k, True)
            continue
        res = pair_complexity(Region(N, n, n + 1, PairClass.BAD), k_max, memo)
        bs = res.boundary
        entries[n] = PairEntry(n, n + 1, PairClass.BAD, res.shape, res.complexity, bs.members, bs.certificate_k)
    pairs = tuple(entries[n] for n in sorted(entries))
    c = max((p.complexity for p in pairs), default=0)
    return ComplexityReport(N, pairs, c, predicted_zero(N))


_MIRROR = {
    RegionShape.FOUR_POINT_LEFT: RegionShape.FOUR_POINT_RIGHT,
    RegionShape.FOUR_POINT_RIGHT: RegionShape.FOUR_POINT_LEFT,
    RegionShape.THREE_FIVE_LEFT: RegionShape.THREE_FIVE_RIGHT,
    RegionShape.THREE_FIVE_RIGHT: RegionShape.THREE_FIVE_LEFT,
}


def _mirror_shape(shape: RegionShape) -> RegionShape:
    return _MIRROR.get(shape, shape)


@dataclass(frozen=True)
class RangeEntry:
    N: int
    omega: int
    p1: int
    c: int | None
    predicted_zero: bool
    unresolved: str | None = None

    @property
    def agreement(self) -> bool | None:
        if self.c is None:
            return None
        return (self.c == 0) == self.predicted_zero


@dataclass(frozen=True)
class RangeReport:
    lo: int
    hi: int
    k_max: int
    entries: tuple[RangeEntry, ...] = field(repr=False)

    @property
    def disagreements(self) -> list[RangeEntry]:
        return [e for e in self.entries if e.agreement is False]

    @property
    def unresolved(self) -> list[RangeEntry]:
        return [e for e in self.entries if e.unresolved is not None]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.unresolved


def _range_entry(args) -> RangeEntry:
    N, k_max = args
    F = factorize(N)
    try:
        rep = total_complexity(F, k_max)
    except UnresolvedRegion as exc:
        return RangeEntry(N, F.omega, F.p1, None, predicted_zero(F), str(exc))
    return RangeEntry(N, F.omega, F.p1, rep.c, rep.predicted_zero)


def verify_range(lo: int, hi: int, k_max: int = DEFAULT_KMAX, jobs: int = 1) -> RangeReport:
    """Compare computed c(N) = 0 with the predicate for every N in [lo, hi]."""
    if not 2 <= lo <= hi:
        raise DomainError("need 2 <= lo <= hi")
    work = [(N, k_max) for N in range(lo, hi + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            entries = list(pool.map(_range_entry, work, chunksize=16))
    else:
        entries = [_range_entry(w) for w in work]
    entries.sort(key=lambda e: e.N)
    return RangeReport(lo, hi, k_max, tuple(entries))
