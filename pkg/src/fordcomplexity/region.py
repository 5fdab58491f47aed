"""Regions between consecutive breakpoints and their minimal boundary sets.

Geometry runs in region coordinates z -> N*z - n.  The region becomes the
strip [0, w] with w = n_next - n, and a Ford disk D(a/(kN), 1/(kN)) becomes
D(m/k, 1/k) with m = a - k*n.  A candidate is therefore the pair
(level k, offset m); its provenance in the original plane is
(k*n + m, k*N).  The rationals stay small however large N is, and whether a
candidate exists depends on N only through "is k*n + m coprime to N".
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, UnresolvedRegion, short
from .geometry import Disk, DiskIndex, disk_covered_by_union, swept_region_certificate
from .numtheory import FactoredInt, PairClass, coprime_to, factorize

log = logging.getLogger(__name__)

DEFAULT_KMAX = 64

__all__ = [
    "Region",
    "Candidate",
    "BoundarySet",
    "RegionShape",
    "DEFAULT_KMAX",
    "enumerate_candidates",
    "compute_boundary_set",
    "classify_shape",
    "lemma_prediction",
    "LEMMA_SHAPES",
]


@dataclass(frozen=True, order=True)
class Candidate:
    """Disk D(offset/level, 1/level) in region coordinates."""

    level: int
    offset: int

    @property
    def center(self) -> Fraction:
        return Fraction(self.offset, self.level)

    @property
    def scaled(self) -> Disk:
        return Disk(Fraction(self.offset, self.level), Fraction(1, self.level))

    def provenance(self, N: int, n: int) -> tuple[int, int]:
        return self.level * n + self.offset, self.level * N

    def mirrored(self, width: int) -> "Candidate":
        return Candidate(self.level, self.level * width - self.offset)


class _Residues:
    """n mod p for every prime of N, so k*n + m can be tested per prime."""

    def __init__(self, N: FactoredInt, n: int):
        self.pairs = [(p, n % p) for p in N.distinct]

    def coprime(self, k: int, m: int) -> bool:
        return all((k * r + m) % p for p, r in self.pairs)


@dataclass(frozen=True)
class Region:
    N: FactoredInt
    n: int
    n_next: int
    cls: PairClass

    def __post_init__(self):
        if coprime_to(self.N, self.n) or coprime_to(self.N, self.n_next):
            raise DomainError("region endpoints must share a factor with N")
        if self.n_next <= self.n:
            raise DomainError("n_next must exceed n")

    @classmethod
    def at(cls, N: FactoredInt | int, n: int) -> "Region":
        """The region whose left breakpoint is n."""
        if not isinstance(N, FactoredInt):
            N = factorize(N)
        if coprime_to(N, n):
            raise DomainError(f"gcd(N, {short(n)}) = 1: not a breakpoint")
        if N.value is not None and not 0 <= n < N.value:
            raise DomainError(f"n={short(n)} outside [0, N-1]")
        m = n + 1
        while coprime_to(N, m):
            m += 1
        return cls(N, n, m, PairClass.GOOD if m > n + 1 else PairClass.BAD)

    @property
    def width(self) -> int:
        return self.n_next - self.n

    @property
    def label(self) -> str:
        return f"({self.N}, {short(self.n)}, {short(self.n_next)})"

    def disk_of(self, cand: Candidate) -> Disk:
        """The candidate in original coordinates, with (a, b) provenance."""
        a, b = cand.provenance(self.N.require_value(), self.n)
        return Disk.ford(a, b)

    def candidate_of(self, disk: Disk) -> Candidate:
        if disk.provenance is None:
            raise DomainError("disk has no provenance")
        a, b = disk.provenance
        k, rem = divmod(b, self.N.require_value())
        if rem:
            raise DomainError(f"denominator {b} not a multiple of N")
        return Candidate(k, a - k * self.n)

    def mirror(self) -> "Region":
        """The region reflected through Re(z) = 1/2."""
        N = self.N.require_value()
        return Region.at(self.N, N - self.n_next)


def _level(region: Region, k: int, residues: _Residues) -> tuple[int, ...]:
    return tuple(
        m
        for m in range(1, k * region.width)
        if math.gcd(m, k) == 1 and residues.coprime(k, m)
    )


def enumerate_candidates(region: Region, k: int) -> list[Candidate]:
    """All admissible Ford disks of denominator k*N inside the region."""
    if k < 1:
        raise DomainError("level must be >= 1")
    return [Candidate(k, m) for m in _level(region, k, _Residues(region.N, region.n))]


@dataclass(frozen=True)
class BoundarySet:
    region: Region
    members: tuple[Candidate, ...]
    certificate_k: int
    union_size: int = field(default=0, compare=False)

    @property
    def disks(self) -> list[Disk]:
        return [self.region.disk_of(c) for c in self.members]

    @property
    def provenance(self) -> frozenset[tuple[int, int]]:
        N = self.region.N.require_value()
        return frozenset(c.provenance(N, self.region.n) for c in self.members)

    @property
    def scaled(self) -> list[Disk]:
        return [c.scaled for c in self.members]

    def __contains__(self, cand) -> bool:
        if isinstance(cand, Disk):
            cand = self.region.candidate_of(cand)
        return cand in self.members


def _exposed(union: list[Candidate]) -> tuple[Candidate, ...]:
    disks = {c: c.scaled for c in union}
    index = DiskIndex(disks.values())
    keep = []
    for c, d in disks.items():
        others = [o for o in index.near(d) if o != d]
        covered, _ = disk_covered_by_union(d, others)
        if not covered:
            keep.append(c)
    return tuple(sorted(keep, key=lambda c: (c.center, c.level)))


# (width, level offsets so far) -> None while the certificate fails, else the result
_MEMO: dict = {}
_MEMO_LIMIT = 500_000


def compute_boundary_set(region: Region, k_max: int = DEFAULT_KMAX, memo: bool = True) -> BoundarySet:
    """Minimal boundary set of ``region`` by iterative deepening over levels.

    Level k contributes the disks of denominator k*N.  Once the disks of
    levels <= k cover the region swept by a disk of radius 1/((k+1)N), every
    finer disk is inside the union and the search stops with certificate
    depth k+1.  The retained disks are those with an exposed arc against all
    other accumulated candidates.

    The outcome depends only on the width and on which offsets survive at
    each level, so with ``memo`` it is cached on exactly that pattern.
    """
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    residues = _Residues(region.N, region.n)
    width = region.width
    levels: list[tuple[int, ...]] = []
    union: list[Candidate] = []
    for k in range(1, k_max + 1):
        levels.append(_level(region, k, residues))
        union.extend(Candidate(k, m) for m in levels[-1])
        key = (width, tuple(levels)) if memo else None
        if key is not None and key in _MEMO:
            result = _MEMO[key]
        else:
            result = None
            if union and swept_region_certificate(0, width, k + 1, 1, (c.scaled for c in union)):
                result = (_exposed(union), k + 1, len(union))
            if key is not None:
                if len(_MEMO) > _MEMO_LIMIT:
                    _MEMO.clear()
                _MEMO[key] = result
        if result is not None:
            members, cert, size = result
            return BoundarySet(region, members, cert, size)
    raise UnresolvedRegion(region, k_max, union)


class RegionShape(enum.Enum):
    GOOD_FULL = "GoodFull"
    MIDPOINT = "Midpoint"
    THREE_POINT = "ThreePoint"
    FOUR_POINT_LEFT = "FourPointLeft"
    FOUR_POINT_RIGHT = "FourPointRight"
    THREE_FIVE_LEFT = "ThreeFiveLeft"
    THREE_FIVE_RIGHT = "ThreeFiveRight"
    OTHER = "Other"


# disk sets of the bad-region lemmas, as (level, offset) in region coordinates
LEMMA_SHAPES: dict[RegionShape, frozenset[Candidate]] = {
    RegionShape.MIDPOINT: frozenset({Candidate(2, 1)}),
    RegionShape.THREE_POINT: frozenset({Candidate(3, 1), Candidate(3, 2)}),
    RegionShape.FOUR_POINT_LEFT: frozenset({Candidate(3, 1), Candidate(4, 3)}),
    RegionShape.FOUR_POINT_RIGHT: frozenset({Candidate(3, 2), Candidate(4, 1)}),
    RegionShape.THREE_FIVE_LEFT: frozenset({Candidate(3, 1), Candidate(5, 4)}),
    RegionShape.THREE_FIVE_RIGHT: frozenset({Candidate(3, 2), Candidate(5, 1)}),
}


def classify_shape(bs: BoundarySet) -> RegionShape:
    members = frozenset(bs.members)
    w = bs.region.width
    if w >= 2 and members == frozenset(Candidate(1, m) for m in range(1, w)):
        return RegionShape.GOOD_FULL
    for shape, disks in LEMMA_SHAPES.items():
        if members == disks:
            return shape
    return RegionShape.OTHER


def lemma_prediction(N: FactoredInt | int, n: int) -> RegionShape | None:
    """The lemma whose gcd hypotheses the bad pair (N, n) satisfies, if any.

    Only bad pairs are considered; good pairs return None.
    """
    if not isinstance(N, FactoredInt):
        N = factorize(N)

    def cop(a, b):
        return coprime_to(N, a * n + b)

    if cop(1, 0) or cop(1, 1):
        return None
    if cop(2, 1):
        return RegionShape.MIDPOINT
    if cop(3, 1) and cop(3, 2):
        return RegionShape.THREE_POINT
    if cop(3, 1) and not cop(3, 2) and cop(4, 3):
        return RegionShape.FOUR_POINT_LEFT
    if not cop(3, 1) and cop(3, 2) and cop(4, 1):
        return RegionShape.FOUR_POINT_RIGHT
    if not any(cop(a, b) for a, b in ((3, 2), (4, 3), (5, 3))) and cop(3, 1) and cop(5, 4):
        return RegionShape.THREE_FIVE_LEFT
    if not any(cop(a, b) for a, b in ((3, 1), (4, 1), (5, 2))) and cop(3, 2) and cop(5, 1):
        return RegionShape.THREE_FIVE_RIGHT
    return None
