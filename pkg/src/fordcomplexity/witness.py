"""Lower-bound witnesses: c(N) >= 1 by CRT, and c(N, n) >= q - 2.

The q-family lives at levels A*q + j with offset q in region coordinates,
i.e. the disks D(q/(Aq+j), 1/(Aq+j)) for 1 <= j <= q - 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, UnresolvedRegion, short
from .geometry import Disk, QuadraticReal, compare_quadratic, point_in_disk
from .numtheory import FactoredInt, coprime_to, crt_solve, factorize, is_prime, primes_from
from .region import BoundarySet, Candidate, Region, compute_boundary_set
from .complexity import pole_complexity

__all__ = [
    "WitnessConstants",
    "FamilyDisk",
    "FamdiskResult",
    "WitnessBundle",
    "LowerBoundResult",
    "derive_constants",
    "family",
    "verify_famdisk",
    "c1_conditions",
    "build_c1_witness",
    "build_q_witness",
    "verify_lower_bound",
    "omega_threshold",
    "p1_threshold",
]


def omega_threshold(q: int) -> Fraction:
    """q^6/2 + 3q^4 - 3q^3/2 + 9q^2/2 - 11q/2 + 3."""
    q = Fraction(q)
    return q**6 / 2 + 3 * q**4 - 3 * q**3 / 2 + 9 * q**2 / 2 - 11 * q / 2 + 3


def p1_threshold(q: int) -> Fraction:
    """q^6/2 + 3q^4 - 2q^3 + 9q^2/2 - 7q + 3."""
    q = Fraction(q)
    return q**6 / 2 + 3 * q**4 - 2 * q**3 + 9 * q**2 / 2 - 7 * q + 3


def _ceil_quadratic(x: QuadraticReal) -> int:
    """Exact ceiling of a quadratic irrational."""
    t = math.ceil(float(x))
    while compare_quadratic(QuadraticReal(t), x) < 0:
        t += 1
    while compare_quadratic(QuadraticReal(t - 1), x) >= 0:
        t -= 1
    return t


@dataclass(frozen=True)
class WitnessConstants:
    q: int
    A: int
    A_prime: int
    S1: tuple[tuple[int, int], ...]
    S2: tuple[tuple[int, int], ...]
    C_prime: int

    @property
    def B(self) -> int:
        return len(self.S2)

    @property
    def C(self) -> int:
        return max(self.C_prime, self.A_prime) + 1

    @property
    def levels(self) -> tuple[int, ...]:
        """Family levels A*q + j, j = 1..q-1."""
        return tuple(a for a, _ in self.S1)


def derive_constants(q: int) -> WitnessConstants:
    if q < 3 or not is_prime(q):
        raise DomainError(f"q must be a prime >= 3, got {q}")
    A = (q * q + 1) // 2
    top = q * (A * q + q - 1)
    # top / sqrt(q^2 - 1) = (top / (q^2 - 1)) * sqrt(q^2 - 1)
    A_prime = _ceil_quadratic(QuadraticReal(0, Fraction(top, q * q - 1), q * q - 1))
    S1 = tuple((A * q + j, q) for j in range(1, q))
    s1 = set(S1)
    S2 = tuple(
        (a, b)
        for a in range(1, A_prime + 1)
        for b in range(0, a + 1)
        if math.gcd(a, b) == 1 and (a, b) not in s1
    )
    C_prime = max(abs(a2 * b1 - a1 * b2) for a1, b1 in S1 for a2, b2 in S2)
    return WitnessConstants(q, A, A_prime, S1, S2, C_prime)


@dataclass(frozen=True)
class FamilyDisk:
    """Member j of the family in region coordinates, with its witness point.

    The witness point Q_j = (x, sqrt(y_sq)) lies on the circle and outside
    every other member.
    """

    j: int
    level: int
    disk: Disk
    x: Fraction
    y_sq: Fraction

    @property
    def candidate(self) -> Candidate:
        return Candidate(self.level, int(self.disk.center * self.level))


def family(q: int) -> list[FamilyDisk]:
    A = (q * q + 1) // 2
    out = []
    for j in range(1, q):
        k = A * q + j
        out.append(
            FamilyDisk(
                j,
                k,
                Disk(Fraction(q, k), Fraction(1, k)),
                Fraction(q * q - 1, q * k),
                Fraction(q * q - 1, q * q * k * k),
            )
        )
    return out


@dataclass(frozen=True)
class FamdiskResult:
    q: int
    ok: bool
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_famdisk(q: int) -> FamdiskResult:
    """Exact check that each family disk keeps an exposed point and that the
    pole of the last one is interior to all the others."""
    fam = family(q)
    for f in fam:
        c, r = f.disk.center, f.disk.radius
        if (f.x - c) ** 2 + f.y_sq != r * r:
            return FamdiskResult(q, False, ("off-circle", f.j))
        for g in fam:
            if g.j == f.j:
                continue
            excess = (f.x - g.disk.center) ** 2 + f.y_sq - g.disk.radius**2
            closed_form = Fraction((q * q - 1) * (g.j - f.j) ** 2, f.level**2 * g.level**2)
            if excess != closed_form or excess <= 0:
                return FamdiskResult(q, False, ("witness covered", f.j, g.j))
    if fam:
        px, py = fam[-1].disk.pole
        for f in fam[:-1]:
            if not point_in_disk(px, py, f.disk, "open"):
                return FamdiskResult(q, False, ("pole outside", f.j))
    return FamdiskResult(q, True)


_C1_FORMS_BLOCKED = ((1, 0), (1, 1), (2, 1), (3, 1), (4, 1))
_C1_FORMS_FREE = ((3, 2), (5, 2))


def c1_conditions(N: FactoredInt | int, n: int) -> bool:
    """n, n+1, 2n+1, 3n+1, 4n+1 share a factor with N; 3n+2, 5n+2 do not."""
    return all(not coprime_to(N, a * n + b) for a, b in _C1_FORMS_BLOCKED) and all(
        coprime_to(N, a * n + b) for a, b in _C1_FORMS_FREE
    )


def _root(a: int, b: int, p: int) -> int:
    """n mod p with p | a*n + b."""
    return (-b * pow(a, -1, p)) % p


def build_c1_witness(N: FactoredInt | int) -> int | None:
    """CRT witness n for c(N) >= 1, or None outside omega >= 5 / (omega >= 4, N even)."""
    if not isinstance(N, FactoredInt):
        N = factorize(N)
    ps = N.distinct
    if N.p1 == 2 and N.omega >= 4:
        # n odd covers n+1 and 3n+1 at once
        forms = [(1, 1), (1, 0), (2, 1), (4, 1)]
    elif N.omega >= 5:
        forms = [(1, 0), (1, 1), (2, 1), (3, 1), (4, 1)]
    else:
        return None
    residues = []
    for i, p in enumerate(ps):
        a, b = forms[i] if i < len(forms) else (1, 0)
        residues.append((_root(a, b, p), p))
    n = crt_solve(residues)
    if not c1_conditions(N, n):
        raise RuntimeError(f"CRT construction failed its own check for N={N}, n={short(n)}")
    return n


@dataclass(frozen=True)
class WitnessBundle:
    q: int
    constants: WitnessConstants
    primes: tuple[int, ...]
    n: int
    N: FactoredInt

    def T(self, which: int) -> list[int]:
        forms = self.constants.S1 if which == 1 else self.constants.S2
        return [a * self.n + b for a, b in forms]

    @property
    def verified(self) -> bool:
        """T1 coprime to N and every element of T2 sharing a prime with N, per prime."""
        res = [(p, self.n % p) for p in self.N.distinct]
        for a, b in self.constants.S1:
            if any((a * r + b) % p == 0 for p, r in res):
                return False
        for a, b in self.constants.S2:
            if all((a * r + b) % p for p, r in res):
                return False
        return True

    def drop_prime(self, index: int) -> "WitnessBundle":
        """The same n against N with one prime removed (a negative control)."""
        primes = self.primes[:index] + self.primes[index + 1:]
        return replace(self, primes=primes, N=FactoredInt.from_primes(primes, materialize=False, check=False))


def build_q_witness(q: int, prime_source: Iterable[int] | None = None) -> WitnessBundle:
    """Pair the i-th element (a, b) of S2 with the i-th prime p_i >= C and solve
    p_i | a*n + b by CRT; the modulus is never multiplied out."""
    K = derive_constants(q)
    source: Iterator[int] = iter(prime_source) if prime_source is not None else primes_from(K.C)
    primes = []
    for p in source:
        if p < K.C:
            raise DomainError(f"prime {p} below C = {K.C}")
        if primes and p <= primes[-1]:
            raise DomainError("prime source must be strictly ascending")
        primes.append(p)
        if len(primes) == K.B:
            break
    if len(primes) < K.B:
        raise DomainError(f"need {K.B} primes >= {K.C}, got {len(primes)}")
    n = crt_solve([(_root(a, b, p), p) for (a, b), p in zip(K.S2, primes)])
    N = FactoredInt.from_primes(primes, materialize=False)
    return WitnessBundle(q, K, tuple(primes), n, N)


@dataclass(frozen=True)
class LowerBoundResult:
    ok: bool
    hypotheses: bool
    complexity: int | None = None
    family_retained: bool = False
    pole_covered_by: tuple[int, ...] = ()
    boundary: BoundarySet | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def default_witness_kmax(K: WitnessConstants) -> int:
    return 4 * K.A_prime


def verify_lower_bound(bundle: WitnessBundle, k_max: int | None = None) -> LowerBoundResult:
    """Compute the full boundary set of the pair (N, n) and check the family.

    Every family disk must be retained and the pole of the last one covered
    by all q - 2 others.
    """
    K = bundle.constants
    q = bundle.q
    hyp = bundle.verified
    if k_max is None:
        k_max = default_witness_kmax(K)
    try:
        region = Region.at(bundle.N, bundle.n)
    except DomainError as exc:
        return LowerBoundResult(False, hyp, reason=str(exc))
    if region.width != 1:
        return LowerBoundResult(False, hyp, reason="pair is not bad")
    try:
        bs = compute_boundary_set(region, k_max, memo=False)
    except UnresolvedRegion as exc:
        return LowerBoundResult(False, hyp, reason=str(exc))
    fam = [f.candidate for f in family(q)]
    retained = all(c in bs.members for c in fam)
    pole = pole_complexity(fam[-1], bs) if retained else None
    covered_by = tuple(sorted(c.level - K.A * q for c in pole.coverers if c in fam)) if pole else ()
    complexity = max(pole_complexity(c, bs).count for c in bs.members)
    ok = hyp and retained and covered_by == tuple(range(1, q - 1)) and complexity >= q - 2
    return LowerBoundResult(ok, hyp, complexity, retained, covered_by, bs)
