"""Integer substrate: factorization, breakpoints, pair classes and CRT.

Every gcd test against N goes through the prime list of a
:class:`FactoredInt`, so a modulus built from thousands of large primes never
has to be multiplied out.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, short

__all__ = [
    "FactoredInt",
    "Breakpoints",
    "PairClass",
    "is_prime",
    "factorize",
    "psi",
    "euler_phi",
    "psi_breakpoints",
    "classify_pair",
    "coprime_to",
    "crt_solve",
    "omega_p1",
    "primes_from",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int) -> Iterator[int]:
    """Ascending primes >= start."""
    p = max(start, 2)
    while True:
        if is_prime(p):
            yield p
        p += 1


@dataclass(frozen=True)
class FactoredInt:
    """An integer carried together with its prime factorization.

    ``value`` may be None for moduli too large to be worth materializing;
    everything except breakpoint enumeration works from ``primes`` alone.
    """

    primes: tuple[tuple[int, int], ...]
    value: int | None = None

    def __post_init__(self):
        if not self.primes:
            raise DomainError("FactoredInt needs at least one prime")
        prev = 1
        for p, e in self.primes:
            if p <= prev or e < 1:
                raise DomainError(f"bad factorization entry ({p}, {e})")
            prev = p
        if self.value is not None:
            prod = 1
            for p, e in self.primes:
                prod *= p**e
            if prod != self.value:
                raise DomainError(f"value {self.value} != product of prime powers {prod}")

    @classmethod
    def from_primes(
        cls,
        primes: Iterable[int],
        exponents: Iterable[int] | None = None,
        materialize: bool = True,
        check: bool = True,
    ) -> "FactoredInt":
        ps = list(primes)
        es = [1] * len(ps) if exponents is None else list(exponents)
        if len(es) != len(ps):
            raise DomainError("primes and exponents differ in length")
        if check:
            bad = [p for p in ps if not is_prime(p)]
            if bad:
                raise DomainError(f"not prime: {bad[:5]}")
        pairs = tuple(sorted(zip(ps, es)))
        value = math.prod(p**e for p, e in pairs) if materialize else None
        return cls(pairs, value)

    @property
    def distinct(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.primes)

    @property
    def omega(self) -> int:
        return len(self.primes)

    @property
    def p1(self) -> int:
        return self.primes[0][0]

    def require_value(self) -> int:
        if self.value is None:
            raise DomainError("operation needs the explicit value of N")
        return self.value

    def coprime_to(self, t: int) -> bool:
        return coprime_to(self, t)

    def __int__(self) -> int:
        return self.require_value()

    def __str__(self) -> str:
        if self.value is not None:
            return str(self.value)
        return f"<{self.omega} primes from {self.p1}>"


def factorize(n: int) -> FactoredInt:
    """Trial division; fine for the sweep range."""
    if n < 2:
        raise DomainError(f"cannot factor {n}")
    m = n
    out = []
    for p in itertools.chain((2, 3), itertools.count(5, 2)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return FactoredInt(tuple(out), n)


def _as_factored(N: FactoredInt | int) -> FactoredInt:
    return N if isinstance(N, FactoredInt) else factorize(N)


def coprime_to(N: FactoredInt | int, t: int) -> bool:
    """True iff no prime of N divides t."""
    if t < 0:
        raise DomainError("t must be nonnegative")
    N = _as_factored(N)
    return all(t % p for p, _ in N.primes)


def euler_phi(N: FactoredInt | int) -> int:
    N = _as_factored(N)
    out = N.require_value()
    for p, _ in N.primes:
        out = out // p * (p - 1)
    return out


def psi(N: FactoredInt | int) -> int:
    """Count of 1 <= n <= N with gcd(N, n) > 1."""
    N = _as_factored(N)
    return N.require_value() - euler_phi(N)


class PairClass(enum.Enum):
    GOOD = "Good"
    BAD = "Bad"


@dataclass(frozen=True)
class Breakpoints:
    N: FactoredInt
    points: tuple[int, ...]

    @property
    def psi(self) -> int:
        return len(self.points) - 1

    def regions(self) -> Iterator[tuple[int, int]]:
        """Consecutive (n, n_next) pairs."""
        return zip(self.points, self.points[1:])

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def psi_breakpoints(N: FactoredInt | int) -> Breakpoints:
    N = _as_factored(N)
    v = N.require_value()
    ps = N.distinct
    pts = [n for n in range(v + 1) if n == 0 or any(n % p == 0 for p in ps)]
    return Breakpoints(N, tuple(pts))


def classify_pair(N: FactoredInt | int, n: int) -> PairClass:
    N = _as_factored(N)
    if n < 0 or (N.value is not None and n > N.value - 1):
        raise DomainError(f"n={short(n)} outside [0, N-1]")
    if coprime_to(N, n):
        raise DomainError(f"gcd(N, {short(n)}) = 1, so this is not a pair")
    return PairClass.GOOD if coprime_to(N, n + 1) else PairClass.BAD


def crt_solve(residues: Sequence[tuple[int, int]]) -> int:
    """Smallest n >= 0 with n = r_i (mod p_i) for pairwise distinct primes p_i."""
    seen = set()
    for r, p in residues:
        if p in seen:
            raise DomainError(f"duplicate modulus {p}")
        if not 0 <= r < p:
            raise DomainError(f"residue {r} not reduced mod {p}")
        seen.add(p)
    # Garner-style accumulation keeps the running modulus exact
    n, mod = 0, 1
    for r, p in residues:
        step = (r - n) * pow(mod, -1, p) % p
        n += mod * step
        mod *= p
    return n


def omega_p1(N: FactoredInt | int) -> tuple[int, int]:
    N = _as_factored(N)
    return N.omega, N.p1
