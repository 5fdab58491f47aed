"""Exception types shared across the package."""

from __future__ import annotations


def short(n: int) -> str:
    """Readable form of a possibly enormous integer."""
    if n.bit_length() <= 128:
        return str(n)
    return f"<{n.bit_length()}-bit integer>"


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class UnresolvedRegion(RuntimeError):
    """The swept-region certificate never passed within the level budget.

    Carries the region and the partial union accumulated so far so a caller
    can inspect how far the search got.
    """

    def __init__(self, region, k_max: int, partial):
        self.region = region
        self.k_max = k_max
        self.partial = tuple(partial)
        super().__init__(
            f"unresolved region N={region.N} n={short(region.n)}: "
            f"no certificate up to level {k_max} ({len(self.partial)} candidates)"
        )
