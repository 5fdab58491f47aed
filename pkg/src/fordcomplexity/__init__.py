"""Exact boundary sets and north-pole complexity for unions of Ford disks.

For N >= 2, R_N is the union of the Ford disks D(a/b, 1/b) with N | b and
a/b in [0, 1].  The package computes the minimal set of disks whose union is
R_N, one region between consecutive non-coprime integers at a time, with
exact rational arithmetic throughout, and counts how many boundary disks
cover each north pole.

Modules
-------
numtheory   factorization, breakpoints, pair classes, CRT
geometry    exact disk predicates, quadratic irrationals, coverage
region      candidate enumeration and boundary sets with certificates
complexity  pole counts, c(N, n), c(N) and range sweeps
witness     CRT witnesses and the q-family lower-bound construction
oracle      independent multiprecision cross-check
records     JSON records and the result cache
svg         static pictures
cli         the ``ford-complexity`` command
"""

from __future__ import annotations

from .errors import DomainError, UnresolvedRegion
from .numtheory import (
    Breakpoints,
    FactoredInt,
    PairClass,
    classify_pair,
    coprime_to,
    crt_solve,
    euler_phi,
    factorize,
    is_prime,
    omega_p1,
    psi,
    psi_breakpoints,
)
from .geometry import (
    Disk,
    IntervalSet,
    Order,
    QuadraticReal,
    Rational,
    compare_quadratic,
    disk_covered_by_union,
    interval_union_covers,
    point_in_disk,
    swept_region_certificate,
    upper_chord_interval,
)
from .region import (
    DEFAULT_KMAX,
    LEMMA_SHAPES,
    BoundarySet,
    Candidate,
    Region,
    RegionShape,
    classify_shape,
    compute_boundary_set,
    enumerate_candidates,
    lemma_prediction,
)
from .complexity import (
    ComplexityReport,
    PairComplexity,
    PoleReport,
    RangeReport,
    pair_complexity,
    pole_complexity,
    predicted_zero,
    total_complexity,
    verify_range,
)
from .witness import (
    WitnessBundle,
    WitnessConstants,
    build_c1_witness,
    build_q_witness,
    derive_constants,
    family,
    verify_famdisk,
    verify_lower_bound,
)
from .oracle import OracleResult, cross_validate, oracle_boundary_set
from .records import ENGINE_VERSION, SCHEMA_VERSION, ResultCache

__version__ = "0.1.0"
