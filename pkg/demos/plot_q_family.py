"""
Lower bounds from a nested family of disks
==========================================

For a prime q the disks D(q/(Aq+j), 1/(Aq+j)), j = 1..q-1, all touch the
boundary of their union, and the top of the last one lies inside all the
others.  If N is built so that exactly these disks survive near one bad pair,
that pair has complexity at least q - 2.  N is a product of a hundred or more
primes and is never multiplied out.

Run with an argument to choose q (default 3; q = 5 takes a few seconds).
"""

import sys
import time

from fordcomplexity import build_q_witness, derive_constants, verify_famdisk, verify_lower_bound
from fordcomplexity.witness import omega_threshold, p1_threshold

q = int(sys.argv[1]) if len(sys.argv) > 1 else 3

###############################################################################
# The constants, computed exactly (A' is the ceiling of a quadratic irrational).
K = derive_constants(q)
print(f"q={q}: A={K.A} A'={K.A_prime} B={K.B} C'={K.C_prime} C={K.C}")
print(f"  B <= {omega_threshold(q)}: {K.B <= omega_threshold(q)};  C <= {p1_threshold(q)}: {K.C <= p1_threshold(q)}")

###############################################################################
# The family itself, checked with exact rationals.
print("family check:", bool(verify_famdisk(q)))

###############################################################################
# One prime per pair in S2, all at least C, and n from CRT.
t0 = time.perf_counter()
bundle = build_q_witness(q)
print(f"{len(bundle.primes)} primes from {bundle.primes[0]} to {bundle.primes[-1]}; "
      f"n has {bundle.n.bit_length()} bits; gcd pattern holds: {bundle.verified}")

###############################################################################
# Full boundary set of the pair, in region coordinates.
res = verify_lower_bound(bundle)
print(f"family retained: {res.family_retained}; last pole covered by members {res.pole_covered_by}; "
      f"c(N, n) >= {res.complexity}; ok={res.ok} ({time.perf_counter() - t0:.1f}s)")

###############################################################################
# Remove one prime and the certificate falls apart.
broken = verify_lower_bound(bundle.drop_prime(5))
print("with one prime dropped: ok =", broken.ok)
