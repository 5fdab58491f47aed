"""
Checking the engine against an independent method
=================================================

The oracle recomputes each boundary set with multiprecision arc subtraction
in the original coordinates and resolves near-ties exactly.  Here it is run
on every region of small N and on a sample of larger ones.
"""

import time

from fordcomplexity import cross_validate, oracle_boundary_set

###############################################################################
# One region, with the bookkeeping the oracle keeps.
res = oracle_boundary_set((210, 117, 118), k_cap=8)
print(sorted(res.disks), res.pole_counts, "exact fallbacks:", res.exact_fallbacks)

###############################################################################
# Every region of N <= 80, then a 5% sample of 80 < N <= 400.
for lo, hi, rate in ((2, 80, 1.0), (81, 400, 0.05)):
    t0 = time.perf_counter()
    rep = cross_validate(lo, hi, sample_rate=rate, seed=0)
    print(f"[{lo}, {hi}] rate {rate}: {rep.checked} regions, {len(rep.mismatches)} mismatches, "
          f"{len(rep.unresolved)} unresolved ({time.perf_counter() - t0:.1f}s)")

###############################################################################
# A deliberately starved engine is caught rather than trusted.
rep = cross_validate(200, 212, k_max=2)
print("with k_max=2:", len(rep.unresolved), "unresolved regions reported")
