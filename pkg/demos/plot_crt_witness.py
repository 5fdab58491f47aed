"""
A covered north pole from the Chinese remainder theorem
=======================================================

For N = 2*3*5*7 the integer n = 117 makes n, n+1, 2n+1, 3n+1, 4n+1 all share
a prime with N while 3n+2 and 5n+2 stay coprime.  The bad region at n then
keeps the disk of (5n+2)/(5N), and its top point sits on another boundary
disk.
"""

from fordcomplexity import Candidate, Region, build_c1_witness, pair_complexity, pole_complexity
from fordcomplexity.witness import c1_conditions

###############################################################################
# Build n by CRT, one linear form per prime.
for N in (210, 2310, 30030, 105):
    n = build_c1_witness(N)
    print(N, "->", n, "" if n is None else f"(conditions hold: {c1_conditions(N, n)})")

###############################################################################
# Compute the region and inspect the pole of D((5n+2)/(5N)).
N, n = 210, 117
res = pair_complexity(Region.at(N, n))
print("boundary disks:", sorted(res.boundary.provenance), "certificate", res.boundary.certificate_k)
rep = pole_complexity(Candidate(5, 2), res.boundary)
print("pole of", Candidate(5, 2).provenance(N, n), "covered by",
      [c.provenance(N, n) for c in rep.coverers], "tangentially:", [c.provenance(N, n) for c in rep.tangential])
print("c(N, n) =", res.complexity)
