"""
Boundary disks of R_9 and R_15
==============================

The region R_N is the union of the Ford disks D(a/b, 1/b) with N | b and
a/b in [0, 1].  Only finitely many of them reach the boundary.  This script
finds them for N = 9 and N = 15 and draws both pictures as SVG.
"""

from fordcomplexity import Region, classify_shape, compute_boundary_set, psi_breakpoints, total_complexity
from fordcomplexity.svg import render_svg

###############################################################################
# The breakpoints are the integers 0 <= n <= N sharing a factor with N.
# Consecutive breakpoints cut R_N into regions that can be handled one by one.
for N in (9, 15):
    print(N, "breakpoints:", list(psi_breakpoints(N)))

###############################################################################
# A region [n, n+1] of width one is "bad".  For N = 15 the bad regions start at
# n = 5 and n = 9 and each is a single disk of denominator 2N.
bs = compute_boundary_set(Region.at(15, 5))
print("R_15 at n=5:", sorted(bs.provenance), "shape", classify_shape(bs).value,
      "certificate level", bs.certificate_k)

###############################################################################
# The whole boundary set, region by region, with its complexity.
for N in (9, 15):
    rep = total_complexity(N)
    for p in rep.pairs:
        print(f"  N={N} [{p.n}, {p.n_next}] {p.cls.value:4} {p.shape.value:10} disks {p.provenance(N)}")
    print(f"  c({N}) = {rep.c}")

###############################################################################
# Pictures: one circle per boundary disk, one red tick per breakpoint.
for N in (9, 15):
    rep = total_complexity(N)
    disks = [ab for p in rep.pairs for ab in p.provenance(N)]
    with open(f"R_{N}.svg", "w") as fh:
        fh.write(render_svg(N, disks, psi_breakpoints(N)))
    print(f"wrote R_{N}.svg with {len(disks)} circles")
