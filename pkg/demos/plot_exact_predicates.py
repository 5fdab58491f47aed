"""
Exact predicates for axis-centred disks
=======================================

Two small facts make every coverage question exact.  Disks centred on the
real axis are vertically convex, so covering a disk means covering its upper
semicircle.  And whether a point of that semicircle lies in another such disk
is a linear condition in x, so covered arcs project to rational intervals.
"""

from fractions import Fraction as F

from fordcomplexity import (
    Disk,
    QuadraticReal,
    compare_quadratic,
    disk_covered_by_union,
    interval_union_covers,
    swept_region_certificate,
    upper_chord_interval,
)

###############################################################################
# The chord trick: two unit disks one apart meet above x = 1/2.
print(upper_chord_interval(Disk(0, 1), Disk(1, 1)))

###############################################################################
# A disk with an exposed arc, and one that is swallowed.
print(disk_covered_by_union(Disk(F(3, 17), F(1, 17)), [Disk(F(3, 16), F(1, 16))]))
print(disk_covered_by_union(Disk(F(1, 2), F(1, 4)), [Disk(F(1, 2), F(1, 2))])[0])

###############################################################################
# At a fixed height the endpoints become c +- sqrt(s); these compare exactly.
print(compare_quadratic(QuadraticReal(3, 1, 2), QuadraticReal(2, 1, 5)))
print(interval_union_covers((0, 1), [(0, QuadraticReal(0, F(1, 2), 2)), (F(1, 2), 1)])[0])

###############################################################################
# The stopping rule: once a small disk can slide across the region inside the
# union, every finer Ford disk is inside too.
print(swept_region_certificate(0, F(3, 9), 2, 9, [Disk(F(1, 9), F(1, 9)), Disk(F(2, 9), F(1, 9))]))
