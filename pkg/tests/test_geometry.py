from __future__ import annotations

import random
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from fordcomplexity.geometry import (
    Disk,
    Order,
    QuadraticReal,
    compare_quadratic,
    disk_covered_by_union,
    interval_union_covers,
    point_in_disk,
    swept_region_certificate,
    upper_chord_interval,
)

small = st.fractions(min_value=-3, max_value=3, max_denominator=50)
positive = st.fractions(min_value=F(1, 50), max_value=2, max_denominator=50)


# -- membership ---------------------------------------------------------------

def test_point_in_disk_examples():
    assert not point_in_disk(F(1, 9), F(1, 9), Disk(F(2, 9), F(1, 9)), "closed")
    assert point_in_disk(F(1, 9), F(1, 9), Disk(F(1, 9), F(1, 9)), "closed")
    assert not point_in_disk(F(1, 9), F(1, 9), Disk(F(1, 9), F(1, 9)), "open")
    assert point_in_disk(F(3, 17), F(1, 17), Disk(F(3, 16), F(1, 16)), "open")
    with pytest.raises(ValueError):
        point_in_disk(0, 0, Disk(0, 1), "ajar")


def test_disk_validation():
    with pytest.raises(ValueError):
        Disk(0, 0)
    with pytest.raises(ValueError):
        Disk(F(1, 3), F(1, 3), (2, 6))
    d = Disk.ford(2, 9)
    assert d.pole == (F(2, 9), F(1, 9)) and d.left == F(1, 9) and d.right == F(1, 3)


@given(small, positive, small, st.fractions(min_value=-2, max_value=2, max_denominator=50),
       st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_vertical_monotonicity(c, r, x, y, t):
    d = Disk(c, r)
    if point_in_disk(x, y, d):
        assert point_in_disk(x, y * t, d)
        assert point_in_disk(x, -y * t, d)


# -- quadratic irrationals ----------------------------------------------------

def test_compare_quadratic_examples():
    assert compare_quadratic(QuadraticReal(3, 1, 2), QuadraticReal(2, 1, 5)) is Order.GREATER
    assert compare_quadratic(QuadraticReal(1, 2, 4), QuadraticReal(5, 0, 0)) is Order.EQUAL
    assert compare_quadratic(QuadraticReal(0, 1, 2), QuadraticReal(0, 1, 3)) is Order.LESS


def test_quadratic_canonical_and_validation():
    assert QuadraticReal(1, 5, 0) == QuadraticReal(1)
    assert QuadraticReal(1, 0, 7).d == 0
    with pytest.raises(ValueError):
        QuadraticReal(0, 1, -1)


def _rand_q(rng: random.Random) -> QuadraticReal:
    def fr(lo, hi):
        return F(rng.randint(lo, hi), rng.randint(1, 40))

    return QuadraticReal(fr(-60, 60), fr(-20, 20), F(rng.randint(0, 80), rng.randint(1, 12)))


def _mp(u: QuadraticReal):
    return mpmath.mpf(u.p.numerator) / u.p.denominator + (
        mpmath.mpf(u.q.numerator) / u.q.denominator
    ) * mpmath.sqrt(mpmath.mpf(u.d.numerator) / u.d.denominator)


def test_compare_quadratic_against_multiprecision():
    rng = random.Random(20261018)
    ties = 0
    with mpmath.workdps(64):
        for i in range(10_000):
            u = _rand_q(rng)
            if i % 10 == 0:
                # an exact tie written differently: q*sqrt(d) == (q/m)*sqrt(d*m^2)
                m = rng.randint(2, 5)
                v = QuadraticReal(u.p, u.q / m, u.d * m * m)
            else:
                v = _rand_q(rng)
            diff = _mp(u) - _mp(v)
            if abs(diff) < mpmath.mpf(10) ** -50:
                expected = Order.EQUAL
                ties += 1
            else:
                expected = Order.GREATER if diff > 0 else Order.LESS
            assert compare_quadratic(u, v) is expected, (u, v)
            assert compare_quadratic(v, u) is Order(-expected)
    assert ties >= 1000


def test_compare_quadratic_total_order():
    rng = random.Random(7)
    for _ in range(2000):
        a, b, c = (_rand_q(rng) for _ in range(3))
        if compare_quadratic(a, b) <= 0 and compare_quadratic(b, c) <= 0:
            assert compare_quadratic(a, c) <= 0
        assert compare_quadratic(a, a) is Order.EQUAL


# -- chord intervals and coverage ---------------------------------------------

def test_upper_chord_examples():
    assert upper_chord_interval(Disk(0, 1), Disk(1, 1)) == (F(1, 2), 1)
    assert upper_chord_interval(Disk(0, 1), Disk(0, 2)) == (-1, 1)
    assert upper_chord_interval(Disk(0, 1), Disk(3, 1)) is None
    assert upper_chord_interval(Disk(0, 2), Disk(0, 1)) is None


@given(small, positive, small, positive, st.fractions(min_value=0, max_value=1, max_denominator=97))
def test_upper_chord_correctness(c, r, ci, ri, t):
    target, cov = Disk(c, r), Disk(ci, ri)
    iv = upper_chord_interval(target, cov)
    # x on the semicircle lies in cov iff (x - ci)^2 + r^2 - (x - c)^2 <= ri^2
    inside = lambda x: (x - ci) ** 2 + r * r - (x - c) ** 2 <= ri * ri
    if iv is None:
        for x in (c - r + 2 * r * t, c - r, c + r):
            assert not inside(x)
    else:
        lo, hi = iv
        assert c - r <= lo <= hi <= c + r
        assert inside(lo + (hi - lo) * t)
        for x in (c - r + (lo - (c - r)) * t, hi + (c + r - hi) * t):
            if x < lo or x > hi:
                assert not inside(x)


def test_interval_union_examples():
    assert interval_union_covers((0, 1), [(0, F(1, 2)), (F(1, 2), 1)])[0]
    covered, gaps = interval_union_covers((0, 1), [(0, F(1, 3)), (F(2, 3), 1)])
    assert not covered and gaps.intervals == ((F(1, 3), F(2, 3)),)
    assert interval_union_covers((0, 1), [(0, QuadraticReal(0, F(1, 2), 2)), (F(1, 2), 1)])[0]
    covered, gaps = interval_union_covers((0, 1), [])
    assert not covered and gaps.intervals == ((0, 1),)


def test_disk_covered_examples():
    covered, exposed = disk_covered_by_union(Disk(F(1, 2), F(1, 2)), [Disk(F(1, 3), F(1, 3)), Disk(F(2, 3), F(1, 3))])
    assert not covered and exposed
    assert disk_covered_by_union(Disk(F(1, 2), F(1, 4)), [Disk(F(1, 2), F(1, 2))])[0]
    covered, exposed = disk_covered_by_union(Disk(F(3, 17), F(1, 17)), [Disk(F(3, 16), F(1, 16))])
    assert not covered
    assert any(lo < hi for lo, hi in exposed)


def _grid_uncovered(disk: Disk, others: list[Disk], steps: int = 1000):
    """Upper-boundary points of ``disk`` outside every other disk, on a grid."""
    c, r = float(disk.center), float(disk.radius)
    xs = c + r * np.linspace(-1, 1, 2 * steps + 1)
    ys = np.sqrt(np.maximum(r * r - (xs - c) ** 2, 0))
    inside = np.zeros_like(xs, dtype=bool)
    for o in others:
        oc, orr = float(o.center), float(o.radius)
        inside |= (xs - oc) ** 2 + ys**2 <= orr * orr * (1 + 1e-12)
    return xs[~inside]


@st.composite
def configurations(draw):
    def disk():
        return Disk(draw(st.fractions(0, 2, max_denominator=50)), draw(st.fractions(F(1, 20), 1, max_denominator=50)))

    target = disk()
    others = [disk() for _ in range(draw(st.integers(1, 6)))]
    return target, others


@given(configurations())
def test_reduction_soundness_against_grid(cfg):
    target, others = cfg
    covered, exposed = disk_covered_by_union(target, others)
    uncovered = _grid_uncovered(target, others)
    if covered:
        assert uncovered.size == 0
    else:
        # the exposed set is a union of x-intervals; a grid point must land in
        # any of them wide enough to contain one
        step = float(target.radius) / 1000
        wide = [(float(lo), float(hi)) for lo, hi in exposed if float(hi) - float(lo) > 4 * step]
        if wide:
            assert uncovered.size > 0
        assert all(any(lo - 1e-9 <= x <= hi + 1e-9 for lo, hi in ((float(a), float(b)) for a, b in exposed))
                   for x in uncovered)


# -- swept-region certificate -------------------------------------------------

def test_swept_certificate_examples():
    assert swept_region_certificate(0, F(3, 9), 2, 9, [Disk(F(1, 9), F(1, 9)), Disk(F(2, 9), F(1, 9))])
    assert swept_region_certificate(F(5, 15), F(6, 15), 3, 15, [Disk(F(11, 30), F(1, 30))])
    assert not swept_region_certificate(F(5, 15), F(6, 15), 1, 15, [])
    # at k = 2 the swept region is the disk D(11/30, 1/30) itself
    assert swept_region_certificate(F(5, 15), F(6, 15), 2, 15, [Disk(F(11, 30), F(1, 30))])
    assert not swept_region_certificate(0, F(3, 9), 1, 9, [Disk(F(1, 9), F(1, 9)), Disk(F(2, 9), F(1, 9))])


def test_swept_certificate_degenerate_uses_cap_disk():
    # width 1/15 < 2/15: the single cap disk of radius 1/15 at the midpoint
    assert not swept_region_certificate(F(5, 15), F(6, 15), 1, 15, [Disk(F(11, 30), F(1, 30))])
    assert swept_region_certificate(F(5, 15), F(6, 15), 1, 15, [Disk(F(11, 30), F(1, 15))])


@given(st.lists(st.tuples(st.integers(1, 12), st.integers(1, 11)), min_size=1, max_size=10), st.integers(1, 10))
def test_swept_certificate_monotone_in_k(pairs, k):
    union = [Disk(F(m, lv), F(1, lv)) for lv, m in pairs if 0 < m < 2 * lv]
    if swept_region_certificate(0, 2, k, 1, union):
        assert swept_region_certificate(0, 2, k + 1, 1, union)
