from __future__ import annotations

import math
import random
from fractions import Fraction as F

import pytest

from fordcomplexity.complexity import pair_complexity, predicted_zero
from fordcomplexity.errors import DomainError
from fordcomplexity.geometry import Disk, point_in_disk
from fordcomplexity.numtheory import factorize, is_prime
from fordcomplexity.region import Region
from fordcomplexity.witness import (
    build_c1_witness,
    build_q_witness,
    c1_conditions,
    derive_constants,
    family,
    omega_threshold,
    p1_threshold,
    verify_famdisk,
    verify_lower_bound,
)


def brute_constants(q: int) -> tuple[int, int, int, int, int]:
    """(A, A', B, C', C) from integer arithmetic only."""
    A = -(-q * q // 2)
    top = q * (A * q + q - 1)
    # A' = least t with t * sqrt(q^2 - 1) >= top
    Ap = math.isqrt(top * top // (q * q - 1))
    while Ap * Ap * (q * q - 1) < top * top:
        Ap += 1
    S1 = [(A * q + j, q) for j in range(1, q)]
    S2 = [(a, b) for a in range(1, Ap + 1) for b in range(a + 1) if math.gcd(a, b) == 1 and (a, b) not in S1]
    Cp = max(abs(a2 * b1 - a1 * b2) for a1, b1 in S1 for a2, b2 in S2)
    return A, Ap, len(S2), Cp, max(Cp, Ap) + 1


PINNED = {3: (5, 19, 119, 249, 250), 5: (13, 71, 1561, 4475, 4476)}


@pytest.mark.parametrize("q", [3, 5])
def test_constants_match_brute_force(q):
    K = derive_constants(q)
    got = (K.A, K.A_prime, K.B, K.C_prime, K.C)
    assert got == brute_constants(q) == PINNED[q]
    assert (1, 0) in K.S2 and not set(K.S1) & set(K.S2)
    assert len(K.S1) == q - 1


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_closed_form_bounds(q):
    K = derive_constants(q)
    assert K.B <= omega_threshold(q)
    assert K.C <= p1_threshold(q)


def test_threshold_values():
    assert omega_threshold(3) == 594
    assert p1_threshold(3) == 576


@pytest.mark.parametrize("q", [1, 2, 4, 9])
def test_derive_constants_rejects(q):
    with pytest.raises(DomainError):
        derive_constants(q)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_famdisk(q):
    res = verify_famdisk(q)
    assert res and res.counterexample is None


def test_famdisk_pole_example():
    # pole of D(3/17, 1/17) is inside D(3/16, 1/16): 265/73984 < 289/73984
    fam = family(3)
    px, py = fam[-1].disk.pole
    d = fam[0].disk
    assert (px - d.center) ** 2 + py**2 == F(265, 73984)
    assert d.radius**2 == F(289, 73984)


def test_witness_points_on_circles():
    for q in [p for p in range(2, 24) if is_prime(p)]:
        A = -(-q * q // 2)
        for f in family(q):
            k = A * q + f.j
            assert f.level == k
            assert f.x == F(q * q - 1, q * k) and f.y_sq == F(q * q - 1, q * q * k * k)
            assert (f.x - F(q, k)) ** 2 + f.y_sq == F(1, k * k)


@pytest.mark.parametrize("N, n", [(15, 5), (210, 117), (2310, 957), (9699690, 12345)])
def test_famdisk_in_true_coordinates(N, n):
    """The family moved back by z -> (z + n) / N keeps every incidence."""
    for q in (3, 5):
        fam = family(q)
        true = [Disk((n + f.disk.center) / N, f.disk.radius / N) for f in fam]
        for i, f in enumerate(fam):
            x = (n + f.x) / N
            y_sq = f.y_sq / (N * N)
            assert (x - true[i].center) ** 2 + y_sq == true[i].radius ** 2
            for g, d in zip(fam, true):
                if g.j != f.j:
                    assert (x - d.center) ** 2 + y_sq > d.radius**2
        px, py = true[-1].pole
        assert all(point_in_disk(px, py, d, "open") for d in true[:-1])


def test_c1_examples():
    assert build_c1_witness(210) == 117
    n = build_c1_witness(2310)
    assert n is not None and 0 <= n < 2310 and c1_conditions(2310, n)
    assert build_c1_witness(105) is None
    assert build_c1_witness(1155) is None


def test_c1_witness_covers_the_hypotheses():
    for N in range(2, 5001):
        Fn = factorize(N)
        n = build_c1_witness(Fn)
        eligible = Fn.omega >= 5 or (Fn.omega >= 4 and Fn.p1 == 2)
        assert (n is not None) == eligible
        assert eligible == (not predicted_zero(Fn))
        if n is not None:
            assert 0 <= n < N and c1_conditions(Fn, n)
            assert pair_complexity(Region.at(Fn, n)).complexity >= 1


def test_q3_bundle():
    b = build_q_witness(3)
    assert len(b.primes) == 119 and min(b.primes) >= 250
    assert b.N.omega == 119 and b.N.p1 >= 250 and b.N.value is None
    assert b.verified
    assert all(all(t % p for p in b.primes) for t in b.T(1))
    assert all(any(t % p == 0 for p in b.primes) for t in b.T(2))
    # (1, 0) is in S2, so n itself shares a prime with N
    assert any(b.n % p == 0 for p in b.primes)


def test_q3_lower_bound():
    res = verify_lower_bound(build_q_witness(3))
    assert res.ok and res.hypotheses and res.family_retained
    assert res.pole_covered_by == (1,) and res.complexity >= 1
    assert res.boundary.certificate_k == 26


@pytest.mark.parametrize("index", [0, 1, 5, 50, 118])
def test_corrupted_bundle_fails(index):
    bad = build_q_witness(3).drop_prime(index)
    assert not bad.verified
    assert not verify_lower_bound(bad)


def test_q_witness_prime_source_checks():
    with pytest.raises(DomainError):
        build_q_witness(3, prime_source=[251, 257])
    with pytest.raises(DomainError):
        build_q_witness(3, prime_source=[241, 251])
    with pytest.raises(DomainError):
        build_q_witness(3, prime_source=[257, 251])


def test_common_prime_of_t1_and_t2_is_small():
    K = derive_constants(3)
    rng = random.Random(3)
    for n in rng.sample(range(10001), 300):
        for a1, b1 in K.S1:
            t1 = a1 * n + b1
            for a2, b2 in K.S2:
                g = math.gcd(t1, a2 * n + b2)
                if g > 1:
                    for p, _ in factorize(g).primes:
                        assert p <= K.C_prime


@pytest.mark.extended
def test_q5_lower_bound():
    res = verify_lower_bound(build_q_witness(5))
    assert res.ok and res.pole_covered_by == (1, 2, 3) and res.complexity >= 3
