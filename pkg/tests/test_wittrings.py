"""Polynomial tower and trace-ring quotient."""

import math

import pytest

from quiverdef.wittrings import (SPrime, p_poly, tower_polynomial,
                                 verify_lemma_tower)


def signed(coeffs, precision):
    half = 1 << (precision - 1)
    mod = 1 << precision
    return [c - mod if c > half else c for c in coeffs]


def test_small_polynomials():
    assert p_poly(2, 8).coeffs == (0, 1)             # t
    assert p_poly(3, 8).coeffs == (0, 254, 0, 1)     # t^3 - 2t
    assert signed(p_poly(4, 16).coeffs, 16) == [0, -4, 0, 10, 0, -6, 0, 1]


def test_tower_recursion():
    m3 = tower_polynomial(3, 8)
    assert signed(m3.coeffs, 8) == [-2, 0, 1]
    m4 = tower_polynomial(4, 16)
    assert signed(m4.coeffs, 16) == [2, 0, -4, 0, 1]


@pytest.mark.parametrize("d", range(2, 9))
def test_shape(d):
    p = p_poly(d, 2 * d + 4)
    deg = (1 << (d - 1)) - 1
    assert p.degree == deg
    assert p.is_monic()
    assert all(c % 2 == 0 for c in p.coeffs[:-1])
    assert p.mod2() == tuple([0] * deg + [1])


@pytest.mark.parametrize("d", (3, 4, 5))
def test_float_roots(d):
    """The tower polynomial vanishes at 2 cos(2 pi j / 2^d) for the odd
    multiples that generate the relevant angles."""
    p = signed(p_poly(d, 40).coeffs, 40)

    def value(x):
        acc = 0.0
        for c in reversed(p):
            acc = acc * x + c
        return acc

    n = 1 << d
    # roots: 2cos(2 pi j / n) for j = 1..2^(d-1)-1 restricted to the
    # Galois orbit of a primitive 2^d-th root plus lower levels; the
    # full root set of the product is j odd at each tower level
    roots = []
    for level in range(2, d + 1):
        m = 1 << level
        for j in range(1, m // 2, 2):
            roots.append(2.0 * math.cos(2.0 * math.pi * j / m))
    assert len(roots) == (1 << (d - 1)) - 1
    for x in roots:
        assert abs(value(x)) < 1e-6 * max(1.0, abs(x)) * 2 ** d


def test_sprime_rank_and_ring_laws():
    ring = SPrime(4, 12)
    assert ring.rank == 7
    s = ring.generator()
    one = ring.one()
    assert ring.mul(one, s) == s
    a = ring.mul(s, s)
    b = ring.mul(a, s)
    assert ring.mul(ring.mul(s, s), a) == ring.mul(s, ring.mul(s, a))
    assert ring.mul(a, s) == ring.mul(s, a)
    assert ring.add(a, a) == tuple((2 * x) % ring.mod for x in a)


def test_sprime_degenerate_d2():
    ring = SPrime(2, 8)
    assert ring.rank == 1
    assert ring.generator() == ring.zero()


@pytest.mark.parametrize("d", (2, 3, 4, 5))
def test_lemma_tower(d):
    report = verify_lemma_tower(d)
    assert report["ok"]
    precisions = {c["precision"] for c in report["checks"]}
    assert {8, 16, 32} <= precisions
    for c in report["checks"]:
        assert c["p_at_generator_zero"]
        assert c["power_basis_unimodular"]
        assert c["rank"] == (1 << (d - 1)) - 1


def test_lemma_tower_respects_precision_argument():
    report = verify_lemma_tower(3, precision=10)
    assert 10 in report["precisions"]
    assert report["ok"]
