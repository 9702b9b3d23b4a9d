"""Truncated 2-adic scalars and polynomials."""

import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverdef.witt import (PrecisionMismatch, WittPoly, WittScalar,
                            default_precision)


def test_scalar_arithmetic():
    a = WittScalar(200, 8)
    b = WittScalar(100, 8)
    assert (a + b).value == 44
    assert (a * b).value == (200 * 100) % 256
    assert (-a).value == 56
    assert (a - a).is_zero()


def test_scalar_valuation_and_unit():
    assert WittScalar(12, 8).valuation() == 2
    assert WittScalar(0, 8).valuation() == 8
    assert WittScalar(3, 8).is_unit()
    assert not WittScalar(6, 8).is_unit()
    assert WittScalar(255, 8).signed() == -1


def test_precision_mismatch_raises():
    with pytest.raises(PrecisionMismatch):
        WittScalar(1, 8) + WittScalar(1, 16)
    with pytest.raises(PrecisionMismatch):
        WittPoly([1], 8) * WittPoly([1], 16)


def test_poly_product_oracle():
    t = WittPoly.variable(8)
    two = WittPoly.constant(2, 8)
    p = t * (t * t - two)
    assert p.coeffs == (0, 254, 0, 1)
    q = t * t - two
    assert (q * q).coeffs == (4, 0, 252, 0, 1)


def test_poly_mod2():
    t = WittPoly.variable(8)
    p = t * (t * t - WittPoly.constant(2, 8))
    assert p.mod2() == (0, 0, 0, 1)


def test_degree_and_monic():
    p = WittPoly([2, 0, 1], 8)
    assert p.degree == 2
    assert p.is_monic()
    assert WittPoly([], 8).is_zero()
    assert WittPoly([256], 8).is_zero()   # reduces to zero


def test_default_precision_env(monkeypatch):
    monkeypatch.delenv("QUIVERDEF_PRECISION", raising=False)
    assert default_precision(4) == 12
    monkeypatch.setenv("QUIVERDEF_PRECISION", "20")
    assert default_precision(4) == 20
    monkeypatch.setenv("QUIVERDEF_PRECISION", "0")
    with pytest.raises(ValueError):
        default_precision(4)


def test_horner_evaluation_scalar():
    p = WittPoly([1, 2, 1], 8)   # (t+1)^2
    val = p.evaluate_horner(
        5, 0, lambda acc, c: (acc + c) % 256, lambda acc, t: (acc * t) % 256)
    assert val == 36


coeff_lists = st.lists(st.integers(0, 255), min_size=0, max_size=6)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    pa, pb, pc = (WittPoly(x, 8) for x in (a, b, c))
    assert pa * pb == pb * pa
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa + pb == pb + pa
    assert (pa - pb) + pb == pa
