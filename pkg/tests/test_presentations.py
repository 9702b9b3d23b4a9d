"""Algebra construction: dimensions, Cartan data, quotient maps."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverdef.presentations import (SUPPORTED_D, UnsupportedParameter,
                                     build_algebra,
                                     cartan_from_decomposition,
                                     check_pi_lambda, decomposition_matrix,
                                     loewy_bound, quotient_surjection_words)

ALL_PARAMS = [(family, d) for family in ("I", "II", "III")
              for d in SUPPORTED_D[family]]
SMALL_PARAMS = [(f, d) for f, d in ALL_PARAMS if d <= 4]

EXPECTED_DIMS = {
    ("I", 2): 36, ("I", 3): 68, ("I", 4): 132, ("I", 5): 260, ("I", 6): 516,
    ("II", 2): 24, ("II", 3): 32, ("II", 4): 48, ("II", 5): 80,
    ("II", 6): 144,
    ("III", 3): 38, ("III", 4): 42, ("III", 5): 50, ("III", 6): 66,
}


@pytest.mark.parametrize("family,d", ALL_PARAMS)
def test_dimensions(family, d):
    full = build_algebra(family, d, "full")
    bar = build_algebra(family, d, "bar")
    assert full.dim == EXPECTED_DIMS[(family, d)]
    assert full.dim == 2 * bar.dim


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_cartan_matches_decomposition(family, d):
    full = build_algebra(family, d, "full")
    assert full.cartan() == cartan_from_decomposition(family, d)


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_cartan_symmetric(family, d):
    for kind in ("full", "bar"):
        c = build_algebra(family, d, kind).cartan()
        for i in range(3):
            for j in range(3):
                assert c[i][j] == c[j][i]


def test_decomposition_shape():
    for family, d in SMALL_PARAMS:
        rows = decomposition_matrix(family, d)
        assert len(rows) == 5 + (1 << (d - 1))
        assert all(len(r) == 3 for r in rows)


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_loewy_lengths(family, d):
    full = build_algebra(family, d, "full")
    if family == "I":
        assert full.loewy_length == (1 << (d + 1)) + 1
    elif family == "II":
        assert full.loewy_length == (1 << d) + 1
    else:
        assert full.loewy_length == max(9, (1 << (d - 1)) + 1)
    assert full.loewy_length <= loewy_bound(family, d)


def test_unsupported_parameters():
    with pytest.raises(UnsupportedParameter):
        build_algebra("I", 99, "full")
    with pytest.raises(UnsupportedParameter):
        build_algebra("III", 2, "full")
    with pytest.raises(UnsupportedParameter):
        build_algebra("IV", 3, "full")


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_idempotents(family, d):
    a = build_algebra(family, d, "full")
    for i in range(3):
        e = 1 << a.idempotents[i]
        assert a.mult(e, e) == e
        for j in range(i):
            assert a.mult(e, 1 << a.idempotents[j]) == 0


@pytest.mark.parametrize("family,d", [("I", 2), ("II", 3), ("III", 3)])
def test_multiplication_associative_random(family, d):
    a = build_algebra(family, d, "full")
    rng = random.Random(23)
    mask = (1 << a.dim) - 1
    for _ in range(30):
        x, y, z = (rng.getrandbits(a.dim) & mask for _ in range(3))
        assert a.mult(a.mult(x, y), z) == a.mult(x, a.mult(y, z))


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_quotient_map(family, d):
    info = check_pi_lambda(family, d)
    bar = build_algebra(family, d, "bar")
    assert info["killed"] == bar.dim


@pytest.mark.parametrize("family,d", SMALL_PARAMS)
def test_corrected_surjection_is_homomorphism(family, d):
    full = build_algebra(family, d, "full")
    bar = build_algebra(family, d, "bar")
    images = quotient_surjection_words(family, d)
    for gen in full.generators:
        total = 0
        for word in gen:
            src, _ = full.quiver.word_endpoints(word)
            acc = 1 << bar.index[(src, ())]
            for name in reversed(word):
                new = 0
                for w in images[name]:
                    tmp = acc
                    while tmp:
                        j = (tmp & -tmp).bit_length() - 1
                        p = bar.basis[j]
                        new ^= bar.nf_bitmask(p.source, w + p.word)
                        tmp &= tmp - 1
                acc = new
            total ^= acc
        assert total == 0


def test_opposite_round_trip():
    a = build_algebra("I", 2, "full")
    op = a.opposite()
    assert op.dim == a.dim
    assert op.opposite() is a
    # opposite Cartan is the transpose
    c, co = a.cartan(), op.cartan()
    assert all(c[i][j] == co[j][i] for i in range(3) for j in range(3))


def test_json_emission():
    a = build_algebra("II", 2, "bar")
    data = a.to_json()
    assert data["schema_version"] == 1
    assert data["dim"] == a.dim
    assert len(data["basis"]) == a.dim


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("I", 2), ("II", 2), ("III", 3)]),
       st.randoms(use_true_random=False))
def test_left_multiplication_is_linear(params, rng):
    family, d = params
    a = build_algebra(family, d, "bar")
    x = rng.getrandbits(a.dim)
    y = rng.getrandbits(a.dim)
    for arrow in a.quiver.arrows:
        assert a.apply_left(arrow.name, x ^ y) == \
            a.apply_left(arrow.name, x) ^ a.apply_left(arrow.name, y)
