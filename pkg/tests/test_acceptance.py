"""Acceptance gate: the eight primary criteria, at exact tolerance.

Each test prints a single PASS/FAIL line for its criterion; its pytest
verdict is the authoritative result.
"""

import time

from quiverdef.bricks import atlas, completeness_sweep
from quiverdef.deformation import classify_all
from quiverdef.presentations import (SUPPORTED_D, build_algebra,
                                     cartan_from_decomposition,
                                     quotient_surjection_words)
from quiverdef import reps as R
from quiverdef.verify import projective_radical_lengths
from quiverdef.wittrings import p_poly, verify_lemma_tower

CORE_PARAMS = [("I", 2), ("I", 3), ("I", 4),
               ("II", 2), ("II", 3), ("II", 4),
               ("III", 3), ("III", 4)]


def report(n, label, ok):
    print(f"criterion {n} ({label}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {n} ({label}) failed"


def test_criterion_1_presentation_fidelity():
    t0 = time.time()
    ok = True
    for family, d in CORE_PARAMS:
        full = build_algebra(family, d, "full")
        if full.cartan() != cartan_from_decomposition(family, d):
            ok = False
        got = tuple(len(R.projective(full, i).radical_series())
                    for i in range(3))
        if got != projective_radical_lengths(family, d):
            ok = False
    ok = ok and (time.time() - t0) < 60
    report(1, "presentation fidelity", ok)


def test_criterion_2_quotient_shadow():
    t0 = time.time()
    ok = True
    for family in ("I", "II", "III"):
        for d in SUPPORTED_D[family]:
            full = build_algebra(family, d, "full")
            bar = build_algebra(family, d, "bar")
            if full.dim != 2 * bar.dim:
                ok = False
            for i in range(3):
                if sum(full.projective_dims(i)) \
                        != 2 * sum(bar.projective_dims(i)):
                    ok = False
    for family, d in CORE_PARAMS:
        full = build_algebra(family, d, "full")
        bar = build_algebra(family, d, "bar")
        surjection = quotient_surjection_words(family, d)
        for i in range(3):
            pbar = R.inflate(R.projective(bar, i), full, surjection)
            if not R.is_isomorphic(R.omega(pbar), pbar):
                ok = False
    ok = ok and (time.time() - t0) < 60
    report(2, "projective halving and kernel self-duality", ok)


def test_criterion_3_brick_atlas():
    ok = True
    for family, d in CORE_PARAMS:
        entries = atlas(family, d, "bar")
        if len(entries) != 15:
            ok = False
        full = build_algebra(family, d, "full")
        for _, m in entries:
            if R.end_dim(m) != 1 \
                    or R.stable_end_dim(R.inflate(m, full)) != 1:
                ok = False
    for family, d in (("I", 2), ("II", 2), ("III", 3)):
        t0 = time.time()
        sweep = completeness_sweep(family, d, max_total_dim=6)
        if not sweep["ok"] or sweep["brick_classes"] != 15:
            ok = False
        if time.time() - t0 >= 300:
            ok = False
    report(3, "brick atlas and completeness sweep", ok)


def test_criterion_4_ext_dichotomy():
    expected = {
        "I": {"M_delta_beta_gamma", "M_gamma_eta_delta",
              "M_eta_delta_beta", "M_beta_gamma_eta"},
        "II": {"M_delta", "M_eta"},
        "III": {"S1"},
    }
    ok = True
    for family, d in CORE_PARAMS:
        nonrigid = {name for name, m in atlas(family, d, "full")
                    if R.ext1(m, m) == 1}
        want = set() if d == 2 else expected[family]
        if nonrigid != want:
            ok = False
        if any(R.ext1(m, m) not in (0, 1)
               for _, m in atlas(family, d, "full")):
            ok = False
    report(4, "self-extension dichotomy", ok)


def _tower_rs():
    out = {}
    for family, d in CORE_PARAMS:
        if d == 2:
            continue
        for r in classify_all(family, d, "full"):
            if r.case == "tower":
                out[(family, d, "full", r.name)] = r
    for r in classify_all("III", 4, "bar"):
        if r.case == "tower":
            out[("III", 4, "bar", r.name)] = r
    return out


def test_criterion_5_periodicity_engine():
    ok = True
    tw = _tower_rs()
    for (family, d, kind, name), rep in tw.items():
        if not rep.ok:
            ok = False
        want = (1 << (d - 1)) - 1 if kind == "full" else 1 << (d - 2)
        if rep.r != want:
            ok = False
        if rep.mod2_ring != "k[t]/(t^%d)" % want:
            ok = False
    # every non-rigid brick must appear
    if len([k for k in tw if k[2] == "full" and k[0] == "I"]) != 8:
        ok = False
    if ("III", 4, "bar", "S1") not in tw:
        ok = False
    report(5, "uniserial periodicity engine", ok)


def test_criterion_6_syzygy_invariance():
    ok = True
    for family, d in CORE_PARAMS:
        for name, m in atlas(family, d, "full"):
            om = R.omega(m)
            if R.stable_end_dim(om) != R.stable_end_dim(m):
                ok = False
            if R.ext1(om, om) != R.ext1(m, m):
                ok = False
    report(6, "syzygy invariance", ok)


def test_criterion_7_witt_layer():
    t0 = time.time()
    ok = p_poly(2, 8).coeffs == (0, 1)
    ok = ok and p_poly(3, 8).coeffs == (0, 254, 0, 1)
    for d in range(2, 9):
        p = p_poly(d, 2 * d + 4)
        deg = (1 << (d - 1)) - 1
        if not (p.degree == deg and p.is_monic()
                and all(c % 2 == 0 for c in p.coeffs[:-1])
                and p.mod2() == tuple([0] * deg + [1])):
            ok = False
    for d in range(2, 6):
        rep = verify_lemma_tower(d)
        if not rep["ok"]:
            ok = False
        if not {8, 16, 32} <= {c["precision"] for c in rep["checks"]}:
            ok = False
    ok = ok and (time.time() - t0) < 30
    report(7, "polynomial tower and trace ring", ok)


def test_criterion_8_cross_layer_consistency():
    ok = True
    for (family, d, kind, name), rep in _tower_rs().items():
        if kind == "full":
            mod2_degree = (1 << (d - 1)) - 1
            if len(p_poly(d, 2 * d + 4).mod2()) - 1 != mod2_degree:
                ok = False
        else:
            mod2_degree = 1 << (d - 2)
            # t * p(t) at level d-1 reduces to t^(2^(d-2)) mod 2
            if len(p_poly(d - 1, 2 * d + 4).mod2()) != mod2_degree:
                ok = False
        if rep.r != mod2_degree:
            ok = False
    report(8, "jet exponent matches mod-2 polynomial degree", ok)
