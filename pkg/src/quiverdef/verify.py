"""Named verification suites over ranges of the parameter d.

Each check yields a SuiteResult with a neutral claim string, the
parameters it ran at, and a pass flag; the CLI renders these and exits
nonzero if any fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from .bricks import atlas, completeness_sweep
from .deformation import classify_all
from .presentations import (SCHEMA_VERSION, SUPPORTED_D, build_algebra,
                            cartan_from_decomposition, check_pi_lambda,
                            quotient_surjection_words)
from . import reps as R
from .wittrings import p_poly, verify_lemma_tower

SUITES = ("presentations", "homological", "atlas", "deformation", "witt")


@dataclass
class SuiteResult:
    suite: str
    check: str
    claim: str
    params: Dict[str, object]
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "check": self.check,
                "claim": self.claim, "params": dict(self.params),
                "passed": self.passed, "detail": self.detail}


def _family_ds(d_range: Tuple[int, int]) -> Iterator[Tuple[str, int]]:
    lo, hi = d_range
    for family in ("I", "II", "III"):
        for d in range(lo, hi + 1):
            if d in SUPPORTED_D[family]:
                yield family, d


def projective_radical_lengths(family: str, d: int) -> Tuple[int, int, int]:
    if family == "I":
        n = (1 << (d + 1)) + 1
        return (n, n, n)
    if family == "II":
        n = (1 << d) + 1
        return (5, n, n)
    return (9, 9 if d == 3 else (1 << (d - 1)) + 1, 9)


def suite_presentations(d_range) -> Iterator[SuiteResult]:
    for family, d in _family_ds(d_range):
        full = build_algebra(family, d, "full")
        bar = build_algebra(family, d, "bar")
        yield SuiteResult(
            "presentations", "cartan",
            "Cartan matrix equals D^T D for the decomposition matrix",
            {"family": family, "d": d},
            full.cartan() == cartan_from_decomposition(family, d))
        expected = projective_radical_lengths(family, d)
        got = tuple(len(R.projective(full, i).radical_series())
                    for i in range(3))
        yield SuiteResult(
            "presentations", "radical_lengths",
            "projective radical series lengths match the family formulas",
            {"family": family, "d": d, "expected": list(expected)},
            got == expected, detail=str(got))
        yield SuiteResult(
            "presentations", "dim_halving",
            "the quotient algebra has exactly half the dimension",
            {"family": family, "d": d},
            full.dim == 2 * bar.dim)
        info = check_pi_lambda(family, d)
        yield SuiteResult(
            "presentations", "quotient_map",
            "the projection onto the quotient algebra kills half a basis",
            {"family": family, "d": d},
            info["killed"] == bar.dim)


def suite_homological(d_range) -> Iterator[SuiteResult]:
    for family, d in _family_ds(d_range):
        full = build_algebra(family, d, "full")
        bar = build_algebra(family, d, "bar")
        surjection = quotient_surjection_words(family, d)
        for i in range(3):
            pbar = R.inflate(R.projective(bar, i), full, surjection)
            ker = R.omega(pbar)
            yield SuiteResult(
                "homological", "projective_kernel",
                "the kernel of the cover of the inflated quotient "
                "projective is again the inflated quotient projective",
                {"family": family, "d": d, "vertex": i},
                R.is_isomorphic(ker, pbar))
        for name, m in atlas(family, d, "full"):
            om = R.omega(m)
            ok = (R.stable_end_dim(om) == R.stable_end_dim(m)
                  and R.ext1(om, om) == R.ext1(m, m))
            yield SuiteResult(
                "homological", "syzygy_invariance",
                "stable End and self-extension dims survive the syzygy",
                {"family": family, "d": d, "brick": name}, ok)


def suite_atlas(d_range) -> Iterator[SuiteResult]:
    for family, d in _family_ds(d_range):
        bar_atlas = atlas(family, d, "bar")
        full = build_algebra(family, d, "full")
        full_atlas = dict(atlas(family, d, "full"))
        yield SuiteResult(
            "atlas", "count", "the catalogue has exactly 15 bricks",
            {"family": family, "d": d}, len(bar_atlas) == 15)
        all_end = all(R.end_dim(m) == 1 for _, m in bar_atlas)
        yield SuiteResult(
            "atlas", "end_dims",
            "every catalogue module is a brick over the quotient algebra",
            {"family": family, "d": d}, all_end)
        ok_infl = True
        for name, m in bar_atlas:
            lifted = R.inflate(m, full)
            if not R.is_isomorphic(lifted, full_atlas[name]) \
                    or R.stable_end_dim(lifted) != 1:
                ok_infl = False
        yield SuiteResult(
            "atlas", "inflation",
            "inflated bricks match their full-algebra counterparts with "
            "stable End of dimension 1",
            {"family": family, "d": d}, ok_infl)
        sweep = completeness_sweep(family, d, max_total_dim=4)
        yield SuiteResult(
            "atlas", "sweep_dim4",
            "no bricks outside the catalogue up to total dimension 4",
            {"family": family, "d": d,
             "scanned": sweep["representations_scanned"]}, sweep["ok"])


def suite_deformation(d_range) -> Iterator[SuiteResult]:
    for family, d in _family_ds(d_range):
        reports = classify_all(family, d, "full")
        yield SuiteResult(
            "deformation", "full_classification",
            "every brick classifies as rigid or as a k[t]/(t^r) jet with "
            "all periodicity checks passing",
            {"family": family, "d": d,
             "towers": [r.name for r in reports if r.case == "tower"]},
            all(r.ok for r in reports))
        nonrigid = sorted(r.name for r in reports if r.ext1_self == 1)
        expected = expected_nonrigid(family, d)
        yield SuiteResult(
            "deformation", "ext_dichotomy",
            "the non-rigid bricks are exactly the expected ones",
            {"family": family, "d": d, "expected": expected},
            nonrigid == expected, detail=str(nonrigid))
        if family == "III":
            bar_reports = classify_all(family, d, "bar")
            yield SuiteResult(
                "deformation", "bar_classification",
                "over the quotient algebra the loop simple is the only "
                "jet case, with r = 2^(d-2)",
                {"family": family, "d": d},
                all(r.ok for r in bar_reports)
                and [r.r for r in bar_reports if r.case == "tower"]
                == [1 << (d - 2)])


def expected_nonrigid(family: str, d: int) -> List[str]:
    if d == 2:
        return []
    if family == "II":
        return ["M_delta", "M_eta"]
    if family == "III":
        return ["S1"]
    return sorted(["M_delta_beta_gamma", "M_gamma_eta_delta",
                   "M_eta_delta_beta", "M_beta_gamma_eta"])


def suite_witt(d_range) -> Iterator[SuiteResult]:
    lo, hi = d_range
    p4 = p_poly(3, 8)
    yield SuiteResult(
        "witt", "p4_identity", "the level-4 polynomial is t^3 - 2t",
        {}, tuple(p4.coeffs) == (0, 254, 0, 1))
    yield SuiteResult(
        "witt", "p3_identity", "the level-3 polynomial is t",
        {}, tuple(p_poly(2, 8).coeffs) == (0, 1))
    for d in range(max(lo, 2), min(hi, 8) + 1):
        p = p_poly(d, 2 * d + 4)
        deg = (1 << (d - 1)) - 1
        yield SuiteResult(
            "witt", "tower_shape",
            "degree 2^(d-1)-1, monic, even lower coefficients, mod-2 "
            "reduction a pure power",
            {"d": d},
            p.degree == deg and p.is_monic()
            and all(c % 2 == 0 for c in p.coeffs[:-1])
            and p.mod2() == tuple([0] * deg + [1]))
    for d in range(max(lo, 2), min(hi, 5) + 1):
        rep = verify_lemma_tower(d)
        yield SuiteResult(
            "witt", "trace_ring",
            "the polynomial kills the trace generator and the power "
            "basis is unimodular, consistently across precisions",
            {"d": d, "precisions": rep["precisions"]}, rep["ok"])


def run_suites(names: List[str], d_range: Tuple[int, int]
               ) -> List[SuiteResult]:
    runners = {
        "presentations": suite_presentations,
        "homological": suite_homological,
        "atlas": suite_atlas,
        "deformation": suite_deformation,
        "witt": suite_witt,
    }
    out: List[SuiteResult] = []
    for name in names:
        out.extend(runners[name](d_range))
    return out


def results_to_json(results: List[SuiteResult]) -> dict:
    return {"schema_version": SCHEMA_VERSION,
            "passed": all(r.passed for r in results),
            "results": [r.to_json() for r in results]}
