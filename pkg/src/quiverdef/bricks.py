"""The fifteen small bricks of each family, plus an exhaustive sweep.

A brick is a module whose endomorphism ring is just the scalars.  Each
family carries exactly fifteen of them, all of total dimension at most
four: the three simples, uniserial string modules, and two-arrow hybrid
modules.  The sweep enumerates every representation of the quotient
algebra up to a total-dimension bound and certifies that no brick
outside the catalogue exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .f2 import F2Matrix
from .presentations import BoundQuiverAlgebra, SCHEMA_VERSION, build_algebra
from . import reps as R
from .reps import QuiverRep


@dataclass(frozen=True)
class BrickSpec:
    """Construction recipe for one catalogue brick."""

    name: str
    kind: str               # "simple" | "uniserial" | "hybrid"
    vertex: int = -1        # for simples
    vertices: Tuple[int, ...] = ()   # descending factors, top first
    hybrid_kind: str = ""
    z2: str = ""
    z1: str = ""

    def build(self, algebra: BoundQuiverAlgebra) -> QuiverRep:
        if self.kind == "simple":
            return R.simple(algebra, self.vertex)
        if self.kind == "uniserial":
            return R.uniserial_module(algebra, self.vertices)
        return R.hybrid_module(algebra, self.hybrid_kind, self.z2, self.z1)


def _u(name: str, *vertices: int) -> BrickSpec:
    return BrickSpec(name, "uniserial", vertices=tuple(vertices))


_ATLAS: Dict[str, List[BrickSpec]] = {
    "I": [
        BrickSpec("S0", "simple", vertex=0),
        BrickSpec("S1", "simple", vertex=1),
        BrickSpec("S2", "simple", vertex=2),
        _u("M_beta", 1, 0),
        _u("M_gamma", 0, 1),
        _u("M_delta", 0, 2),
        _u("M_eta", 2, 0),
        _u("M_delta_beta", 1, 0, 2),
        _u("M_gamma_eta", 2, 0, 1),
        _u("M_delta_beta_gamma", 0, 1, 0, 2),
        _u("M_gamma_eta_delta", 0, 2, 0, 1),
        _u("M_eta_delta_beta", 1, 0, 2, 0),
        _u("M_beta_gamma_eta", 2, 0, 1, 0),
        BrickSpec("M_gamma_delta_inv", "hybrid",
                  hybrid_kind="hybrid_source", z2="gamma", z1="delta"),
        BrickSpec("M_beta_inv_eta", "hybrid",
                  hybrid_kind="hybrid_target", z2="beta", z1="eta"),
    ],
    "II": [
        BrickSpec("S0", "simple", vertex=0),
        BrickSpec("S1", "simple", vertex=1),
        BrickSpec("S2", "simple", vertex=2),
        _u("M_beta", 0, 1),
        _u("M_gamma", 1, 0),
        _u("M_delta", 1, 2),
        _u("M_eta", 2, 1),
        _u("M_kappa", 0, 2),
        _u("M_lambda", 2, 0),
        BrickSpec("M_beta_kappa_inv", "hybrid",
                  hybrid_kind="hybrid_source", z2="beta", z1="kappa"),
        BrickSpec("M_gamma_delta_inv", "hybrid",
                  hybrid_kind="hybrid_source", z2="gamma", z1="delta"),
        BrickSpec("M_lambda_eta_inv", "hybrid",
                  hybrid_kind="hybrid_source", z2="lambda", z1="eta"),
        BrickSpec("M_gamma_inv_lambda", "hybrid",
                  hybrid_kind="hybrid_target", z2="gamma", z1="lambda"),
        BrickSpec("M_beta_inv_eta", "hybrid",
                  hybrid_kind="hybrid_target", z2="beta", z1="eta"),
        BrickSpec("M_kappa_inv_delta", "hybrid",
                  hybrid_kind="hybrid_target", z2="kappa", z1="delta"),
    ],
}
# Family III shares the quiver of family I away from the loop and has
# the same brick shapes.
_ATLAS["III"] = _ATLAS["I"]


def atlas(family: str, d: int, kind: str = "bar") -> List[Tuple[str, QuiverRep]]:
    algebra = build_algebra(family, d, kind)
    return [(spec.name, spec.build(algebra)) for spec in _ATLAS[family]]


def atlas_report(family: str, d: int, kind: str = "bar") -> dict:
    """Catalogue with basic invariants of each brick."""
    entries = []
    for name, m in atlas(family, d, kind):
        entries.append({
            "name": name,
            "dims": list(m.dims),
            "total_dim": m.total_dim,
            "radical_series": [list(t) for t in m.radical_series()],
            "end_dim": R.end_dim(m),
            "stable_end_dim": R.stable_end_dim(m),
            "ext1_self": R.ext1(m, m),
        })
    return {"schema_version": SCHEMA_VERSION, "family": family, "d": d,
            "kind": kind, "bricks": entries}


# -- exhaustive sweep --------------------------------------------------


def _partitions(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    yield from gen(n, n)


def _nilpotent_jordan(n: int, partition: Tuple[int, ...]) -> F2Matrix:
    rows = [0] * n
    off = 0
    for block in partition:
        for i in range(1, block):
            rows[off + i] = 1 << (off + i - 1)
        off += block
    return F2Matrix(rows, n)


def _all_matrices(nrows: int, ncols: int) -> Iterator[F2Matrix]:
    cells = nrows * ncols
    mask = (1 << ncols) - 1
    for code in range(1 << cells):
        rows = [(code >> (ncols * i)) & mask for i in range(nrows)]
        yield F2Matrix(rows, ncols)


def _arrow_order(algebra: BoundQuiverAlgebra,
                 dims: Sequence[int],
                 fixed: Sequence[str]) -> List[str]:
    """Greedy order maximizing early relation checks, cheap arrows first."""
    remaining = [a for a in algebra.quiver.arrows if a.name not in fixed]
    rel_arrows = [frozenset(n for w in g for n in w)
                  for g in algebra.generators]
    chosen = list(fixed)
    order = []
    while remaining:
        def score(a):
            after = set(chosen) | {a.name}
            checkable = sum(1 for s in rel_arrows if s <= after)
            cells = dims[a.source] * dims[a.target]
            return (-checkable, cells, a.name)
        best = min(remaining, key=score)
        remaining.remove(best)
        chosen.append(best.name)
        order.append(best.name)
    return order


def _relation_ok(algebra: BoundQuiverAlgebra, dims: Sequence[int],
                 assigned: Dict[str, F2Matrix], gen) -> bool:
    out: Optional[F2Matrix] = None
    for word in gen:
        src, tgt = algebra.quiver.word_endpoints(word)
        m = F2Matrix.identity(dims[src])
        for name in reversed(word):
            m = assigned[name] @ m
        out = m if out is None else out + m
    return out is None or out.is_zero()


def enumerate_reps(algebra: BoundQuiverAlgebra,
                   dims: Tuple[int, int, int]) -> Iterator[QuiverRep]:
    """All representations with the given dimension vector.

    A loop arrow is enumerated only over nilpotent Jordan forms: every
    loop lies in the radical (so acts nilpotently), and base change at
    its vertex brings it to Jordan form without constraining the other
    arrows, so every isomorphism class is still reached.
    """
    loop_arrows = [a for a in algebra.quiver.arrows if a.source == a.target]
    rel_arrows = [frozenset(n for w in g for n in w)
                  for g in algebra.generators]

    loop_choices: List[Dict[str, F2Matrix]] = [{}]
    for a in loop_arrows:
        n = dims[a.source]
        loop_choices = [dict(base, **{a.name: _nilpotent_jordan(n, p)})
                        for base in loop_choices
                        for p in _partitions(n)]

    order = _arrow_order(algebra, dims,
                         fixed=[a.name for a in loop_arrows])
    by_name = algebra.quiver.by_name()

    for base in loop_choices:
        assigned = dict(base)

        def dfs(k: int) -> Iterator[QuiverRep]:
            if k == len(order):
                yield QuiverRep(algebra, dims, dict(assigned), check=False)
                return
            name = order[k]
            a = by_name[name]
            known = set(assigned) | {name}
            checks = [g for s, g in zip(rel_arrows, algebra.generators)
                      if name in s and s <= known]
            for mat in _all_matrices(dims[a.target], dims[a.source]):
                assigned[name] = mat
                if all(_relation_ok(algebra, dims, assigned, g)
                       for g in checks):
                    yield from dfs(k + 1)
            del assigned[name]

        # loop relations involving only loops must hold for the base
        loop_names = set(base)
        pre = [g for s, g in zip(rel_arrows, algebra.generators)
               if s <= loop_names]
        if all(_relation_ok(algebra, dims, base, g) for g in pre):
            yield from dfs(0)


def _fast_end_dim(m: QuiverRep) -> int:
    return R.end_dim(m)


def completeness_sweep(family: str, d: int, max_total_dim: int = 6,
                       kind: str = "bar") -> dict:
    """Enumerate every representation with total dimension at most the
    bound, collect the bricks up to isomorphism, and match them against
    the catalogue."""
    algebra = build_algebra(family, d, kind)
    catalogue = atlas(family, d, kind)
    reps_by_bucket: Dict[tuple, List[QuiverRep]] = {}
    classes: List[QuiverRep] = []
    scanned = 0
    bricks_seen = 0
    for total in range(1, max_total_dim + 1):
        for d0 in range(total + 1):
            for d1 in range(total - d0 + 1):
                dims = (d0, d1, total - d0 - d1)
                for m in enumerate_reps(algebra, dims):
                    scanned += 1
                    if _fast_end_dim(m) != 1:
                        continue
                    bricks_seen += 1
                    key = R.fingerprint(m)
                    bucket = reps_by_bucket.setdefault(key, [])
                    if not any(R.is_isomorphic(m, rep) for rep in bucket):
                        bucket.append(m)
                        classes.append(m)
    matches = []
    used = set()
    for cls in classes:
        found = None
        for name, brick in catalogue:
            if name in used:
                continue
            if brick.dims == cls.dims and R.is_isomorphic(cls, brick):
                found = name
                used.add(name)
                break
        matches.append(found)
    in_range = [name for name, brick in catalogue
                if brick.total_dim <= max_total_dim]
    ok = (all(m is not None for m in matches)
          and sorted(used) == sorted(in_range))
    return {
        "schema_version": SCHEMA_VERSION,
        "family": family, "d": d, "kind": kind,
        "max_total_dim": max_total_dim,
        "representations_scanned": scanned,
        "brick_representations": bricks_seen,
        "brick_classes": len(classes),
        "matched_names": sorted(used),
        "unmatched_classes": sum(1 for m in matches if m is None),
        "catalogue_in_range": sorted(in_range),
        "ok": ok,
    }
