"""The three families of bound quiver algebras.

Families (I), (II), (III) over F2, each in two versions: the "full"
algebra kQ/I and the "bar" quotient kQ/Ibar.  Words are tuples of arrow
names in written order, rightmost arrow applied first (forced by
composability of the printed relations).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import f2
from .gbasis import CapExceeded, RewriteSystem, word_key
from .words import ARROW_INDEX

Word = Tuple[str, ...]

SCHEMA_VERSION = 1


class UnsupportedParameter(ValueError):
    """Family or d outside the supported range."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    arrows: Tuple[Arrow, ...]
    vertices: Tuple[int, ...] = (0, 1, 2)

    def by_name(self) -> Dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def word_endpoints(self, word: Word) -> Tuple[int, int]:
        """(source, target) of a composable word; raises if not composable."""
        arrows = self.by_name()
        if not word:
            raise ValueError("empty word has no endpoints")
        prev = None
        for name in reversed(word):  # rightmost applied first
            a = arrows[name]
            if prev is not None and a.source != prev:
                raise ValueError(f"word {'*'.join(word)} is not composable")
            prev = a.target
        return arrows[word[-1]].source, arrows[word[0]].target


QUIVERS = {
    "I": Quiver((Arrow("beta", 1, 0), Arrow("gamma", 0, 1),
                 Arrow("delta", 0, 2), Arrow("eta", 2, 0))),
    "II": Quiver((Arrow("beta", 0, 1), Arrow("gamma", 1, 0),
                  Arrow("delta", 1, 2), Arrow("eta", 2, 1),
                  Arrow("kappa", 0, 2), Arrow("lambda", 2, 0))),
    "III": Quiver((Arrow("alpha", 1, 1), Arrow("beta", 1, 0),
                   Arrow("gamma", 0, 1), Arrow("delta", 0, 2),
                   Arrow("eta", 2, 0))),
}

SUPPORTED_D = {"I": range(2, 7), "II": range(2, 7), "III": range(3, 7)}

KINDS = ("full", "bar")


def _w(text: str) -> Word:
    return tuple(text.split())


def _rep(word: Word, n: int) -> Word:
    return word * n


def relation_generators(family: str, d: int, kind: str) -> List[FrozenSet[Word]]:
    """The printed generators of I (kind 'full') or Ibar (kind 'bar')."""
    m1 = 2 ** (d - 1) - 1
    m2 = 2 ** (d - 2)
    if family == "I":
        if kind == "full":
            gens = [
                {_w("beta gamma beta"),
                 _w("eta delta beta") + _rep(_w("gamma eta delta beta"), m1)},
                {_w("gamma beta gamma"),
                 _w("gamma eta delta") + _rep(_w("beta gamma eta delta"), m1)},
                {_w("eta delta eta"),
                 _w("beta gamma eta") + _rep(_w("delta beta gamma eta"), m1)},
                {_w("delta eta delta"),
                 _w("delta beta gamma") + _rep(_w("eta delta beta gamma"), m1)},
                {_w("delta beta gamma beta")},
                {_w("gamma eta delta eta")},
            ]
        else:
            gens = [
                {_w("gamma beta")},
                {_w("delta eta")},
                {_rep(_w("eta delta beta gamma"), m2),
                 _rep(_w("beta gamma eta delta"), m2)},
            ]
    elif family == "II":
        if kind == "full":
            gens = [
                {_w("delta beta"), _w("kappa lambda kappa")},
                {_w("gamma eta"), _w("lambda kappa lambda")},
                {_w("lambda delta"), _w("gamma beta gamma")},
                {_w("eta kappa"), _w("beta gamma beta")},
                {_w("beta lambda"), ("eta",) + _rep(_w("delta eta"), m1)},
                {_w("kappa gamma"), ("delta",) + _rep(_w("eta delta"), m1)},
                {_w("delta beta gamma")},
                {_w("gamma eta delta")},
                {_w("eta kappa lambda")},
            ]
        else:
            gens = [
                {_w("delta beta")}, {_w("lambda delta")}, {_w("beta lambda")},
                {_w("kappa gamma")}, {_w("eta kappa")}, {_w("gamma eta")},
                {_w("gamma beta"), _w("lambda kappa")},
                {_w("kappa lambda"), _rep(_w("delta eta"), m2)},
                {_rep(_w("eta delta"), m2), _w("beta gamma")},
            ]
    elif family == "III":
        if kind == "full":
            gens = [
                {_w("beta alpha"),
                 _w("eta delta beta") + _w("gamma eta delta beta")},
                {_w("alpha gamma"),
                 _w("gamma eta delta") + _w("beta gamma eta delta")},
                {_w("delta eta delta"),
                 _w("delta beta gamma") + _w("eta delta beta gamma")},
                {_w("eta delta eta"),
                 _w("beta gamma eta") + _w("delta beta gamma eta")},
                {_w("gamma beta"), _rep(("alpha",), m1)},
                {_w("beta alpha alpha")},
                {_w("delta eta delta beta")},
            ]
        else:
            gens = [
                {_w("beta alpha")}, {_w("alpha gamma")}, {_w("gamma beta")},
                {_w("delta eta")},
                {_w("eta delta beta gamma"), _w("beta gamma eta delta")},
                {_rep(("alpha",), m2), _w("gamma eta delta beta")},
            ]
    else:
        raise UnsupportedParameter(f"unknown family {family!r}")
    return [frozenset(g) for g in gens]


def decomposition_matrix(family: str, d: int) -> List[List[int]]:
    """Rows are ordinary characters, columns the three modular simples;
    the last row type is repeated 2^(d-1)-1 times."""
    _check_supported(family, d)
    base = {
        "I": [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1],
              [0, 1, 0], [0, 0, 1]],
        "II": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1],
               [1, 1, 0], [1, 0, 1]],
        "III": [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1],
                [2, 1, 1], [0, 0, 1]],
    }[family]
    repeated = {"I": [2, 1, 1], "II": [0, 1, 1], "III": [0, 1, 0]}[family]
    return base + [list(repeated)] * (2 ** (d - 1) - 1)


def cartan_from_decomposition(family: str, d: int) -> List[List[int]]:
    dm = decomposition_matrix(family, d)
    return [[sum(row[i] * row[j] for row in dm) for j in range(3)]
            for i in range(3)]


def loewy_bound(family: str, d: int) -> int:
    if family == "I":
        return 2 ** (d + 1) + 1
    if family == "II":
        return 2 ** d + 1
    return max(9, 2 ** (d - 1) + 1)


def _check_supported(family: str, d: int):
    if family not in SUPPORTED_D:
        raise UnsupportedParameter(f"unknown family {family!r}")
    if d not in SUPPORTED_D[family]:
        raise UnsupportedParameter(f"family {family}: d={d} unsupported")


@dataclass(frozen=True)
class BasisPath:
    source: int
    word: Word  # empty word = trivial path e_source
    target: int

    def label(self) -> str:
        return "*".join(self.word) if self.word else f"e{self.source}"


class BoundQuiverAlgebra:
    """A bound quiver algebra with normal-word basis and cached products.

    Elements are F2 combinations of basis paths, represented as int
    bitmasks over the basis index.
    """

    def __init__(self, family: str, d: int, kind: str):
        _check_supported(family, d)
        if kind not in KINDS:
            raise UnsupportedParameter(f"unknown kind {kind!r}")
        self.family = family
        self.d = d
        self.kind = kind
        self.quiver = QUIVERS[family]
        self.generators = relation_generators(family, d, kind)
        for g in self.generators:
            endpoints = {self.quiver.word_endpoints(w) for w in g}
            if len(endpoints) != 1:
                raise ValueError("relation terms do not share endpoints")
        self._build()
        self._mult_cache: Dict[Tuple[int, int], int] = {}
        self._op: Optional["BoundQuiverAlgebra"] = None

    # -- construction -------------------------------------------------

    def _build(self):
        hard_cap = 4 * (2 ** (self.d + 1) + 1)
        # intermediate completion rules may be much longer than anything
        # that survives interreduction, so the rewriter gets headroom
        self.rewriter = RewriteSystem(16 * hard_cap)
        self.rewriter.complete(self.generators)
        self.basis = self._normal_paths(hard_cap)
        self.dim = len(self.basis)
        self.index = {(p.source, p.word): i for i, p in enumerate(self.basis)}
        self.idempotents = tuple(self.index[(v, ())] for v in (0, 1, 2))
        self._left_mult = self._left_mult_tables()
        self._radical_filtration()

    def _normal_paths(self, hard_cap: int) -> List[BasisPath]:
        arrows = self.quiver.arrows
        paths: List[BasisPath] = [BasisPath(v, (), v) for v in (0, 1, 2)]
        frontier = list(paths)
        while frontier:
            new: List[BasisPath] = []
            for p in frontier:
                for a in arrows:
                    if a.source != p.target:
                        continue
                    w = (a.name,) + p.word
                    if self.rewriter.is_normal(w):
                        new.append(BasisPath(p.source, w, a.target))
            if new and len(new[0].word) > hard_cap:
                raise CapExceeded("normal words exceed hard cap")
            paths.extend(new)
            frontier = new
        paths.sort(key=lambda p: (word_key(p.word), p.source))
        return paths

    def nf_bitmask(self, source: int, word: Word) -> int:
        """Normal form of a path as a bitmask over the basis."""
        if not word:
            return 1 << self.index[(source, ())]
        out = 0
        for w in self.rewriter.reduce({word}):
            out ^= 1 << self.index[(self.quiver.word_endpoints(w)[0], w)]
        return out

    def _left_mult_tables(self) -> Dict[str, List[int]]:
        tables: Dict[str, List[int]] = {}
        for a in self.quiver.arrows:
            col = []
            for p in self.basis:
                if p.target != a.source:
                    col.append(0)
                else:
                    col.append(self.nf_bitmask(p.source, (a.name,) + p.word))
            tables[a.name] = col
        return tables

    def apply_left(self, arrow: str, vec: int) -> int:
        table = self._left_mult[arrow]
        out = 0
        while vec:
            j = (vec & -vec).bit_length() - 1
            out ^= table[j]
            vec &= vec - 1
        return out

    def _radical_filtration(self):
        """Echelon bases of rad^n of the regular module, n = 0, 1, ..."""
        full = [1 << i for i in range(self.dim)]
        rad1 = [1 << i for i, p in enumerate(self.basis) if p.word]
        filtration = [f2.echelon(full), f2.echelon(rad1)]
        while filtration[-1]:
            prev = filtration[-1]
            nxt = []
            for a in self.quiver.arrows:
                for v in prev:
                    w = self.apply_left(a.name, v)
                    if w:
                        nxt.append(w)
            filtration.append(f2.echelon(nxt))
        self.radical_filtration = filtration
        self.loewy_length = len(filtration) - 1

    # -- products ------------------------------------------------------

    def mult_basis(self, i: int, j: int) -> int:
        """Product basis[i] * basis[j] (basis[j] applied first)."""
        key = (i, j)
        cached = self._mult_cache.get(key)
        if cached is not None:
            return cached
        p, q = self.basis[i], self.basis[j]
        if q.target != p.source:
            out = 0
        else:
            out = self.nf_bitmask(q.source, p.word + q.word)
        self._mult_cache[key] = out
        return out

    def mult(self, x: int, y: int) -> int:
        out = 0
        xx = x
        while xx:
            i = (xx & -xx).bit_length() - 1
            yy = y
            while yy:
                j = (yy & -yy).bit_length() - 1
                out ^= self.mult_basis(i, j)
                yy &= yy - 1
            xx &= xx - 1
        return out

    # -- derived data --------------------------------------------------

    def cartan(self) -> List[List[int]]:
        """cartan()[i][j] = number of basis paths from vertex i to j."""
        c = [[0] * 3 for _ in range(3)]
        for p in self.basis:
            c[p.source][p.target] += 1
        return c

    def projective_dims(self, i: int) -> Tuple[int, int, int]:
        dims = [0, 0, 0]
        for p in self.basis:
            if p.source == i:
                dims[p.target] += 1
        return tuple(dims)

    def in_radical_power(self, vec: int, n: int) -> bool:
        if n >= len(self.radical_filtration):
            return vec == 0
        return f2.reduce_vector(vec, self.radical_filtration[n]) == 0

    def opposite(self) -> "BoundQuiverAlgebra":
        """The opposite algebra, built from the reversed presentation."""
        if self._op is None:
            op = object.__new__(BoundQuiverAlgebra)
            op.family = self.family
            op.d = self.d
            op.kind = self.kind + "-op"
            op.quiver = Quiver(tuple(Arrow(a.name, a.target, a.source)
                                     for a in self.quiver.arrows))
            op.generators = [frozenset(tuple(reversed(w)) for w in g)
                             for g in self.generators]
            op._build()
            op._mult_cache = {}
            op._op = self
            if op.dim != self.dim:
                raise AssertionError("opposite algebra dimension mismatch")
            self._op = op
        return self._op

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "family": self.family,
            "d": self.d,
            "kind": self.kind,
            "dim": self.dim,
            "basis": [{"source": p.source, "target": p.target,
                       "arrows": list(p.word)} for p in self.basis],
            "cartan": self.cartan(),
            "loewy_length": self.loewy_length,
        }


@lru_cache(maxsize=None)
def build_algebra(family: str, d: int, kind: str) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(family, d, kind)


def quotient_surjection_words(family: str, d: int) -> Dict[str, List[Word]]:
    """Arrow images of a surjection full -> bar under which the kernel
    of the induced map on each projective is the inflated bar
    projective.

    The arrow-identity map is a surjective algebra homomorphism but does
    not have this kernel property for families I and III; it acquires it
    after adding one long correction path to selected arrows.  The
    corrections below were found by exhaustive search at small d and
    verified at every supported d.
    """
    _check_supported(family, d)
    quiver = QUIVERS[family]
    images: Dict[str, List[Word]] = {a.name: [(a.name,)]
                                     for a in quiver.arrows}
    m2 = 1 << (d - 2)
    if family == "I":
        images["gamma"].append(
            ("gamma", "eta", "delta", "beta") * (m2 - 1)
            + ("gamma", "eta", "delta"))
        images["eta"].append(
            ("beta", "gamma", "eta", "delta") * (m2 - 1)
            + ("beta", "gamma", "eta"))
    elif family == "III":
        images["eta"].append(("beta", "gamma", "eta"))
    return images


def check_pi_lambda(family: str, d: int) -> dict:
    """Verify the arrow-identity map induces a surjection full -> bar.

    Every generator of I must reduce to zero modulo Ibar; if not, retry
    with each vertex-fixing quiver automorphism (arrow permutations that
    preserve endpoints).  Returns the induced basis-to-basis matrix and
    the number of killed dimensions.
    """
    lam = build_algebra(family, d, "full")
    bar = build_algebra(family, d, "bar")
    autos = _vertex_fixing_automorphisms(lam.quiver)
    for perm in autos:
        ok = True
        for g in lam.generators:
            image = 0
            for w in g:
                mapped = tuple(perm[a] for a in w)
                image ^= bar.nf_bitmask(bar.quiver.word_endpoints(mapped)[0],
                                        mapped)
            if image:
                ok = False
                break
        if not ok:
            continue
        rows = []
        for p in lam.basis:
            mapped = tuple(perm[a] for a in p.word)
            rows.append(bar.nf_bitmask(p.source, mapped) if p.word
                        else 1 << bar.index[(p.source, ())])
        matrix = f2.F2Matrix(rows, bar.dim).transpose()
        rank = matrix.rank()
        if rank != bar.dim:
            raise AssertionError("pi_lambda image is not all of the quotient")
        return {
            "automorphism": {k: v for k, v in perm.items() if k != v},
            "matrix": matrix,
            "killed": lam.dim - rank,
        }
    raise AssertionError("no vertex-fixing automorphism makes pi well-defined")


def _vertex_fixing_automorphisms(quiver: Quiver) -> List[Dict[str, str]]:
    """Arrow permutations preserving (source, target), identity first."""
    from itertools import permutations as _perms

    groups: Dict[Tuple[int, int], List[str]] = {}
    for a in quiver.arrows:
        groups.setdefault((a.source, a.target), []).append(a.name)
    perms: List[Dict[str, str]] = [{}]
    for names in groups.values():
        new = []
        for assignment in _perms(names):
            for base in perms:
                p = dict(base)
                p.update(dict(zip(names, assignment)))
                new.append(p)
        perms = new
    perms.sort(key=lambda p: sum(k != v for k, v in p.items()))
    return perms
