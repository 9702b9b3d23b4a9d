"""Quiver representations and the homological toolkit.

A representation assigns an F2 vector space to each vertex and a matrix
to each arrow; every relation of the algebra must evaluate to zero.
Vectors at a vertex are int bitmasks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import f2
from .f2 import F2Matrix
from .presentations import BoundQuiverAlgebra, SCHEMA_VERSION
from .words import WordError, parse_word

Morphism = Tuple[F2Matrix, F2Matrix, F2Matrix]  # one matrix per vertex

DEFAULT_SEED = 1789


class CertificationError(RuntimeError):
    """An isomorphism test could not be decided within certified bounds."""


class QuiverRep:
    """A finite-dimensional representation of a bound quiver algebra."""

    __slots__ = ("algebra", "dims", "arrows", "_rad", "_radser", "_socser")

    def __init__(self, algebra: BoundQuiverAlgebra, dims: Sequence[int],
                 arrows: Dict[str, F2Matrix], check: bool = True):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.arrows = dict(arrows)
        self._rad = None
        self._radser = None
        self._socser = None
        by_name = algebra.quiver.by_name()
        for a in algebra.quiver.arrows:
            m = self.arrows.get(a.name)
            if m is None:
                m = F2Matrix.zeros(self.dims[a.target], self.dims[a.source])
                self.arrows[a.name] = m
            if (m.nrows, m.ncols) != (self.dims[a.target], self.dims[a.source]):
                raise ValueError(f"arrow {a.name}: matrix shape mismatch")
        if check:
            for gen in algebra.generators:
                if not self.evaluate_combination(gen).is_zero():
                    raise ValueError("relation not annihilated by representation")

    # -- evaluation ----------------------------------------------------

    def evaluate_word(self, word: Tuple[str, ...]) -> F2Matrix:
        """Matrix of a written word (rightmost arrow applied first)."""
        src, tgt = self.algebra.quiver.word_endpoints(word)
        m = F2Matrix.identity(self.dims[src])
        for name in reversed(word):
            m = self.arrows[name] @ m
        return m

    def evaluate_combination(self, words) -> F2Matrix:
        words = list(words)
        out = self.evaluate_word(words[0])
        for w in words[1:]:
            out = out + self.evaluate_word(w)
        return out

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    # -- radical / socle ----------------------------------------------

    def radical_subspaces(self) -> List[List[int]]:
        """Echelon basis of rad(M) at each vertex (sum of arrow images)."""
        if self._rad is None:
            spans: List[List[int]] = [[], [], []]
            for a in self.algebra.quiver.arrows:
                m = self.arrows[a.name]
                for j in range(m.ncols):
                    v = m.column(j)
                    if v:
                        spans[a.target].append(v)
            self._rad = [f2.echelon(s) for s in spans]
        return self._rad

    def _step_subspaces(self, spaces: List[List[int]]) -> List[List[int]]:
        spans: List[List[int]] = [[], [], []]
        for a in self.algebra.quiver.arrows:
            m = self.arrows[a.name]
            for v in spaces[a.source]:
                w = m.mul_vec(v)
                if w:
                    spans[a.target].append(w)
        return [f2.echelon(s) for s in spans]

    def radical_power_subspaces(self, n: int) -> List[List[int]]:
        if n < 1:
            return [f2.echelon([1 << i for i in range(self.dims[v])])
                    for v in range(3)]
        spaces = self.radical_subspaces()
        for _ in range(n - 1):
            spaces = self._step_subspaces(spaces)
        return spaces

    def radical_series(self) -> List[Tuple[int, int, int]]:
        """Descending radical layer dimension vectors, top first."""
        if self._radser is None:
            layers = []
            spaces = [f2.echelon([1 << i for i in range(self.dims[v])])
                      for v in range(3)]
            while any(spaces):
                nxt = self._step_subspaces(spaces)
                layers.append(tuple(len(spaces[v]) - len(nxt[v])
                                    for v in range(3)))
                spaces = nxt
            self._radser = layers
        return self._radser

    def socle_series(self) -> List[Tuple[int, int, int]]:
        """Ascending socle layer dimension vectors, socle first."""
        if self._socser is None:
            self._socser = dual(self).radical_series()
        return self._socser

    def top_dims(self) -> Tuple[int, int, int]:
        rad = self.radical_subspaces()
        return tuple(self.dims[v] - len(rad[v]) for v in range(3))

    def is_uniserial(self) -> bool:
        return all(sum(layer) == 1 for layer in self.radical_series())

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "algebra": {"family": self.algebra.family, "d": self.algebra.d,
                        "kind": self.algebra.kind},
            "dims": list(self.dims),
            "arrows": {name: {"rows": list(m.rows), "ncols": m.ncols}
                       for name, m in self.arrows.items()},
        }


def rep_from_json(data: dict, algebra: BoundQuiverAlgebra) -> QuiverRep:
    meta = data["algebra"]
    if (meta["family"], meta["d"], meta["kind"]) != (
            algebra.family, algebra.d, algebra.kind):
        raise ValueError("algebra mismatch in serialized module")
    arrows = {name: F2Matrix(m["rows"], m["ncols"])
              for name, m in data["arrows"].items()}
    return QuiverRep(algebra, data["dims"], arrows)


# -- basic modules -----------------------------------------------------


def simple(algebra: BoundQuiverAlgebra, i: int) -> QuiverRep:
    dims = [0, 0, 0]
    dims[i] = 1
    return QuiverRep(algebra, dims, {})


def projective(algebra: BoundQuiverAlgebra, i: int) -> QuiverRep:
    """P_i: vertex-j space spanned by basis paths from i to j."""
    local: List[List[int]] = [[], [], []]  # global basis index per vertex
    for idx, p in enumerate(algebra.basis):
        if p.source == i:
            local[p.target].append(idx)
    pos = {}
    for v in range(3):
        for k, g in enumerate(local[v]):
            pos[g] = (v, k)
    dims = [len(local[v]) for v in range(3)]
    arrows = {}
    for a in algebra.quiver.arrows:
        rows = [0] * dims[a.target]
        for col, g in enumerate(local[a.source]):
            image = algebra._left_mult[a.name][g]
            while image:
                j = (image & -image).bit_length() - 1
                _, r = pos[j]
                rows[r] |= 1 << col
                image &= image - 1
        arrows[a.name] = F2Matrix(rows, dims[a.source])
    return QuiverRep(algebra, dims, arrows)


def uniserial_module(algebra: BoundQuiverAlgebra,
                     vertices: Sequence[int],
                     arrow_names: Optional[Sequence[str]] = None) -> QuiverRep:
    """The module with basis b_0..b_n, b_j at vertices[j], each arrow
    sending b_j to b_{j+1}.  If arrow_names is omitted the unique arrow
    between consecutive vertices is used."""
    by_pair: Dict[Tuple[int, int], List[str]] = {}
    for a in algebra.quiver.arrows:
        by_pair.setdefault((a.source, a.target), []).append(a.name)
    n = len(vertices) - 1
    if arrow_names is None:
        arrow_names = []
        for j in range(n):
            pair = (vertices[j], vertices[j + 1])
            cands = by_pair.get(pair, [])
            if len(cands) != 1:
                raise ValueError(f"no unique arrow {pair[0]} -> {pair[1]}")
            arrow_names.append(cands[0])
    arrows_by_name = algebra.quiver.by_name()
    local: List[List[int]] = [[], [], []]
    pos = []
    for j, v in enumerate(vertices):
        pos.append((v, len(local[v])))
        local[v].append(j)
    dims = [len(local[v]) for v in range(3)]
    rows: Dict[str, List[int]] = {a.name: [0] * dims[a.target]
                                  for a in algebra.quiver.arrows}
    for j in range(n):
        name = arrow_names[j]
        a = arrows_by_name[name]
        if (a.source, a.target) != (vertices[j], vertices[j + 1]):
            raise ValueError(f"arrow {name} does not join "
                             f"{vertices[j]} -> {vertices[j+1]}")
        _, src_col = pos[j]
        _, tgt_row = pos[j + 1]
        rows[name][tgt_row] |= 1 << src_col
    arrows = {name: F2Matrix(r, dims[arrows_by_name[name].source])
              for name, r in rows.items()}
    return QuiverRep(algebra, dims, arrows)


def hybrid_module(algebra: BoundQuiverAlgebra, kind: str,
                  z2: str, z1: str) -> QuiverRep:
    """Dimension-3 module from two arrows with a common source
    (kind 'hybrid_source', simple top) or common target
    ('hybrid_target', simple socle)."""
    by_name = algebra.quiver.by_name()
    a1, a2 = by_name[z1], by_name[z2]
    if z1 == z2:
        raise ValueError("hybrid word needs two distinct arrows")
    if kind == "hybrid_source":
        if a1.source != a2.source:
            raise ValueError(f"arrows {z1}, {z2} do not share a source")
        verts = (a1.target, a1.source, a2.target)  # b0, b1, b2
        edges = [(z1, 1, 0), (z2, 1, 2)]
    elif kind == "hybrid_target":
        if a1.target != a2.target:
            raise ValueError(f"arrows {z1}, {z2} do not share a target")
        verts = (a1.source, a1.target, a2.source)
        edges = [(z1, 0, 1), (z2, 2, 1)]
    else:
        raise ValueError(f"unknown hybrid kind {kind!r}")
    local: List[List[int]] = [[], [], []]
    pos = []
    for j, v in enumerate(verts):
        pos.append((v, len(local[v])))
        local[v].append(j)
    dims = [len(local[v]) for v in range(3)]
    rows: Dict[str, List[int]] = {a.name: [0] * dims[a.target]
                                  for a in algebra.quiver.arrows}
    for name, jsrc, jtgt in edges:
        rows[name][pos[jtgt][1]] |= 1 << pos[jsrc][1]
    arrows = {name: F2Matrix(r, dims[by_name[name].source])
              for name, r in rows.items()}
    return QuiverRep(algebra, dims, arrows)


def string_module(algebra: BoundQuiverAlgebra, word) -> QuiverRep:
    """Module of a path word (uniserial) or two-letter hybrid word.

    Direct words must be composable and their normal form must lie
    outside the second socle of the algebra (checked as: not inside
    rad^(loewy_length - 2) of the regular module).
    """
    if isinstance(word, str):
        parsed = parse_word(word)
    else:
        parsed = ("direct", tuple(word))
    kind = parsed[0]
    if kind == "direct":
        arrows = parsed[1]
        try:
            src, _ = algebra.quiver.word_endpoints(arrows)
        except ValueError as e:
            raise WordError(str(e), 0) from None
        nf = algebra.nf_bitmask(src, arrows)
        if algebra.in_radical_power(nf, algebra.loewy_length - 2):
            raise ValueError(
                f"word {'*'.join(arrows)} lies in the second socle")
        by_name = algebra.quiver.by_name()
        applied = list(reversed(arrows))  # application order
        vertices = [by_name[applied[0]].source]
        for name in applied:
            vertices.append(by_name[name].target)
        return uniserial_module(algebra, vertices, applied)
    return hybrid_module(algebra, kind, parsed[1], parsed[2])


# -- duality and inflation ---------------------------------------------


def dual(m: QuiverRep) -> QuiverRep:
    """The linear dual, a representation of the opposite algebra."""
    op = m.algebra.opposite()
    arrows = {name: mat.transpose() for name, mat in m.arrows.items()}
    return QuiverRep(op, m.dims, arrows)


def inflate(m: QuiverRep, target: BoundQuiverAlgebra,
            surjection: Optional[Dict[str, list]] = None) -> QuiverRep:
    """View a module over the bar quotient as a module over the full
    algebra.  By default each arrow acts through its own matrix; with a
    surjection (arrow name -> list of bar words) each arrow acts through
    the sum of the word actions.  Relations are re-checked."""
    if (m.algebra.family, m.algebra.d) != (target.family, target.d):
        raise ValueError("inflation requires matching family and d")
    if surjection is None:
        return QuiverRep(target, m.dims, dict(m.arrows))
    mats = {}
    for a in target.quiver.arrows:
        mat = None
        for word in surjection[a.name]:
            ev = m.evaluate_word(word)
            mat = ev if mat is None else mat + ev
        mats[a.name] = mat
    return QuiverRep(target, m.dims, mats)


# -- Hom spaces --------------------------------------------------------


class HomSpace:
    """Canonical basis of intertwiners dom -> cod."""

    def __init__(self, domain: QuiverRep, codomain: QuiverRep):
        if domain.algebra is not codomain.algebra:
            raise ValueError("Hom requires modules over the same algebra")
        self.domain = domain
        self.codomain = codomain
        md, nd = domain.dims, codomain.dims
        self.offsets = []
        off = 0
        for v in range(3):
            self.offsets.append(off)
            off += nd[v] * md[v]
        self.ncoords = off
        rows = []
        for a in domain.algebra.quiver.arrows:
            s, t = a.source, a.target
            A = domain.arrows[a.name]   # md[t] x md[s]
            B = codomain.arrows[a.name]  # nd[t] x nd[s]
            for i in range(nd[t]):
                browi = B.rows[i]
                for j in range(md[s]):
                    row = 0
                    # f_t[i,k] * A[k,j]
                    for k in range(md[t]):
                        if (A.rows[k] >> j) & 1:
                            row ^= 1 << (self.offsets[t] + i * md[t] + k)
                    # B[i,l] * f_s[l,j]
                    ll = browi
                    while ll:
                        l = (ll & -ll).bit_length() - 1
                        row ^= 1 << (self.offsets[s] + l * md[s] + j)
                        ll &= ll - 1
                    if row:
                        rows.append(row)
        _, kernel = f2.f2_rank_kernel(F2Matrix(rows, self.ncoords))
        self.vectors = kernel
        self._factoring: Optional[List[int]] = None

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def unflatten(self, vec: int) -> Morphism:
        mats = []
        md, nd = self.domain.dims, self.codomain.dims
        for v in range(3):
            rows = []
            for i in range(nd[v]):
                row = 0
                for j in range(md[v]):
                    if (vec >> (self.offsets[v] + i * md[v] + j)) & 1:
                        row |= 1 << j
                rows.append(row)
            mats.append(F2Matrix(rows, md[v]))
        return tuple(mats)

    def flatten(self, mor: Morphism) -> int:
        vec = 0
        md, nd = self.domain.dims, self.codomain.dims
        for v in range(3):
            for i in range(nd[v]):
                row = mor[v].rows[i]
                while row:
                    j = (row & -row).bit_length() - 1
                    vec |= 1 << (self.offsets[v] + i * md[v] + j)
                    row &= row - 1
        return vec

    @property
    def basis(self) -> List[Morphism]:
        return [self.unflatten(v) for v in self.vectors]

    @property
    def proj_factoring_subbasis(self) -> List[Morphism]:
        return [self.unflatten(v) for v in self.factoring_vectors()]

    def factoring_vectors(self) -> List[int]:
        """Echelon span of maps factoring through a projective, computed
        as hom(dom, cover(cod)) composed with the cover surjection."""
        if self._factoring is None:
            if self.codomain.is_zero() or self.domain.is_zero():
                self._factoring = []
            else:
                cover, surj = projective_cover(self.codomain)
                hp = HomSpace(self.domain, cover)
                vecs = []
                for raw in hp.vectors:
                    g = hp.unflatten(raw)
                    comp = tuple(surj[v] @ g[v] for v in range(3))
                    vecs.append(self.flatten(comp))
                self._factoring = f2.echelon(vecs)
        return self._factoring


def hom(m: QuiverRep, n: QuiverRep) -> HomSpace:
    return HomSpace(m, n)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f after g."""
    return tuple(f[v] @ g[v] for v in range(3))


def morphism_is_invertible(f: Morphism) -> bool:
    return all(mat.nrows == mat.ncols and mat.is_invertible() for mat in f)


def end_dim(m: QuiverRep) -> int:
    return len(hom(m, m))


def stable_hom(m: QuiverRep, n: QuiverRep) -> Tuple[int, HomSpace]:
    """Dimension of Hom(m, n) modulo maps factoring through projectives,
    plus the ambient HomSpace carrying the factoring subspace."""
    h = hom(m, n)
    return len(h) - len(h.factoring_vectors()), h


def stable_end_dim(m: QuiverRep) -> int:
    return stable_hom(m, m)[0]


# -- covers, syzygies, Ext ---------------------------------------------


def direct_sum(algebra: BoundQuiverAlgebra,
               summands: Sequence[QuiverRep]) -> QuiverRep:
    dims = [sum(s.dims[v] for s in summands) for v in range(3)]
    arrows = {}
    for a in algebra.quiver.arrows:
        rows: List[int] = []
        col_off = 0
        blocks = []
        for s in summands:
            blocks.append((s.arrows[a.name], col_off))
            col_off += s.dims[a.source]
        for mat, off in blocks:
            for r in mat.rows:
                rows.append(r << off)
        arrows[a.name] = F2Matrix(rows, dims[a.source])
    return QuiverRep(algebra, dims, arrows, check=False)


def top_lifts(m: QuiverRep) -> List[Tuple[int, int]]:
    """(vertex, vector) lifts of a basis of top(m)."""
    rad = m.radical_subspaces()
    out = []
    for v in range(3):
        pivots = {(b & -b).bit_length() - 1 for b in rad[v]}
        for j in range(m.dims[v]):
            if j not in pivots:
                out.append((v, 1 << j))
    return out


def projective_cover(m: QuiverRep) -> Tuple[QuiverRep, Morphism]:
    """(cover, surjection) with cover a sum of projectives indexed by
    top(m)."""
    if m.is_zero():
        raise ValueError("zero module has no projective cover here")
    algebra = m.algebra
    gens = top_lifts(m)
    summands = [projective(algebra, v) for v, _ in gens]
    cover = direct_sum(algebra, summands)
    # image of each cover basis vector: path evaluated at the generator
    cols: List[List[int]] = [[], [], []]
    for (v, gvec), summand in zip(gens, summands):
        vecs = _path_action_vectors(m, v, gvec)
        for u in range(3):
            cols[u].extend(vecs[u])
    surj = []
    for u in range(3):
        mat_rows = [0] * m.dims[u]
        for c, vec in enumerate(cols[u]):
            vv = vec
            while vv:
                r = (vv & -vv).bit_length() - 1
                mat_rows[r] |= 1 << c
                vv &= vv - 1
        surj.append(F2Matrix(mat_rows, len(cols[u])))
    surj = tuple(surj)
    for u in range(3):
        if len(f2.echelon([surj[u].column(j) for j in range(surj[u].ncols)])) \
                != m.dims[u]:
            raise AssertionError("cover map is not surjective")
    return cover, surj


def _path_action_vectors(m: QuiverRep, source_vertex: int,
                         gvec: int) -> List[List[int]]:
    """Images in m of each basis path of P(source_vertex) applied to gvec,
    grouped per target vertex in the order used by projective()."""
    algebra = m.algebra
    images: Dict[int, int] = {}
    local: List[List[int]] = [[], [], []]
    for idx, p in enumerate(algebra.basis):
        if p.source != source_vertex:
            continue
        local[p.target].append(idx)
        if not p.word:
            images[idx] = gvec
        else:
            parent = algebra.index[(p.source, p.word[1:])]
            images[idx] = m.arrows[p.word[0]].mul_vec(images[parent])
    return [[images[g] for g in local[v]] for v in range(3)]


def submodule(parent: QuiverRep, spaces: List[List[int]]) -> Tuple[QuiverRep, Morphism]:
    """(sub, inclusion) for arrow-stable subspaces given by echelon bases."""
    algebra = parent.algebra
    dims = [len(spaces[v]) for v in range(3)]
    incl = []
    for v in range(3):
        rows = [0] * parent.dims[v]
        for c, vec in enumerate(spaces[v]):
            vv = vec
            while vv:
                r = (vv & -vv).bit_length() - 1
                rows[r] |= 1 << c
                vv &= vv - 1
        incl.append(F2Matrix(rows, dims[v]))
    incl = tuple(incl)
    arrows = {}
    for a in algebra.quiver.arrows:
        mat = parent.arrows[a.name]
        rows = [0] * dims[a.target]
        for c, vec in enumerate(spaces[a.source]):
            w = mat.mul_vec(vec)
            coords = _coords_in_echelon(w, spaces[a.target])
            for r in coords:
                rows[r] |= 1 << c
        arrows[a.name] = F2Matrix(rows, dims[a.source])
    return QuiverRep(algebra, dims, arrows, check=False), incl


def _coords_in_echelon(vec: int, basis: List[int]) -> List[int]:
    coords = []
    for i, b in enumerate(basis):
        if vec & (b & -b):
            vec ^= b
            coords.append(i)
    if vec:
        raise ValueError("vector not in subspace span")
    return coords


def quotient_module(parent: QuiverRep,
                    spaces: List[List[int]]) -> Tuple[QuiverRep, Morphism]:
    """(quotient, projection) by arrow-stable subspaces."""
    algebra = parent.algebra
    keep: List[List[int]] = []
    for v in range(3):
        pivots = {(b & -b).bit_length() - 1 for b in spaces[v]}
        keep.append([j for j in range(parent.dims[v]) if j not in pivots])
    dims = [len(keep[v]) for v in range(3)]

    def project(v: int, vec: int) -> int:
        vec = f2.reduce_vector(vec, spaces[v])
        out = 0
        for c, j in enumerate(keep[v]):
            if (vec >> j) & 1:
                out |= 1 << c
        return out

    proj = []
    for v in range(3):
        rows = [0] * dims[v]
        for j in range(parent.dims[v]):
            img = project(v, 1 << j)
            while img:
                r = (img & -img).bit_length() - 1
                rows[r] |= 1 << j
                img &= img - 1
        proj.append(F2Matrix(rows, parent.dims[v]))
    proj = tuple(proj)
    arrows = {}
    for a in algebra.quiver.arrows:
        mat = parent.arrows[a.name]
        rows = [0] * dims[a.target]
        for c, j in enumerate(keep[a.source]):
            img = project(a.target, mat.mul_vec(1 << j))
            while img:
                r = (img & -img).bit_length() - 1
                rows[r] |= 1 << c
                img &= img - 1
        arrows[a.name] = F2Matrix(rows, dims[a.source])
    return QuiverRep(algebra, dims, arrows, check=False), proj


def radical_quotient(m: QuiverRep, n: int) -> QuiverRep:
    """m / rad^n(m)."""
    return quotient_module(m, m.radical_power_subspaces(n))[0]


def radical_submodule(m: QuiverRep, n: int) -> QuiverRep:
    """rad^n(m)."""
    return submodule(m, m.radical_power_subspaces(n))[0]


def omega_with_inclusion(m: QuiverRep) -> Tuple[QuiverRep, Morphism]:
    cover, surj = projective_cover(m)
    kernels = []
    for v in range(3):
        _, ker = f2.f2_rank_kernel(surj[v])
        kernels.append(f2.echelon(ker))
    return submodule(cover, kernels)


def omega(m: QuiverRep) -> QuiverRep:
    """Syzygy: kernel of the projective cover map (0 for projectives)."""
    if m.is_zero():
        return m
    return omega_with_inclusion(m)[0]


def omega_inv(m: QuiverRep) -> QuiverRep:
    """Cosyzygy, via duality: D(omega(D m)) over the opposite algebra."""
    if m.is_zero():
        return m
    return dual(omega(dual(m)))


def ext1(m: QuiverRep, n: QuiverRep) -> int:
    """dim Ext^1(m, n) from the projective cover presentation of m."""
    if m.is_zero() or n.is_zero():
        return 0
    cover, _ = projective_cover(m)
    om, incl = omega_with_inclusion(m)
    if om.is_zero():
        return 0
    h1 = HomSpace(om, n)
    hp = HomSpace(cover, n)
    restricted = []
    for raw in hp.vectors:
        g = hp.unflatten(raw)
        restricted.append(h1.flatten(tuple(g[v] @ incl[v] for v in range(3))))
    return len(h1) - f2.span_dim(restricted)


# -- isomorphism testing -----------------------------------------------


def fingerprint(m: QuiverRep):
    return (m.dims, tuple(m.radical_series()), tuple(m.socle_series()))


def is_isomorphic(m: QuiverRep, n: QuiverRep, seed: Optional[int] = None,
                  exhaustive_limit: int = 20,
                  random_tries: int = 400) -> bool:
    if seed is None:
        seed = DEFAULT_SEED
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    if fingerprint(m) != fingerprint(n):
        return False
    h = hom(m, n)
    if len(h) == 0:
        return False
    if end_dim(m) != len(h) or end_dim(n) != len(h):
        return False
    rng = random.Random(seed)
    for _ in range(min(random_tries, 4 << len(h))):
        vec = 0
        for b in h.vectors:
            if rng.getrandbits(1):
                vec ^= b
        if vec and morphism_is_invertible(h.unflatten(vec)):
            return True
    if len(h) <= exhaustive_limit:
        # Gray-code walk over all nonzero combinations
        cur = 0
        for g in range(1, 1 << len(h)):
            bit = (g & -g).bit_length() - 1
            cur ^= h.vectors[bit]
            if cur and morphism_is_invertible(h.unflatten(cur)):
                return True
        return False
    raise CertificationError(
        f"Hom space dimension {len(h)} too large for certified decision")
