"""Exact linear algebra over GF(2) using int bitsets.

Matrices are immutable: a tuple of row bitmasks plus an explicit column
count.  Bit j of row i is the entry (i, j).  Vectors are plain ints with
the column count carried by context.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple


class F2Matrix:
    """Bit-packed matrix over the two-element field."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows: Tuple[int, ...] = tuple(rows)
        self.nrows = len(self.rows)
        self.ncols = ncols
        mask = (1 << ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits beyond ncols")

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "F2Matrix":
        return F2Matrix([0] * nrows, ncols)

    @staticmethod
    def identity(n: int) -> "F2Matrix":
        return F2Matrix([1 << i for i in range(n)], n)

    @staticmethod
    def from_lists(entries: Sequence[Sequence[int]]) -> "F2Matrix":
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return F2Matrix(rows, ncols)

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, F2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return F2Matrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                j = (rr & -rr).bit_length() - 1
                acc ^= other.rows[j]
                rr &= rr - 1
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector (bit j of v = coordinate j)."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= (bin(r & v).count("1") & 1) << i
        return out

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            rr = r
            while rr:
                j = (rr & -rr).bit_length() - 1
                cols[j] |= 1 << i
                rr &= rr - 1
        return F2Matrix(cols, self.nrows)

    def column(self, j: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return len(echelon(self.rows))

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def echelon(rows: Iterable[int]) -> List[int]:
    """Reduced row echelon basis of the span, pivots on lowest set bits.

    Rows are kept sorted by pivot position, so the result is canonical
    for a given span.
    """
    basis: List[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
            # re-reduce earlier rows against the new pivot
            low = row & -row
            for i, b in enumerate(basis[:-1]):
                if b & low:
                    basis[i] = b ^ row
    basis.sort(key=lambda r: r & -r)
    return basis


def reduce_vector(v: int, basis: Sequence[int]) -> int:
    """Reduce v against an echelon basis; 0 iff v lies in the span."""
    for b in basis:
        if v & (b & -b):
            v ^= b
    return v


def f2_rank_kernel(m: F2Matrix) -> Tuple[int, List[int]]:
    """Rank and reduced-echelon kernel basis of m (vectors over ncols bits).

    rank + len(kernel) == ncols, and every kernel vector k has m.mul_vec(k) == 0.
    """
    # eliminate on the transpose: unknowns are column coordinates
    n = m.ncols
    # augmented rows: [column-combination tracking | constraint]
    # standard approach: RREF of m, kernel from free columns
    rows = list(m.rows)
    pivots: List[int] = []  # pivot column per eliminated row
    work: List[int] = []
    for row in rows:
        for p, w in zip(pivots, work):
            if (row >> p) & 1:
                row ^= w
        if row:
            p = (row & -row).bit_length() - 1
            for i, w in enumerate(work):
                if (w >> p) & 1:
                    work[i] = w ^ row
            pivots.append(p)
            work.append(row)
    rank = len(work)
    pivot_set = set(pivots)
    kernel: List[int] = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = 1 << j
        for p, w in zip(pivots, work):
            if (w >> j) & 1:
                v |= 1 << p
        kernel.append(v)
    return rank, kernel


def f2_solve(m: F2Matrix, b: int) -> Optional[int]:
    """Some x with m*x = b, or None.  Deterministic: free variables are 0."""
    if b >> m.nrows:
        raise ValueError("b has bits beyond nrows")
    pivots: List[int] = []
    work: List[int] = []
    rhs: List[int] = []
    for i, row in enumerate(m.rows):
        r = (b >> i) & 1
        for j, (p, w) in enumerate(zip(pivots, work)):
            if (row >> p) & 1:
                row ^= w
                r ^= rhs[j]
        if row:
            p = (row & -row).bit_length() - 1
            for j, w in enumerate(work):
                if (w >> p) & 1:
                    work[j] = w ^ row
                    rhs[j] ^= r
            pivots.append(p)
            work.append(row)
            rhs.append(r)
        elif r:
            return None
    x = 0
    for p, r in zip(pivots, rhs):
        if r:
            x |= 1 << p
    return x


def span_dim(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def intersect_echelon(a: Sequence[int], b: Sequence[int], ncols: int) -> List[int]:
    """Echelon basis of the intersection of two spans (Zassenhaus)."""
    # span parts in the low bits (pivoted first), tracking copy of the
    # a-contribution in the high bits
    big = [(r << ncols) | r for r in a] + list(b)
    basis: List[int] = []
    for row in big:
        for bb in basis:
            low = bb & -bb
            if row & low:
                row ^= bb
        if row:
            basis.append(row)
    mask = (1 << ncols) - 1
    out = [r >> ncols for r in basis if not (r & mask)]
    return echelon([r for r in out if r])
