"""Cyclic-group trace rings and the minimal-polynomial tower.

For a cycle of order 2^d, the ring of inversion-invariant elements of
the group ring over Z/2^m has basis b_0 = 1, b_j = s^j + s^-j for
0 < j < 2^(d-1), and b_h = s^h at h = 2^(d-1).  Dividing by the two
trace relations T and sT leaves a quotient of rank 2^(d-1) - 1 in which
b_1 satisfies the polynomial p(t) built from the tower m_2 = t,
m_l = m_{l-1}^2 - 2.  This module constructs the quotient, the
polynomial, and verifies the identity together with the unit
determinant of the power basis.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .f2 import F2Matrix
from .presentations import SCHEMA_VERSION
from .witt import WittPoly, default_precision


def tower_polynomial(level: int, precision: int) -> WittPoly:
    """m_level of the tower m_2 = t, m_l = m_{l-1}^2 - 2."""
    if level < 2:
        raise ValueError("tower starts at level 2")
    m = WittPoly.variable(precision)
    two = WittPoly.constant(2, precision)
    for _ in range(level - 2):
        m = m * m - two
    return m


def p_poly(d: int, precision: int) -> WittPoly:
    """Product of the tower levels 2..d; degree 2^(d-1) - 1, monic."""
    if d < 2:
        raise ValueError("d must be at least 2")
    out = WittPoly.constant(1, precision)
    for level in range(2, d + 1):
        out = out * tower_polynomial(level, precision)
    return out


def mod2_reduction(p: WittPoly) -> Tuple[int, ...]:
    return p.mod2()


class SPrime:
    """The rank 2^(d-1) - 1 trace-ring quotient over Z/2^precision.

    Elements are coefficient tuples over the images of b_0..b_{h-2},
    h = 2^(d-1).  Multiplication lifts to the full group ring of the
    cycle of order 2^d, convolves, and reduces back through the two
    eliminated basis vectors b_h and b_{h-1}.
    """

    def __init__(self, d: int, precision: int):
        if d < 2:
            raise ValueError("d must be at least 2")
        self.d = d
        self.precision = precision
        self.mod = 1 << precision
        self.h = 1 << (d - 1)
        self.order = 1 << d
        self.rank = self.h - 1
        # b_h = -(b_0 + sum of b_j for even j strictly between 0 and h)
        subst_h = [0] * (self.h + 1)
        subst_h[0] = -1 % self.mod
        for j in range(2, self.h, 2):
            subst_h[j] = -1 % self.mod
        self._subst_h = subst_h
        # b_{h-1} = -(sum of b_j for odd j strictly below h-1)
        subst_h1 = [0] * (self.h + 1)
        for j in range(1, self.h - 1, 2):
            subst_h1[j] = -1 % self.mod
        self._subst_h1 = subst_h1

    # elements are tuples of length self.rank

    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def one(self) -> Tuple[int, ...]:
        return tuple(1 if i == 0 else 0 for i in range(self.rank))

    def scalar(self, c: int) -> Tuple[int, ...]:
        return tuple(c % self.mod if i == 0 else 0
                     for i in range(self.rank))

    def generator(self) -> Tuple[int, ...]:
        """Image of b_1 = s + s^-1 (zero in the degenerate d = 2 case)."""
        if self.rank == 1:
            return self.zero()
        return tuple(1 if i == 1 else 0 for i in range(self.rank))

    def add(self, x, y) -> Tuple[int, ...]:
        return tuple((a + b) % self.mod for a, b in zip(x, y))

    def _reduce_full(self, coeffs: List[int]) -> Tuple[int, ...]:
        """Reduce b-basis coefficients (length h + 1) to the quotient."""
        c = list(coeffs)
        for subst, idx in ((self._subst_h, self.h),
                           (self._subst_h1, self.h - 1)):
            if c[idx]:
                k = c[idx]
                c[idx] = 0
                for j, v in enumerate(subst):
                    c[j] = (c[j] + k * v) % self.mod
        assert c[self.h] == 0 and c[self.h - 1] == 0
        return tuple(v % self.mod for v in c[: self.rank])

    def mul(self, x, y) -> Tuple[int, ...]:
        n = self.order
        gx = [0] * n
        gy = [0] * n
        for g, c in ((gx, x), (gy, y)):
            g[0] = c[0]
            for j in range(1, self.rank):
                g[j] = (g[j] + c[j]) % self.mod
                g[n - j] = (g[n - j] + c[j]) % self.mod
        conv = [0] * n
        for i, a in enumerate(gx):
            if a == 0:
                continue
            for j, b in enumerate(gy):
                if b:
                    conv[(i + j) % n] = (conv[(i + j) % n] + a * b) % self.mod
        full = [conv[0]] + [
            conv[j] for j in range(1, self.h)] + [conv[self.h]]
        # sanity: the product of invariant elements is invariant
        for j in range(1, self.h):
            assert conv[j] == conv[n - j]
        return self._reduce_full(full)

    def power_basis_matrix(self) -> List[Tuple[int, ...]]:
        """Rows 1, s, s^2, ..., s^(rank-1) for s the image of b_1."""
        s = self.generator()
        rows = [self.one()]
        for _ in range(self.rank - 1):
            rows.append(self.mul(rows[-1], s))
        return rows


def verify_lemma_tower(d: int, precision: int = None) -> dict:
    """Check that p vanishes at the trace generator and that the power
    basis of the quotient is unimodular mod 2, at several precisions."""
    base = precision if precision is not None else default_precision(d)
    precisions = sorted({base, 8, 16, 32})
    report: dict = {"schema_version": SCHEMA_VERSION, "d": d,
                    "precisions": precisions, "checks": []}
    ok = True
    p_low = None
    for m in precisions:
        p = p_poly(d, m)
        entry: Dict[str, object] = {"precision": m}
        entry["degree_ok"] = (p.degree == (1 << (d - 1)) - 1)
        entry["monic"] = p.is_monic()
        entry["even_lower_coeffs"] = all(
            c % 2 == 0 for c in p.coeffs[:-1])
        entry["mod2_is_power"] = (
            p.mod2() == tuple([0] * p.degree + [1]))
        ring = SPrime(d, m)
        s = ring.generator()
        val = p.evaluate_horner(
            s, ring.zero(),
            lambda acc, c: ring.add(acc, ring.scalar(c)),
            lambda acc, t: ring.mul(acc, t))
        entry["p_at_generator_zero"] = all(v == 0 for v in val)
        rows = ring.power_basis_matrix()
        bits = [sum((c & 1) << j for j, c in enumerate(r)) for r in rows]
        full = F2Matrix(bits, ring.rank).rank() == ring.rank
        entry["power_basis_unimodular"] = full
        entry["rank"] = ring.rank
        if p_low is not None:
            # lower-precision run must agree with this one reduced
            entry["consistent_with_lower"] = all(
                (a % (1 << p_low.precision)) == b
                for a, b in zip(p.coeffs, p_low.coeffs)) and \
                len(p.coeffs) == len(p_low.coeffs)
        p_low = p
        entry_ok = all(v for k, v in entry.items()
                       if isinstance(v, bool))
        entry["ok"] = entry_ok
        ok = ok and entry_ok
        report["checks"].append(entry)
    report["ok"] = ok
    return report
