"""Truncated 2-adic arithmetic: scalars and polynomials mod 2^m.

Every value carries its precision; mixing precisions raises an error so
that a computation cannot silently downgrade.  The default precision for
a given tower depth d is 2d + 4 bits, enough to separate all the
quantities this package compares.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Sequence, Tuple

DEFAULT_PRECISION_ENV = "QUIVERDEF_PRECISION"


class PrecisionMismatch(ValueError):
    """Two truncated 2-adic values of different precision were combined."""


def default_precision(d: int) -> int:
    env = os.environ.get(DEFAULT_PRECISION_ENV)
    if env is not None:
        m = int(env)
        if m < 1:
            raise ValueError("precision must be a positive bit count")
        return m
    return 2 * d + 4


@dataclass(frozen=True)
class WittScalar:
    """An element of Z/2^precision."""

    value: int
    precision: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % (1 << self.precision))

    def _match(self, other: "WittScalar") -> None:
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"precision {self.precision} vs {other.precision}")

    def __add__(self, other: "WittScalar") -> "WittScalar":
        self._match(other)
        return WittScalar(self.value + other.value, self.precision)

    def __sub__(self, other: "WittScalar") -> "WittScalar":
        self._match(other)
        return WittScalar(self.value - other.value, self.precision)

    def __mul__(self, other: "WittScalar") -> "WittScalar":
        self._match(other)
        return WittScalar(self.value * other.value, self.precision)

    def __neg__(self) -> "WittScalar":
        return WittScalar(-self.value, self.precision)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return self.value % 2 == 1

    def valuation(self) -> int:
        """2-adic valuation, capped at the precision for zero."""
        if self.value == 0:
            return self.precision
        return (self.value & -self.value).bit_length() - 1

    def mod2(self) -> int:
        return self.value & 1

    def signed(self) -> int:
        """Representative in (-2^(m-1), 2^(m-1)]."""
        half = 1 << (self.precision - 1)
        return self.value - (1 << self.precision) if self.value > half \
            else self.value


class WittPoly:
    """Polynomial with WittScalar coefficients, low degree first."""

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Sequence[int], precision: int):
        mod = 1 << precision
        c = [x % mod for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.precision = precision

    @classmethod
    def constant(cls, value: int, precision: int) -> "WittPoly":
        return cls([value], precision)

    @classmethod
    def variable(cls, precision: int) -> "WittPoly":
        return cls([0, 1], precision)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def _match(self, other: "WittPoly") -> None:
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"precision {self.precision} vs {other.precision}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, WittPoly)
                and self.precision == other.precision
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.precision))

    def __add__(self, other: "WittPoly") -> "WittPoly":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return WittPoly([x + y for x, y in zip(a, b)], self.precision)

    def __sub__(self, other: "WittPoly") -> "WittPoly":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return WittPoly([x - y for x, y in zip(a, b)], self.precision)

    def __mul__(self, other: "WittPoly") -> "WittPoly":
        self._match(other)
        if not self.coeffs or not other.coeffs:
            return WittPoly([], self.precision)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return WittPoly(out, self.precision)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> WittScalar:
        v = self.coeffs[k] if k < len(self.coeffs) else 0
        return WittScalar(v, self.precision)

    def mod2(self) -> Tuple[int, ...]:
        """Coefficients reduced mod 2, low degree first, trailing zeros
        kept off."""
        c = [x & 1 for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def evaluate_horner(self, substitute, zero, add, mul):
        """Generic Horner evaluation: substitute is the value of the
        variable, zero the additive identity of the target, add/mul the
        target operations; scalar coefficients are injected via repeated
        addition of the target identity times the coefficient."""
        acc = zero
        for c in reversed(self.coeffs):
            acc = add(mul(acc, substitute), c)
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"WittPoly(0, 2^{self.precision})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return f"WittPoly({' + '.join(terms)}, 2^{self.precision})"


def witt_poly_from_signed(coeffs: Sequence[int], precision: int) -> WittPoly:
    return WittPoly(list(coeffs), precision)
