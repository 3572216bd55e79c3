"""Dense square matrices over the Laurent ring.

``ScaledMatrix`` pairs a matrix with a scalar denominator so that matrices
with entries like 1/(1 - t_i) can be compared exactly by cross-multiplying,
without ever leaving the Laurent ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionError, UnsupportedSizeError, VariableCountError
from .laurent import LaurentPoly, poly_sum

MAX_DET_SIZE = 8


class LaurentMatrix:
    """An n x n grid of LaurentPoly entries sharing one variable count."""

    __slots__ = ("n", "nvars", "rows")

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise DimensionError("empty matrix")
        if any(len(r) != n for r in rows):
            raise DimensionError("matrix is not square")
        nvars = rows[0][0].nvars
        for r in rows:
            for p in r:
                if p.nvars != nvars:
                    raise VariableCountError("entries with differing variable counts")
        self.n = n
        self.nvars = nvars
        self.rows = rows

    @classmethod
    def identity(cls, n: int, nvars: int) -> "LaurentMatrix":
        one = LaurentPoly.const(1, nvars)
        zero = LaurentPoly.zero(nvars)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_ints(cls, rows, nvars: int) -> "LaurentMatrix":
        return cls([[LaurentPoly.const(c, nvars) for c in r] for r in rows])

    @classmethod
    def diagonal(cls, diag: Sequence[LaurentPoly]) -> "LaurentMatrix":
        nvars = diag[0].nvars
        zero = LaurentPoly.zero(nvars)
        n = len(diag)
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if self.n != other.n:
            raise DimensionError("dimension mismatch: %d vs %d" % (self.n, other.n))
        if self.nvars != other.nvars:
            raise VariableCountError(
                "variable count mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        n, nvars = self.n, self.nvars
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                row.append(poly_sum(
                    (a * b for a, b in zip(r, c) if a.terms and b.terms), nvars))
            out.append(row)
        return LaurentMatrix(out)

    __mul__ = __matmul__

    def __add__(self, other):
        self._check(other)
        return LaurentMatrix([[a + b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return LaurentMatrix([[a - b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c: LaurentPoly) -> "LaurentMatrix":
        return LaurentMatrix([[c * a for a in r] for r in self.rows])

    def map(self, f) -> "LaurentMatrix":
        return LaurentMatrix([[f(a) for a in r] for r in self.rows])

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(list(zip(*self.rows)))

    def bar(self) -> "LaurentMatrix":
        return self.map(LaurentPoly.bar)

    def bar_transpose(self) -> "LaurentMatrix":
        return self.bar().transpose()

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.nvars == other.nvars and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def first_difference(self, other: "LaurentMatrix"):
        """(row, col) of the first differing entry, 0-based, or None."""
        self._check(other)
        for i in range(self.n):
            for j in range(self.n):
                if self.rows[i][j] != other.rows[i][j]:
                    return i, j
        return None

    def to_strings(self):
        return [[str(p) for p in r] for r in self.rows]

    def to_json_obj(self):
        return {"n": self.n, "entries": self.to_strings()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj, nvars: int | None = None) -> "LaurentMatrix":
        n = obj["n"]
        nvars = n if nvars is None else nvars
        entries = obj["entries"]
        if len(entries) != n:
            raise DimensionError("entry grid does not match n=%d" % n)
        return cls([[LaurentPoly.parse(s, nvars) for s in r] for r in entries])

    def pretty(self) -> str:
        cells = self.to_strings()
        width = max(len(s) for r in cells for s in r)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in r) + " ]"
                         for r in cells)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return "LaurentMatrix(%r)" % (self.to_strings(),)


def mat_mul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    return a @ b


def mat_bar_transpose(a: LaurentMatrix) -> LaurentMatrix:
    return a.bar_transpose()


def mat_det(a: LaurentMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row, memoized on minors."""
    n, nvars = a.n, a.nvars
    if n > MAX_DET_SIZE:
        raise UnsupportedSizeError(
            "cofactor determinant limited to n <= %d, got %d" % (MAX_DET_SIZE, n))
    rows = a.rows

    @lru_cache(maxsize=None)
    def minor(row, cols):
        # determinant of rows[row:] restricted to column tuple ``cols``
        if row == n:
            return LaurentPoly.const(1, nvars)
        terms = []
        for k, c in enumerate(cols):
            entry = rows[row][c]
            if not entry.terms:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            if not sub.terms:
                continue
            term = entry * sub
            terms.append(-term if k % 2 else term)
        return poly_sum(terms, nvars)

    return minor(0, tuple(range(n)))


def ones_fixed(a: LaurentMatrix) -> bool:
    """True iff every column sums to 1, i.e. the all-ones row vector is fixed."""
    for col in zip(*a.rows):
        if not poly_sum(col, a.nvars).is_one():
            return False
    return True


@dataclass(frozen=True)
class ScaledMatrix:
    """The matrix numerator / denominator, never reduced."""

    numerator: LaurentMatrix
    denominator: LaurentPoly

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ZeroDivisionError("ScaledMatrix denominator is the zero polynomial")
        if self.denominator.nvars != self.numerator.nvars:
            raise VariableCountError("denominator and numerator live in different rings")

    @property
    def n(self):
        return self.numerator.n

    def bar_transpose(self) -> "ScaledMatrix":
        return ScaledMatrix(self.numerator.bar_transpose(), self.denominator.bar())

    def left_mul(self, m: LaurentMatrix) -> "ScaledMatrix":
        return ScaledMatrix(m @ self.numerator, self.denominator)

    def right_mul(self, m: LaurentMatrix) -> "ScaledMatrix":
        return ScaledMatrix(self.numerator @ m, self.denominator)


def scaled_equals(a: ScaledMatrix, b: ScaledMatrix) -> bool:
    if a.n != b.n:
        raise DimensionError("dimension mismatch: %d vs %d" % (a.n, b.n))
    return a.numerator.scale(b.denominator) == b.numerator.scale(a.denominator)
