"""The Gassner invariant of braids and its unitarity property.

Gamma(b) is the left-to-right product of generator matrices U_i^{+-1}(t_j),
one per crossing, where j is the label of the over strand.  Omega(tau) has
diagonal entries 1/(1 - t_{tau p}), ones below the diagonal and zeros above;
it is always handled in cleared form (numerator over Delta = prod (1 - t_i)).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence, Tuple

from .braid import (BraidWord, annotate, identity_perm,
                    invert_word, is_permutation, is_pure)
from .errors import BraidParseError, PreconditionError
from .laurent import LaurentPoly, delta, one_minus
from .matrix import LaurentMatrix, ScaledMatrix

__all__ = [
    "generator_matrix", "gassner", "gassner_naive", "gassner_inverse",
    "omega_cleared", "verify_unitarity", "verify_unitarity_variant", "relabel",
    "expected_det", "burau_specialize", "VWWord", "vw_generator", "vw_gassner",
    "vw_gassner_prime", "vw_invert", "verify_unitarity_vw", "d_matrix",
    "parse_vw_word", "format_vw_word", "random_vw_word", "UnitarityReport",
]


def _block_matrix(n, nvars, a, b, block):
    one = LaurentPoly.const(1, nvars)
    zero = LaurentPoly.zero(nvars)
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    (p, q), (r, s) = block
    rows[a][a], rows[a][b] = p, q
    rows[b][a], rows[b][b] = r, s
    return LaurentMatrix(rows)


def generator_matrix(n: int, i: int, sign: int, j: int, nvars: int | None = None) -> LaurentMatrix:
    """U_i(t_j) for sign=+1, its inverse for sign=-1."""
    nvars = n if nvars is None else nvars
    if not 1 <= i <= n - 1:
        raise IndexError("generator position %d out of range for n=%d" % (i, n))
    if not 1 <= j <= nvars:
        raise IndexError("variable t%d out of range for %d variables" % (j, nvars))
    one = LaurentPoly.const(1, nvars)
    zero = LaurentPoly.zero(nvars)
    if sign == 1:
        t = LaurentPoly.var(j, nvars)
        block = ((one - t, one), (t, zero))
    elif sign == -1:
        tb = LaurentPoly.var(j, nvars, -1)
        block = ((zero, tb), (one, one - tb))
    else:
        raise ValueError("sign must be +1 or -1")
    return _block_matrix(n, nvars, i - 1, i, block)


def _product(ann):
    n = ann.word.n
    one = LaurentPoly.const(1, n)
    cols = [list(c) for c in zip(*LaurentMatrix.identity(n, n).rows)]
    for (i, s), j in zip(ann.word.crossings, ann.over):
        a, b = cols[i - 1], cols[i]
        if s == 1:
            t = LaurentPoly.var(j, n)
            omt = one - t
            cols[i - 1] = [x * omt + y * t for x, y in zip(a, b)]
            cols[i] = a
        else:
            tb = LaurentPoly.var(j, n, -1)
            omtb = one - tb
            cols[i - 1] = b
            cols[i] = [x * tb + y * omtb for x, y in zip(a, b)]
    return LaurentMatrix(list(zip(*cols)))


def gassner(b: BraidWord, start: Sequence[int] | None = None) -> LaurentMatrix:
    """Gamma(b).  Each crossing acts on two columns of the running product.

    ``start`` annotates ``b`` as if its strands entered in that arrangement.
    """
    return _product(annotate(b, start))


def gassner_naive(b: BraidWord) -> LaurentMatrix:
    """Gamma(b) as an explicit product of full generator matrices."""
    ann = annotate(b)
    m = LaurentMatrix.identity(b.n, b.n)
    for (i, s), j in zip(b.crossings, ann.over):
        m = m @ generator_matrix(b.n, i, s, j)
    return m


def gassner_inverse(b: BraidWord) -> LaurentMatrix:
    """Gamma(b)^-1, computed as the Gamma-factor of the reversed word.

    The reversed word is annotated starting from the permutation of ``b``,
    so each undone crossing reuses the over strand of the crossing it undoes.
    """
    return gassner(invert_word(b), start=annotate(b).tau)


def relabel(m: LaurentMatrix, sigma: Sequence[int]) -> LaurentMatrix:
    """Substitute t_j -> t_{sigma[j]} in every entry."""
    return m.map(lambda p: p.permute_variables(sigma))


def expected_det(b: BraidWord) -> LaurentPoly:
    """prod over crossings of (-t_j)^s."""
    n = b.n
    out = LaurentPoly.const(1, n)
    for (_, s), j in zip(b.crossings, annotate(b).over):
        out = out * (-LaurentPoly.var(j, n, s))
    return out


def burau_specialize(m: LaurentMatrix) -> LaurentMatrix:
    """Collapse every t_i to a single variable t."""
    return m.map(LaurentPoly.collapse)


# Omega and the unitarity identity

def omega_cleared(tau: Sequence[int]) -> ScaledMatrix:
    """Omega(tau) as (numerator, Delta)."""
    if not is_permutation(tau):
        raise ValueError("not a permutation: %r" % (tuple(tau),))
    n = len(tau)
    d = delta(n)
    factors = [one_minus(q, n) for q in range(1, n + 1)]
    zero = LaurentPoly.zero(n)
    rows = []
    for p in range(n):
        row = []
        for c in range(n):
            if c < p:
                row.append(d)
            elif c == p:
                diag = LaurentPoly.const(1, n)
                for q in range(n):
                    if q != tau[p] - 1:
                        diag = diag * factors[q]
                row.append(diag)
            else:
                row.append(zero)
        rows.append(row)
    return ScaledMatrix(LaurentMatrix(rows), d)


@dataclass(frozen=True)
class UnitarityReport:
    holds: bool
    left: LaurentMatrix
    right: LaurentMatrix

    def first_difference(self):
        return self.left.first_difference(self.right)

    def __bool__(self):
        return self.holds


def verify_unitarity(b: BraidWord) -> UnitarityReport:
    """Check Omega(tau) Gamma^-1 == bar(Gamma)^T Omega(iota) exactly.

    Both sides carry the same denominator Delta, so numerators are compared.
    """
    tau = annotate(b).tau
    gamma = gassner(b)
    left = omega_cleared(tau).numerator @ gassner_inverse(b)
    right = gamma.bar_transpose() @ omega_cleared(identity_perm(b.n)).numerator
    return UnitarityReport(left == right, left, right)


def verify_unitarity_variant(b: BraidWord) -> UnitarityReport:
    """The same identity with Omega replaced by bar(Omega)^T; pure braids only."""
    if not is_pure(b):
        raise PreconditionError("the bar-transposed variant needs a pure braid")
    om = omega_cleared(identity_perm(b.n)).numerator.bar_transpose()
    left = om @ gassner_inverse(b)
    right = gassner(b).bar_transpose() @ om
    return UnitarityReport(left == right, left, right)


# v/w braids

@dataclass(frozen=True)
class VWWord:
    """Word in the generators sigma_ij^{+-1}; crossings are (i, j, sign)."""

    n: int
    crossings: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings",
                           tuple((int(i), int(j), int(s)) for i, j, s in self.crossings))
        for i, j, s in self.crossings:
            if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                raise ValueError("bad v/w generator sigma_%d,%d for n=%d" % (i, j, self.n))
            if s not in (1, -1):
                raise ValueError("sign must be +1 or -1")

    def __len__(self):
        return len(self.crossings)

    def __add__(self, other: "VWWord") -> "VWWord":
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        return VWWord(self.n, self.crossings + other.crossings)

    def __str__(self):
        return format_vw_word(self)


def vw_invert(w: VWWord) -> VWWord:
    return VWWord(w.n, tuple((i, j, -s) for i, j, s in reversed(w.crossings)))


def vw_generator(n: int, i: int, j: int, sign: int = 1, form: str = "U") -> LaurentMatrix:
    """U_ij (form "U") or V_ij (form "V"), or the inverse for sign=-1.

    The 2x2 block sits at rows/cols (i, j) in that order, so for i > j the
    block's first slot is still row/col i.
    """
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise IndexError("bad v/w generator indices (%d, %d) for n=%d" % (i, j, n))
    one = LaurentPoly.const(1, n)
    zero = LaurentPoly.zero(n)
    ti = LaurentPoly.var(i, n)
    tib = LaurentPoly.var(i, n, -1)
    corner = one_minus(i if form == "U" else j, n)
    if form not in ("U", "V"):
        raise ValueError("form must be 'U' or 'V'")
    if sign == 1:
        block = ((one, corner), (zero, ti))
    elif sign == -1:
        block = ((one, -corner * tib), (zero, tib))
    else:
        raise ValueError("sign must be +1 or -1")
    return _block_matrix(n, n, i - 1, j - 1, block)


def _vw_product(w, form):
    m = LaurentMatrix.identity(w.n, w.n)
    for i, j, s in w.crossings:
        m = m @ vw_generator(w.n, i, j, s, form)
    return m


def vw_gassner(w: VWWord) -> LaurentMatrix:
    return _vw_product(w, "U")


def vw_gassner_prime(w: VWWord) -> LaurentMatrix:
    return _vw_product(w, "V")


def d_matrix(n: int) -> LaurentMatrix:
    """diag(1 - t_1, ..., 1 - t_n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return LaurentMatrix.diagonal([one_minus(i, n) for i in range(1, n + 1)])


def verify_unitarity_vw(w: VWWord) -> UnitarityReport:
    """The braid unitarity identity applied verbatim to a v/w word (tau = identity)."""
    om = omega_cleared(identity_perm(w.n)).numerator
    gamma = vw_gassner(w)
    left = om @ vw_gassner(vw_invert(w))
    right = gamma.bar_transpose() @ om
    return UnitarityReport(left == right, left, right)


_VW_TOKEN = re.compile(r"(-?)(\d+),(\d+)")


def parse_vw_word(text: str, n: int) -> VWWord:
    """Whitespace-separated ``i,j`` tokens; a leading ``-`` marks an inverse."""
    crossings = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        g = _VW_TOKEN.fullmatch(tok)
        if not g:
            raise BraidParseError("malformed v/w token %r at offset %d" % (tok, m.start()),
                                  token=tok, position=m.start())
        i, j = int(g.group(2)), int(g.group(3))
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise BraidParseError(
                "v/w token %r at offset %d: need distinct indices in 1..%d" % (tok, m.start(), n),
                token=tok, position=m.start())
        crossings.append((i, j, -1 if g.group(1) else 1))
    return VWWord(n, tuple(crossings))


def format_vw_word(w: VWWord) -> str:
    return " ".join("%s%d,%d" % ("-" if s < 0 else "", i, j) for i, j, s in w.crossings)


def random_vw_word(n: int, length: int, seed) -> VWWord:
    if n < 2:
        raise ValueError("v/w words need at least 2 strands")
    rng = random.Random(seed)
    crossings = []
    for _ in range(length):
        i, j = rng.sample(range(1, n + 1), 2)
        crossings.append((i, j, rng.choice((1, -1))))
    return VWWord(n, tuple(crossings))
