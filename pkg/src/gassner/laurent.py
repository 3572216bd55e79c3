"""Sparse multivariate Laurent polynomials over the integers.

A :class:`LaurentPoly` lives in Z[t1^±1, ..., tn^±1] for a fixed variable
count ``n``.  Terms are stored as a dict mapping exponent tuples to nonzero
Python ints, so coefficients never overflow.

Canonical printing orders monomials by comparing exponent vectors from the
last variable backwards, with each exponent ranked 0, 1, -1, 2, -2, ...
That puts the constant first and gives e.g. ``1 - t1 + t1*t2^-1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, VariableCountError

Exponents = tuple  # tuple[int, ...]


def _monomial_key(exps):
    return tuple((abs(e), e < 0) for e in reversed(exps))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        if nvars < 1:
            raise ValueError("variable count must be at least 1, got %r" % nvars)
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise VariableCountError(
                        "exponent vector %r has length %d, expected %d"
                        % (exps, len(exps), nvars))
                if c:
                    clean[exps] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def const(cls, c: int, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "LaurentPoly":
        """The monomial t_i^power, with ``i`` 1-based."""
        if not 1 <= i <= nvars:
            raise IndexError("variable t%d out of range for %d variables" % (i, nvars))
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(nvars, {tuple(exps): 1})

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                return LaurentPoly.const(other, self.nvars)
            return NotImplemented
        if other.nvars != self.nvars:
            raise VariableCountError(
                "variable count mismatch: %d vs %d" % (self.nvars, other.nvars))
        return other

    # arithmetic

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise DomainError("only monomials are invertible in the Laurent ring")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise DomainError("coefficient %d is not a unit" % c)
            return LaurentPoly._raw(self.nvars, {tuple(-x for x in e): c}) ** (-k)
        result = LaurentPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def bar(self) -> "LaurentPoly":
        """Substitute t_i -> t_i^-1 for every variable."""
        return LaurentPoly._raw(
            self.nvars, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def permute_variables(self, image: Sequence[int]) -> "LaurentPoly":
        """Substitute t_j -> t_{image[j-1]} (``image`` is 1-based, one-line)."""
        if len(image) != self.nvars:
            raise VariableCountError(
                "permutation of %d letters applied to %d variables"
                % (len(image), self.nvars))
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for j, x in enumerate(e):
                new[image[j] - 1] = x
            out[tuple(new)] = c
        return LaurentPoly._raw(self.nvars, out)

    def collapse(self) -> "LaurentPoly":
        """Substitute every t_i -> t, giving a one-variable polynomial."""
        out = {}
        for e, c in self.terms.items():
            k = (sum(e),)
            out[k] = out.get(k, 0) + c
        return LaurentPoly._raw(1, {e: c for e, c in out.items() if c})

    def __call__(self, point: Sequence[complex]) -> complex:
        return self.eval(point)

    def eval(self, point: Sequence[complex]) -> complex:
        if len(point) != self.nvars:
            raise VariableCountError(
                "point has %d coordinates, expected %d" % (len(point), self.nvars))
        if any(z == 0 for z in point):
            raise DomainError("cannot evaluate a Laurent polynomial at a zero coordinate")
        total = 0j
        for e, c in self.terms.items():
            m = complex(c)
            for z, x in zip(point, e):
                if x:
                    m *= z ** x
            total += m
        return total

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # printing / parsing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _monomial_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for i, x in enumerate(e):
                if x == 1:
                    factors.append("t%d" % (i + 1))
                elif x:
                    factors.append("t%d^%d" % (i + 1, x))
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "LaurentPoly(%d, %r)" % (self.nvars, str(self))

    @classmethod
    def parse(cls, text: str, nvars: int) -> "LaurentPoly":
        """Inverse of ``str``; also accepts loosely spaced input."""
        s = text.strip()
        if s == "0":
            return cls.zero(nvars)
        if not s:
            raise ValueError("empty polynomial string")
        # split on +/- that are not exponent signs
        chunks = re.split(r"(?<!\^)\s*([+-])\s*", s)
        if chunks[0] == "":
            chunks = chunks[1:]
        else:
            chunks = ["+"] + chunks
        out = {}
        for sign, body in zip(chunks[::2], chunks[1::2]):
            coeff = -1 if sign == "-" else 1
            exps = [0] * nvars
            for factor in body.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"t(\d+)(?:\^(-?\d+))?", factor)
                if m:
                    i = int(m.group(1))
                    if not 1 <= i <= nvars:
                        raise ValueError("variable t%d out of range in %r" % (i, text))
                    exps[i - 1] += int(m.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise ValueError("cannot parse factor %r in %r" % (factor, text))
            key = tuple(exps)
            out[key] = out.get(key, 0) + coeff
        return cls(nvars, out)


def one_minus(i: int, nvars: int) -> LaurentPoly:
    """1 - t_i."""
    return LaurentPoly.const(1, nvars) - LaurentPoly.var(i, nvars)


def delta(nvars: int) -> LaurentPoly:
    """The common denominator prod_i (1 - t_i)."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    out = LaurentPoly.const(1, nvars)
    for i in range(1, nvars + 1):
        out = out * one_minus(i, nvars)
    return out


def poly_sum(polys: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    out = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly._raw(nvars, {e: c for e, c in out.items() if c})
