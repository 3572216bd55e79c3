"""Braid words, the over-strand annotation, and strand permutations.

Strands are labelled 1..n at the bottom of the braid.  A permutation is a
tuple ``perm`` in one-line form where ``perm[p-1]`` is the label of the
strand sitting at position ``p``.  Reading a braid bottom to top, each
crossing at position i swaps the strands at positions i and i+1.

In a positive crossing the strand entering at position i passes over; in a
negative crossing the strand entering at position i+1 does.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import BraidParseError, DimensionError

Permutation = Tuple[int, ...]
Crossing = Tuple[int, int]  # (position, sign)


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse_perm(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for p, s in enumerate(perm, 1):
        inv[s - 1] = p
    return tuple(inv)


def compose_perm(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """(a o b)[p] = a[b[p]]."""
    return tuple(a[b[p] - 1] for p in range(len(b)))


def is_permutation(perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(1, len(perm) + 1))


@dataclass(frozen=True)
class BraidWord:
    n: int
    crossings: Tuple[Crossing, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "crossings", tuple((int(i), int(s)) for i, s in self.crossings))
        for i, s in self.crossings:
            if not 1 <= i <= self.n - 1:
                raise ValueError("crossing position %d out of range for %d strands" % (i, self.n))
            if s not in (1, -1):
                raise ValueError("crossing sign must be +1 or -1, got %r" % s)

    @classmethod
    def from_ints(cls, n: int, letters: Sequence[int]) -> "BraidWord":
        """``[1, -3, 2]`` -> sigma_1 sigma_3^-1 sigma_2."""
        return cls(n, tuple((abs(m), 1 if m > 0 else -1) for m in letters))

    def letters(self):
        return [i * s for i, s in self.crossings]

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class AnnotatedBraid:
    word: BraidWord
    over: Tuple[int, ...]
    tau: Permutation


def annotate(b: BraidWord, start: Sequence[int] | None = None) -> AnnotatedBraid:
    """Over-strand label of every crossing and the induced permutation.

    ``start`` is the strand arrangement at the bottom (identity by default);
    a non-identity start annotates ``b`` as the upper part of a longer braid.
    """
    pi = list(identity_perm(b.n) if start is None else start)
    if len(pi) != b.n:
        raise DimensionError("start permutation has the wrong length")
    over = []
    for i, s in b.crossings:
        over.append(pi[i - 1] if s == 1 else pi[i])
        pi[i - 1], pi[i] = pi[i], pi[i - 1]
    return AnnotatedBraid(b, tuple(over), tuple(pi))


def permutation(b: BraidWord) -> Permutation:
    return annotate(b).tau


def invert_word(b: BraidWord) -> BraidWord:
    return BraidWord(b.n, tuple((i, -s) for i, s in reversed(b.crossings)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.n != b.n:
        raise DimensionError("strand count mismatch: %d vs %d" % (a.n, b.n))
    return BraidWord(a.n, a.crossings + b.crossings)


def is_pure(b: BraidWord) -> bool:
    return annotate(b).tau == identity_perm(b.n)


def band_generator(n: int, i: int, j: int, sign: int = 1) -> BraidWord:
    """A_ij = (s_{j-1}...s_{i+1}) s_i^2 (s_{i+1}^-1...s_{j-1}^-1), or its inverse."""
    if not 1 <= i < j <= n:
        raise ValueError("band generator needs 1 <= i < j <= n")
    conj = [(k, 1) for k in range(j - 1, i, -1)]
    word = BraidWord(n, tuple(conj) + ((i, 1), (i, 1)) + tuple((k, -1) for k, _ in reversed(conj)))
    return word if sign == 1 else invert_word(word)


# text form

_ALIAS = re.compile(r"([sS])(\d+)")
_TOKEN = re.compile(r"[^\s,]+")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse signed integers (``"1 -3 2"``) or ``s1 S3``-style aliases."""
    if n < 1:
        raise BraidParseError("strand count must be at least 1, got %d" % n)
    crossings = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        alias = _ALIAS.fullmatch(tok)
        if alias:
            pos = int(alias.group(2))
            sign = 1 if alias.group(1) == "s" else -1
        else:
            try:
                val = int(tok)
            except ValueError:
                raise BraidParseError(
                    "malformed token %r at offset %d" % (tok, m.start()),
                    token=tok, position=m.start()) from None
            if val == 0:
                raise BraidParseError(
                    "token %r at offset %d: generator index must be nonzero" % (tok, m.start()),
                    token=tok, position=m.start())
            pos, sign = abs(val), (1 if val > 0 else -1)
        if not 1 <= pos <= n - 1:
            raise BraidParseError(
                "token %r at offset %d: position %d not in 1..%d"
                % (tok, m.start(), pos, n - 1),
                token=tok, position=m.start())
        crossings.append((pos, sign))
    return BraidWord(n, tuple(crossings))


def format_word(b: BraidWord) -> str:
    return " ".join(str(x) for x in b.letters())


# sampling

def random_word(n: int, length: int, seed) -> BraidWord:
    if n < 2:
        raise ValueError("random words need at least 2 strands")
    rng = random.Random(seed)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                              for _ in range(length)))


def random_pure(n: int, bands: int, seed) -> BraidWord:
    """Product of ``bands`` random band generators A_ij^{+-1}."""
    if n < 2:
        raise ValueError("random pure braids need at least 2 strands")
    rng = random.Random(seed)
    crossings = ()
    for _ in range(bands):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        crossings += band_generator(n, i, j, rng.choice((1, -1))).crossings
    word = BraidWord(n, crossings)
    assert is_pure(word)
    return word
