"""Randomized sweep of the exact identities satisfied by Gamma.

Every case draws its inputs from ``random.Random("<seed>:<case>")`` so any
single failing case can be replayed without re-running the sweep.
"""

from __future__ import annotations

import random
from collections import OrderedDict
from dataclasses import dataclass, field

from .braid import BraidWord, annotate, concat, random_pure, random_word
from .invariant import (d_matrix, expected_det, gassner, gassner_inverse, random_vw_word,
                        relabel, verify_unitarity, verify_unitarity_variant, vw_gassner,
                        vw_gassner_prime)
from .matrix import LaurentMatrix, mat_det, ones_fixed

PROPERTIES = ("braid_relation", "far_commutation", "unitarity", "inverse", "twist",
              "determinant", "ones_fixed", "pure_variant", "vw_conjugacy")


def case_rng(seed, case: int) -> random.Random:
    return random.Random("%s:%d" % (seed, case))


def relation_pair(rng: random.Random, n: int, max_len: int, far: bool):
    """Two words differing by one braid relation (or far commutation) rewrite."""
    if far:
        i = rng.randint(1, n - 3)
        j = rng.randint(i + 2, n - 1)
        if rng.random() < 0.5:
            i, j = j, i
        lhs, rhs = ((i, 1), (j, 1)), ((j, 1), (i, 1))
    else:
        i = rng.randint(1, n - 2)
        lhs = ((i, 1), (i + 1, 1), (i, 1))
        rhs = ((i + 1, 1), (i, 1), (i + 1, 1))
    rest = max(0, max_len - len(lhs))
    k1 = rng.randint(0, rest)
    k2 = rng.randint(0, rest - k1)
    w1 = random_word(n, k1, rng.random())
    w2 = random_word(n, k2, rng.random())
    mid_l, mid_r = BraidWord(n, lhs), BraidWord(n, rhs)
    return concat(concat(w1, mid_l), w2), concat(concat(w1, mid_r), w2)


def check_case(seed, case: int, max_n: int, max_len: int):
    """Run every applicable property on one random case; returns {name: bool}."""
    rng = case_rng(seed, case)
    n = rng.randint(2, max(2, max_n))
    results = OrderedDict()
    identity = LaurentMatrix.identity(n, n)

    if n >= 3:
        a, b = relation_pair(rng, n, max_len, far=False)
        results["braid_relation"] = gassner(a) == gassner(b)
    if n >= 4:
        a, b = relation_pair(rng, n, max_len, far=True)
        results["far_commutation"] = gassner(a) == gassner(b)

    w = random_word(n, rng.randint(0, max_len), rng.random())
    g = gassner(w)
    results["unitarity"] = verify_unitarity(w).holds
    results["inverse"] = g @ gassner_inverse(w) == identity
    results["ones_fixed"] = ones_fixed(g)
    if n <= 8:
        results["determinant"] = mat_det(g) == expected_det(w)

    half = max_len // 2
    a = random_word(n, rng.randint(0, half), rng.random())
    b = random_word(n, rng.randint(0, half), rng.random())
    results["twist"] = gassner(concat(a, b)) == gassner(a) @ relabel(gassner(b), annotate(a).tau)

    p = random_pure(n, rng.randint(0, 3), rng.random())
    results["pure_variant"] = verify_unitarity_variant(p).holds

    v = random_vw_word(n, rng.randint(0, max_len), rng.random())
    d = d_matrix(n)
    results["vw_conjugacy"] = d @ vw_gassner_prime(v) == vw_gassner(v) @ d
    return n, results


@dataclass
class SweepResult:
    seed: object
    cases: int
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self):
        return {"seed": self.seed, "cases": self.cases, "counts": self.counts,
                "failures": self.failures}


def run_sweep(max_n: int = 5, max_len: int = 20, cases: int = 500, seed=0) -> SweepResult:
    res = SweepResult(seed, cases, {name: {"passed": 0, "failed": 0} for name in PROPERTIES})
    for k in range(cases):
        n, results = check_case(seed, k, max_n, max_len)
        for name, passed in results.items():
            res.counts[name]["passed" if passed else "failed"] += 1
            if not passed:
                res.failures.append({"case": k, "n": n, "property": name})
    return res
