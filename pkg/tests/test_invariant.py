import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gassner.braid import (BraidWord, annotate, band_generator, concat, identity_perm,
                           invert_word, parse_word, random_pure, random_word)
from gassner.errors import PreconditionError
from gassner.invariant import (VWWord, burau_specialize, d_matrix, expected_det, gassner,
                               gassner_inverse, gassner_naive, generator_matrix,
                               omega_cleared, parse_vw_word, random_vw_word, relabel,
                               verify_unitarity, verify_unitarity_variant,
                               verify_unitarity_vw, vw_gassner, vw_gassner_prime,
                               vw_generator, vw_invert, format_vw_word)
from gassner.laurent import LaurentPoly, delta
from gassner.matrix import LaurentMatrix, mat_det, ones_fixed
from gassner.numeric import TorusPoint, eval_matrix, omega_numeric

from oracles import is_zero, unitarity_defect_sympy

VW_WITNESS = dict(n=3, length=3, seed=0)


def P(s, n):
    return LaurentPoly.parse(s, n)


def M(rows, n):
    return LaurentMatrix([[P(s, n) for s in r] for r in rows])


def I(n):
    return LaurentMatrix.identity(n, n)


@st.composite
def words(draw, n=None, max_len=12):
    n = n or draw(st.integers(2, 5))
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


# generator matrices

def test_generator_matches_printed_u53():
    expected = M([["1", "0", "0", "0", "0"],
                  ["0", "1", "0", "0", "0"],
                  ["0", "0", "1 - t1", "1", "0"],
                  ["0", "0", "t1", "0", "0"],
                  ["0", "0", "0", "0", "1"]], 1)
    assert generator_matrix(5, 3, 1, 1, nvars=1) == expected


def test_generator_inverse_block():
    assert generator_matrix(2, 1, -1, 2) == M([["0", "t2^-1"], ["1", "1 - t2^-1"]], 2)
    for n in range(2, 6):
        for i in range(1, n):
            for j in range(1, n + 1):
                assert generator_matrix(n, i, 1, j) @ generator_matrix(n, i, -1, j) == I(n)


def test_generator_index_errors():
    with pytest.raises(IndexError):
        generator_matrix(3, 3, 1, 1)
    with pytest.raises(IndexError):
        generator_matrix(3, 1, 1, 4)


# Gamma

def test_gamma_b0_matches_printed_matrix(b0):
    expected = M([["1 - t1", "1 - t1", "1", "0"],
                  ["t1", "0", "0", "0"],
                  ["0", "0", "0", "t4^-1"],
                  ["0", "t1", "0", "1 - t4^-1"]], 4)
    assert gassner(b0) == expected


def test_gamma_empty():
    assert gassner(BraidWord(4)) == I(4)


def test_braid_relation_n3():
    assert gassner(BraidWord.from_ints(3, [1, 2, 1])) == gassner(BraidWord.from_ints(3, [2, 1, 2]))


def test_paper_factorisation_of_121():
    n = 3
    product = generator_matrix(n, 1, 1, 1) @ generator_matrix(n, 2, 1, 1) @ generator_matrix(n, 1, 1, 2)
    assert gassner(BraidWord.from_ints(3, [1, 2, 1])) == product


@given(words(max_len=10))
@settings(max_examples=60, deadline=None)
def test_column_updates_match_full_products(w):
    assert gassner(w) == gassner_naive(w)


# inverse

def test_gassner_inverse_examples(b0):
    assert gassner_inverse(BraidWord(3)) == I(3)
    assert gassner(b0) @ gassner_inverse(b0) == I(4)
    s1 = BraidWord.from_ints(2, [1])
    assert gassner_inverse(s1) == M([["0", "t1^-1"], ["1", "1 - t1^-1"]], 2)
    assert gassner_inverse(s1) @ gassner(s1) == I(2)


def test_inverse_word_alone_is_not_the_inverse():
    # sigma_1^-1 annotated from the identity carries t2, not t1
    s1 = BraidWord.from_ints(2, [1])
    assert gassner(s1) @ gassner(invert_word(s1)) != I(2)
    assert gassner_inverse(s1) == relabel(gassner(invert_word(s1)), annotate(s1).tau)


@given(words(max_len=15))
@settings(max_examples=60, deadline=None)
def test_inverse_both_sides(w):
    g, h = gassner(w), gassner_inverse(w)
    assert g @ h == I(w.n)
    assert h @ g == I(w.n)


# Omega

def test_omega_small():
    om = omega_cleared((1,))
    assert om.numerator == M([["1"]], 1)
    assert om.denominator == P("1 - t1", 1)
    om2 = omega_cleared((1, 2))
    d = delta(2)
    assert om2.denominator == d
    assert om2.numerator == LaurentMatrix([[P("1 - t2", 2), P("0", 2)], [d, P("1 - t1", 2)]])


@pytest.mark.parametrize("tau", [(1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 4, 1, 3)])
def test_omega_cleared_matches_numeric(tau):
    n = len(tau)
    point = TorusPoint([0.3 + 0.4 * k for k in range(n)])
    om = omega_cleared(tau)
    cleared = eval_matrix(om.numerator, point) / om.denominator.eval(list(point.t))
    assert np.allclose(cleared, omega_numeric(point, tau), atol=1e-12)


# unitarity identity

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_unitarity_on_generators(n):
    for i in range(1, n):
        for s in (1, -1):
            assert verify_unitarity(BraidWord(n, ((i, s),))).holds


def test_unitarity_empty_and_b0(b0):
    rep = verify_unitarity(BraidWord(3))
    assert rep.holds
    assert rep.left == omega_cleared(identity_perm(3)).numerator
    assert verify_unitarity(b0).holds


@pytest.mark.parametrize("seed", range(3))
def test_unitarity_against_sympy_inverse(seed):
    w = random_word(3, 4, seed)
    ann = annotate(w)
    assert verify_unitarity(w).holds
    assert all(is_zero(x) for x in unitarity_defect_sympy(w, ann.over, ann.tau))


def test_sympy_oracle_rejects_wrong_over_strands(b0):
    # guards the oracle itself: the other crossing convention breaks the identity
    wrong = (2, 3, 4)
    defect = unitarity_defect_sympy(b0, wrong, annotate(b0).tau)
    assert not all(is_zero(x) for x in defect)


@given(words(max_len=14))
@settings(max_examples=60, deadline=None)
def test_unitarity_property(w):
    assert verify_unitarity(w).holds


def test_variant_examples():
    assert verify_unitarity_variant(BraidWord.from_ints(2, [1, 1])).holds
    assert verify_unitarity_variant(BraidWord(3)).holds
    assert verify_unitarity_variant(band_generator(3, 1, 3)).holds
    with pytest.raises(PreconditionError):
        verify_unitarity_variant(BraidWord.from_ints(2, [1]))


# relabel and the semidirect twist

def test_relabel_examples():
    m = gassner(random_word(3, 6, 11))
    assert relabel(m, (1, 2, 3)) == m
    sigma = (2, 3, 1)
    inv = (3, 1, 2)
    assert relabel(relabel(m, sigma), inv) == m
    assert relabel(generator_matrix(2, 1, 1, 1), (2, 1)) == generator_matrix(2, 1, 1, 2)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(words(n, 8), words(n, 8))))
@settings(max_examples=60, deadline=None)
def test_twisted_multiplicativity(ab):
    a, b = ab
    assert gassner(concat(a, b)) == gassner(a) @ relabel(gassner(b), annotate(a).tau)


@pytest.mark.parametrize("seed", range(10))
def test_pure_multiplicativity(seed):
    a, b = random_pure(4, 2, seed), random_pure(4, 2, seed + 100)
    assert gassner(concat(a, b)) == gassner(a) @ gassner(b)


# determinant and fixed vector

@given(words(max_len=10))
@settings(max_examples=40, deadline=None)
def test_det_and_ones(w):
    g = gassner(w)
    assert mat_det(g) == expected_det(w)
    assert ones_fixed(g)


# Burau specialization

def test_burau_specialize(b0):
    spec = burau_specialize(gassner(b0))
    assert spec == M([["1 - t1", "1 - t1", "1", "0"],
                      ["t1", "0", "0", "0"],
                      ["0", "0", "0", "t1^-1"],
                      ["0", "t1", "0", "1 - t1^-1"]], 1)
    assert burau_specialize(I(3)) == LaurentMatrix.identity(3, 1)
    a = gassner(BraidWord.from_ints(3, [1, 2, 1]))
    b = gassner(BraidWord.from_ints(3, [2, 1, 2]))
    assert burau_specialize(a) == burau_specialize(b)


# v/w braids

def test_vw_generator_blocks():
    assert vw_generator(2, 1, 2) == M([["1", "1 - t1"], ["0", "t1"]], 2)
    assert vw_generator(2, 1, 2, -1) == M([["1", "1 - t1^-1"], ["0", "t1^-1"]], 2)
    assert vw_generator(2, 1, 2, form="V") == M([["1", "1 - t2"], ["0", "t1"]], 2)
    # i > j: row/col i takes the first block slot
    assert vw_generator(3, 3, 1) == M([["t3", "0", "0"], ["0", "1", "0"], ["1 - t3", "0", "1"]], 3)


@pytest.mark.parametrize("form", ["U", "V"])
def test_vw_generator_inverse(form):
    for n in range(2, 6):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    g = vw_generator(n, i, j, 1, form)
                    assert g @ vw_generator(n, i, j, -1, form) == I(n)


def test_d_matrix():
    assert d_matrix(1) == M([["1 - t1"]], 1)
    for n in range(1, 5):
        assert mat_det(d_matrix(n)) == delta(n)
    d = d_matrix(2)
    assert d @ vw_generator(2, 1, 2, form="V") == vw_generator(2, 1, 2) @ d


@pytest.mark.parametrize("seed", range(15))
def test_vw_conjugacy(seed):
    w = random_vw_word(4, 8, seed)
    d = d_matrix(4)
    assert d @ vw_gassner_prime(w) == vw_gassner(w) @ d


def test_vw_multiplicative():
    a, b = random_vw_word(3, 5, 1), random_vw_word(3, 5, 2)
    assert vw_gassner(a + b) == vw_gassner(a) @ vw_gassner(b)
    assert vw_gassner_prime(a + b) == vw_gassner_prime(a) @ vw_gassner_prime(b)
    assert vw_gassner(VWWord(3)) == I(3)
    assert vw_gassner(a) @ vw_gassner(vw_invert(a)) == I(3)


def test_vw_negative_control():
    w = random_vw_word(**VW_WITNESS)
    assert not verify_unitarity_vw(w).holds
    assert not verify_unitarity_vw(parse_vw_word("1,2 2,3", 3)).holds
    assert verify_unitarity_vw(VWWord(3)).holds


def test_vw_parse():
    w = parse_vw_word("1,2 -3,1", 3)
    assert w.crossings == ((1, 2, 1), (3, 1, -1))
    assert parse_vw_word(format_vw_word(w), 3) == w
    for bad in ("1,1", "1,4", "12", "a,b"):
        with pytest.raises(ValueError):
            parse_vw_word(bad, 3)
