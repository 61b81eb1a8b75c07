from fractions import Fraction

import numpy as np
import pytest

from fuzzyedm import (
    MORE_OR_LESS,
    NOT,
    VERY,
    EmptyVector,
    FuzzyError,
    Hedge,
    LengthMismatch,
    MissingTiltVector,
    OutOfRange,
    Rule,
    apply_hedge,
    get_pair,
    implication,
    tnorm,
    validate_membership,
)
from fuzzyedm.core import PAIRS

A = [1, 0.3, 0, 0, 0]


def test_validate_accepts_grades():
    v = validate_membership([1, 0.4, 0])
    assert v.tolist() == [1, 0.4, 0]
    assert validate_membership([0]).size == 1
    assert not v.flags.writeable


@pytest.mark.parametrize("raw, idx, val", [([1.2, 0], 0, 1.2), ([0, -0.1], 1, -0.1), ([0.5, 0.5, 2], 2, 2.0)])
def test_validate_out_of_range(raw, idx, val):
    with pytest.raises(OutOfRange) as e:
        validate_membership(raw)
    assert (e.value.index, e.value.value) == (idx, val)


def test_validate_rejects_nan_and_empty():
    with pytest.raises(OutOfRange):
        validate_membership([0.2, float("nan")])
    with pytest.raises(EmptyVector):
        validate_membership([])


def test_hedges_on_reference_vector():
    assert apply_hedge(A, VERY).tolist() == pytest.approx([1, 0.09, 0, 0, 0])
    np.testing.assert_allclose(apply_hedge(A, MORE_OR_LESS), [1, 0.5477, 0, 0, 0], atol=5e-5)
    assert apply_hedge(A, NOT).tolist() == pytest.approx([0, 0.7, 1, 1, 1])
    assert apply_hedge(A, Hedge()) is not None
    np.testing.assert_array_equal(apply_hedge(A, Hedge()), A)


def test_negated_hedge():
    b = np.array([0, 0, 0, 0, 0, 0.3, 1])
    np.testing.assert_allclose(apply_hedge(b, Hedge("very", negated=True)), 1 - b**2)
    assert Hedge("very", negated=True).label == "not very"


def test_custom_hedge():
    h = Hedge("custom", [1, 0.2, 0, 0, 0])
    np.testing.assert_array_equal(apply_hedge(A, h), [1, 0.2, 0, 0, 0])
    with pytest.raises(LengthMismatch):
        apply_hedge([1, 0], h)
    with pytest.raises(MissingTiltVector):
        Hedge("custom")
    with pytest.raises(FuzzyError):
        Hedge("very", [0.1])
    with pytest.raises(FuzzyError):
        Hedge("somewhat")


def test_not_is_involution(rng):
    v = rng.random(50)
    np.testing.assert_array_equal(apply_hedge(apply_hedge(v, NOT), NOT), 1 - (1 - v))
    # exact for grades on a binary grid
    w = rng.integers(0, 1025, 50) / 1024
    np.testing.assert_array_equal(apply_hedge(apply_hedge(w, NOT), NOT), w)


def test_hedge_ordering(rng):
    v = rng.random(1000)
    assert np.all(apply_hedge(v, VERY) <= v)
    assert np.all(v <= apply_hedge(v, MORE_OR_LESS))


@pytest.mark.parametrize("pair, a, b, want", [
    ("lukasiewicz", 0.3, 0.9, 0.2),
    ("godel", 0.3, 0.9, 0.3),
    ("goguen", 0.5, 0.4, 0.2),
    ("r0", 0.3, 0.6, 0.0),
    ("r0", 0.5, 0.6, 0.5),
])
def test_tnorm_values(pair, a, b, want):
    assert tnorm(pair, a, b) == pytest.approx(want)


@pytest.mark.parametrize("pair, a, b, want", [
    ("lukasiewicz", 0.3, 0.0, 0.7),
    ("godel", 1.0, 0.4, 0.4),
    ("goguen", 0.5, 0.25, 0.5),
    ("r0", 0.6, 0.3, 0.4),
    ("r0", 0.3, 0.2, 0.7),
])
def test_implication_values(pair, a, b, want):
    assert implication(pair, a, b) == pytest.approx(want)


@pytest.mark.parametrize("pair", sorted(PAIRS))
def test_pair_laws(pair, rng):
    a, b = rng.random(500), rng.random(500)
    t = tnorm(pair, a, b)
    np.testing.assert_array_equal(t, tnorm(pair, b, a))
    np.testing.assert_allclose(tnorm(pair, a, 1.0), a, atol=1e-15)
    assert np.all((0 <= t) & (t <= 1))
    assert np.all(implication(pair, a, np.maximum(a, b)) == 1)
    lo = tnorm(pair, np.minimum(a, b), b)
    assert np.all(lo <= tnorm(pair, np.maximum(a, b), b))
    for x in (0, 1):
        for y in (0, 1):
            assert tnorm(pair, x, y) == (x and y)
            assert implication(pair, x, y) == (0 if (x, y) == (1, 0) else 1)


@pytest.mark.parametrize("pair", sorted(PAIRS))
def test_pair_operators_are_exact_on_fractions(pair):
    p = get_pair(pair)
    a = np.array([Fraction(1, 3)], dtype=object)
    b = np.array([Fraction(1, 4)], dtype=object)
    assert isinstance(p.i(a, b)[0], (Fraction, int))
    assert isinstance(p.t(a, b)[0], (Fraction, int))


def test_get_pair_errors():
    with pytest.raises(FuzzyError):
        get_pair("product")
    assert get_pair("Godel").name == "godel"


def test_rule_dims():
    r = Rule([1, 0.4, 0], [0, 0.4, 0.7, 1])
    assert (r.u, r.v) == (3, 4)
    with pytest.raises(OutOfRange):
        Rule([1, 2], [0])


def _grid_fractions(n=100):
    return np.array([Fraction(k, n) for k in range(n + 1)], dtype=object)


@pytest.mark.parametrize("pair", sorted(PAIRS))
def test_residuation_exact_on_grid(pair):
    # t(a, b) <= c  iff  a <= i(b, c), checked exactly for a, b, c on the 0.01 grid
    import math

    g = _grid_fractions()
    p = get_pair(pair)
    t = p.t(g[:, None], g[None, :])  # t[a, b]
    imp = p.i(g[:, None], g[None, :])  # imp[b, c]
    # rank of t: smallest k with t <= k/100; rank of i: largest j with j/100 <= i
    t_rank = np.vectorize(lambda x: math.ceil(Fraction(x) * 100))(t).astype(int)
    i_rank = np.vectorize(lambda x: math.floor(Fraction(x) * 100))(imp).astype(int)
    idx = np.arange(101)
    lhs = t_rank[:, :, None] <= idx[None, None, :]  # [a, b, c]
    rhs = idx[:, None, None] <= i_rank[None, :, :]
    assert np.array_equal(lhs, rhs)
