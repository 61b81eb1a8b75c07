"""Discrete membership vectors, linguistic hedges and residuated pairs.

Membership vectors are plain read-only ``float64`` numpy arrays. Everything
here is a pure function of its inputs.
"""
from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class FuzzyError(ValueError):
    """Base class for every error raised by this package."""


class EmptyVector(FuzzyError):
    pass


class OutOfRange(FuzzyError):
    def __init__(self, index, value):
        super().__init__(f"grade at index {index} is {value!r}, expected a value in [0, 1]")
        self.index = index
        self.value = value


class LengthMismatch(FuzzyError):
    def __init__(self, expected, got, what="vector"):
        super().__init__(f"{what} has length {got}, expected {expected}")
        self.expected = expected
        self.got = got


class MissingTiltVector(FuzzyError):
    pass


class UnsupportedCombination(FuzzyError):
    pass


class InconsistentMethods(FuzzyError):
    pass


def validate_membership(raw):
    """Return ``raw`` as a read-only float array of grades in [0, 1].

    Raises
    ------
    EmptyVector
        If ``raw`` has no elements.
    OutOfRange
        On the first grade that is NaN or outside [0, 1]. Nothing is clamped.
    """
    arr = np.array(raw, dtype=float).reshape(-1)
    if arr.size == 0:
        raise EmptyVector("membership vector must have at least one grade")
    bad = ~((arr >= 0.0) & (arr <= 1.0))  # NaN fails both comparisons
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise OutOfRange(i, float(arr[i]))
    arr.setflags(write=False)
    return arr


def complement(v):
    out = 1.0 - np.asarray(v, dtype=float)
    out.setflags(write=False)
    return out


HEDGE_KINDS = ("identity", "very", "more_or_less", "not", "custom")


@dataclass(frozen=True)
class Hedge:
    """A linguistic modifier.

    ``very`` squares, ``more_or_less`` takes the square root, ``not``
    complements, and ``custom`` substitutes a user-given vector (the
    "slightly tilted" premises). With ``negated=True`` the result is
    complemented afterwards, which gives premises such as ``1 - B**2``.
    """

    kind: str = "identity"
    vector: np.ndarray | None = field(default=None, compare=False)
    negated: bool = False

    def __post_init__(self):
        if self.kind not in HEDGE_KINDS:
            raise FuzzyError(f"unknown hedge kind {self.kind!r}")
        if self.kind == "custom":
            if self.vector is None:
                raise MissingTiltVector("custom hedge needs a vector")
            object.__setattr__(self, "vector", validate_membership(self.vector))
        elif self.vector is not None:
            raise FuzzyError(f"hedge {self.kind!r} does not take a vector")

    @property
    def label(self):
        name = {"more_or_less": "more or less", "custom": "s.t."}.get(self.kind, self.kind)
        return f"not {name}" if self.negated else name


IDENTITY = Hedge("identity")
VERY = Hedge("very")
MORE_OR_LESS = Hedge("more_or_less")
NOT = Hedge("not")


def apply_hedge(v, h: Hedge):
    v = validate_membership(v)
    if h.kind == "identity":
        out = v
    elif h.kind == "very":
        out = v**2
    elif h.kind == "more_or_less":
        out = np.sqrt(v)
    elif h.kind == "not":
        out = 1.0 - v
    else:
        if h.vector.size != v.size:
            raise LengthMismatch(v.size, h.vector.size, "custom hedge vector")
        out = h.vector
    if h.negated:
        out = 1.0 - out
    if out is not v:
        out = np.array(out)
        out.setflags(write=False)
    return out


# --- residuated pairs -------------------------------------------------------
#
# The operators below only use comparisons, +, -, / and np.where/minimum/maximum,
# so they also work elementwise on object arrays of fractions.Fraction.

def _unwrap(x):
    return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x


def _luk_t(a, b):
    return np.maximum(0, a + b - 1)


def _luk_i(a, b):
    return np.minimum(1, 1 - a + b)


def _godel_t(a, b):
    return np.minimum(a, b)


def _godel_i(a, b):
    return np.where(a <= b, 1, b)


def _goguen_t(a, b):
    return a * b


def _goguen_i(a, b):
    safe = np.where(a == 0, 1, a)
    return np.where(a <= b, 1, b / safe)


def _r0_t(a, b):
    return np.where(a + b > 1, np.minimum(a, b), 0)


def _r0_i(a, b):
    return np.where(a <= b, 1, np.maximum(1 - a, b))


@dataclass(frozen=True)
class ResiduatedPair:
    """A left-continuous t-norm together with its residual implication."""

    name: str
    t: Callable = field(repr=False)
    i: Callable = field(repr=False)


PAIRS = {
    "lukasiewicz": ResiduatedPair("lukasiewicz", _luk_t, _luk_i),
    "godel": ResiduatedPair("godel", _godel_t, _godel_i),
    "r0": ResiduatedPair("r0", _r0_t, _r0_i),
    "goguen": ResiduatedPair("goguen", _goguen_t, _goguen_i),
}

PAIR_LABELS = {"lukasiewicz": "Łukasiewicz", "godel": "Gödel", "r0": "R0", "goguen": "Goguen"}


def get_pair(pair) -> ResiduatedPair:
    if isinstance(pair, ResiduatedPair):
        return pair
    try:
        return PAIRS[str(pair).lower()]
    except KeyError:
        raise FuzzyError(f"unknown residuated pair {pair!r}; choose from {sorted(PAIRS)}") from None


def tnorm(pair, a, b):
    """Evaluate the t-norm of ``pair`` elementwise (broadcasting)."""
    return _unwrap(get_pair(pair).t(np.asarray(a), np.asarray(b)))


def implication(pair, a, b):
    """Evaluate the residual implication ``a -> b`` of ``pair`` elementwise."""
    return _unwrap(get_pair(pair).i(np.asarray(a), np.asarray(b)))


@dataclass(frozen=True, eq=False)
class Rule:
    """``if x is antecedent then y is consequent``; the lengths may differ."""

    antecedent: np.ndarray
    consequent: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "antecedent", validate_membership(self.antecedent))
        object.__setattr__(self, "consequent", validate_membership(self.consequent))

    @property
    def u(self) -> int:
        return self.antecedent.size

    @property
    def v(self) -> int:
        return self.consequent.size
