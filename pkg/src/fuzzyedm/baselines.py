"""Comparison methods: CRI, TIP and QIP over a residuated pair, and AARS.

By default every method sees the same lcm-extended grid as the EDM engine:
antecedent, consequent and premise are extended, the composition is taken
over the extended universes, and the conclusion is read back at the anchors.
``grid="native"`` evaluates the textbook formulas on the raw vectors; the two
agree whenever ``u == v``. ``grid="incremental"`` is the extended grid built
with :func:`extend_vector_incremental`.
"""
from dataclasses import dataclass

import numpy as np

from .core import FuzzyError, Hedge, LengthMismatch, Rule, apply_hedge, get_pair, validate_membership
from .edm import (
    SIGN_FORMS,
    downsample,
    extend_vector,
    extend_vector_incremental,
    extension_factor,
    lift_premise,
)

FAMILIES = ("edm", "cri", "tip", "qip", "aars")
AARS_FORMS = ("more_or_less", "reduction")
GRIDS = ("extended", "incremental", "native")


@dataclass(frozen=True)
class MethodId:
    """A reasoning method: family plus operator (pair name, AARS form or sign form)."""

    family: str
    operator: str

    def __post_init__(self):
        fam = str(self.family).lower()
        op = str(self.operator).lower()
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "operator", op)
        if fam == "edm":
            ok = op in SIGN_FORMS
        elif fam == "aars":
            ok = op in AARS_FORMS
        elif fam in ("cri", "tip", "qip"):
            ok = True
            get_pair(op)
        else:
            raise FuzzyError(f"unknown method family {self.family!r}; choose from {FAMILIES}")
        if not ok:
            raise FuzzyError(f"operator {self.operator!r} does not belong to family {fam!r}")

    @property
    def label(self):
        return f"{self.family.upper()}-{self.operator}"


def _setup(rule: Rule, premise, side: str, grid: str):
    """Return (A, B, P, out_factor) on the chosen grid.

    ``side`` names the universe the premise lives on: "a" for FMP, "b" for FMT.
    """
    if grid not in GRIDS:
        raise FuzzyError(f"grid must be one of {GRIDS}, got {grid!r}")
    ref = rule.antecedent if side == "a" else rule.consequent
    if grid == "native":
        if isinstance(premise, Hedge):
            p = apply_hedge(ref, premise)
        else:
            p = validate_membership(premise)
            if p.size != ref.size:
                raise LengthMismatch(ref.size, p.size, "premise")
        return rule.antecedent, rule.consequent, p, 1, 1
    ext = extend_vector if grid == "extended" else extend_vector_incremental
    plan = extension_factor(rule.u, rule.v)
    a = ext(rule.antecedent, plan.factor_a)
    b = ext(rule.consequent, plan.factor_b)
    f_in = plan.factor_a if side == "a" else plan.factor_b
    p = lift_premise(premise, ref, f_in, ext)
    return a, b, p, plan.factor_a, plan.factor_b


def _relation(pair, a, b):
    # R[i, j] = A(x_i) -> B(y_j)
    return pair.i(a[:, None], b[None, :])


def _out(x, n, f):
    x = np.asarray(x, dtype=float)
    return validate_membership(downsample(x, n, f) if f > 1 else x)


def cri_fmp(rule: Rule, premise, pair, grid="extended"):
    """``B*(y) = max_x A*(x) (x) (A(x) -> B(y))``."""
    pair = get_pair(pair)
    a, b, p, fa, fb = _setup(rule, premise, "a", grid)
    out = np.max(pair.t(p[:, None], _relation(pair, a, b)), axis=0)
    return _out(out, rule.v, fb)


def cri_fmt(rule: Rule, premise, pair, grid="extended"):
    """``A*(x) = max_y B*(y) (x) (A(x) -> B(y))``."""
    pair = get_pair(pair)
    a, b, p, fa, fb = _setup(rule, premise, "b", grid)
    out = np.max(pair.t(p[None, :], _relation(pair, a, b)), axis=1)
    return _out(out, rule.u, fa)


def tip_fmp(rule: Rule, premise, pair, grid="extended"):
    """Triple-I FMP; the closed form coincides with :func:`cri_fmp`."""
    return cri_fmp(rule, premise, pair, grid)


def tip_fmt(rule: Rule, premise, pair, grid="extended"):
    """``A*(x) = min_y (A(x) -> B(y)) -> B*(y)``."""
    pair = get_pair(pair)
    a, b, p, fa, fb = _setup(rule, premise, "b", grid)
    out = np.min(pair.i(_relation(pair, a, b), p[None, :]), axis=1)
    return _out(out, rule.u, fa)


def qip_fmp(rule: Rule, premise, pair, grid="extended"):
    """``B*(y) = max_x A*(x) (x) (A*(x) -> A(x)) (x) (A(x) -> B(y))``."""
    pair = get_pair(pair)
    a, b, p, fa, fb = _setup(rule, premise, "a", grid)
    w = pair.t(p, pair.i(p, a))
    out = np.max(pair.t(w[:, None], _relation(pair, a, b)), axis=0)
    return _out(out, rule.v, fb)


def qip_fmt(rule: Rule, premise, pair, grid="extended"):
    """``A*(x) = max_y A(x) (x) (A(x) -> B(y)) (x) (B(y) -> B*(y))``."""
    pair = get_pair(pair)
    a, b, p, fa, fb = _setup(rule, premise, "b", grid)
    left = pair.t(a[:, None], _relation(pair, a, b))
    out = np.max(pair.t(left, pair.i(b, p)[None, :]), axis=1)
    return _out(out, rule.u, fa)


def aars_similarity(p, q) -> float:
    """``1 / (1 + rms(p - q))``; equals 1 exactly when ``p == q``."""
    p = np.asarray(p, dtype=float).reshape(-1)
    q = np.asarray(q, dtype=float).reshape(-1)
    if p.size != q.size:
        raise LengthMismatch(q.size, p.size)
    return float(1.0 / (1.0 + np.sqrt(np.mean((p - q) ** 2))))


def _aars_scale(basis, s, form):
    if form == "more_or_less":
        return validate_membership(np.minimum(1.0, basis / s))
    if form == "reduction":
        return validate_membership(basis * s)
    raise FuzzyError(f"unknown AARS form {form!r}; choose from {AARS_FORMS}")


def aars_fmp(rule: Rule, premise, form="more_or_less", grid="extended"):
    """Scale ``B`` by the similarity between premise and antecedent."""
    a, b, p, fa, fb = _setup(rule, premise, "a", grid)
    return _aars_scale(rule.consequent, aars_similarity(p, a), form)


def aars_fmt(rule: Rule, premise, form="more_or_less", grid="extended"):
    """Scale ``A`` by the similarity between premise and consequent ``B``.

    The premise is compared with ``B`` itself, so ``B* = B`` returns ``A``.
    """
    a, b, p, fa, fb = _setup(rule, premise, "b", grid)
    return _aars_scale(rule.antecedent, aars_similarity(p, b), form)


FMP_FUNCS = {"cri": cri_fmp, "tip": tip_fmp, "qip": qip_fmp, "aars": aars_fmp}
FMT_FUNCS = {"cri": cri_fmt, "tip": tip_fmt, "qip": qip_fmt, "aars": aars_fmt}
