"""Reductive-property scoring, class suites, aggregation and timing."""
import time
from dataclasses import dataclass, field

import numpy as np

from .baselines import FMP_FUNCS, FMT_FUNCS, MethodId
from .core import (
    FuzzyError,
    Hedge,
    InconsistentMethods,
    LengthMismatch,
    MissingTiltVector,
    Rule,
    UnsupportedCombination,
    apply_hedge,
    validate_membership,
)
from .edm import fmp_edm, fmt_edm

DEFAULT_ST_A = (1.0, 0.2, 0.0, 0.0, 0.0)
DEFAULT_ST_B = (0.0, 0.0, 0.0, 0.0, 0.0, 0.2, 1.0)

CLASS_CASES = {1: (1, 2, 3, 4, 6, 7, 8, 9), 2: (1, 2, 3, 5, 6, 7, 8, 10)}

# premise hedge per case; FMP hedges act on A, FMT hedges on B
CASE_HEDGES = {
    1: Hedge("identity"),
    2: Hedge("very"),
    3: Hedge("more_or_less"),
    4: Hedge("not"),
    6: Hedge("not"),
    7: Hedge("very", negated=True),
    8: Hedge("more_or_less", negated=True),
    9: Hedge("identity"),
}


def direction_of(case_id: int) -> str:
    if case_id in (1, 2, 3, 4, 5):
        return "fmp"
    if case_id in (6, 7, 8, 9, 10):
        return "fmt"
    raise FuzzyError(f"case must be in 1..10, got {case_id!r}")


def expected_conclusion(case_id: int, rule: Rule, st_vector=None, plain_targets=False):
    """Target conclusion of a case.

    With ``plain_targets`` cases 2/3 expect ``B`` and cases 7/8 expect ``1 - A``.
    """
    a, b = rule.antecedent, rule.consequent
    if case_id in (5, 10):
        if st_vector is None:
            raise MissingTiltVector(f"case {case_id} needs a slightly tilted vector")
        st = validate_membership(st_vector)
        want = b.size if case_id == 5 else a.size
        if st.size != want:
            raise LengthMismatch(want, st.size, "tilted vector")
        return st
    if plain_targets and case_id in (2, 3):
        case_id = 1
    if plain_targets and case_id in (7, 8):
        case_id = 6
    table = {
        1: lambda: b,
        2: lambda: b**2,
        3: lambda: np.sqrt(b),
        4: lambda: 1.0 - b,
        6: lambda: 1.0 - a,
        7: lambda: 1.0 - a**2,
        8: lambda: 1.0 - np.sqrt(a),
        9: lambda: a,
    }
    if case_id not in table:
        raise FuzzyError(f"case must be in 1..10, got {case_id!r}")
    return validate_membership(table[case_id]())


def rpcf(conclusion, expected) -> float:
    """``100 * (1 - mean |conclusion - expected|)``."""
    c = np.asarray(conclusion, dtype=float).reshape(-1)
    e = np.asarray(expected, dtype=float).reshape(-1)
    if c.size != e.size:
        raise LengthMismatch(e.size, c.size, "conclusion")
    if c.size == 0:
        raise FuzzyError("cannot score empty vectors")
    return float((1.0 - np.mean(np.abs(c - e))) * 100.0)


@dataclass(frozen=True, eq=False)
class PremiseCase:
    """One row of a suite: the premise as a hedge plus its materialised vector and target."""

    case_id: int
    hedge: Hedge
    premise: np.ndarray
    expected: np.ndarray

    @property
    def direction(self):
        return direction_of(self.case_id)


def make_case(case_id: int, rule: Rule, st_vectors=None, plain_targets=False, hedge=None):
    """Build the :class:`PremiseCase` for ``case_id``.

    ``st_vectors`` is ``(s.t. A, s.t. B)``. Case 5 uses s.t. A as premise and
    s.t. B as target; case 10 the other way round.
    """
    direction = direction_of(case_id)
    ref = rule.antecedent if direction == "fmp" else rule.consequent
    st_a, st_b = st_vectors if st_vectors is not None else (None, None)
    if hedge is None:
        if case_id == 5:
            if st_a is None:
                raise MissingTiltVector("case 5 needs a slightly tilted antecedent")
            hedge = Hedge("custom", st_a)
        elif case_id == 10:
            if st_b is None:
                raise MissingTiltVector("case 10 needs a slightly tilted consequent")
            hedge = Hedge("custom", st_b)
        else:
            hedge = CASE_HEDGES[case_id]
    target_st = st_b if case_id == 5 else st_a
    expected = expected_conclusion(case_id, rule, target_st, plain_targets)
    return PremiseCase(case_id, hedge, apply_hedge(ref, hedge), expected)


@dataclass(frozen=True, eq=False)
class RpcfRecord:
    method: MethodId
    case: PremiseCase
    conclusion: np.ndarray
    rpcf_percent: float


def infer(method: MethodId, rule: Rule, case: PremiseCase, grid="extended"):
    """Conclusion of ``method`` for ``case`` (no scoring)."""
    direction = case.direction
    if method.family == "edm":
        tilted = case.expected if case.case_id in (5, 10) else None
        fn = fmp_edm if direction == "fmp" else fmt_edm
        return fn(rule, case.hedge, case.case_id, method.operator, tilted).conclusion
    table = FMP_FUNCS if direction == "fmp" else FMT_FUNCS
    if method.family not in table:
        raise UnsupportedCombination(f"{method.label} has no {direction.upper()} variant")
    return table[method.family](rule, case.hedge, method.operator, grid=grid)


def run_case(method: MethodId, rule: Rule, case: PremiseCase, grid="extended") -> RpcfRecord:
    conclusion = infer(method, rule, case, grid)
    return RpcfRecord(method, case, conclusion, rpcf(conclusion, case.expected))


def _mean(xs):
    return float(np.mean(xs)) if len(xs) else float("nan")


@dataclass(eq=False)
class ExperimentReport:
    """Records of a suite plus per-method averages (percent).

    ``fmp_avg``, ``fmt_avg`` and ``total_avg`` are keyed by :class:`MethodId`.
    ``total_avg`` is the mean of the FMP and FMT averages.
    """

    records: list
    class_id: object
    fmp_avg: dict = field(default_factory=dict)
    fmt_avg: dict = field(default_factory=dict)
    total_avg: dict = field(default_factory=dict)
    timings: dict | None = None

    @property
    def methods(self):
        return list(self.total_avg)

    @classmethod
    def from_records(cls, records, class_id):
        rep = cls(list(records), class_id)
        methods = list(dict.fromkeys(r.method for r in records))
        for m in methods:
            fmp = [r.rpcf_percent for r in records if r.method == m and r.case.direction == "fmp"]
            fmt = [r.rpcf_percent for r in records if r.method == m and r.case.direction == "fmt"]
            rep.fmp_avg[m] = _mean(fmp)
            rep.fmt_avg[m] = _mean(fmt)
            rep.total_avg[m] = _mean([x for x in (rep.fmp_avg[m], rep.fmt_avg[m]) if x == x])
        return rep

    def family_averages(self):
        """``{family: (fmp, fmt, total)}`` averaged over the operators of each family."""
        out = {}
        for fam in dict.fromkeys(m.family for m in self.methods):
            ms = [m for m in self.methods if m.family == fam]
            out[fam] = tuple(_mean([d[m] for m in ms]) for d in (self.fmp_avg, self.fmt_avg, self.total_avg))
        return out


def suite_cases(rule: Rule, class_id: int, st_vectors=None, plain_targets=False):
    if class_id not in CLASS_CASES:
        raise FuzzyError(f"class must be 1 or 2, got {class_id!r}")
    return [make_case(c, rule, st_vectors, plain_targets) for c in CLASS_CASES[class_id]]


def run_class_suite(methods, rule: Rule, class_id: int, st_vectors=None, plain_targets=False, grid="extended"):
    """Run every method on every case of Class 1 or Class 2.

    ``st_vectors`` defaults to the tilted pair of the reference rule when the
    rule has that shape, and is otherwise required for Class 2.
    """
    if st_vectors is None and class_id == 2 and rule.u == len(DEFAULT_ST_A) and rule.v == len(DEFAULT_ST_B):
        st_vectors = (DEFAULT_ST_A, DEFAULT_ST_B)
    cases = suite_cases(rule, class_id, st_vectors, plain_targets)
    records = [run_case(m, rule, c, grid) for m in methods for c in cases]
    return ExperimentReport.from_records(records, class_id)


def aggregate_report(reports) -> ExperimentReport:
    """Average per-method FMP/FMT/total figures across several reports.

    Raises
    ------
    InconsistentMethods
        If the reports do not cover the same methods.
    """
    reports = list(reports)
    if not reports:
        raise FuzzyError("nothing to aggregate")
    if len(reports) == 1:
        return reports[0]
    methods = reports[0].methods
    for r in reports[1:]:
        if set(r.methods) != set(methods):
            raise InconsistentMethods("reports cover different method sets")
    out = ExperimentReport([rec for r in reports for rec in r.records], "combined")
    for m in methods:
        out.fmp_avg[m] = _mean([r.fmp_avg[m] for r in reports])
        out.fmt_avg[m] = _mean([r.fmt_avg[m] for r in reports])
        out.total_avg[m] = _mean([r.total_avg[m] for r in reports])
    return out


@dataclass(frozen=True)
class TimingReport:
    """Wall times in milliseconds; ``runs[method]`` has one entry per repetition."""

    runs: dict
    repetitions: int

    @property
    def averages(self):
        return {m: float(np.mean(t)) for m, t in self.runs.items()}


def timing_harness(methods, rule: Rule, class_id=1, repetitions=6, st_vectors=None) -> TimingReport:
    """Time one full class suite per method, ``repetitions`` times."""
    if repetitions < 1:
        raise FuzzyError("repetitions must be >= 1")
    runs = {}
    for m in methods:
        ts = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            run_class_suite([m], rule, class_id, st_vectors)
            ts.append((time.perf_counter() - t0) * 1e3)
        runs[m] = ts
    return TimingReport(runs, repetitions)
