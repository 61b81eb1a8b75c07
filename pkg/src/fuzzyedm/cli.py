"""Config-driven command line front end.

Exit codes: 0 success, 1 validation error, 2 reproduction diff failure,
3 I/O error.
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import yaml

from .baselines import GRIDS, MethodId
from .core import FuzzyError, Hedge, Rule, validate_membership
from .edm import SIGN_FORMS, fmp_edm, fmt_edm
from .evaluation import (
    CASE_HEDGES,
    DEFAULT_ST_A,
    DEFAULT_ST_B,
    aggregate_report,
    direction_of,
    make_case,
    run_case,
    run_class_suite,
    timing_harness,
)
from .reporting import FORMATS, format_records, format_report, format_timing, format_trace
from .reproduce import GRADE_TOL, PCT_TOL, TABLE_IDS, IoError, format_diff, reproduce_paper_tables

MODES = ("reason", "experiment", "compare", "timing")
EXIT_OK, EXIT_INVALID, EXIT_DIFF, EXIT_IO = 0, 1, 2, 3

HEDGE_NAMES = {
    "identity": Hedge("identity"),
    "very": Hedge("very"),
    "more_or_less": Hedge("more_or_less"),
    "not": Hedge("not"),
    "not_very": Hedge("very", negated=True),
    "not_more_or_less": Hedge("more_or_less", negated=True),
}


class SchemaError(FuzzyError):
    def __init__(self, path, reason):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


@dataclass
class RunConfig:
    mode: str
    rule: Rule
    premises: list
    methods: list
    classes: tuple = (1,)
    st_vectors: tuple | None = None
    plain_targets: bool = False
    grid: str = "extended"
    repetitions: int = 6
    output_format: str = "markdown"
    output_path: str | None = None
    pct_tol: float = PCT_TOL
    grade_tol: float = GRADE_TOL

    @property
    def cells(self):
        return len(self.premises) * len(self.methods)


def _vector(raw, path):
    if not isinstance(raw, (list, tuple)):
        raise SchemaError(path, "expected a list of grades")
    try:
        return validate_membership(raw)
    except (TypeError, ValueError) as e:
        raise SchemaError(path, str(e)) from None


def _mapping(raw, path):
    if not isinstance(raw, dict):
        raise SchemaError(path, "expected a mapping")
    return raw


def parse_config(source: str) -> RunConfig:
    """Parse and validate a YAML (or JSON) run description.

    Raises
    ------
    SchemaError
        With the dotted path of the offending field.
    """
    try:
        doc = yaml.safe_load(source)
    except yaml.YAMLError as e:
        raise SchemaError("$", f"not a valid document: {e}") from None
    doc = _mapping(doc, "$")
    known = {"mode", "rule", "premises", "methods", "class", "tilted", "plain_targets", "grid",
             "repetitions", "output", "tolerance"}
    for k in doc:
        if k not in known:
            raise SchemaError(k, "unknown key")

    mode = doc.get("mode", "compare")
    if mode not in MODES:
        raise SchemaError("mode", f"must be one of {MODES}")

    rule_doc = _mapping(doc.get("rule"), "rule")
    if "antecedent" not in rule_doc or "consequent" not in rule_doc:
        raise SchemaError("rule", "needs antecedent and consequent")
    rule = Rule(_vector(rule_doc["antecedent"], "rule.antecedent"),
                _vector(rule_doc["consequent"], "rule.consequent"))

    st = None
    if "tilted" in doc:
        t = _mapping(doc["tilted"], "tilted")
        try:
            st = (_vector(t["antecedent"], "tilted.antecedent"), _vector(t["consequent"], "tilted.consequent"))
        except KeyError as e:
            raise SchemaError("tilted", f"missing {e.args[0]}") from None
        if st[0].size != rule.u:
            raise SchemaError("tilted.antecedent", f"length {st[0].size}, expected {rule.u}")
        if st[1].size != rule.v:
            raise SchemaError("tilted.consequent", f"length {st[1].size}, expected {rule.v}")
    elif rule.u == len(DEFAULT_ST_A) and rule.v == len(DEFAULT_ST_B):
        st = (DEFAULT_ST_A, DEFAULT_ST_B)

    classes = doc.get("class", 1)
    classes = {"both": (1, 2), 1: (1,), 2: (2,)}.get(classes)
    if classes is None:
        raise SchemaError("class", "must be 1, 2 or both")

    plain = doc.get("plain_targets", False)
    if not isinstance(plain, bool):
        raise SchemaError("plain_targets", "must be true or false")

    premises = []
    for i, p in enumerate(doc.get("premises") or []):
        premises.append(_premise(p, f"premises[{i}]", rule, st, plain))

    methods = []
    for i, m in enumerate(doc.get("methods") or []):
        path = f"methods[{i}]"
        m = _mapping(m, path)
        try:
            methods.append(MethodId(m.get("family", ""), m.get("operator", "")))
        except FuzzyError as e:
            raise SchemaError(path, str(e)) from None

    if mode in ("reason", "compare") and not (premises and methods):
        raise SchemaError("$", f"{mode} mode needs at least one premise and one method")
    if mode in ("experiment", "timing") and not methods:
        raise SchemaError("methods", f"{mode} mode needs at least one method")
    if 2 in classes and st is None and mode in ("experiment", "timing"):
        raise SchemaError("tilted", "class 2 needs tilted vectors for this rule")

    grid = doc.get("grid", "extended")
    if grid not in GRIDS:
        raise SchemaError("grid", f"must be one of {GRIDS}")
    reps = doc.get("repetitions", 6)
    if not isinstance(reps, int) or isinstance(reps, bool) or reps < 1:
        raise SchemaError("repetitions", "must be a positive integer")

    out = _mapping(doc.get("output", {}), "output")
    fmt = out.get("format", "markdown")
    if fmt not in FORMATS:
        raise SchemaError("output.format", f"must be one of {FORMATS}")
    tol = _mapping(doc.get("tolerance", {}), "tolerance")

    return RunConfig(mode, rule, premises, methods, classes, st, plain, grid, reps, fmt,
                     out.get("path"), float(tol.get("percent", PCT_TOL)), float(tol.get("grade", GRADE_TOL)))


def _premise(raw, path, rule, st, plain):
    raw = _mapping(raw, path)
    case_id = raw.get("case")
    if not isinstance(case_id, int) or not 1 <= case_id <= 10:
        raise SchemaError(f"{path}.case", "must be an integer in 1..10")
    side = rule.u if direction_of(case_id) == "fmp" else rule.v
    name = raw.get("hedge")
    vec = raw.get("vector")
    if name is None:
        name = "custom" if vec is not None or case_id in (5, 10) else None
    if name == "custom":
        if vec is None:
            if case_id in (5, 10) and st is not None:
                vec = st[0] if case_id == 5 else st[1]
            else:
                raise SchemaError(f"{path}.vector", "custom premise needs a vector")
        v = _vector(vec, f"{path}.vector")
        if v.size != side:
            raise SchemaError(f"{path}.vector", f"length {v.size}, expected {side}")
        hedge = Hedge("custom", v)
    elif name is None:
        hedge = CASE_HEDGES[case_id]
    elif name in HEDGE_NAMES:
        if vec is not None:
            raise SchemaError(f"{path}.vector", f"hedge {name!r} takes no vector")
        hedge = HEDGE_NAMES[name]
    else:
        raise SchemaError(f"{path}.hedge", f"must be one of {sorted(HEDGE_NAMES) + ['custom']}")
    if case_id in (5, 10) and st is None:
        raise SchemaError("tilted", f"case {case_id} needs tilted vectors for this rule")
    try:
        return make_case(case_id, rule, st, plain, hedge=hedge)
    except FuzzyError as e:
        raise SchemaError(path, str(e)) from None


def _with_sign_form(methods, sign_form):
    if sign_form in (None, "both"):
        if sign_form == "both" and any(m.family == "edm" for m in methods):
            rest = [m for m in methods if m.family != "edm"]
            return [MethodId("edm", f) for f in SIGN_FORMS] + rest
        return methods
    out = []
    for m in methods:
        m = MethodId("edm", sign_form) if m.family == "edm" else m
        if m not in out:
            out.append(m)
    return out


def execute(config: RunConfig, sign_form=None) -> str:
    """Run ``config`` and return the serialised report."""
    methods = _with_sign_form(config.methods, sign_form)
    fmt = config.output_format
    if config.mode == "compare":
        records = [run_case(m, config.rule, c, config.grid) for m in methods for c in config.premises]
        return format_records(records, fmt)
    if config.mode == "reason":
        parts = []
        for c in config.premises:
            for m in methods:
                if m.family == "edm":
                    fn = fmp_edm if c.direction == "fmp" else fmt_edm
                    tilted = c.expected if c.case_id in (5, 10) else None
                    parts.append(format_trace(fn(config.rule, c.hedge, c.case_id, m.operator, tilted), fmt))
                else:
                    parts.append(format_records([run_case(m, config.rule, c, config.grid)], fmt))
        return "\n".join(parts)
    if config.mode == "experiment":
        reports = [run_class_suite(methods, config.rule, k, config.st_vectors, config.plain_targets, config.grid)
                   for k in config.classes]
        return format_report(aggregate_report(reports), fmt)
    timing = timing_harness(methods, config.rule, config.classes[0], config.repetitions, config.st_vectors)
    return format_timing(timing, fmt)


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from e


def build_parser():
    p = argparse.ArgumentParser(prog="fuzzyedm", description="EDM fuzzy reasoning and baseline comparison.")
    p.add_argument("--mode", choices=MODES, help="override the config's mode")
    p.add_argument("--config", help="YAML or JSON run description")
    p.add_argument("--table", help="comma separated table ids to reproduce (2..14, fig1, or 'all')")
    p.add_argument("--format", choices=FORMATS, help="output format")
    p.add_argument("--out", help="output file, or directory with --table")
    p.add_argument("--sign-form", choices=SIGN_FORMS + ("both",), help="EDM sign form(s) to run")
    p.add_argument("--tolerance", type=float, help="percentage-point tolerance for --table diffs")
    return p


def _tables(arg):
    if arg.strip().lower() == "all":
        return list(TABLE_IDS)
    return [t.strip() for t in arg.split(",") if t.strip()]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.table is not None:
            fmt = args.format or "markdown"
            summary = reproduce_paper_tables(_tables(args.table), args.out, fmt,
                                             pct_tol=args.tolerance if args.tolerance is not None else PCT_TOL)
            counts = summary.counts()
            if args.out is None:
                sys.stdout.write(format_diff(summary.cells, fmt))
            sys.stderr.write(f"cells: {counts['pass']} pass, {counts['fail']} fail, "
                             f"{counts['disputed']} disputed\n")
            return EXIT_OK if summary.ok else EXIT_DIFF
        if args.config is None:
            sys.stderr.write("error: --config or --table is required\n")
            return EXIT_INVALID
        try:
            source = Path(args.config).read_text(encoding="utf-8")
        except OSError as e:
            sys.stderr.write(f"error: cannot read {args.config}: {e}\n")
            return EXIT_IO
        config = parse_config(source)
        if args.mode:
            config.mode = args.mode
        if args.format:
            config.output_format = args.format
        _emit(execute(config, args.sign_form), args.out or config.output_path)
        return EXIT_OK
    except IoError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_IO
    except (FuzzyError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
