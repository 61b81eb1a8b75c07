"""Serialise records, averages, traces and timings as csv, json or markdown.

Vectors are shown with 4 decimals and percentages with 2. Output is a pure
function of the input, so repeated runs are byte-identical.
"""
import csv
import io
import json

import numpy as np

FORMATS = ("csv", "json", "markdown")
CSV_COLUMNS = ("method", "operator", "case_id", "premise", "conclusion", "rpcf_percent")


def fmt_grade(x) -> str:
    s = f"{float(x):.4f}"
    return "0.0000" if s == "-0.0000" else s


def fmt_pct(x) -> str:
    return f"{float(x):.2f}"


def fmt_vector(v, sep=";") -> str:
    return sep.join(fmt_grade(x) for x in np.asarray(v, dtype=float).reshape(-1))


def round_vector(v):
    return [float(fmt_grade(x)) for x in np.asarray(v, dtype=float).reshape(-1)]


def parse_vector(text, sep=";"):
    return [float(x) for x in text.split(sep)] if text else []


def _check(fmt):
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _markdown(rows, header):
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def record_rows(records):
    return [
        (r.method.family, r.method.operator, r.case.case_id, fmt_vector(r.case.premise),
         fmt_vector(r.conclusion), fmt_pct(r.rpcf_percent))
        for r in records
    ]


def format_records(records, fmt="csv") -> str:
    """One row per method x case in the fixed column order."""
    _check(fmt)
    rows = record_rows(records)
    if fmt == "csv":
        return _csv(rows, CSV_COLUMNS)
    if fmt == "markdown":
        pretty = [(a, b, c, "[" + d.replace(";", ", ") + "]", "[" + e.replace(";", ", ") + "]", f)
                  for a, b, c, d, e, f in rows]
        return _markdown(pretty, CSV_COLUMNS)
    return _json([
        {"method": r.method.family, "operator": r.method.operator, "case_id": r.case.case_id,
         "premise": round_vector(r.case.premise), "conclusion": round_vector(r.conclusion),
         "rpcf_percent": float(fmt_pct(r.rpcf_percent))}
        for r in records
    ])


def format_averages(report, fmt="csv") -> str:
    """Per-method FMP / FMT / total averages, then one row per family."""
    _check(fmt)
    header = ("method", "operator", "fmp_percent", "fmt_percent", "total_percent")
    rows = [(m.family, m.operator, fmt_pct(report.fmp_avg[m]), fmt_pct(report.fmt_avg[m]),
             fmt_pct(report.total_avg[m])) for m in report.methods]
    rows += [(fam, "(family)", *(fmt_pct(x) for x in vals))
             for fam, vals in report.family_averages().items()]
    if fmt == "csv":
        return _csv(rows, header)
    if fmt == "markdown":
        return _markdown(rows, header)
    return _json([dict(zip(header, (a, b, float(c), float(d), float(e)))) for a, b, c, d, e in rows])


def format_report(report, fmt="csv") -> str:
    if fmt == "json":
        recs = json.loads(format_records(report.records, "json"))
        avgs = json.loads(format_averages(report, "json"))
        return _json({"class": report.class_id, "records": recs, "averages": avgs})
    sep = "\n" if fmt == "csv" else "\n"
    return format_records(report.records, fmt) + sep + format_averages(report, fmt)


_TRACE_VECTORS = ("extended_antecedent", "extended_premise", "extended_consequent", "sign",
                  "vectorial_dm", "quasi_quasi", "quasi", "conclusion")


def format_trace(trace, fmt="markdown") -> str:
    """Every intermediate of an EDM inference."""
    _check(fmt)
    p = trace.plan
    scalars = [("direction", trace.direction), ("case", trace.case), ("form", trace.form),
               ("u", p.u), ("v", p.v), ("L", p.L), ("factor_a", p.factor_a), ("factor_b", p.factor_b),
               ("edm", fmt_grade(trace.edm)), ("eta", fmt_grade(trace.eta)), ("xi", fmt_grade(trace.xi))]
    vectors = [(name, getattr(trace, name)) for name in _TRACE_VECTORS]
    if fmt == "json":
        out = {k: (float(v) if k in ("edm", "eta", "xi") else v) for k, v in scalars}
        out.update({k: round_vector(v) for k, v in vectors})
        return _json(out)
    rows = [(k, v) for k, v in scalars] + [(k, fmt_vector(v)) for k, v in vectors]
    if fmt == "csv":
        return _csv(rows, ("field", "value"))
    return _markdown([(k, str(v).replace(";", ", ")) for k, v in rows], ("field", "value"))


def format_timing(timing, fmt="markdown") -> str:
    """One row per method: T1..Tn in ms and their mean."""
    _check(fmt)
    n = timing.repetitions
    header = ("method", *(f"T{i + 1}_ms" for i in range(n)), "average_ms")
    rows = [(m.label if hasattr(m, "label") else str(m), *(f"{t:.3f}" for t in ts),
             f"{timing.averages[m]:.3f}") for m, ts in timing.runs.items()]
    if fmt == "csv":
        return _csv(rows, header)
    if fmt == "markdown":
        return _markdown(rows, header)
    return _json([{"method": r[0], "runs_ms": [float(x) for x in r[1:-1]], "average_ms": float(r[-1])}
                  for r in rows])
