"""
Reductive property of EDM on the 5 x 7 benchmark rule
======================================================

Class 1 uses the hedged premises (very, more or less, not); Class 2 swaps
the "not" rows for slightly tilted premises.
"""
from fuzzyedm import Rule
from fuzzyedm.baselines import MethodId
from fuzzyedm.evaluation import aggregate_report, run_class_suite
from fuzzyedm.reporting import format_averages, format_records

rule = Rule([1, 0.3, 0, 0, 0], [0, 0, 0, 0, 0, 0.3, 1])
edm = [MethodId("edm", "three_valued"), MethodId("edm", "two_valued")]

reports = []
for class_id in (1, 2):
    rep = run_class_suite(edm, rule, class_id)
    reports.append(rep)
    print(f"## Class {class_id}\n")
    print(format_records(rep.records, "markdown"))
    print(format_averages(rep, "markdown"))

print("## Both classes\n")
print(format_averages(aggregate_report(reports), "markdown"))
