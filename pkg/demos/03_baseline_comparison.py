"""
EDM against CRI, TIP, QIP and AARS
==================================

All methods are scored with the same RPCF criterion on both classes. The
residuated baselines are sensitive to how anchor points are computed on the
common grid, so the table is produced for two grids.
"""
import numpy as np

from fuzzyedm import NOT, Rule
from fuzzyedm.baselines import MethodId, cri_fmp, tip_fmt
from fuzzyedm.evaluation import aggregate_report, run_class_suite

rule = Rule([1, 0.3, 0, 0, 0], [0, 0, 0, 0, 0, 0.3, 1])
pairs = ("lukasiewicz", "godel", "r0", "goguen")
methods = ([MethodId("edm", f) for f in ("three_valued", "two_valued")]
           + [MethodId(fam, p) for fam in ("cri", "tip", "qip") for p in pairs]
           + [MethodId("aars", f) for f in ("more_or_less", "reduction")])

for grid in ("extended", "incremental"):
    both = aggregate_report([run_class_suite(methods, rule, k, grid=grid) for k in (1, 2)])
    print(f"\nfamily averages, grid={grid}")
    print(f"{'family':8}{'FMP':>9}{'FMT':>9}{'total':>9}")
    for fam, (fmp, fmt, total) in both.family_averages().items():
        print(f"{fam:8}{fmp:9.2f}{fmt:9.2f}{total:9.2f}")

# one cell that moves: 0.3 on the incremental grid is 0.30000000000000004,
# which flips a Goedel implication test
for grid in ("extended", "incremental"):
    print(grid, np.round(tip_fmt(rule, rule.consequent, "godel", grid=grid), 4))

# a premise far from the antecedent saturates the sup-t-norm composition
print("\nCRI-godel, premise not A:", cri_fmp(rule, NOT, "godel"))
