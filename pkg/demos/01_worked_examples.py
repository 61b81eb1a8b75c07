"""
EDM reasoning step by step
==========================

A rule "if x is A then y is B" over universes of different sizes, a premise
close to A, and every intermediate of the inference.
"""
import numpy as np

from fuzzyedm import Rule, fmp_edm, fmt_edm

np.set_printoptions(precision=4, suppress=True)

# identical premise: the consequent comes back unchanged
rule = Rule([1, 0.4, 0], [0, 0.4, 0.7, 1])
print("identity premise ->", fmp_edm(rule, rule.antecedent).conclusion)

# 4 points on X, 6 on Y: both sides are resampled onto a 12 point grid
rule = Rule([1, 0.8, 0.4, 0], [0, 0.2, 0.4, 0.7, 0.9, 1])
premise = [1, 0.9, 0.3, 0]
tr = fmp_edm(rule, premise, case=1, form="three_valued")
print("\ngrid length", tr.plan.L, "factors", tr.plan.factor_a, tr.plan.factor_b)
print("extended A  ", tr.extended_antecedent)
print("extended A* ", tr.extended_premise)
print("extended B  ", tr.extended_consequent)
print("edm          %.4f" % tr.edm)
print("signs        ", tr.sign)
print("B + C        ", tr.quasi_quasi)
print("at anchors   ", tr.quasi)
print("B*           ", tr.conclusion)

# the two-valued sign form pushes unchanged positions up as well
tr2 = fmp_edm(rule, premise, case=1, form="two_valued")
print("\ntwo-valued signs", tr2.sign)
print("two-valued B*   ", tr2.conclusion)

# modus tollens runs on the reversed rule "if y is not B then x is not A"
tr = fmt_edm(rule, [1, 0.9, 0.8, 0.3, 0.1, 0], case=6)
print("\nFMT edm %.4f" % tr.edm, "A* =", tr.conclusion)
print("FMT two-valued A* =", fmt_edm(rule, [1, 0.9, 0.8, 0.3, 0.1, 0], 6, "two_valued").conclusion)
