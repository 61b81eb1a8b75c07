"""
Regenerate the published benchmark tables
==========================================

Every stored table is recomputed and compared cell by cell. Vectors use a
5e-3 per-grade tolerance, percentages 0.15 points. Cells whose printed values
contradict each other are reported as "disputed".
"""
import sys
import tempfile

from fuzzyedm.reproduce import TABLE_IDS, format_diff, reproduce_paper_tables

out_dir = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(prefix="fuzzyedm_tables_")
summary = reproduce_paper_tables(TABLE_IDS, out_dir, "markdown")

for tid in TABLE_IDS:
    cells = [c for c in summary.cells if c.table_id == tid]
    n = {s: sum(c.status == s for c in cells) for s in ("pass", "fail", "disputed")}
    print(f"table {str(tid):>4}: {n['pass']:3d} pass {n['fail']:3d} fail {n['disputed']:3d} disputed")

print("\nfiles written to", out_dir)
print("\nfailing cells:\n")
print(format_diff(summary.failures, "markdown"))
