"""
Every identity for every acceptance measure
===========================================

``measure_catalog`` runs all identity groups and returns a residual report.
Printed forms that do not hold as stated are kept as data (DATA rows) next to
the corrected identity that gates.
"""

from circleorth import acceptance_suite, measure_catalog

for m in acceptance_suite():
    rep = measure_catalog(m, N=4)
    data = ", ".join(r.id for r in rep.data_mismatches())
    print(f"{m.describe():45s} {'pass' if rep.passed else 'FAIL'}  ({len(rep)} identities)")
    if data:
        print(f"    printed forms off: {data}")

print()
print(measure_catalog(acceptance_suite()[2], N=3).summary())
