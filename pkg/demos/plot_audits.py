"""
Auditing theorems on small models
=================================

Exhaustive checks of map theorems, and the implication lattice between
closed-set classes mined from every topology on at most four points.
"""

import time

from hstar.atlas import mine_implications
from hstar.audit import THEOREM_IDS, audit_theorem
from hstar.report import repro

for tid in THEOREM_IDS:
    t0 = time.perf_counter()
    r = audit_theorem(tid)
    print(f"{tid:<6} checked {r.instances_checked:6d}  skipped {r.skipped_precondition:6d}  "
          f"counterexamples {len(r.counterexamples)}  ({time.perf_counter() - t0:.2f}s)")

lattice = mine_implications(4)
print("\nclasses that coincide on n <= 4:")
for group in lattice.equivalence_classes():
    if len(group) > 1:
        print("  " + " = ".join(f.value for f in group))
print("covering implications:")
for lo, hi in lattice.hasse():
    print(f"  {lo[0].value} -> {hi[0].value}")

# re-run the worked examples
for rec in repro():
    print(rec.source, rec.engine_verdict)
