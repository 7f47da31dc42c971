"""
Generalized closed sets on a four-point space
=============================================

Class membership of every subset, and where the derived closures land.
"""

from hstar.ladder import CLOSED_TYPES, ClosureOp, classify, derived_closure, extent
from hstar.report import fixture_spaces

X = fixture_spaces()["E1"]
print(X)

# {r} is not closed, but it already is H*-closed
r = 0b0100
cv = classify(X, r)
print("true classes of {r}:", ", ".join(f.value for f in cv.true_classes()))

# extents grow as the closedness notion gets weaker
for fam in CLOSED_TYPES:
    print(f"{fam.value:<20} {len(extent(X, fam)):2d} of 16")

# the closures shrink in step
for op in ClosureOp:
    print(f"{op.value:<7}", X.format(derived_closure(X, r, op)))
