"""
Counting finite topologies
==========================

Every topology on a few points, labeled and up to homeomorphism.
"""

from collections import Counter

from hstar.atlas import canonical_form, enumerate_topologies

for n in range(1, 6):
    labeled = sum(1 for _ in enumerate_topologies(n))
    classes = sum(1 for _ in enumerate_topologies(n, up_to_homeo=True))
    print(f"n={n}: {labeled:5d} labeled, {classes:4d} up to homeomorphism")

# how many labelings does each homeomorphism class of 3-point spaces have?
sizes = Counter(canonical_form(s) for s in enumerate_topologies(3))
for sp in enumerate_topologies(3, up_to_homeo=True):
    print(sizes[canonical_form(sp)], sp)
