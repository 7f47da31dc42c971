"""
Three flavours of normality
===========================

Normal, g-normal and H*-normal spaces among the small topologies.
"""

from collections import Counter

from hstar.atlas import find_witness, spaces_upto
from hstar.separation import Normality, hstar_normal_characterization, is_normal_variant

tally = Counter()
for sp in spaces_upto(4):
    tally[tuple(is_normal_variant(sp, v) for v in Normality)] += 1
print("(normal, g-normal, H*-normal) -> number of spaces with n <= 4")
for key, count in sorted(tally.items()):
    print(" ", key, count)

# the smallest H*-normal space that is not g-normal
X, _ = find_witness({"H*-normal": True, "g-normal": False}, max_n=4)
print(X)
print("equivalent forms:", [hstar_normal_characterization(X, k) for k in (1, 2, 3)])
