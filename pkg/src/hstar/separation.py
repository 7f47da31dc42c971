"""Normality variants and the three equivalent forms of H*-normality."""
from __future__ import annotations

import enum

from .ladder import ClosureOp, Family, ladder
from .space import FiniteSpace


class Normality(str, enum.Enum):
    NORMAL = "normal"
    G_NORMAL = "g-normal"
    HSTAR_NORMAL = "H*-normal"

    def __str__(self):
        return self.value

    @property
    def family(self) -> Family:
        return _SEPARATING[self]


_SEPARATING = {
    Normality.NORMAL: Family.OPEN,
    Normality.G_NORMAL: Family.G_OPEN,
    Normality.HSTAR_NORMAL: Family.HSTAR_OPEN,
}


def separating_pair(space: FiniteSpace, a: int, b: int, fam: Family):
    """First ``(U, V)`` from ``fam`` with ``a ⊆ U``, ``b ⊆ V``, ``U ∩ V = ∅``, else None."""
    members = ladder(space).members(fam)
    ups_a = [u for u in members if a & ~u == 0]
    ups_b = [v for v in members if b & ~v == 0]
    for u in ups_a:
        for v in ups_b:
            if u & v == 0:
                return u, v
    return None


def disjoint_closed_pairs(space: FiniteSpace):
    closeds = space.closeds
    for i, a in enumerate(closeds):
        for b in closeds[i:]:
            if a & b == 0:
                yield a, b


def normality_failure(space: FiniteSpace, v: Normality):
    """A disjoint closed pair that ``v``'s family cannot separate, or None."""
    fam = Normality(v).family
    for a, b in disjoint_closed_pairs(space):
        if separating_pair(space, a, b, fam) is None:
            return a, b
    return None


def is_normal_variant(space: FiniteSpace, v: Normality) -> bool:
    key = ("normality", Normality(v))
    out = space._cache.get(key)
    if out is None:
        out = space._cache[key] = normality_failure(space, v) is None
    return out


def _form2(space: FiniteSpace) -> bool:
    # open Q, R covering X need H*-closed D ⊆ Q, E ⊆ R that still cover X
    full = space.full
    hc = ladder(space).members(Family.HSTAR_CLOSED)
    opens = space.opens
    for i, q in enumerate(opens):
        for r in opens[i:]:
            if q | r != full:
                continue
            ds = [d for d in hc if d & ~q == 0]
            es = [e for e in hc if e & ~r == 0]
            if not any(d | e == full for d in ds for e in es):
                return False
    return True


def _form3(space: FiniteSpace) -> bool:
    lad = ladder(space)
    ho = lad.members(Family.HSTAR_OPEN)
    hcl = lad.table(ClosureOp.HSTAR_CL)
    for j in space.closeds:
        for k in space.opens:
            if j & ~k:
                continue
            if not any(j & ~q == 0 and hcl[q] & ~k == 0 for q in ho):
                return False
    return True


def hstar_normal_characterization(space: FiniteSpace, form: int) -> bool:
    """Evaluate one of the three equivalent statements of H*-normality.

    1. disjoint closed sets are separated by disjoint H*-open sets;
    2. every open cover ``Q ∪ R = X`` shrinks to an H*-closed cover
       ``D ∪ E = X`` with ``D ⊆ Q`` and ``E ⊆ R``;
    3. every closed ``J`` inside an open ``K`` fits an H*-open ``Q`` with
       ``J ⊆ Q ⊆ H*-cl(Q) ⊆ K``.
    """
    if form == 1:
        return is_normal_variant(space, Normality.HSTAR_NORMAL)
    if form == 2:
        return _form2(space)
    if form == 3:
        return _form3(space)
    raise ValueError(f"form must be 1, 2 or 3, got {form!r}")
