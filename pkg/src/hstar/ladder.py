"""Generalized closed-set classes and their closure operators.

Every class is materialized per space as a boolean membership array indexed
by subset bit pattern, so ``member[a]`` answers "is ``a`` in the class".
Closure-like operators are stored the same way as integer tables:
``table[a]`` is the operator applied to ``a``.  Both are built once per
space, in dependency order, and cached on the space.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .space import FiniteSpace, GroundTooLarge, closure, interior

# 2**n sized tables; beyond this the ladder is not materializable
LADDER_MAX_N = 16


class Family(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    REGULAR_OPEN = "regular-open"
    REGULAR_CLOSED = "regular-closed"
    SEMI_OPEN = "semi-open"
    SEMI_CLOSED = "semi-closed"
    W_OPEN = "w-open"
    W_CLOSED = "w-closed"
    ALPHA_OPEN = "α-open"
    ALPHA_CLOSED = "α-closed"
    ALPHA_STAR_SET = "α*-set"
    C_SET = "C-set"
    H_OPEN = "h-open"
    H_CLOSED = "h-closed"
    GH_OPEN = "gh-open"
    GH_CLOSED = "gh-closed"
    REGULAR_H_OPEN = "regular-h-open"
    REGULAR_H_CLOSED = "regular-h-closed"
    RGH_OPEN = "rgh-open"
    RGH_CLOSED = "rgh-closed"
    HCG_OPEN = "hCg-open"
    HCG_CLOSED = "hCg-closed"
    HSTAR_OPEN = "H*-open"
    HSTAR_CLOSED = "H*-closed"
    G_OPEN = "g-open"
    G_CLOSED = "g-closed"
    GHSTAR_OPEN = "gH*-open"
    GHSTAR_CLOSED = "gH*-closed"
    HSTARG_OPEN = "H*g-open"
    HSTARG_CLOSED = "H*g-closed"
    REGULAR_HSTAR_OPEN = "regular-H*-open"
    REGULAR_HSTAR_CLOSED = "regular-H*-closed"
    RGHSTAR_OPEN = "rgH*-open"
    RGHSTAR_CLOSED = "rgH*-closed"

    def __str__(self):
        return self.value

    @property
    def dual(self) -> "Family":
        return _DUAL[self]

    @property
    def is_closed_type(self) -> bool:
        return self.value.endswith("-closed") or self is Family.CLOSED


class ClosureOp(str, enum.Enum):
    CL = "cl"
    S_CL = "s-cl"
    H_CL = "h-cl"
    HSTAR_CL = "H*-cl"
    GHSTAR_CL = "gH*-cl"

    def __str__(self):
        return self.value

    @property
    def closed_family(self) -> Family:
        return _OP_CLOSED[self]

    @property
    def open_family(self) -> Family:
        return _OP_CLOSED[self].dual

    @property
    def interior_name(self) -> str:
        return self.value.replace("cl", "int")


F = Family

_PAIRS = [
    (F.OPEN, F.CLOSED),
    (F.REGULAR_OPEN, F.REGULAR_CLOSED),
    (F.SEMI_OPEN, F.SEMI_CLOSED),
    (F.W_OPEN, F.W_CLOSED),
    (F.ALPHA_OPEN, F.ALPHA_CLOSED),
    (F.H_OPEN, F.H_CLOSED),
    (F.GH_OPEN, F.GH_CLOSED),
    (F.REGULAR_H_OPEN, F.REGULAR_H_CLOSED),
    (F.RGH_OPEN, F.RGH_CLOSED),
    (F.HCG_OPEN, F.HCG_CLOSED),
    (F.HSTAR_OPEN, F.HSTAR_CLOSED),
    (F.G_OPEN, F.G_CLOSED),
    (F.GHSTAR_OPEN, F.GHSTAR_CLOSED),
    (F.HSTARG_OPEN, F.HSTARG_CLOSED),
    (F.REGULAR_HSTAR_OPEN, F.REGULAR_HSTAR_CLOSED),
    (F.RGHSTAR_OPEN, F.RGHSTAR_CLOSED),
]
_DUAL = {F.ALPHA_STAR_SET: F.ALPHA_STAR_SET, F.C_SET: F.C_SET}
for _o, _c in _PAIRS:
    _DUAL[_o], _DUAL[_c] = _c, _o

_OP_CLOSED = {
    ClosureOp.CL: F.CLOSED,
    ClosureOp.S_CL: F.SEMI_CLOSED,
    ClosureOp.H_CL: F.H_CLOSED,
    ClosureOp.HSTAR_CL: F.HSTAR_CLOSED,
    ClosureOp.GHSTAR_CL: F.GHSTAR_CLOSED,
}

#: (operator, guard family) for each class of the form
#: "op-closure(A) ⊆ U whenever A ⊆ U and U is in the guard family".
GUARDED = {
    F.W_CLOSED: (ClosureOp.CL, F.SEMI_OPEN),
    F.H_CLOSED: (ClosureOp.S_CL, F.W_OPEN),
    F.GH_CLOSED: (ClosureOp.H_CL, F.H_OPEN),
    F.RGH_CLOSED: (ClosureOp.H_CL, F.REGULAR_H_OPEN),
    F.HCG_CLOSED: (ClosureOp.H_CL, F.C_SET),
    F.HSTAR_CLOSED: (ClosureOp.H_CL, F.HCG_OPEN),
    F.G_CLOSED: (ClosureOp.CL, F.OPEN),
    F.GHSTAR_CLOSED: (ClosureOp.HSTAR_CL, F.HSTAR_OPEN),
    F.HSTARG_CLOSED: (ClosureOp.HSTAR_CL, F.OPEN),
    F.RGHSTAR_CLOSED: (ClosureOp.HSTAR_CL, F.REGULAR_HSTAR_OPEN),
}

#: classes resting on an interpretive choice, with the reading adopted
INTERPRETED = {
    F.HSTARG_CLOSED: "guard U ranges over the open sets",
    F.RGHSTAR_CLOSED: "inferred: H*-cl(A) ⊆ U for every regular-H*-open U ⊇ A",
    F.REGULAR_H_CLOSED: "complement of regular-h-open",
    F.RGH_OPEN: "complement of rgh-closed",
    F.RGHSTAR_OPEN: "complement of rgH*-closed",
}

CLOSED_TYPES = tuple(f for f in Family if f.is_closed_type)


def superset_and(values: np.ndarray, n: int) -> np.ndarray:
    """``out[a]`` = AND of ``values[b]`` over all ``b ⊇ a``."""
    h = values.copy()
    for i in range(n):
        v = h.reshape(-1, 2, 1 << i)
        v[:, 0, :] &= v[:, 1, :]
    return h


def subset_or(values: np.ndarray, n: int) -> np.ndarray:
    """``out[a]`` = OR of ``values[b]`` over all ``b ⊆ a``."""
    h = values.copy()
    for i in range(n):
        v = h.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    return h


def _le(a, b):
    return (a & ~b) == 0


class Ladder:
    """Lazily built membership arrays and operator tables for one space."""

    def __init__(self, space: FiniteSpace):
        if space.n > LADDER_MAX_N:
            raise GroundTooLarge(f"class ladder needs n <= {LADDER_MAX_N}, got {space.n}")
        self.space = space
        self.n = space.n
        self.full = space.full
        self.idx = np.arange(1 << self.n, dtype=np.int64)
        self.comp = self.full ^ self.idx
        self._member: dict[Family, np.ndarray] = {}
        self._closure: dict[ClosureOp, np.ndarray] = {}
        self._interior: dict[ClosureOp, np.ndarray] = {}
        self._lists: dict = {}

    # -- tables -----------------------------------------------------------

    def hull(self, member: np.ndarray) -> np.ndarray:
        """Intersection of all members containing each subset."""
        return superset_and(np.where(member, self.idx, self.full), self.n)

    def kernel(self, member: np.ndarray) -> np.ndarray:
        """Union of all members contained in each subset."""
        return subset_or(np.where(member, self.idx, 0), self.n)

    def closure_table(self, op: ClosureOp) -> np.ndarray:
        op = ClosureOp(op)
        t = self._closure.get(op)
        if t is None:
            t = self.hull(self.member(op.closed_family))
            t.flags.writeable = False
            self._closure[op] = t
        return t

    def interior_table(self, op: ClosureOp) -> np.ndarray:
        op = ClosureOp(op)
        t = self._interior.get(op)
        if t is None:
            t = self.kernel(self.member(op.open_family))
            t.flags.writeable = False
            self._interior[op] = t
        return t

    def guarded(self, op: ClosureOp, guard: Family) -> np.ndarray:
        return _le(self.closure_table(op), self.hull(self.member(guard)))

    # -- membership ---------------------------------------------------------

    def member(self, fam: Family) -> np.ndarray:
        fam = Family(fam)
        m = self._member.get(fam)
        if m is None:
            m = self._build(fam)
            m.flags.writeable = False
            self._member[fam] = m
        return m

    def members(self, fam: Family) -> tuple[int, ...]:
        """Sorted tuple of the subsets in ``fam``."""
        fam = Family(fam)
        key = ("members", fam)
        out = self._lists.get(key)
        if out is None:
            out = self._lists[key] = tuple(int(a) for a in np.flatnonzero(self.member(fam)))
        return out

    def bitset(self, fam: Family) -> int:
        """Membership as a Python int: bit ``a`` set iff subset ``a`` is in ``fam``."""
        fam = Family(fam)
        key = ("bitset", fam)
        out = self._lists.get(key)
        if out is None:
            out = 0
            for a in self.members(fam):
                out |= 1 << a
            self._lists[key] = out
        return out

    def table(self, op: ClosureOp) -> list[int]:
        key = ("cl", ClosureOp(op))
        out = self._lists.get(key)
        if out is None:
            out = self._lists[key] = self.closure_table(op).tolist()
        return out

    def itable(self, op: ClosureOp) -> list[int]:
        key = ("int", ClosureOp(op))
        out = self._lists.get(key)
        if out is None:
            out = self._lists[key] = self.interior_table(op).tolist()
        return out

    def _build(self, fam: Family) -> np.ndarray:
        idx = self.idx
        if fam is F.OPEN:
            m = np.zeros(1 << self.n, dtype=bool)
            m[list(self.space.opens)] = True
            return m
        if fam in GUARDED:
            return self.guarded(*GUARDED[fam])
        if fam is F.REGULAR_CLOSED:
            cl, it = self.closure_table(ClosureOp.CL), self.interior_table(ClosureOp.CL)
            return cl[it] == idx
        if fam is F.SEMI_CLOSED:
            cl, it = self.closure_table(ClosureOp.CL), self.interior_table(ClosureOp.CL)
            return _le(it[cl], idx)
        if fam is F.ALPHA_CLOSED:
            cl, it = self.closure_table(ClosureOp.CL), self.interior_table(ClosureOp.CL)
            return _le(cl[it[cl]], idx)
        if fam is F.ALPHA_STAR_SET:
            cl, it = self.closure_table(ClosureOp.CL), self.interior_table(ClosureOp.CL)
            return it[cl[it]] == it
        if fam is F.C_SET:
            opens = np.asarray(self.space.opens, dtype=np.int64)
            stars = np.flatnonzero(self.member(F.ALPHA_STAR_SET))
            m = np.zeros(1 << self.n, dtype=bool)
            m[np.bitwise_and.outer(opens, stars).ravel()] = True
            return m
        if fam is F.REGULAR_H_OPEN:
            return self._sandwiched(ClosureOp.H_CL)
        if fam is F.REGULAR_HSTAR_OPEN:
            return self._sandwiched(ClosureOp.HSTAR_CL)
        # everything else is the complement-dual of a class built above
        return self.member(fam.dual)[self.comp]

    def _sandwiched(self, op: ClosureOp) -> np.ndarray:
        """Subsets A with U ⊆ A ⊆ op(U) for some regular open U."""
        tab = self.closure_table(op)
        m = np.zeros(1 << self.n, dtype=bool)
        for u in self.members(F.REGULAR_OPEN):
            m |= _le(u, self.idx) & _le(self.idx, tab[u])
        return m


def ladder(space: FiniteSpace) -> Ladder:
    lad = space._cache.get("ladder")
    if lad is None:
        lad = space._cache["ladder"] = Ladder(space)
    return lad


def extent(space: FiniteSpace, fam: Family) -> tuple[int, ...]:
    return ladder(space).members(fam)


def is_member(space: FiniteSpace, a, fam: Family) -> bool:
    return bool(ladder(space).member(fam)[space.check_fits(a)])


def guarded_closed(space: FiniteSpace, a, op: ClosureOp, guard: Family) -> bool:
    """True iff ``op(a) ⊆ U`` for every ``U`` in ``guard`` containing ``a``."""
    a = space.check_fits(a)
    c = derived_closure(space, a, op)
    for u in extent(space, guard):
        if a & ~u == 0 and c & ~u:
            return False
    return True


def derived_closure(space: FiniteSpace, a, op: ClosureOp) -> int:
    """Intersection of the members of ``op``'s closed class that contain ``a``.

    The result need not itself belong to the class.
    """
    op = ClosureOp(op)
    a = space.check_fits(a)
    if op is ClosureOp.CL:
        return closure(space, a)
    out = space.full
    for c in extent(space, op.closed_family):
        if a & ~c == 0:
            out &= c
    return out


def derived_interior(space: FiniteSpace, a, op: ClosureOp) -> int:
    """Union of the members of ``op``'s open class contained in ``a``."""
    op = ClosureOp(op)
    a = space.check_fits(a)
    if op is ClosureOp.CL:
        return interior(space, a)
    out = 0
    for u in extent(space, op.open_family):
        if u & ~a == 0:
            out |= u
    return out


@dataclass(frozen=True)
class ClassVector(Mapping):
    """Per-class membership flags of one subset of one space."""

    subset: int
    flags: tuple[bool, ...]

    def __getitem__(self, fam):
        return self.flags[_ORDER[Family(fam)]]

    def __iter__(self):
        return iter(Family)

    def __len__(self):
        return len(self.flags)

    def true_classes(self) -> list[Family]:
        return [f for f, v in zip(Family, self.flags) if v]


_ORDER = {f: i for i, f in enumerate(Family)}


def classify(space: FiniteSpace, a) -> ClassVector:
    a = space.check_fits(a)
    lad = ladder(space)
    return ClassVector(a, tuple(bool(lad.member(f)[a]) for f in Family))
