"""Finite topological spaces over bit-set subsets.

A subset of an ``n``-point ground set is an ``int`` whose bit ``i`` is set
iff point ``i`` belongs to it.  :class:`Subset` wraps such an int together
with its ground size for callers who want a checked value type; every
function in the package also accepts plain ints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

WORD_BITS = 64
DEFAULT_LABELS = "pqrstuvwxyzabcdefghijklmno"


class TopologyError(ValueError):
    """Base class for rejected topologies."""


class GroundTooLarge(TopologyError):
    pass


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, pair, msg=None):
        self.pair = pair
        super().__init__(msg or f"union of {pair[0]:#b} and {pair[1]:#b} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, pair, msg=None):
        self.pair = pair
        super().__init__(msg or f"intersection of {pair[0]:#b} and {pair[1]:#b} is not open")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(a: int) -> int:
    return bin(a).count("1")


def iter_points(a: int) -> Iterator[int]:
    i = 0
    while a:
        if a & 1:
            yield i
        a >>= 1
        i += 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def default_labels(n: int) -> tuple[str, ...]:
    if n <= len(DEFAULT_LABELS):
        return tuple(DEFAULT_LABELS[:n])
    return tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True, order=True)
class Subset:
    bits: int
    ground_size: int

    def __post_init__(self):
        if not 1 <= self.ground_size <= WORD_BITS:
            raise GroundTooLarge(f"ground size {self.ground_size} outside 1..{WORD_BITS}")
        if self.bits < 0 or self.bits >> self.ground_size:
            raise ValueError(f"bits {self.bits:#b} do not fit ground size {self.ground_size}")

    @classmethod
    def from_points(cls, points: Iterable[int], ground_size: int) -> "Subset":
        bits = 0
        for i in points:
            bits |= 1 << i
        return cls(bits, ground_size)

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self):
        return iter_points(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def complement(self) -> "Subset":
        return Subset(self.bits ^ full_mask(self.ground_size), self.ground_size)

    def _other(self, other) -> int:
        if isinstance(other, Subset):
            if other.ground_size != self.ground_size:
                raise ValueError("ground sizes differ")
            return other.bits
        return int(other)

    def __or__(self, other):
        return Subset(self.bits | self._other(other), self.ground_size)

    def __and__(self, other):
        return Subset(self.bits & self._other(other), self.ground_size)

    def __sub__(self, other):
        return Subset(self.bits & ~self._other(other), self.ground_size)

    def issubset(self, other) -> bool:
        return is_subset(self.bits, self._other(other))


def _bits(a) -> int:
    return a.bits if isinstance(a, Subset) else int(a)


@dataclass(frozen=True)
class FiniteSpace:
    """A ground set ``{0, .., n-1}`` with a validated, sorted open family.

    Build instances through :func:`validate_topology`; the constructor does
    not check the topology axioms.  Equality and hashing use ``(n, opens)``
    only, so two spaces with different point labels but the same open
    family compare equal.
    """

    n: int
    opens: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def closeds(self) -> tuple[int, ...]:
        c = self._cache.get("closeds")
        if c is None:
            c = self._cache["closeds"] = tuple(sorted(self.full ^ u for u in self.opens))
        return c

    @property
    def open_set(self) -> frozenset:
        s = self._cache.get("open_set")
        if s is None:
            s = self._cache["open_set"] = frozenset(self.opens)
        return s

    def is_open(self, a) -> bool:
        return _bits(a) in self.open_set

    def is_closed(self, a) -> bool:
        return (self.full ^ _bits(a)) in self.open_set

    def subset(self, a) -> Subset:
        return Subset(_bits(a), self.n)

    def check_fits(self, a) -> int:
        a = _bits(a)
        if a < 0 or a >> self.n:
            raise ValueError(f"subset {a:#b} does not fit ground size {self.n}")
        return a

    def relabel(self, labels) -> "FiniteSpace":
        return FiniteSpace(self.n, self.opens, tuple(labels))

    def permuted(self, perm) -> "FiniteSpace":
        """Image of this space under the point bijection ``i -> perm[i]``."""
        opens = sorted(permute_bits(u, perm) for u in self.opens)
        return FiniteSpace(self.n, tuple(opens))

    def format(self, a) -> str:
        a = _bits(a)
        return "{" + ",".join(self.labels[i] for i in iter_points(a)) + "}"

    def __repr__(self):
        fam = ", ".join(self.format(u) for u in self.opens)
        return f"FiniteSpace(n={self.n}, opens=[{fam}])"


def permute_bits(a: int, perm) -> int:
    out = 0
    for i in iter_points(a):
        out |= 1 << perm[i]
    return out


def validate_topology(n: int, family: Iterable, labels=None) -> FiniteSpace:
    """Check the topology axioms and return the space, or raise.

    ``family`` may hold ints or :class:`Subset` values.  Union and
    intersection closure is checked pairwise, which suffices on a finite
    ground set.
    """
    if not 1 <= n <= WORD_BITS:
        raise GroundTooLarge(f"ground size must be in 1..{WORD_BITS}, got {n}")
    full = full_mask(n)
    opens = set()
    for a in family:
        b = _bits(a)
        if b < 0 or b & ~full:
            raise ValueError(f"subset {b:#b} does not fit ground size {n}")
        opens.add(b)
    if 0 not in opens or full not in opens:
        raise MissingEmptyOrFull("family must contain the empty set and the whole space")
    ordered = sorted(opens)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in opens:
                raise NotClosedUnderUnion((u, v))
            if u & v not in opens:
                raise NotClosedUnderIntersection((u, v))
    return FiniteSpace(n, tuple(ordered), tuple(labels) if labels else ())


def closure(space: FiniteSpace, a) -> int:
    a = space.check_fits(a)
    out = space.full
    for c in space.closeds:
        if a & ~c == 0:
            out &= c
    return out


def interior(space: FiniteSpace, a) -> int:
    a = space.check_fits(a)
    out = 0
    for u in space.opens:
        if u & ~a == 0:
            out |= u
    return out


def regularity(space: FiniteSpace, a) -> tuple[bool, bool]:
    """Return ``(is_regular_open, is_regular_closed)``."""
    a = space.check_fits(a)
    return interior(space, closure(space, a)) == a, closure(space, interior(space, a)) == a


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(range(1 << n)))


def indiscrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, (0, full_mask(n)))


def sierpinski() -> FiniteSpace:
    return FiniteSpace(2, (0, 0b01, 0b11))
