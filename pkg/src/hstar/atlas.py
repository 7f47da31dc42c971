"""Enumeration of small topologies and maps, plus implication mining.

Labeled topologies on ``n`` points are generated from their minimal open
neighbourhoods ``U_x`` (the smallest open set containing ``x``): a
choice of ``U_x ∋ x`` for every point is a topology exactly when
``y ∈ U_x`` implies ``U_y ⊆ U_x``.  That is the specialization preorder
in disguise, and it is also what the canonical form is built from.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .ladder import CLOSED_TYPES, ClosureOp, Family, ladder
from .maps import SpaceMap, check_map_property
from .separation import Normality, is_normal_variant
from .space import FiniteSpace, GroundTooLarge, iter_points, permute_bits, popcount

HARD_CAP = 6
DEFAULT_CAP = 5


def enumeration_cap(hard: int = HARD_CAP) -> int:
    """Largest n allowed for enumeration; ``HSTAR_MAX_N`` may only lower it."""
    env = os.environ.get("HSTAR_MAX_N")
    if env:
        try:
            return max(1, min(hard, int(env)))
        except ValueError:
            pass
    return hard


def check_n(n: int, hard: int = HARD_CAP) -> None:
    cap = enumeration_cap(hard)
    if not 1 <= n <= cap:
        raise GroundTooLarge(f"n={n} outside the enumeration range 1..{cap}")


def _neighbourhood_systems(n: int) -> Iterator[tuple[int, ...]]:
    full = (1 << n) - 1
    cands = [[u for u in range(full + 1) if u >> x & 1] for x in range(n)]
    nb = [0] * n

    def extend(k):
        if k == n:
            yield tuple(nb)
            return
        for u in cands[k]:
            for j in range(k):
                if nb[j] >> k & 1 and u & ~nb[j]:
                    break
                if u >> j & 1 and nb[j] & ~u:
                    break
            else:
                nb[k] = u
                yield from extend(k + 1)

    yield from extend(0)


def opens_from_neighbourhoods(n: int, nb) -> tuple[int, ...]:
    return tuple(
        a for a in range(1 << n) if all(nb[x] & ~a == 0 for x in iter_points(a))
    )


def minimal_neighbourhoods(space: FiniteSpace) -> tuple[int, ...]:
    out = []
    for x in range(space.n):
        u = space.full
        for o in space.opens:
            if o >> x & 1:
                u &= o
        out.append(u)
    return tuple(out)


@lru_cache(maxsize=None)
def _labeled(n: int) -> tuple[FiniteSpace, ...]:
    fams = sorted(opens_from_neighbourhoods(n, nb) for nb in _neighbourhood_systems(n))
    return tuple(FiniteSpace(n, f) for f in fams)


def canonical_form(space: FiniteSpace) -> bytes:
    """Byte string equal for two spaces iff they are homeomorphic.

    Points are first ranked by the isomorphism invariant
    ``(|U_x|, |cl{x}|)``; the lexicographically least sorted open family
    over all relabelings respecting that ranking is then serialized.
    """
    cached = space._cache.get("canonical")
    if cached is not None:
        return cached
    n = space.n
    nb = minimal_neighbourhoods(space)
    below = [sum(1 for y in range(n) if nb[y] >> x & 1) for x in range(n)]
    inv = [(popcount(nb[x]), below[x]) for x in range(n)]
    order = sorted(range(n), key=lambda x: inv[x])
    blocks = [list(g) for _, g in itertools.groupby(order, key=lambda x: inv[x])]
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        seq = [x for blk in choice for x in blk]
        perm = [0] * n
        for pos, x in enumerate(seq):
            perm[x] = pos
        fam = sorted(permute_bits(u, perm) for u in space.opens)
        if best is None or fam < best:
            best = fam
    width = (n + 7) // 8
    out = bytes([n]) + b"".join(u.to_bytes(width, "little") for u in best)
    space._cache["canonical"] = out
    return out


def enumerate_topologies(n: int, up_to_homeo: bool = False) -> Iterator[FiniteSpace]:
    """Every topology on ``n`` labeled points, in lexicographic family order."""
    check_n(n)
    spaces = _labeled(n)
    if not up_to_homeo:
        yield from spaces
        return
    seen = set()
    for s in spaces:
        key = canonical_form(s)
        if key not in seen:
            seen.add(key)
            yield s


def spaces_upto(max_n: int, min_n: int = 1) -> Iterator[FiniteSpace]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_topologies(n)


def enumerate_maps(X: FiniteSpace, Y: FiniteSpace, filter: Optional[Iterable] = None) -> Iterator[SpaceMap]:
    props = list(filter or ())
    for table in itertools.product(range(Y.n), repeat=X.n):
        m = SpaceMap(X, Y, table)
        if all(check_map_property(m, p) for p in props):
            yield m


# -- implication mining --------------------------------------------------------

HOLDS = "holds-on-universe"
FAILS = "fails-with-witness"


@dataclass(frozen=True)
class Edge:
    source: Family
    target: Family
    status: str
    witness: Optional[tuple[FiniteSpace, int]] = None


@dataclass
class ImplicationLattice:
    nodes: tuple[Family, ...]
    edges: list[Edge]
    n_max: int

    def edge(self, source, target) -> Edge:
        source, target = Family(source), Family(target)
        for e in self.edges:
            if e.source is source and e.target is target:
                return e
        raise KeyError((source, target))

    def holds(self, source, target) -> bool:
        return self.edge(source, target).status == HOLDS

    def equivalence_classes(self) -> list[tuple[Family, ...]]:
        """Nodes grouped by mutual implication on the universe."""
        groups: list[list[Family]] = []
        for f in self.nodes:
            for g in groups:
                if self.holds(f, g[0]) and self.holds(g[0], f):
                    g.append(f)
                    break
            else:
                groups.append([f])
        return [tuple(g) for g in groups]

    def hasse(self) -> list[tuple[tuple[Family, ...], tuple[Family, ...]]]:
        """Covering relations between equivalence classes."""
        groups = self.equivalence_classes()

        def below(a, b):
            return a is not b and self.holds(a[0], b[0])

        return [
            (a, b)
            for a in groups
            for b in groups
            if below(a, b) and not any(below(a, c) and below(c, b) for c in groups)
        ]


def mine_implications(n_max: int, nodes=CLOSED_TYPES) -> ImplicationLattice:
    check_n(n_max, DEFAULT_CAP)
    nodes = tuple(Family(f) for f in nodes)
    k = len(nodes)
    witness: dict[tuple[int, int], tuple[FiniteSpace, int]] = {}
    open_pairs = np.ones((k, k), dtype=bool)
    np.fill_diagonal(open_pairs, False)
    for space in spaces_upto(n_max):
        if not open_pairs.any():
            break
        lad = ladder(space)
        m = np.stack([lad.member(f) for f in nodes])
        viol = m[:, None, :] & ~m[None, :, :]
        hit = viol.any(axis=2) & open_pairs
        for i, j in zip(*np.nonzero(hit)):
            witness[(i, j)] = (space, int(np.argmax(viol[i, j])))
            open_pairs[i, j] = False
    edges = []
    for i, s in enumerate(nodes):
        for j, t in enumerate(nodes):
            if i == j:
                continue
            w = witness.get((i, j))
            edges.append(Edge(s, t, FAILS if w else HOLDS, w))
    return ImplicationLattice(nodes, edges, n_max)


def _query_keys(query: dict):
    fams, norms = {}, {}
    for key, want in query.items():
        try:
            fams[Family(key)] = bool(want)
        except ValueError:
            norms[Normality(key)] = bool(want)
    return fams, norms


def find_witness(query: dict, max_n: int = 4, min_n: int = 1):
    """First ``(space, subset)`` matching every flag in ``query``.

    Keys are class names (subset flags) or normality variants (space
    flags).  With no class keys the subset slot of the result is None.
    """
    check_n(max_n, DEFAULT_CAP)
    fams, norms = _query_keys(query)
    for space in spaces_upto(max_n, min_n):
        if any(is_normal_variant(space, v) != want for v, want in norms.items()):
            continue
        if not fams:
            return space, None
        lad = ladder(space)
        ok = np.ones(1 << space.n, dtype=bool)
        for f, want in fams.items():
            ok &= lad.member(f) == want
        hits = np.flatnonzero(ok)
        if hits.size:
            return space, int(hits[0])
    return None


def closure_membership_stats(n_max: int) -> dict[ClosureOp, tuple[int, int]]:
    """For each derived closure, ``(spaces where every closure lands in its
    class, spaces examined)``."""
    check_n(n_max, DEFAULT_CAP)
    ops = [op for op in ClosureOp if op is not ClosureOp.CL]
    good = dict.fromkeys(ops, 0)
    total = 0
    for space in spaces_upto(n_max):
        total += 1
        lad = ladder(space)
        for op in ops:
            if lad.member(op.closed_family)[lad.closure_table(op)].all():
                good[op] += 1
    return {op: (good[op], total) for op in ops}
