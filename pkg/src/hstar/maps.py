"""Maps between finite spaces and the function classes defined on them."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .ladder import ClosureOp, Family, ladder
from .space import FiniteSpace

F = Family


class DomainMismatch(ValueError):
    pass


class PreconditionUnmet(ValueError):
    """A structural hypothesis (surjectivity etc.) fails; the instance is skipped."""


@dataclass(frozen=True)
class SpaceMap:
    domain: FiniteSpace
    codomain: FiniteSpace
    table: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        t = tuple(int(y) for y in self.table)
        object.__setattr__(self, "table", t)
        if len(t) != self.domain.n:
            raise ValueError(f"table has {len(t)} entries, domain has {self.domain.n} points")
        if any(not 0 <= y < self.codomain.n for y in t):
            raise ValueError(f"table {t} leaves codomain of size {self.codomain.n}")

    @classmethod
    def identity(cls, space: FiniteSpace) -> "SpaceMap":
        return cls(space, space, tuple(range(space.n)))

    @classmethod
    def constant(cls, domain: FiniteSpace, codomain: FiniteSpace, c: int) -> "SpaceMap":
        return cls(domain, codomain, (c,) * domain.n)

    def __call__(self, i: int) -> int:
        return self.table[i]

    @property
    def images(self) -> list[int]:
        """``images[a]`` is the image of subset ``a`` of the domain."""
        out = self._cache.get("img")
        if out is None:
            out = [0] * (1 << self.domain.n)
            for a in range(1, len(out)):
                low = a & -a
                out[a] = out[a ^ low] | 1 << self.table[low.bit_length() - 1]
            self._cache["img"] = out
        return out

    @property
    def preimages(self) -> list[int]:
        out = self._cache.get("pre")
        if out is None:
            fibre = [0] * self.codomain.n
            for i, y in enumerate(self.table):
                fibre[y] |= 1 << i
            out = [0] * (1 << self.codomain.n)
            for b in range(1, len(out)):
                low = b & -b
                out[b] = out[b ^ low] | fibre[low.bit_length() - 1]
            self._cache["pre"] = out
        return out

    def image(self, a) -> int:
        return self.images[self.domain.check_fits(a)]

    def preimage(self, b) -> int:
        return self.preimages[self.codomain.check_fits(b)]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.codomain.n

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def __repr__(self):
        arrows = ", ".join(
            f"{self.domain.labels[i]}->{self.codomain.labels[y]}" for i, y in enumerate(self.table)
        )
        return f"SpaceMap({arrows})"


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """``g ∘ f``: first ``f``, then ``g``."""
    if f.codomain != g.domain:
        raise DomainMismatch("codomain of the first map differs from domain of the second")
    return SpaceMap(f.domain, g.codomain, tuple(g.table[y] for y in f.table))


class MapProperty(str, enum.Enum):
    CONTINUOUS = "continuous"
    CLOSED_MAP = "closed-map"
    OPEN_MAP = "open-map"
    R_MAP = "R-map"
    COMPLETELY_CONTINUOUS = "completely-continuous"
    RC_CONTINUOUS = "rc-continuous"
    STRONGLY_HSTAR_OPEN = "strongly-H*-open"
    STRONGLY_HSTAR_CLOSED = "strongly-H*-closed"
    ALMOST_HSTAR_IRRESOLUTE = "almost-H*-irresolute"
    HSTAR_CLOSED_MAP = "H*-closed-map"
    HSTARG_CLOSED_MAP = "H*g-closed-map"
    GHSTAR_CLOSED_MAP = "gH*-closed-map"
    QUASI_HSTAR_CLOSED = "quasi-H*-closed"
    HSTAR_HSTARG_CLOSED = "H*-H*g-closed"
    HSTAR_GHSTAR_CLOSED = "H*-gH*-closed"
    ALMOST_GHSTAR_CLOSED = "almost-gH*-closed"
    ALMOST_HSTARG_CLOSED = "almost-H*g-closed"
    HSTAR_GHSTAR_CONTINUOUS = "H*-gH*-continuous"
    HSTAR_IRRESOLUTE = "H*-irresolute"
    SURJECTIVE = "surjective"
    INJECTIVE = "injective"
    BIJECTIVE = "bijective"

    def __str__(self):
        return self.value


P = MapProperty

# image of every member of the first class lies in the second
_FORWARD = {
    P.CLOSED_MAP: (F.CLOSED, F.CLOSED),
    P.OPEN_MAP: (F.OPEN, F.OPEN),
    P.STRONGLY_HSTAR_OPEN: (F.HSTAR_OPEN, F.HSTAR_OPEN),
    P.STRONGLY_HSTAR_CLOSED: (F.HSTAR_CLOSED, F.HSTAR_CLOSED),
    P.HSTAR_CLOSED_MAP: (F.CLOSED, F.HSTAR_CLOSED),
    P.HSTARG_CLOSED_MAP: (F.CLOSED, F.HSTARG_CLOSED),
    P.GHSTAR_CLOSED_MAP: (F.CLOSED, F.GHSTAR_CLOSED),
    P.QUASI_HSTAR_CLOSED: (F.HSTAR_CLOSED, F.CLOSED),
    P.HSTAR_HSTARG_CLOSED: (F.HSTAR_CLOSED, F.HSTARG_CLOSED),
    P.HSTAR_GHSTAR_CLOSED: (F.HSTAR_CLOSED, F.GHSTAR_CLOSED),
    P.ALMOST_GHSTAR_CLOSED: (F.REGULAR_CLOSED, F.GHSTAR_CLOSED),
    P.ALMOST_HSTARG_CLOSED: (F.REGULAR_CLOSED, F.HSTARG_CLOSED),
}

# preimage of every member of the first class (in Y) lies in the second (in X)
_BACKWARD = {
    P.CONTINUOUS: (F.OPEN, F.OPEN),
    P.R_MAP: (F.REGULAR_OPEN, F.REGULAR_OPEN),
    P.COMPLETELY_CONTINUOUS: (F.OPEN, F.REGULAR_OPEN),
    P.RC_CONTINUOUS: (F.REGULAR_CLOSED, F.REGULAR_CLOSED),
    P.HSTAR_GHSTAR_CONTINUOUS: (F.HSTAR_CLOSED, F.GHSTAR_CLOSED),
    P.HSTAR_IRRESOLUTE: (F.HSTAR_OPEN, F.HSTAR_OPEN),
}


def images_in(m: SpaceMap, src: Family, dst: Family) -> bool:
    img = m.images
    dst_bits = ladder(m.codomain).bitset(dst)
    return all(dst_bits >> img[a] & 1 for a in ladder(m.domain).members(src))


def preimages_in(m: SpaceMap, src: Family, dst: Family) -> bool:
    pre = m.preimages
    dst_bits = ladder(m.domain).bitset(dst)
    return all(dst_bits >> pre[b] & 1 for b in ladder(m.codomain).members(src))


def almost_hstar_irresolute(m: SpaceMap) -> bool:
    """Inclusion form: ``φ⁻¹(S) ⊆ H*-int(H*-cl(φ⁻¹(S)))`` for every H*-open S."""
    lx = ladder(m.domain)
    hcl, hint = lx.table(ClosureOp.HSTAR_CL), lx.itable(ClosureOp.HSTAR_CL)
    pre = m.preimages
    for s in ladder(m.codomain).members(F.HSTAR_OPEN):
        a = pre[s]
        if a & ~hint[hcl[a]]:
            return False
    return True


def almost_hstar_irresolute_nbhd(m: SpaceMap) -> bool:
    """Neighbourhood form.

    For every point x and every H*-neighbourhood V of φ(x), H*-cl(φ⁻¹(V)) is
    an H*-neighbourhood of x.  V is an H*-neighbourhood of y when some H*-open
    W has y ∈ W ⊆ V, i.e. when y ∈ H*-int(V).
    """
    lx, ly = ladder(m.domain), ladder(m.codomain)
    hcl, hint_x = lx.table(ClosureOp.HSTAR_CL), lx.itable(ClosureOp.HSTAR_CL)
    hint_y = ly.itable(ClosureOp.HSTAR_CL)
    pre = m.preimages
    for v in range(1 << m.codomain.n):
        nbhd_of = hint_y[v]
        if not nbhd_of:
            continue
        # points of X whose image has V as H*-neighbourhood
        xs = pre[nbhd_of]
        if xs & ~hint_x[hcl[pre[v]]]:
            return False
    return True


def check_map_property(m: SpaceMap, p: MapProperty) -> bool:
    p = MapProperty(p)
    key = ("prop", p)
    out = m._cache.get(key)
    if out is None:
        out = m._cache[key] = _decide(m, p)
    return out


def _decide(m: SpaceMap, p: MapProperty) -> bool:
    if p in _FORWARD:
        return images_in(m, *_FORWARD[p])
    if p in _BACKWARD:
        return preimages_in(m, *_BACKWARD[p])
    if p is P.ALMOST_HSTAR_IRRESOLUTE:
        return almost_hstar_irresolute(m)
    if p is P.SURJECTIVE:
        return m.is_surjective
    if p is P.INJECTIVE:
        return m.is_injective
    if p is P.BIJECTIVE:
        return m.is_surjective and m.is_injective
    raise ValueError(p)


def has(m: SpaceMap, *props) -> bool:
    return all(check_map_property(m, p) for p in props)


# -- characterizations --------------------------------------------------------


def _pullback_condition(m: SpaceMap, guard: Family, target: Family, sets=None) -> bool:
    """For every ``E ⊆ Y`` (or ``E`` in ``sets``) and every ``Q`` in ``guard``
    of X with ``φ⁻¹(E) ⊆ Q`` some ``S`` in ``target`` of Y has ``E ⊆ S`` and
    ``φ⁻¹(S) ⊆ Q``."""
    pre = m.preimages
    qs = ladder(m.domain).members(guard)
    ss = ladder(m.codomain).members(target)
    es = range(1 << m.codomain.n) if sets is None else sets
    for e in es:
        pe = pre[e]
        for q in qs:
            if pe & ~q:
                continue
            if not any(e & ~s == 0 and pre[s] & ~q == 0 for s in ss):
                return False
    return True


def _image_closure_condition(m: SpaceMap) -> bool:
    # φ(H*-cl(Q)) ⊆ H*-cl(φ(Q)) for every H*-open Q of X
    hcl_x = ladder(m.domain).table(ClosureOp.HSTAR_CL)
    hcl_y = ladder(m.codomain).table(ClosureOp.HSTAR_CL)
    img = m.images
    return all(img[hcl_x[q]] & ~hcl_y[img[q]] == 0 for q in ladder(m.domain).members(F.HSTAR_OPEN))


def ghstar_open_characterization(space: FiniteSpace, a) -> tuple[bool, bool]:
    """``(A is gH*-open, every closed F ⊆ A lies in H*-int(A))``."""
    a = space.check_fits(a)
    lad = ladder(space)
    lhs = bool(lad.member(F.GHSTAR_OPEN)[a])
    core = lad.itable(ClosureOp.HSTAR_CL)[a]
    rhs = all(f & ~core == 0 for f in space.closeds if f & ~a == 0)
    return lhs, rhs


CHARACTERIZATIONS = ("T2.2", "L2.3", "T2.4", "T2.7", "L3.4", "T3.7", "L4.2-ambient", "L4.5")


def characterization_check(m: SpaceMap, which: str) -> tuple[bool, bool]:
    """Both sides of an equivalence about ``m``, computed independently."""
    if which == "T2.2":
        return (
            check_map_property(m, P.STRONGLY_HSTAR_CLOSED),
            _pullback_condition(m, F.HSTAR_OPEN, F.HSTAR_OPEN),
        )
    if which == "L2.3":
        return almost_hstar_irresolute_nbhd(m), check_map_property(m, P.ALMOST_HSTAR_IRRESOLUTE)
    if which == "T2.4":
        return check_map_property(m, P.ALMOST_HSTAR_IRRESOLUTE), _image_closure_condition(m)
    if which == "T2.7":
        if not m.is_surjective:
            raise PreconditionUnmet("T2.7 requires a surjection")
        return (
            check_map_property(m, P.ALMOST_HSTARG_CLOSED),
            _pullback_condition(m, F.REGULAR_OPEN, F.HSTARG_OPEN),
        )
    if which == "L3.4":
        return (
            check_map_property(m, P.HSTAR_GHSTAR_CLOSED),
            _pullback_condition(m, F.HSTAR_OPEN, F.GHSTAR_OPEN),
        )
    if which == "T3.7":
        return (
            check_map_property(m, P.HSTAR_GHSTAR_CONTINUOUS),
            preimages_in(m, F.HSTAR_OPEN, F.GHSTAR_OPEN),
        )
    if which == "L4.2-ambient":
        # the gH*-open test applied to every preimage of an H*-open set
        pre = m.preimages
        pairs = [
            ghstar_open_characterization(m.domain, pre[s])
            for s in ladder(m.codomain).members(F.HSTAR_OPEN)
        ]
        return all(l for l, _ in pairs), all(r for _, r in pairs)
    if which == "L4.5":
        return (
            check_map_property(m, P.ALMOST_GHSTAR_CLOSED),
            _pullback_condition(m, F.REGULAR_OPEN, F.GHSTAR_OPEN),
        )
    raise ValueError(f"unknown characterization {which!r}")


def pullback_to_hstar_open(m: SpaceMap) -> bool:
    """Closed ``G ⊆ Y`` with regular open ``Q ⊇ φ⁻¹(G)`` admit H*-open
    ``S ⊇ G`` with ``φ⁻¹(S) ⊆ Q``."""
    return _pullback_condition(m, F.REGULAR_OPEN, F.HSTAR_OPEN, sets=m.codomain.closeds)

