"""Bounded-universe audits of the H*-normality results.

Each registered theorem declares a universe shape:

* ``space``   one finite space ``X``;
* ``map``     a map ``φ: X → Y`` between two spaces;
* ``triple``  composable maps ``φ: X → Y`` and ``ψ: Y → Z``.

An audit walks every instance with all ground sizes in ``[min_n, max_n]``,
then optionally ``samples`` random instances with ground sizes up to
``sample_n``.  Instances failing a structural precondition (surjectivity,
injectivity, openness, ...) are skipped and counted; instances where the
hypothesis holds but the conclusion fails become counterexamples.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .atlas import DEFAULT_CAP, _labeled, check_n, spaces_upto
from .ladder import Family, ladder
from .maps import (
    MapProperty as P,
    SpaceMap,
    characterization_check,
    compose,
    ghstar_open_characterization,
    has,
    images_in,
    preimages_in,
    pullback_to_hstar_open,
)
from .separation import Normality, hstar_normal_characterization, is_normal_variant
from .space import FiniteSpace, iter_points, validate_topology

F = Family

CHAIN_EDGES = (
    (F.CLOSED, F.ALPHA_CLOSED),
    (F.ALPHA_CLOSED, F.H_CLOSED),
    (F.H_CLOSED, F.HSTAR_CLOSED),
    (F.HSTAR_CLOSED, F.GH_CLOSED),
    (F.GH_CLOSED, F.RGH_CLOSED),
    (F.HSTAR_CLOSED, F.GHSTAR_CLOSED),
    (F.GHSTAR_CLOSED, F.RGHSTAR_CLOSED),
    (F.CLOSED, F.G_CLOSED),
)

NORMALITY_EDGES = (
    (Normality.NORMAL, Normality.G_NORMAL),
    (Normality.G_NORMAL, Normality.HSTAR_NORMAL),
)


@dataclass(frozen=True)
class Bounds:
    max_n: int
    min_n: int = 1
    sample_n: Optional[int] = None
    samples: int = 0
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "min_n": self.min_n,
            "max_n": self.max_n,
            "exhaustive": True,
            "sample_n": self.sample_n,
            "samples": self.samples,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Theorem:
    id: str
    shape: str
    statement: str
    check: Callable
    precondition: Optional[Callable] = None
    notes: tuple[str, ...] = ()
    min_n: int = 1


@dataclass
class AuditReport:
    theorem: str
    bounds: Bounds
    instances_checked: int = 0
    skipped_precondition: int = 0
    hypothesis_held: int = 0
    counterexamples: list = field(default_factory=list)
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "AuditReport") -> "AuditReport":
        if other.theorem != self.theorem:
            raise ValueError("cannot merge reports of different theorems")
        wits = sorted(self.counterexamples + other.counterexamples, key=_witness_key)
        return replace(
            self,
            instances_checked=self.instances_checked + other.instances_checked,
            skipped_precondition=self.skipped_precondition + other.skipped_precondition,
            hypothesis_held=self.hypothesis_held + other.hypothesis_held,
            counterexamples=wits,
        )

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "bounds": self.bounds.to_dict(),
            "instances_checked": self.instances_checked,
            "skipped_precondition": self.skipped_precondition,
            "hypothesis_held": self.hypothesis_held,
            "counterexamples": self.counterexamples,
            "notes": list(self.notes),
        }


def _witness_key(w: dict) -> str:
    return json.dumps(w, sort_keys=True, ensure_ascii=False)


# -- witness (de)serialization ---------------------------------------------


def labels_of(space: FiniteSpace, a: int) -> list[str]:
    return [space.labels[i] for i in iter_points(a)]


def space_to_dict(space: FiniteSpace) -> dict:
    return {
        "points": list(space.labels),
        "opens": [labels_of(space, u) for u in space.opens],
    }


def space_from_dict(doc: dict) -> FiniteSpace:
    labels = list(doc["points"])
    pos = {lab: i for i, lab in enumerate(labels)}
    fam = [sum(1 << pos[lab] for lab in u) for u in doc["opens"]]
    return validate_topology(len(labels), fam, labels)


def _instance_dict(inst) -> dict:
    if isinstance(inst, FiniteSpace):
        return {"spaces": [space_to_dict(inst)], "maps": []}
    maps = list(inst)
    spaces = [maps[0].domain] + [m.codomain for m in maps]
    return {
        "spaces": [space_to_dict(s) for s in spaces],
        "maps": [list(m.table) for m in maps],
    }


def _instance_from_dict(shape: str, doc: dict):
    spaces = [space_from_dict(s) for s in doc["spaces"]]
    if shape == "space":
        return spaces[0]
    return tuple(SpaceMap(spaces[i], spaces[i + 1], tuple(t)) for i, t in enumerate(doc["maps"]))


# -- checkers --------------------------------------------------------------
#
# A checker takes an instance and returns ``(hypothesis_held, failures)``;
# ``failures`` is a list of JSON-able detail dicts, empty when the
# conclusion holds.


def _t1_10(X):
    forms = [hstar_normal_characterization(X, k) for k in (1, 2, 3)]
    return True, ([] if len(set(forms)) == 1 else [{"forms": forms}])


def _r1_4(X):
    lad = ladder(X)
    out = []
    for s, t in CHAIN_EDGES:
        bad = lad.member(s) & ~lad.member(t)
        for a in bad.nonzero()[0][:1]:
            out.append({"edge": [s.value, t.value], "subset": labels_of(X, int(a))})
    return True, out


def _r1_8(X):
    out = []
    for s, t in NORMALITY_EDGES:
        if is_normal_variant(X, s) and not is_normal_variant(X, t):
            out.append({"edge": [s.value, t.value]})
    return True, out


def _l4_2(X):
    out = []
    for a in range(1 << X.n):
        lhs, rhs = ghstar_open_characterization(X, a)
        if lhs != rhs:
            out.append({"subset": labels_of(X, a), "lhs": lhs, "rhs": rhs})
    return True, out


def _iff(which):
    def check(inst):
        (m,) = inst
        lhs, rhs = characterization_check(m, which)
        return lhs or rhs, ([] if lhs == rhs else [{"lhs": lhs, "rhs": rhs}])

    return check


def _implies(hyp, concl):
    def check(inst):
        if not hyp(*inst):
            return False, []
        return True, ([] if concl(*inst) else [{"conclusion": False}])

    return check


def _hstar_normal(s):
    return is_normal_variant(s, Normality.HSTAR_NORMAL)


def _normal(s):
    return is_normal_variant(s, Normality.NORMAL)


def _ghstar_images(m):
    return images_in(m, F.GHSTAR_CLOSED, F.GHSTAR_CLOSED)


def _ghstar_preimages(m):
    return preimages_in(m, F.GHSTAR_CLOSED, F.GHSTAR_CLOSED)


def _comp_closed(phi, psi):
    return has(compose(phi, psi), P.HSTAR_GHSTAR_CLOSED)


THEOREMS: dict[str, Theorem] = {}


def _register(t: Theorem):
    THEOREMS[t.id] = t


# below three points every form holds trivially, so the default universe starts there
_register(Theorem("T1.10", "space", "the three forms of H*-normality agree", _t1_10, min_n=3))
_register(Theorem("R1.4", "space", "forward implications between closed-set classes", _r1_4,
                  notes=("rgH*-closed is an inferred definition",)))
_register(Theorem("R1.8", "space", "normal ⇒ g-normal ⇒ H*-normal", _r1_8))
_register(Theorem("L4.2", "space", "gH*-open ⟺ every closed subset lies in the H*-interior", _l4_2))

_register(Theorem("T2.2", "map", "strongly H*-closed ⟺ H*-open pullback condition", _iff("T2.2")))
_register(Theorem("L2.3", "map", "almost H*-irresolute: neighbourhood form ⟺ inclusion form",
                  _iff("L2.3"), notes=("H*-neighbourhood read as containing an H*-open set around the point",)))
_register(Theorem("T2.4", "map", "almost H*-irresolute ⟺ φ(H*-cl Q) ⊆ H*-cl φ(Q) for H*-open Q",
                  _iff("T2.4"), notes=("type-corrected reading with φ applied on the left",)))
_register(Theorem(
    "T2.5", "map", "continuous, strongly H*-open, almost H*-irresolute surjection carries H*-normality forward",
    _implies(lambda m: has(m, P.CONTINUOUS, P.STRONGLY_HSTAR_OPEN, P.ALMOST_HSTAR_IRRESOLUTE)
             and _hstar_normal(m.domain), lambda m: _hstar_normal(m.codomain)),
    precondition=lambda m: m.is_surjective))
_register(Theorem(
    "T2.6", "map", "continuous strongly H*-closed surjection carries H*-normality forward",
    _implies(lambda m: has(m, P.CONTINUOUS, P.STRONGLY_HSTAR_CLOSED) and _hstar_normal(m.domain),
             lambda m: _hstar_normal(m.codomain)),
    precondition=lambda m: m.is_surjective))
_register(Theorem("T2.7", "map", "almost H*g-closed ⟺ H*g-open pullback over regular open sets",
                  _iff("T2.7"), precondition=lambda m: m.is_surjective,
                  notes=("almost H*g-closed is an inferred definition",)))
_register(Theorem("L3.4", "map", "H*-gH*-closed ⟺ gH*-open pullback over H*-open sets", _iff("L3.4")))
_register(Theorem(
    "T3.5", "map", "continuous H*-gH*-closed maps send gH*-closed sets to gH*-closed sets",
    _implies(lambda m: has(m, P.CONTINUOUS, P.HSTAR_GHSTAR_CLOSED), _ghstar_images)))
_register(Theorem(
    "R3.6", "map", "H*-irresolute ⇒ H*-gH*-continuous",
    _implies(lambda m: has(m, P.HSTAR_IRRESOLUTE), lambda m: has(m, P.HSTAR_GHSTAR_CONTINUOUS))))
_register(Theorem("T3.7", "map", "H*-gH*-continuous ⟺ preimages of H*-open sets are gH*-open", _iff("T3.7")))
_register(Theorem(
    "T3.8", "map", "H*-gH*-continuous maps pull gH*-closed sets back to gH*-closed sets",
    _implies(lambda m: has(m, P.HSTAR_GHSTAR_CONTINUOUS), _ghstar_preimages)))
_register(Theorem(
    "C3.9", "map", "closed H*-irresolute maps pull gH*-closed sets back to gH*-closed sets",
    _implies(lambda m: has(m, P.HSTAR_IRRESOLUTE), _ghstar_preimages),
    precondition=lambda m: has(m, P.CLOSED_MAP)))
_register(Theorem(
    "T3.10", "map", "open bijective H*-gH*-continuous maps pull gH*-closed sets back",
    _implies(lambda m: has(m, P.HSTAR_GHSTAR_CONTINUOUS), _ghstar_preimages),
    precondition=lambda m: has(m, P.OPEN_MAP, P.BIJECTIVE)))
_register(Theorem(
    "T4.1", "map", "continuous quasi H*-closed surjection from an H*-normal space has normal image",
    _implies(lambda m: has(m, P.CONTINUOUS, P.QUASI_HSTAR_CLOSED) and _hstar_normal(m.domain),
             lambda m: _normal(m.codomain)),
    precondition=lambda m: m.is_surjective))
_register(Theorem(
    "T4.3", "map", "closed H*-gH*-continuous injection into an H*-normal space has H*-normal domain",
    _implies(lambda m: has(m, P.HSTAR_GHSTAR_CONTINUOUS) and _hstar_normal(m.codomain),
             lambda m: _hstar_normal(m.domain)),
    precondition=lambda m: has(m, P.CLOSED_MAP, P.INJECTIVE)))
_register(Theorem(
    "C4.4", "map", "closed H*-irresolute injection into an H*-normal space has H*-normal domain",
    _implies(lambda m: has(m, P.HSTAR_IRRESOLUTE) and _hstar_normal(m.codomain),
             lambda m: _hstar_normal(m.domain)),
    precondition=lambda m: has(m, P.CLOSED_MAP, P.INJECTIVE)))
_register(Theorem("L4.5", "map", "almost gH*-closed ⟺ gH*-open pullback over regular open sets", _iff("L4.5")))
_register(Theorem(
    "L4.6", "map", "almost gH*-closed maps admit H*-open pullbacks of closed sets over regular open sets",
    _implies(lambda m: has(m, P.ALMOST_GHSTAR_CLOSED), pullback_to_hstar_open)))

_register(Theorem(
    "T3.2a", "triple", "ψ∘φ is H*-gH*-closed when φ is and ψ is continuous and H*-gH*-closed",
    _implies(lambda f, g: has(f, P.HSTAR_GHSTAR_CLOSED) and has(g, P.CONTINUOUS, P.HSTAR_GHSTAR_CLOSED),
             _comp_closed)))
_register(Theorem(
    "T3.2b", "triple", "ψ∘φ is H*-gH*-closed when φ is strongly H*-closed and ψ is H*-gH*-closed",
    _implies(lambda f, g: has(f, P.STRONGLY_HSTAR_CLOSED) and has(g, P.HSTAR_GHSTAR_CLOSED), _comp_closed)))
_register(Theorem(
    "T3.2c", "triple", "ψ∘φ is H*-gH*-closed when φ is quasi H*-closed and ψ is gH*-closed",
    _implies(lambda f, g: has(f, P.QUASI_HSTAR_CLOSED) and has(g, P.GHSTAR_CLOSED_MAP), _comp_closed)))
_register(Theorem(
    "T3.3", "triple", "ψ is H*-gH*-closed when ψ∘φ is and φ is an H*-irresolute surjection",
    _implies(lambda f, g: _comp_closed(f, g) and has(f, P.HSTAR_IRRESOLUTE),
             lambda f, g: has(g, P.HSTAR_GHSTAR_CLOSED)),
    precondition=lambda f, g: f.is_surjective))
_register(Theorem(
    "T3.11", "triple", "φ is H*-gH*-closed when ψ∘φ is and ψ is open, bijective, H*-gH*-continuous",
    _implies(lambda f, g: _comp_closed(f, g) and has(g, P.HSTAR_GHSTAR_CONTINUOUS),
             lambda f, g: has(f, P.HSTAR_GHSTAR_CLOSED)),
    precondition=lambda f, g: has(g, P.OPEN_MAP, P.BIJECTIVE)))
_register(Theorem(
    "T3.12", "triple", "φ is H*-gH*-closed when ψ∘φ is and ψ is a closed H*-gH*-continuous injection",
    _implies(lambda f, g: _comp_closed(f, g) and has(g, P.HSTAR_GHSTAR_CONTINUOUS),
             lambda f, g: has(f, P.HSTAR_GHSTAR_CLOSED)),
    precondition=lambda f, g: has(g, P.CLOSED_MAP, P.INJECTIVE)))


THEOREM_IDS = tuple(THEOREMS)

_SHAPE_DEFAULTS = {
    "space": Bounds(max_n=4),
    "map": Bounds(max_n=3),
    "triple": Bounds(max_n=2, sample_n=3, samples=2000),
}


def default_bounds(theorem_id: str) -> Bounds:
    t = get_theorem(theorem_id)
    return replace(_SHAPE_DEFAULTS[t.shape], min_n=t.min_n)


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREM_IDS)}") from None


# -- universes ---------------------------------------------------------------


def _all_maps(X, Y):
    for table in itertools.product(range(Y.n), repeat=X.n):
        yield SpaceMap(X, Y, table)


def exhaustive_instances(shape: str, min_n: int, max_n: int):
    spaces = list(spaces_upto(max_n, min_n))
    if shape == "space":
        yield from spaces
    elif shape == "map":
        for X in spaces:
            for Y in spaces:
                for m in _all_maps(X, Y):
                    yield (m,)
    else:
        for X in spaces:
            for Y in spaces:
                phis = list(_all_maps(X, Y))
                for Z in spaces:
                    for psi in _all_maps(Y, Z):
                        for phi in phis:
                            yield (phi, psi)


def sampled_instances(shape: str, sample_n: int, samples: int, seed: int):
    rng = random.Random(seed)
    pool = [s for n in range(1, sample_n + 1) for s in _labeled(n)]

    def rand_map(X, Y):
        return SpaceMap(X, Y, tuple(rng.randrange(Y.n) for _ in range(X.n)))

    for _ in range(samples):
        X = rng.choice(pool)
        if shape == "space":
            yield X
            continue
        Y = rng.choice(pool)
        phi = rand_map(X, Y)
        if shape == "map":
            yield (phi,)
            continue
        Z = rng.choice(pool)
        yield (phi, rand_map(Y, Z))


def _run(theorem: Theorem, inst, report: AuditReport):
    args = (inst,) if theorem.shape == "space" else inst
    if theorem.precondition is not None and not theorem.precondition(*args):
        report.skipped_precondition += 1
        return
    report.instances_checked += 1
    held, failures = theorem.check(inst if theorem.shape != "space" else inst)
    if held:
        report.hypothesis_held += 1
    for detail in failures:
        w = {"theorem": theorem.id, **_instance_dict(inst), "detail": detail}
        report.counterexamples.append(w)


def audit_theorem(theorem_id: str, bounds: Optional[Bounds] = None) -> AuditReport:
    """Check one theorem over every instance within ``bounds``."""
    theorem = get_theorem(theorem_id)
    bounds = bounds or default_bounds(theorem_id)
    check_n(bounds.max_n, DEFAULT_CAP)
    if bounds.samples:
        check_n(bounds.sample_n or bounds.max_n, DEFAULT_CAP)
    report = AuditReport(theorem.id, bounds, notes=theorem.notes)
    for inst in exhaustive_instances(theorem.shape, bounds.min_n, bounds.max_n):
        _run(theorem, inst, report)
    if bounds.samples:
        for inst in sampled_instances(theorem.shape, bounds.sample_n or bounds.max_n,
                                      bounds.samples, bounds.seed):
            _run(theorem, inst, report)
    report.counterexamples.sort(key=_witness_key)
    return report


def verify_witness(witness: dict) -> bool:
    """Re-run a deserialized counterexample; True if it still fails."""
    theorem = get_theorem(witness["theorem"])
    inst = _instance_from_dict(theorem.shape, witness)
    args = (inst,) if theorem.shape == "space" else inst
    if theorem.precondition is not None and not theorem.precondition(*args):
        return False
    held, failures = theorem.check(inst)
    return bool(failures) and witness["detail"] in failures
