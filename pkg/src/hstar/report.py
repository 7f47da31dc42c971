"""Space documents, discrepancy records and the worked-example fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .audit import space_to_dict
from .ladder import Family, classify, ladder
from .separation import Normality, is_normal_variant
from .space import FiniteSpace, iter_points, validate_topology

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg, line=None, column=None):
        self.line, self.column = line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(msg + where)


class DuplicateLabel(DocumentError):
    pass


class UnknownLabel(DocumentError):
    pass


def _label_index(points) -> dict[str, int]:
    pos = {}
    for i, lab in enumerate(points):
        if not isinstance(lab, str):
            raise DocumentSyntaxError(f"point label {lab!r} is not a string")
        if lab in pos:
            raise DuplicateLabel(f"label {lab!r} appears twice")
        pos[lab] = i
    return pos


def subset_from_labels(space: FiniteSpace, labels) -> int:
    if isinstance(labels, str):
        labels = [s.strip() for s in labels.split(",") if s.strip()]
    pos = {lab: i for i, lab in enumerate(space.labels)}
    a = 0
    for lab in labels:
        if lab not in pos:
            raise UnknownLabel(f"unknown point {lab!r}")
        a |= 1 << pos[lab]
    return a


def parse_space(text: str) -> FiniteSpace:
    """Parse a JSON space document ``{"points": [...], "opens": [[...], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict) or "points" not in doc or "opens" not in doc:
        raise DocumentSyntaxError('document must be an object with "points" and "opens"')
    points, opens = doc["points"], doc["opens"]
    if not isinstance(points, list) or not isinstance(opens, list):
        raise DocumentSyntaxError('"points" and "opens" must be lists')
    pos = _label_index(points)
    fam = []
    for u in opens:
        if not isinstance(u, list):
            raise DocumentSyntaxError(f"open set {u!r} is not a list of labels")
        bits = 0
        for lab in u:
            if lab not in pos:
                raise UnknownLabel(f"open set mentions unknown point {lab!r}")
            bits |= 1 << pos[lab]
        fam.append(bits)
    return validate_topology(len(points), fam, points)


def print_space(space: FiniteSpace) -> str:
    return json.dumps(space_to_dict(space), ensure_ascii=False)


def load_space(path) -> FiniteSpace:
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read())


# -- discrepancy records -------------------------------------------------------

SPACE_CHECKS = {"opens-are-H*-open"}


def _evaluate(space: FiniteSpace, subject, prop: str) -> bool:
    if prop == "opens-are-H*-open":
        held = ladder(space).member(Family.HSTAR_OPEN)
        return all(held[u] for u in space.opens)
    try:
        return is_normal_variant(space, Normality(prop))
    except ValueError:
        pass
    a = subset_from_labels(space, subject or [])
    return classify(space, a)[prop]


@dataclass
class DiscrepancyRecord:
    source: str
    claim: dict
    engine_verdict: str = ""
    evidence: dict = field(default_factory=dict)

    @classmethod
    def check(cls, source: str, space: FiniteSpace, assertions: list[dict]) -> "DiscrepancyRecord":
        claim = {"space": space_to_dict(space), "assertions": assertions}
        rec = cls(source, claim)
        rec.evidence = rec._compute()
        rec.engine_verdict = "disagree" if rec.evidence["mismatches"] else "agree"
        return rec

    def _compute(self) -> dict:
        from .audit import space_from_dict

        space = space_from_dict(self.claim["space"])
        observed, mismatches = [], []
        for item in self.claim["assertions"]:
            got = _evaluate(space, item.get("subject"), item["property"])
            row = {**item, "engine": got}
            observed.append(row)
            if got != item["expected"]:
                mismatches.append(row)
        return {"observed": observed, "mismatches": mismatches}

    def verify(self) -> bool:
        """Re-derive the evidence and confirm it matches what is recorded."""
        fresh = self._compute()
        verdict = "disagree" if fresh["mismatches"] else "agree"
        return fresh == self.evidence and verdict == self.engine_verdict

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "claim": self.claim,
            "engine_verdict": self.engine_verdict,
            "evidence": self.evidence,
        }


def _space(points, opens) -> FiniteSpace:
    pos = {lab: i for i, lab in enumerate(points)}
    fam = [sum(1 << pos[c] for c in u) for u in opens]
    return validate_topology(len(points), fam, list(points))


def fixture_spaces() -> dict[str, FiniteSpace]:
    return {
        "E1": _space("pqrs", ["", "p", "q", "pq", "pqr", "pqrs"]),
        "E2": _space("pqrst", ["", "p", "s", "t", "ps", "pt", "st", "pst", "pqrst"]),
        "E3": _space("pqrs", ["", "p", "q", "pq", "rs", "prs", "qrs", "pqrs"]),
    }


def _flag(subject, prop, expected):
    return {"subject": list(subject) if subject is not None else None, "property": prop, "expected": expected}


def repro() -> list[DiscrepancyRecord]:
    """Re-run the four worked examples and compare them with the engine."""
    sp = fixture_spaces()
    return [
        DiscrepancyRecord.check("Ex1.5", sp["E1"], [
            _flag("r", "h-closed", True),
            _flag("r", "H*-closed", True),
            _flag("r", "closed", False),
        ]),
        DiscrepancyRecord.check("Ex1.6", sp["E2"], [
            _flag("pst", "rgh-closed", True),
            _flag("pst", "rgH*-closed", True),
            _flag("pst", "gh-closed", False),
            _flag("pst", "gH*-closed", False),
        ]),
        DiscrepancyRecord.check("Ex1.7", sp["E1"], [
            _flag("r", "gH*-closed", True),
            _flag("r", "closed", False),
        ]),
        DiscrepancyRecord.check("Ex1.9", sp["E3"], [
            _flag("s", "closed", True),
            _flag("", "closed", True),
            _flag("prs", "open", True),
            _flag("q", "open", True),
            _flag(None, "normal", True),
            _flag(None, "g-normal", True),
            _flag(None, "H*-normal", True),
            _flag(None, "opens-are-H*-open", True),
        ]),
    ]


def format_subset(space: FiniteSpace, a: int) -> str:
    return "{" + ",".join(space.labels[i] for i in iter_points(a)) + "}"
