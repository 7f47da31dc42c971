"""Command-line front end: ``hstar <command> ...``.

Exit status is 0 on success, 1 when an audit finds a counterexample and 2
on bad input.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import atlas, audit
from .ladder import Family, classify
from .maps import MapProperty, SpaceMap, check_map_property
from .report import (
    SCHEMA_VERSION,
    DocumentError,
    format_subset,
    load_space,
    repro,
    subset_from_labels,
)
from .separation import Normality, hstar_normal_characterization, is_normal_variant
from .space import TopologyError

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(out, payload: dict, lines: list[str], as_json: bool):
    if as_json:
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload},
                             sort_keys=True, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _yn(v: bool) -> str:
    return "yes" if v else "no"


def cmd_classify(args, out):
    space = load_space(args.space)
    if args.subset is not None:
        subsets = [subset_from_labels(space, args.subset)]
    else:
        subsets = range(1 << space.n)
    rows, lines = [], []
    for a in subsets:
        cv = classify(space, a)
        rows.append({"subset": [space.labels[i] for i in range(space.n) if a >> i & 1],
                     "flags": {f.value: cv[f] for f in Family}})
        lines.append(f"{format_subset(space, a)}")
        lines.extend(f"  {f.value:<18} {_yn(cv[f])}" for f in Family)
    _emit(out, {"command": "classify", "results": rows}, lines, args.json)
    return EXIT_OK


def cmd_normality(args, out):
    space = load_space(args.space)
    variants = {v.value: is_normal_variant(space, v) for v in Normality}
    forms = {str(k): hstar_normal_characterization(space, k) for k in (1, 2, 3)}
    agree = len(set(forms.values())) == 1
    lines = [f"{k:<10} {_yn(v)}" for k, v in variants.items()]
    lines += [f"H*-normal form {k}: {_yn(v)}" for k, v in forms.items()]
    lines.append(f"forms agree: {_yn(agree)}")
    _emit(out, {"command": "normality", "variants": variants, "forms": forms,
                "forms_agree": agree}, lines, args.json)
    return EXIT_OK


def cmd_map(args, out):
    X, Y = load_space(args.domain), load_space(args.codomain)
    images = [s.strip() for s in args.table.split(",")]
    if len(images) != X.n:
        raise InputError(f"--table needs {X.n} entries, got {len(images)}")
    pos = {lab: i for i, lab in enumerate(Y.labels)}
    try:
        table = tuple(pos[lab] for lab in images)
    except KeyError as e:
        raise InputError(f"unknown codomain point {e.args[0]!r}") from None
    m = SpaceMap(X, Y, table)
    if args.props:
        try:
            props = [MapProperty(p.strip()) for p in args.props.split(",")]
        except ValueError as e:
            raise InputError(str(e)) from None
    else:
        props = list(MapProperty)
    verdicts = {p.value: check_map_property(m, p) for p in props}
    lines = [f"{k:<24} {_yn(v)}" for k, v in verdicts.items()]
    _emit(out, {"command": "map", "table": list(images), "properties": verdicts}, lines, args.json)
    return EXIT_OK


def audit_bounds(theorem_id: str, max_n=None, min_n=None, seed=None, samples=None) -> audit.Bounds:
    b = audit.default_bounds(theorem_id)
    shape = audit.get_theorem(theorem_id).shape
    if max_n is not None:
        if shape == "triple":
            # exhaustive triples stop at 2 points; larger sizes are sampled
            b = audit.Bounds(max_n=min(max_n, 2), min_n=min(b.min_n, max_n),
                             sample_n=max_n if max_n > 2 else None,
                             samples=b.samples if max_n > 2 else 0)
        else:
            b = audit.Bounds(max_n=max_n, min_n=min(b.min_n, max_n))
    kw = {}
    if min_n is not None:
        kw["min_n"] = min_n
    if seed is not None:
        kw["seed"] = seed
    if samples is not None:
        kw["samples"] = samples
        if b.sample_n is None:
            kw["sample_n"] = b.max_n
    return audit.Bounds(**{**b.__dict__, **kw})


def cmd_audit(args, out):
    try:
        bounds = audit_bounds(args.theorem, args.max_n, args.min_n, args.seed, args.samples)
    except KeyError as e:
        raise InputError(e.args[0]) from None
    report = audit.audit_theorem(args.theorem, bounds)
    d = report.to_dict()
    lines = [
        f"theorem            {report.theorem}",
        f"bounds             {json.dumps(d['bounds'], sort_keys=True)}",
        f"instances checked  {report.instances_checked}",
        f"skipped (precond.) {report.skipped_precondition}",
        f"hypothesis held    {report.hypothesis_held}",
        f"counterexamples    {len(report.counterexamples)}",
    ]
    lines += [f"  witness: {json.dumps(w, sort_keys=True, ensure_ascii=False)}" for w in report.counterexamples]
    lines += [f"note: {n}" for n in report.notes]
    _emit(out, {"command": "audit", "report": d}, lines, args.json)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_mine(args, out):
    lattice = atlas.mine_implications(args.max_n)
    edges = []
    for e in lattice.edges:
        row = {"source": e.source.value, "target": e.target.value, "status": e.status}
        if e.witness:
            space, a = e.witness
            row["witness"] = {**audit.space_to_dict(space), "subset": audit.labels_of(space, a)}
        edges.append(row)
    lines = [f"universe: all topologies with n <= {lattice.n_max}", "equivalent classes:"]
    lines += ["  " + " = ".join(f.value for f in g) for g in lattice.equivalence_classes()]
    lines.append("covering implications:")
    lines += [f"  {a[0].value} -> {b[0].value}" for a, b in lattice.hasse()]
    lines.append("edges:")
    for row in edges:
        w = row.get("witness")
        tail = f"  witness {w['opens']} subset {w['subset']}" if w else ""
        lines.append(f"  {row['source']} -> {row['target']}: {row['status']}{tail}")
    _emit(out, {"command": "mine", "n_max": lattice.n_max, "edges": edges}, lines, args.json)
    return EXIT_OK


def cmd_repro(args, out):
    records = repro()
    lines = []
    for r in records:
        lines.append(f"{r.source}: {r.engine_verdict}")
        for m in r.evidence["mismatches"]:
            subj = m["subject"]
            what = "space" if subj is None else "{" + ",".join(subj) + "}"
            lines.append(f"  {what} {m['property']}: claimed {_yn(m['expected'])}, engine {_yn(m['engine'])}")
    _emit(out, {"command": "repro", "records": [r.to_dict() for r in records]}, lines, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hstar", description="finite topology engine for H*-normality")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "class membership of subsets")
    sp.add_argument("space")
    sp.add_argument("--subset", help="comma-separated point labels (default: every subset)")

    sp = add("normality", cmd_normality, "normality variants of a space")
    sp.add_argument("space")

    sp = add("map", cmd_map, "properties of a map between two spaces")
    sp.add_argument("domain")
    sp.add_argument("codomain")
    sp.add_argument("--table", required=True, help="image label of each domain point, in order")
    sp.add_argument("--props", help="comma-separated property names (default: all)")

    sp = add("audit", cmd_audit, "audit a theorem over small spaces")
    sp.add_argument("theorem", help="one of: " + ", ".join(audit.THEOREM_IDS))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--min-n", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--samples", type=int)

    sp = add("mine", cmd_mine, "empirical implication lattice between closed-set classes")
    sp.add_argument("--max-n", type=int, default=4)

    add("repro", cmd_repro, "re-run the worked examples")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (InputError, DocumentError, TopologyError, OSError, ValueError) as e:
        err.write(f"hstar {args.command}: error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
