"""Command-line front end.

Subcommands: classify, atlas, arf, check-config, relations, flat.
Exit codes: 0 success, 1 parse/IO error, 2 out-of-range input (e.g. genus
below the classified range), 3 predicate failure.  JSON output is emitted
with sorted keys, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .arf import arf, arf1
from .config import (
    Configuration,
    build_genset,
    complementary_regions,
    intersection_graph,
    is_E_arboreal_spanning,
)
from .core import FramedSurface, PartitionKappa, SurfaceType
from .engine import EngineState, verify_relation, word_from_json
from .errors import BadPartition, FramedSurfError, OutOfClassifiedRange
from .flat import OneCylinderSurface, blowup_boundary_wn, from_permutation, saddle_arc_wns
from .strata import (
    ProngGroup,
    absolute_generating_descriptor,
    boissy_components,
    components,
    cover_component_counts,
    framed_to_absolute_surjective,
    pr_prime,
    prototype_arf,
    quotient_pr_prime,
    shear_generation_obstruction,
    stratum_partitions,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_RANGE = 2
EXIT_PREDICATE = 3


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, default=str))
    else:
        _emit_text(data)


def _emit_text(data, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)):
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                _emit_text(item, indent)
                print()
            else:
                print(f"{pad}- {item}")
    else:
        print(f"{pad}{data}")


def _component_dict(comp) -> dict:
    out = {"kind": comp.kind}
    if comp.arf is not None:
        out["arf"] = comp.arf
    return out


def _kappa_record(kappa: PartitionKappa) -> dict:
    pg = ProngGroup.from_kappa(kappa)
    prime = pr_prime(pg)
    quot = quotient_pr_prime(pg)
    comps = components(kappa)
    record = {
        "kappa": list(kappa.parts),
        "genus": kappa.g,
        "gcd": kappa.gcd,
        "components": [_component_dict(c) for c in comps],
        "component_count": len(comps),
        "pr_order": pg.order,
        "pr_prime_order": prime.order,
        "pr_index": pg.order // prime.order,
        "quotient_order": quot.order,
        "framed_to_absolute_surjective": framed_to_absolute_surjective(kappa),
        "shear_generation_obstruction": shear_generation_obstruction(kappa),
        "prong_cover_components": [
            {"component": _component_dict(row.component), "count": row.prong_components}
            for row in cover_component_counts(kappa)
        ],
        "prototype_arf": {
            "type1": prototype_arf(kappa, 1),
            "type2": prototype_arf(kappa, 2),
        },
    }
    return record


def cmd_classify(args) -> int:
    try:
        kappa = PartitionKappa.parse(args.kappa)
    except BadPartition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.cover == "plain":
            comps = components(kappa)
            data = {
                "kappa": list(kappa.parts),
                "components": [_component_dict(c) for c in comps],
                "count": len(comps),
            }
        elif args.cover == "labeled":
            data = {
                "kappa": list(kappa.parts),
                "per_nonhyperelliptic_component": [
                    {"component": _component_dict(r.component), "count": r.labeled_components}
                    for r in cover_component_counts(kappa)
                ],
            }
        elif args.cover == "prong":
            data = {
                "kappa": list(kappa.parts),
                "per_nonhyperelliptic_component": [
                    {"component": _component_dict(r.component), "count": r.prong_components}
                    for r in cover_component_counts(kappa)
                ],
            }
        else:
            data = _kappa_record(kappa)
    except OutOfClassifiedRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    _emit(data, args.format)
    return EXIT_OK


def cmd_atlas(args) -> int:
    if args.gmax > 10:
        print("error: --gmax is capped at 10", file=sys.stderr)
        return EXIT_PARSE
    records = []
    for g in range(4, args.gmax + 1):
        for kappa in stratum_partitions(g):
            records.append(_kappa_record(kappa))
    text = json.dumps(records, sort_keys=True, default=str)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        print(f"wrote {len(records)} records to {args.output}")
    else:
        print(text)
    return EXIT_OK


def cmd_arf(args) -> int:
    try:
        with open(args.surface, "r", encoding="utf-8") as handle:
            framing = FramedSurface.from_json(handle.read())
    except (OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if (framing.surface.g, framing.surface.n) == (1, 1):
        _emit({"arf1": arf1(framing)}, args.format)
    else:
        _emit({"arf": arf(framing)}, args.format)
    return EXIT_OK


def cmd_check_config(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as handle:
            config = Configuration.from_json(handle.read())
    except (OSError, KeyError, ValueError, FramedSurfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if config.ambient is None:
        print("error: configuration JSON must carry an ambient surface", file=sys.stderr)
        return EXIT_PARSE
    regions = complementary_regions(config)
    diag = is_E_arboreal_spanning(config)
    graph = intersection_graph(config)
    data = {
        "curves": len(config.names),
        "is_tree": graph.is_tree,
        "contains_e6": graph.contains_e6(),
        "faces": list(regions.side_counts),
        "chi_neighborhood": regions.chi_neighborhood,
        "e_arboreal_spanning": diag.ok,
        "reasons": list(diag.reasons),
    }
    _emit(data, args.format)
    return EXIT_OK if diag.ok else EXIT_PREDICATE


def cmd_relations(args) -> int:
    try:
        with open(args.relation, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        framing = FramedSurface.from_json_dict(payload["surface"])
        state = EngineState.from_framing(framing)
        from .core import HomologyClass

        for curve in payload.get("curves", []):
            g2 = 2 * framing.surface.g
            coeffs = [int(v) for v in curve["class"]]
            cls = HomologyClass(
                framing.surface, tuple(coeffs[:g2]), tuple(coeffs[g2:])
            )
            state = state.track_curve(
                curve["name"], cls, int(curve["wn"]), bool(curve.get("separating", False))
            )
        left = word_from_json(json.dumps(payload["left"]), framing.surface)
        right = word_from_json(json.dumps(payload["right"]), framing.surface)
    except (OSError, KeyError, ValueError, FramedSurfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_relation(state, left, right)
    data = {
        "homology_match": report.homology_match,
        "wn_match": report.wn_match,
        "note": report.note,
    }
    _emit(data, args.format)
    return EXIT_OK if report.both else EXIT_PREDICATE


def cmd_flat(args) -> int:
    try:
        perm = tuple(int(tok) for tok in args.perm.replace(" ", "").split(",") if tok)
        lengths = (
            tuple(Fraction(tok) for tok in args.lengths.replace(" ", "").split(",") if tok)
            if args.lengths
            else tuple(Fraction(1) for _ in perm)
        )
        surface = from_permutation(
            perm, lengths, Fraction(args.height), Fraction(args.twist)
        )
    except (ValueError, ZeroDivisionError, FramedSurfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    zeros = surface.zeros
    data = {
        "kappa": sorted((z.order for z in zeros), reverse=True),
        "genus": surface.genus,
        "degenerate": surface.degenerate,
        "zeros": [
            {"index": z.index, "order": z.order, "cycle": list(z.cycle)}
            for z in surface.cones()
        ],
        "blowup_boundary_wn": [
            {"zero": z.index, "wn": blowup_boundary_wn(surface, z.index)} for z in zeros
        ],
    }
    cones = surface.cones()
    saddle_table = []
    for p in range(len(cones)):
        for q in range(len(cones)):
            if p == q:
                continue
            residues = saddle_arc_wns(surface, p, q)
            saddle_table.append(
                {
                    "from": p,
                    "to": q,
                    "residues_mod": str(cones[q].prongs),
                    "residues": sorted(str(r) for r in residues),
                }
            )
    data["saddle_wns"] = saddle_table
    _emit(data, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framedsurf",
        description="Framings, twists, Arf invariants, strata components and flat surfaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="components of a stratum and its covers")
    p.add_argument("--kappa", required=True, help="comma-separated zero orders, e.g. 3,1")
    p.add_argument(
        "--cover",
        choices=("plain", "labeled", "prong", "full"),
        default="full",
        help="which cover to report component counts for",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("atlas", help="all partitions for 4 <= g <= gmax, one record each")
    p.add_argument("--gmax", type=int, default=6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("arf", help="Arf invariant of a framed surface JSON file")
    p.add_argument("surface")
    p.set_defaults(func=cmd_arf)

    p = sub.add_parser("check-config", help="diagnose a configuration JSON file")
    p.add_argument("config")
    p.set_defaults(func=cmd_check_config)

    p = sub.add_parser("relations", help="verify a relation file against the engine")
    p.add_argument("relation")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("flat", help="one-cylinder surface: zeros, genus, saddle table")
    p.add_argument("--perm", required=True, help="top boundary order, e.g. 4,3,2,6,5,1")
    p.add_argument("--lengths", default=None, help="segment lengths, e.g. 1,1,2 (default all 1)")
    p.add_argument("--height", default="1")
    p.add_argument("--twist", default="0")
    p.set_defaults(func=cmd_flat)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
        print(f"seed: {args.seed}", file=sys.stderr)
    try:
        return args.func(args)
    except OutOfClassifiedRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except FramedSurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
