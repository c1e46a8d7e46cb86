"""Command-line front end.

Subcommands: family (build and export a monoid), analyze (structure
reports), decompose (run a pipeline and write certificates), verify
(re-check certificates from file), search (exhaustive division search),
export (render a report in another format).  Exit codes: 0 success,
1 verification failure or negative search, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from semidec.decomp import DecompositionPlan, field_pipeline, ring_pipeline
from semidec.errors import SemidecError, UnsupportedFormat
from semidec.families import FAMILY_KINDS, FamilySpec, build_family
from semidec.monoid import DEFAULT_LIMIT, depth_report, dot_j_order, greens
from semidec.monoid import from_json as monoid_from_json
from semidec.monoid import to_json as monoid_to_json
from semidec.semiring import parse_ring_spec
from semidec.witness import search_division, verify, witness_from_json, witness_to_json


def _env_limit() -> int:
    return int(os.environ.get("SEMIDEC_LIMIT", DEFAULT_LIMIT))


def _dump(payload, path: str | None):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def cmd_family(args) -> int:
    ring = parse_ring_spec(args.ring)
    spec = FamilySpec(args.kind, args.n, ring)
    monoid = build_family(spec, limit=args.limit)
    _dump(monoid_to_json(monoid), args.out)
    print(f"family={spec.label()} order={len(monoid)}")
    return 0


def cmd_analyze(args) -> int:
    monoid = monoid_from_json(_load(args.monoid))
    selected = args.report.split(",") if args.report else ["greens", "depth"]
    payload: dict = {"label": monoid.label, "order": len(monoid)}
    rep = None
    if "greens" in selected:
        g = greens(monoid)
        payload["greens"] = {
            "l_classes": max(g.l) + 1,
            "r_classes": max(g.r) + 1,
            "j_classes": max(g.j) + 1,
            "h_classes": max(g.h) + 1,
            "regular_elements": sum(g.regular),
            "idempotents": len(g.idempotents),
        }
    if "depth" in selected:
        rep = depth_report(monoid)
        payload["depth"] = rep.to_json()
    _dump(payload, args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot_j_order(monoid, rep))
    for key in ("greens", "depth"):
        if key in payload:
            summary = payload[key] if key == "greens" else {"depth": payload[key]["depth"]}
            print(f"{key}: {json.dumps(summary, sort_keys=True)}")
    return 0


def _plan_payloads(plan: DecompositionPlan) -> tuple[dict, dict]:
    cert = {
        "plan": plan.summary(),
        "certificates": [witness_to_json(w) for w in plan.witnesses],
    }
    if plan.composite is not None:
        cert["composite"] = witness_to_json(plan.composite)
    return plan.to_json(), cert


def cmd_decompose(args) -> int:
    ring = parse_ring_spec(args.ring)
    if args.pipeline == "field":
        plan = field_pipeline(args.n, ring, limit=args.limit)
    else:
        plan = ring_pipeline(args.n, ring, limit=args.limit)
    plan_json, cert_json = _plan_payloads(plan)
    if args.plan:
        _dump(plan_json, args.plan)
    if args.cert:
        _dump(cert_json, args.cert)
    gl = plan.group_length if plan.group_length is not None else "n/a"
    print(f"group_length={gl}")
    print(f"composite_verified={bool(plan.composite and plan.composite.verified)}")
    return 0


def cmd_verify(args) -> int:
    payload = _load(args.cert)
    if "certificates" in payload:
        bundle = list(payload["certificates"])
        if "composite" in payload:
            bundle.append(payload["composite"])
    else:
        bundle = [payload]
    for i, obj in enumerate(bundle):
        witness = witness_from_json(obj)
        try:
            verify(witness, limit=args.limit)
        except SemidecError as exc:
            print(f"certificate {i} ({witness.label}): FAILED {type(exc).__name__}: {exc}")
            return 1
        print(f"certificate {i} ({witness.label}): verified closure={witness.closure_size}")
    return 0


def cmd_search(args) -> int:
    source = monoid_from_json(_load(args.source))
    target = monoid_from_json(_load(args.target))
    found = search_division(source, target, target_limit=args.limit)
    if found is None:
        print("result=NotFound")
        return 1
    if args.out:
        _dump(witness_to_json(found), args.out)
    print(f"result=found closure={found.closure_size}")
    return 0


def cmd_export(args) -> int:
    payload = _load(args.input)
    if args.format == "json":
        _dump(payload, args.out)
        return 0
    if args.format == "text":
        lines = []
        if "terms" in payload:
            lines.append("term\ttag\torder")
            for term in payload["terms"]:
                lines.append(f"{term['name']}\t{term['tag']}\t{term['order']}")
            lines.append(f"group_length={payload.get('group_length')}")
        else:
            for key in sorted(payload):
                lines.append(f"{key}={json.dumps(payload[key], sort_keys=True)}")
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if args.format == "dot":
        depth = payload.get("depth")
        if depth is None:
            raise UnsupportedFormat("dot export needs an analyze report with a depth section")
        essential = set(depth["essential"])
        sizes = depth["class_sizes"]
        above: dict[int, set[int]] = {c: set() for c in range(depth["j_class_count"])}
        for a, b in depth["order_pairs"]:
            above[b].add(a)
        lines = ["digraph jorder {", '  rankdir="BT";']
        for c in range(depth["j_class_count"]):
            attrs = f'label="J{c} (size {sizes[c]})"'
            if c in essential:
                attrs += ', style="bold", peripheries=2'
            lines.append(f"  J{c} [{attrs}];")
        for a, b in depth["order_pairs"]:
            if any(a in above[mid] for mid in above[b] if mid != a):
                continue
            lines.append(f"  J{b} -> J{a};")
        lines.append("}")
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return 0
    raise UnsupportedFormat(f"unknown format {args.format!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidec",
        description="triangular matrix monoids: structure reports and certified wreath decompositions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="build a named monoid family and write it as JSON")
    p.add_argument("--kind", required=True, choices=FAMILY_KINDS)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--ring", required=True, help="zp:<p> | bool | table:<path>")
    p.add_argument("--out", help="output path (stdout if omitted)")
    p.add_argument("--limit", type=int, default=_env_limit())
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("analyze", help="Green's relations and depth reports for a monoid file")
    p.add_argument("monoid")
    p.add_argument("--report", default="greens,depth", help="comma-separated: greens,depth")
    p.add_argument("--dot", help="write the J-order DAG in DOT format")
    p.add_argument("--out", help="report JSON path (stdout if omitted)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", help="run a decomposition pipeline, write plan and certificates")
    p.add_argument("--pipeline", choices=("ring", "field"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--plan", help="plan JSON output path")
    p.add_argument("--cert", help="certificate bundle output path")
    p.add_argument("--limit", type=int, default=_env_limit())
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("cert")
    p.add_argument("--limit", type=int, default=_env_limit())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive division search between two monoid files")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--limit", type=int, default=12)
    p.add_argument("--out", help="write the found witness as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="render a report or plan file as json, text, or dot")
    p.add_argument("input")
    p.add_argument("--format", required=True, choices=("json", "text", "dot"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemidecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
