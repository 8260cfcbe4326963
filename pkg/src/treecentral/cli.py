"""Command-line interface.

Subcommands: gen, parts, count, enum, verify, table, k. Exit codes: 0 on
success, 2 on usage errors, 3 when an invariant or verification check fails.
Outputs are byte-identical across runs with the same flags; report files
keep runtime metadata in a separate "meta" field. Counts are emitted as
decimal strings so consumers never face integer-width surprises.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .central import CentralParts, central_parts
from .counting import (
    estimate_k,
    rooted_subtree_count,
    subtree_profile,
)
from .enumeration import (
    FREE_CAP,
    ROOTED_CAP,
    enumerate_free_binary,
    enumerate_rooted_binary,
)
from .families import CrgSpec, LabeledFamilyTree, crg_family, make_caterpillar, make_crg, make_rgood, make_two_per_level
from .trees import EdgeListError, Tree, canonical_code, format_edge_list, parse_edge_list, validate_binary
from .verification import (
    VerificationReport,
    crg_distance_table,
    verify_cd_sc_bound,
    verify_conjecture,
    verify_crg_structure,
)

USAGE_ERROR = 2
CHECK_FAILED = 3

ENV_CAP = "TREECENTRAL_CAP"

_DOT_COLORS = {
    ("center",): "#fdb462",
    ("centroid",): "#80b1d3",
    ("subtree_core",): "#b3de69",
}
_DOT_MULTI = "#bc80bd"


def _resolve_cap(n: int, force: bool, default: int) -> int | None:
    """Effective enumeration cap: env override first, then --force, else
    the module default (returned as None)."""
    env = os.environ.get(ENV_CAP)
    cap = None
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise SystemExit(f"{ENV_CAP} must be an integer, got {env!r}")
    if force:
        cap = max(n, cap if cap is not None else default)
    return cap


def _read_tree(path: str) -> Tree:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_edge_list(text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_dot(
    t: Tree,
    parts: CentralParts | None = None,
    labels: dict[int, int] | None = None,
    name: str = "tree",
) -> str:
    """Graphviz rendering with the three parts colored; cosmetic only, not
    a stable machine interface."""
    member_of: dict[int, list[str]] = {}
    if parts is not None:
        for part_name, vs in (
            ("center", parts.center),
            ("centroid", parts.centroid),
            ("subtree_core", parts.subtree_core),
        ):
            for v in vs:
                member_of.setdefault(v, []).append(part_name)
    by_label = {}
    if labels:
        by_label = {v: lab for lab, v in labels.items()}
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(t.n):
        attrs = []
        label = str(v)
        if v in by_label:
            label = f"{v}/L{by_label[v]}"
        memberships = member_of.get(v)
        if memberships:
            label += "\\n" + ",".join(memberships)
            color = _DOT_COLORS.get(tuple(memberships), _DOT_MULTI)
            attrs.append("style=filled")
            attrs.append(f'fillcolor="{color}"')
        attrs.insert(0, f'label="{label}"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in t.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _make_family(family: str, n: int, l: int | None):
    if family == "rgood":
        return make_rgood(n)
    if family == "two-per-level":
        return make_two_per_level(n)
    if family == "caterpillar":
        return make_caterpillar(n)
    if l is None:
        raise ValueError("crg trees need --l")
    return make_crg(CrgSpec(n, l))


def _cmd_gen(args: argparse.Namespace) -> int:
    made = _make_family(args.family, args.n, args.l)
    labeled = isinstance(made, LabeledFamilyTree)
    tree = made.tree
    _write(args.out, format_edge_list(tree))
    if args.label_map is not None:
        if not labeled:
            raise SystemExit(f"--label-map applies to caterpillar and crg, not {args.family}")
        sidecar = {
            "family": made.family,
            "n": tree.n,
            "l": made.l,
            "labels": {str(lab): vid for lab, vid in sorted(made.label_map.items())},
            "v_prime": made.v_prime,
        }
        _write(args.label_map, _json_text(sidecar))
    return 0


def _cmd_parts(args: argparse.Namespace) -> int:
    t = _read_tree(args.input)
    check = validate_binary(t)
    if not check:
        sys.stderr.write(
            f"input is not a binary tree: vertex {check.vertex} has degree {check.degree}\n"
        )
        return CHECK_FAILED
    parts = central_parts(t)
    _write(
        args.out,
        _json_text(
            {
                "n": t.n,
                "center": list(parts.center),
                "centroid": list(parts.centroid),
                "subtree_core": list(parts.subtree_core),
                "d_c_cd": parts.d_c_cd,
                "d_c_sc": parts.d_c_sc,
                "d_cd_sc": parts.d_cd_sc,
            }
        ),
    )
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.family is not None:
        if args.n is None:
            raise SystemExit("--family needs --n")
        made = _make_family(args.family, args.n, args.l)
        if isinstance(made, LabeledFamilyTree):
            profile = subtree_profile(made.tree)
            payload = {
                "family": made.family,
                "n": made.tree.n,
                "l": made.l,
                "f": [str(x) for x in profile.f],
                "core": list(profile.core),
            }
        else:
            payload = {
                "family": args.family,
                "n": made.n,
                "root_count": str(rooted_subtree_count(made)),
            }
        _write(args.out, _json_text(payload))
        return 0
    if args.input is None:
        raise SystemExit("count needs either --family/--n or an input edge list")
    t = _read_tree(args.input)
    profile = subtree_profile(t)
    _write(
        args.out,
        _json_text(
            {"n": t.n, "f": [str(x) for x in profile.f], "core": list(profile.core)}
        ),
    )
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    default = ROOTED_CAP if args.rooted else FREE_CAP
    cap = _resolve_cap(args.n, args.force, default)
    stream = (
        enumerate_rooted_binary(args.n, cap)
        if args.rooted
        else enumerate_free_binary(args.n, cap)
    )
    count = 0
    codes: list[str] = []
    for item in stream:
        tree = item.tree if args.rooted else item
        if args.dump is not None:
            os.makedirs(args.dump, exist_ok=True)
            fname = f"{stream.mode}-{args.n}-{count:05d}.edges"
            with open(os.path.join(args.dump, fname), "w", encoding="utf-8") as fh:
                fh.write(format_edge_list(tree))
            codes.append(canonical_code(tree))
        count += 1
    if args.dump is not None:
        with open(os.path.join(args.dump, "codes.txt"), "w", encoding="utf-8") as fh:
            fh.write("".join(f"{c}\n" for c in codes))
    _write(args.out, _json_text({"mode": stream.mode, "n": args.n, "count": count}))
    return 0


def _print_report(report: VerificationReport) -> None:
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        sys.stdout.write(f"{status} {check.name}: {check.details}\n")
        for ce in check.counterexamples:
            sys.stdout.write(f"     counterexample {ce}\n")
    sys.stdout.write(f"verification {'PASSED' if report.passed else 'FAILED'}\n")


def _dump_witness_dots(report: VerificationReport, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    cache: dict[int, dict[str, Tree]] = {}
    for record in report.records:
        trees = cache.get(record.n)
        if trees is None:
            trees = {canonical_code(t): t for t in enumerate_free_binary(record.n)}
            cache[record.n] = trees
        for i, code in enumerate(record.argmax_codes):
            t = trees[code]
            path = os.path.join(out_dir, f"{record.quantity}-n{record.n}-{i:03d}.dot")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(render_dot(t, central_parts(t), name=f"w{i}"))


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.mode == "structure":
        report = verify_crg_structure(args.n_max)
    elif args.mode == "cd-sc-bound":
        if args.n is None:
            raise SystemExit("--mode cd-sc-bound needs --n")
        cap = _resolve_cap(args.n, args.force, FREE_CAP)
        report = verify_cd_sc_bound(args.n, cap, args.shards)
    else:
        quantities = (
            ("c_cd", "c_sc", "cd_sc")
            if args.quantity == "all"
            else (args.quantity.replace("-", "_"),)
        )
        cap = _resolve_cap(args.n_max, args.force, FREE_CAP)
        report = verify_conjecture(args.n_min, args.n_max, quantities, args.shards, cap)
    if args.out is not None:
        _write(args.out, _json_text(report.to_json()))
    if args.dot is not None:
        _dump_witness_dots(report, args.dot)
    _print_report(report)
    return 0 if report.passed else CHECK_FAILED


def _cmd_table(args: argparse.Namespace) -> int:
    rows = crg_distance_table(args.n)
    lines = ["l,d_c_cd,d_c_sc,d_cd_sc"]
    lines.extend(f"{l},{a},{b},{c}" for l, a, b, c in rows)
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_k(args: argparse.Namespace) -> int:
    est = estimate_k(args.digits)
    _write(args.out, est.value + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecentral",
        description="Central parts of binary trees: families, counts, exhaustive checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family tree as an edge list")
    p.add_argument("family", choices=["rgood", "two-per-level", "caterpillar", "crg"])
    p.add_argument("n", type=int)
    p.add_argument("l", type=int, nargs="?", default=None, help="rgood part size (crg)")
    p.add_argument("--out", default=None, help="edge-list file (default stdout)")
    p.add_argument("--label-map", default=None, help="JSON sidecar with spine labels")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("parts", help="center, centroid and subtree core of a tree")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_parts)

    p = sub.add_parser("count", help="subtree counts of a tree or family member")
    p.add_argument("input", nargs="?", default=None, help="edge-list file, or - for stdin")
    p.add_argument("--family", choices=["rgood", "two-per-level", "caterpillar", "crg"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("enum", help="enumerate binary trees up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rooted", action="store_true")
    p.add_argument("--dump", default=None, help="directory for one edge list per tree")
    p.add_argument("--force", action="store_true", help="lift the enumeration cap")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("verify", help="run exhaustive verification")
    p.add_argument(
        "--mode",
        choices=["conjecture", "structure", "cd-sc-bound"],
        default="conjecture",
    )
    p.add_argument("--n-min", type=int, default=12)
    p.add_argument("--n-max", type=int, default=22)
    p.add_argument("--n", type=int, default=None, help="size for cd-sc-bound")
    p.add_argument(
        "--quantity", choices=["c-cd", "c-sc", "cd-sc", "all"], default="all"
    )
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--dot", default=None, help="directory for witness DOT files")
    p.add_argument("--force", action="store_true", help="lift the enumeration cap")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("table", help="crg distance table for one size")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None, help="CSV file (default stdout)")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("k", help="the growth constant of complete rgood root counts")
    p.add_argument("--digits", type=int, default=9)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_k)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except EdgeListError as exc:
        sys.stderr.write(f"bad edge list: {exc}\n")
        return USAGE_ERROR
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except SystemExit as exc:
        if isinstance(exc.code, str):
            sys.stderr.write(f"error: {exc.code}\n")
            return USAGE_ERROR
        raise
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
