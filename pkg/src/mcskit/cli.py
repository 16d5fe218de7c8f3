"""Command-line client for the solver package.

Every subcommand builds the same request model the HTTP service accepts
and either calls the handler in process (the default) or posts it to a
running service via --url. Exit codes: 0 success, 1 input error, 2
degraded answer, 3 guard exceeded.

The MCS_GUARD environment variable overrides the brute-force size guards.
Raising it makes exact solves exponentially slower; use with care.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from .errors import GuardExceededError, InputError, McskitError
from .generators import MANIFEST_HEADER, GenConfig, manifest_line
from .service import handlers
from .service import models as m

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGRADED = 2
EXIT_GUARD = 3

_ENDPOINTS = {
    "solve_approx": "/solve/approx",
    "solve_exact": "/solve/exact",
    "check": "/check",
    "reduce": "/reduce",
    "verify_reduction": "/verify-reduction",
    "gen": "/gen",
    "bench": "/bench",
}


def _env_guard() -> Optional[int]:
    raw = os.environ.get("MCS_GUARD")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"MCS_GUARD must be an integer, got {raw!r}") from None


def _call(name: str, request: BaseModel, response_type: type[BaseModel], url: Optional[str]):
    if url is None:
        return getattr(handlers, name)(request)
    import httpx

    reply = httpx.post(url.rstrip("/") + _ENDPOINTS[name], json=request.model_dump(), timeout=300.0)
    if reply.status_code == 400:
        raise InputError(reply.json().get("detail", "input error"))
    if reply.status_code == 422:
        raise GuardExceededError(reply.json().get("detail", "guard exceeded"))
    reply.raise_for_status()
    return response_type.model_validate(reply.json())


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(doc: BaseModel, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(doc.model_dump(), sort_keys=True))
    else:
        print(human)


def _cmd_solve_approx(args) -> int:
    req = m.SolveApproxRequest(
        instance=_read(args.file), run_exact=args.exact, guard=_env_guard()
    )
    resp = _call("solve_approx", req, m.AcsResponse, args.url)
    lines = [
        f"size {resp.size}",
        "subset " + " ".join(map(str, resp.subset)),
        f"bar_count {resp.bar_count}",
        f"repair_added {resp.repair_added}",
    ]
    if resp.exact_size is not None:
        lines.append(f"exact_size {resp.exact_size}")
        lines.append(f"achieved_ratio {resp.achieved_ratio:.6f}")
    if resp.degraded:
        lines.append("degraded true")
    _emit(resp, args.json, "\n".join(lines))
    return EXIT_DEGRADED if resp.degraded else EXIT_OK


def _cmd_solve_exact(args) -> int:
    req = m.SolveExactRequest(instance=_read(args.file), budget=args.budget, guard=_env_guard())
    resp = _call("solve_exact", req, m.SolveExactResponse, args.url)
    if not resp.found:
        _emit(resp, args.json, "none")
    else:
        _emit(resp, args.json, f"size {resp.size}\nsubset " + " ".join(map(str, resp.subset)))
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        subset = [int(s) for s in args.subset.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"--subset must be comma-separated ids, got {args.subset!r}") from None
    req = m.CheckRequest(instance=_read(args.file), subset=subset)
    resp = _call("check", req, m.CheckResponse, args.url)
    _emit(resp, args.json, f"consistent {'true' if resp.consistent else 'false'}")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    req = m.ReduceRequest(diagram=_read(args.file))
    resp = _call("reduce", req, m.ReduceResponse, args.url)
    if args.out:
        Path(args.out).write_text(resp.instance, encoding="utf-8")
        print(f"wrote {args.out} ({resp.vertex_count} chords, {resp.edge_count} crossings)")
    elif args.json:
        print(json.dumps(resp.model_dump(), sort_keys=True))
    else:
        sys.stdout.write(resp.instance)
    return EXIT_OK


def _cmd_verify_reduction(args) -> int:
    req = m.VerifyReductionRequest(diagram=_read(args.file), guard=_env_guard())
    resp = _call("verify_reduction", req, m.VerifyReductionResponse, args.url)
    human = (
        f"n {resp.n}\ndominating_size {resp.dominating_size}\n"
        f"mcs_size {resp.mcs_size}\nexpected {resp.expected_mcs_size}\n"
        f"verdict {'true' if resp.verdict else 'false'}"
    )
    _emit(resp, args.json, human)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.count < 1:
        raise InputError("--count must be at least 1")
    if args.out_dir is None:
        if args.count != 1:
            raise InputError("--out-dir is required when --count exceeds 1")
        req = m.GenRequest(kind=args.kind, n=args.n, alpha=args.alpha, seed=args.seed)
        resp = _call("gen", req, m.GenResponse, args.url)
        sys.stdout.write(resp.content)
        return EXIT_OK
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = [MANIFEST_HEADER]
    for seed in range(args.seed, args.seed + args.count):
        req = m.GenRequest(kind=args.kind, n=args.n, alpha=args.alpha, seed=seed)
        resp = _call("gen", req, m.GenResponse, args.url)
        name = f"{args.kind}_n{args.n}_a{args.alpha}_s{seed}.txt"
        (out / name).write_text(resp.content, encoding="utf-8")
        manifest.append(manifest_line(GenConfig(args.n, args.alpha, seed), name))
    (out / "manifest.csv").write_text("\n".join(manifest) + "\n", encoding="utf-8")
    print(f"wrote {args.count} instances and manifest.csv to {out}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    req = m.BenchRequest(
        n=args.n,
        alpha=args.alpha,
        trials=args.trials,
        seed=args.seed,
        exact_max=args.exact_max,
        guard=_env_guard(),
    )
    resp = _call("bench", req, m.BenchResponse, args.url)
    if args.out:
        Path(args.out).write_text(resp.csv, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(resp.csv)
    return EXIT_OK


def _cmd_debug(args) -> int:
    """Local inspection of the cover machinery; never goes through a server."""
    from .bar_cover import is_leaf_bar_cover, optimal_leaf_bar_cover
    from .intervals import Bar, parse_intervals
    from .useful_cover import partition_q, useful_cover

    inst = parse_intervals(_read(args.file))
    if args.bar:
        try:
            left, right = (int(p) for p in args.bar.split(","))
        except ValueError:
            raise InputError(f"--bar expects 'left,right', got {args.bar!r}") from None
        bar = Bar(left, right)
        part = partition_q(inst, bar)
        cover = useful_cover(inst, bar)
        doc = {
            "bar": [left, right],
            "q_l": sorted(part.q_l),
            "q_r": sorted(part.q_r),
            "q_o": sorted(part.q_o),
            "z": sorted(cover.members),
        }
        if args.json:
            print(json.dumps(doc, sort_keys=True))
        else:
            for key in ("bar", "q_l", "q_r", "q_o", "z"):
                print(f"{key} " + " ".join(map(str, doc[key])))
        return EXIT_OK

    cover = optimal_leaf_bar_cover(inst)
    check = is_leaf_bar_cover(inst, cover)
    doc = {
        "bars": [
            {"left": b.left, "right": b.right, "z": sorted(z)}
            for b, z in zip(cover.bars, cover.zs)
        ],
        "x": sorted(cover.x),
        "y": sorted(cover.y),
        "conditions": {
            "covered": check.condition1,
            "partition": check.condition2,
            "disjoint": check.condition3,
            "valid": check.valid,
        },
    }
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for row in doc["bars"]:
            print(f"bar ({row['left']}..{row['right']}) z " + " ".join(map(str, row["z"])))
        print("x " + " ".join(map(str, doc["x"])))
        print("y " + " ".join(map(str, doc["y"])))
        print(
            "conditions covered={covered} partition={partition} "
            "disjoint={disjoint} valid={valid}".format(**doc["conditions"])
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcskit",
        description="Minimum consistent subset toolkit: approximation on interval "
        "graphs, exact baselines, and the circle-graph reduction.",
    )
    parser.add_argument("--url", help="post requests to a running service instead")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-approx", help="approximate consistent subset of an interval file")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true", help="also run the exact baseline")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_solve_approx)

    p = sub.add_parser("solve-exact", help="exact minimum consistent subset")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_solve_exact)

    p = sub.add_parser("check", help="test whether a subset is consistent")
    p.add_argument("file")
    p.add_argument("--subset", required=True, help="comma-separated vertex ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("reduce", help="build the dominating-set gadget from a chords file")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify-reduction", help="check the size correspondence by brute force")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify_reduction)

    p = sub.add_parser("gen", help="generate seeded instances")
    p.add_argument("--kind", choices=["interval", "chords"], default="interval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="approximation-ratio table over seeded instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-max", type=int, default=None, help="largest n solved exactly")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser(
        "debug", help="inspect covers: a single bar with --bar, else the whole chain"
    )
    p.add_argument("file")
    p.add_argument("--bar", help="bar boundaries as 'left,right'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_debug)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except McskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
