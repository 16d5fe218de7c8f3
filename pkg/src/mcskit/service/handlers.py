"""Handlers behind both the HTTP routes and the CLI subcommands.

Each handler takes a request model and returns a response model, raising
domain errors (InputError, GuardExceededError) that the callers map to
HTTP statuses or exit codes.
"""

from __future__ import annotations

from ..approx import approximation_report
from ..chords import (
    circle_graph,
    format_chords,
    format_reduced,
    parse_chords,
    reduce_domset_to_mcs,
    verify_reduction_lemma,
)
from ..errors import FormatError
from ..generators import GenConfig, random_chord_diagram, random_interval_instance
from ..graphs import DEFAULT_GUARD, ColoredGraph, exact_mcs, is_consistent_subset, parse_graph
from ..intervals import IntervalInstance, format_intervals, parse_intervals
from . import models as m

BENCH_CSV_HEADER = (
    "seed,n,alpha,acs_size,bar_count,repair_added,degraded,"
    "exact_size,ratio,max_ratio,mean_ratio"
)


def sniff_graph(text: str) -> ColoredGraph:
    """Load any supported document as a colored graph.

    Interval documents contribute their overlap graph, chord documents
    their crossing graph.
    """
    head = _first_keyword(text)
    if head == "graph":
        return parse_graph(text)
    if head == "interval":
        return parse_intervals(text, require_connected=False).graph
    if head == "chords":
        return circle_graph(parse_chords(text))
    raise FormatError(f"unrecognized document header {head!r}")


def _first_keyword(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


def _load_interval(text: str) -> IntervalInstance:
    head = _first_keyword(text)
    if head != "interval":
        raise FormatError("expected an interval-format document")
    return parse_intervals(text)


def _acs_response(result) -> m.AcsResponse:
    doc = result.to_doc()
    return m.AcsResponse(
        size=doc["size"],
        subset=doc["subset"],
        bar_count=doc["bar_count"],
        repair_added=doc["repair_added"],
        ratio_bound=doc["ratio_bound"],
        degraded=doc["degraded"],
        exact_size=doc.get("exact_size"),
        achieved_ratio=doc.get("achieved_ratio"),
        timings=doc["timings"],
    )


def solve_approx(req: m.SolveApproxRequest) -> m.AcsResponse:
    inst = _load_interval(req.instance)
    guard = req.guard if req.guard is not None else DEFAULT_GUARD
    result = approximation_report(inst, run_exact=req.run_exact, guard=guard)
    return _acs_response(result)


def solve_exact(req: m.SolveExactRequest) -> m.SolveExactResponse:
    g = sniff_graph(req.instance)
    guard = req.guard if req.guard is not None else DEFAULT_GUARD
    subset = exact_mcs(g, budget=req.budget, guard=guard)
    if subset is None:
        return m.SolveExactResponse(found=False)
    return m.SolveExactResponse(found=True, size=len(subset), subset=sorted(subset))


def check(req: m.CheckRequest) -> m.CheckResponse:
    g = sniff_graph(req.instance)
    return m.CheckResponse(consistent=is_consistent_subset(g, req.subset))


def reduce(req: m.ReduceRequest) -> m.ReduceResponse:
    diagram = parse_chords(req.diagram)
    reduced = reduce_domset_to_mcs(diagram)
    g = circle_graph(reduced.diagram)
    return m.ReduceResponse(
        instance=format_reduced(reduced),
        vertex_count=g.vertex_count,
        edge_count=g.edge_count(),
        pendant_of=dict(sorted(reduced.pendant_of.items())),
    )


def verify_reduction(req: m.VerifyReductionRequest) -> m.VerifyReductionResponse:
    diagram = parse_chords(req.diagram)
    kwargs = {} if req.guard is None else {"guard": req.guard}
    verdict = verify_reduction_lemma(diagram, **kwargs)
    return m.VerifyReductionResponse(
        n=verdict.n,
        dominating_size=verdict.dominating_size,
        mcs_size=verdict.mcs_size,
        expected_mcs_size=verdict.expected_mcs_size,
        verdict=verdict.verdict,
        dominating_set=list(verdict.dominating_set),
        consistent_subset=list(verdict.consistent_subset),
    )


def gen(req: m.GenRequest) -> m.GenResponse:
    cfg = GenConfig(n=req.n, alpha=req.alpha, seed=req.seed)
    if req.kind == "interval":
        content = format_intervals(random_interval_instance(cfg))
    else:
        content = format_chords(random_chord_diagram(cfg))
    return m.GenResponse(content=content)


def _bench_row(row: m.BenchRow, max_ratio: str = "", mean_ratio: str = "") -> str:
    if row.skipped:
        exact, ratio = "skip", "skip"
    else:
        exact = "" if row.exact_size is None else str(row.exact_size)
        ratio = "" if row.ratio is None else f"{row.ratio:.6f}"
    return (
        f"{row.seed},{row.n},{row.alpha},{row.acs_size},{row.bar_count},"
        f"{row.repair_added},{int(row.degraded)},{exact},{ratio},{max_ratio},{mean_ratio}"
    )


def bench(req: m.BenchRequest) -> m.BenchResponse:
    """One approximation run per seed; exact baselines where the guard allows.

    Rows are emitted in seed order; degraded rows are flagged and left out
    of the ratio statistics.
    """
    exact_max = req.exact_max if req.exact_max is not None else DEFAULT_GUARD
    rows: list[m.BenchRow] = []
    for seed in range(req.seed, req.seed + req.trials):
        cfg = GenConfig(n=req.n, alpha=req.alpha, seed=seed)
        inst = random_interval_instance(cfg)
        run_exact = req.n <= exact_max
        result = approximation_report(inst, run_exact=run_exact, guard=exact_max)
        ratio = None if result.achieved_ratio is None else float(result.achieved_ratio)
        rows.append(
            m.BenchRow(
                seed=seed,
                n=req.n,
                alpha=req.alpha,
                acs_size=result.size,
                bar_count=result.bar_count,
                repair_added=result.repair_added,
                degraded=result.degraded,
                exact_size=result.exact_size,
                ratio=None if result.degraded else ratio,
                skipped=not run_exact,
            )
        )
    rows.sort(key=lambda r: r.seed)
    ratios = [r.ratio for r in rows if r.ratio is not None and not r.degraded]
    max_ratio = max(ratios) if ratios else None
    mean_ratio = sum(ratios) / len(ratios) if ratios else None

    lines = [BENCH_CSV_HEADER]
    lines += [_bench_row(r) for r in rows]
    if req.trials > 0:
        max_s = "" if max_ratio is None else f"{max_ratio:.6f}"
        mean_s = "" if mean_ratio is None else f"{mean_ratio:.6f}"
        lines.append(f"summary,{req.n},{req.alpha},,,,,,,{max_s},{mean_s}")
    return m.BenchResponse(
        rows=rows, max_ratio=max_ratio, mean_ratio=mean_ratio, csv="\n".join(lines) + "\n"
    )
