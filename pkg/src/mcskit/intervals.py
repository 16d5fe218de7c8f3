"""Interval layout over the endpoint line 1..2n with sentinels 0 and 2n+1.

Provides endpoint rank-normalization, the overlap graph, bar arithmetic
(inside/outside interval sets), the leaf-bar test, and the Boolean leaf-bar
matrix used by the cover search.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DisconnectedGraphError, FormatError, InputError
from .graphs import ColoredGraph


class IntervalRecord(NamedTuple):
    id: int
    color: int
    left: int
    right: int


class Bar(NamedTuple):
    """Open range (left..right) of endpoint labels, both ends excluded."""

    left: int
    right: int


class IntervalInstance:
    """n colored intervals whose 2n endpoints are exactly the labels 1..2n.

    Treated as immutable after construction; derived structures (overlap
    graph, distances, leaf-bar matrix) are computed lazily and cached.
    """

    def __init__(self, intervals: Sequence[IntervalRecord]):
        records = tuple(
            IntervalRecord(int(r[0]), int(r[1]), int(r[2]), int(r[3])) for r in intervals
        )
        n = len(records)
        if n == 0:
            raise InputError("an interval instance needs at least one interval")
        ids = [r.id for r in records]
        if len(set(ids)) != n:
            raise InputError("duplicate interval ids")
        points = sorted(p for r in records for p in (r.left, r.right))
        if points != list(range(1, 2 * n + 1)):
            raise InputError("endpoints must cover the labels 1..2n exactly once")
        for r in records:
            if r.left >= r.right:
                raise InputError(f"interval {r.id} has left >= right")
        colors = {r.color for r in records}
        alpha = max(colors)
        if min(colors) < 1 or colors != set(range(1, alpha + 1)):
            raise InputError("colors must use every id in 1..alpha")
        self.intervals = records
        self.n = n
        self.alpha = alpha
        self.by_id = {r.id: r for r in records}

    @cached_property
    def owner(self) -> dict[int, int]:
        """Label -> id of the interval holding that endpoint."""
        out: dict[int, int] = {}
        for r in self.intervals:
            out[r.left] = r.id
            out[r.right] = r.id
        return out

    @cached_property
    def graph(self) -> ColoredGraph:
        colors = {r.id: r.color for r in self.intervals}
        edges = []
        for i, a in enumerate(self.intervals):
            for b in self.intervals[i + 1 :]:
                if a.left <= b.right and b.left <= a.right:
                    edges.append((a.id, b.id))
        return ColoredGraph(colors, edges)

    @cached_property
    def connected(self) -> bool:
        return self.graph.connected

    @cached_property
    def leaf_matrix(self) -> np.ndarray:
        """(2n+2)x(2n+2) Boolean matrix; cell (i, j) marks (i..j) a leaf bar."""
        size = 2 * self.n + 2
        m = np.zeros((size, size), dtype=bool)
        verdicts: dict[frozenset[int], bool] = {}
        for i in range(size):
            for j in range(i + 1, size):
                inside = self.inside_ids(Bar(i, j))
                got = verdicts.get(inside)
                if got is None:
                    got = self._leaf_verdict(inside)
                    verdicts[inside] = got
                m[i, j] = got
        m.flags.writeable = False
        return m

    def inside_ids(self, bar: Bar) -> frozenset[int]:
        """Intervals with at least one endpoint strictly inside the bar."""
        self.validate_bar(bar)
        lo = max(bar.left + 1, 1)
        hi = min(bar.right - 1, 2 * self.n)
        return frozenset(self.owner[p] for p in range(lo, hi + 1))

    def validate_bar(self, bar: Bar) -> None:
        if not (0 <= bar.left < bar.right <= 2 * self.n + 1):
            raise InputError(f"bar {bar} is outside the point line 0..{2 * self.n + 1}")

    def _leaf_verdict(self, inside: frozenset[int]) -> bool:
        if not inside:
            return True
        outside = [r.id for r in self.intervals if r.id not in inside]
        if not outside:
            return False
        g = self.graph
        in_idx = np.fromiter((g.index_of(v) for v in inside), dtype=np.int64)
        out_idx = np.fromiter((g.index_of(v) for v in outside), dtype=np.int64)
        sub = g.distance_matrix[np.ix_(in_idx, out_idx)]
        # unreachable pairs hold -1 and must never count as nearest
        reach = sub >= 0
        masked = np.where(reach, sub, np.iinfo(np.int64).max)
        dmin = masked.min(axis=1)
        same = g.color_array[out_idx][None, :] == g.color_array[in_idx][:, None]
        return bool(((masked == dmin[:, None]) & same & reach).any(axis=1).all())

    def __repr__(self) -> str:
        return f"IntervalInstance(n={self.n}, alpha={self.alpha})"


def normalize(raw: Iterable[tuple[int, int, float, float]]) -> IntervalInstance:
    """Rank-compress real endpoints onto the labels 1..2n.

    All 2n endpoint values must be distinct; relative order (and therefore
    the overlap graph) is preserved, and the map is idempotent.
    """
    rows = [(int(i), int(c), float(l), float(r)) for i, c, l, r in raw]
    values = [v for _, _, l, r in rows for v in (l, r)]
    if len(set(values)) != len(values):
        raise InputError("endpoint values must be pairwise distinct")
    rank = {v: k for k, v in enumerate(sorted(values), start=1)}
    return IntervalInstance(
        [IntervalRecord(i, c, rank[l], rank[r]) for i, c, l, r in rows]
    )


def overlap_graph(inst: IntervalInstance) -> ColoredGraph:
    """Vertices are intervals; edges join pairs whose closed ranges intersect."""
    return inst.graph


def bar_sets(inst: IntervalInstance, bar: Bar) -> tuple[frozenset[int], frozenset[int]]:
    """Partition of the intervals into (inside the bar, outside the bar)."""
    inside = inst.inside_ids(bar)
    outside = frozenset(r.id for r in inst.intervals) - inside
    return inside, outside


def is_leaf_bar(inst: IntervalInstance, bar: Bar) -> bool:
    """True iff the outside set covers the inside set under the graph metric.

    An empty inside set is vacuously covered; a nonempty inside set with an
    empty outside set never is.
    """
    inst.validate_bar(bar)
    return bool(inst.leaf_matrix[bar.left, bar.right])


def leaf_bar_matrix(inst: IntervalInstance) -> np.ndarray:
    """Upper-triangular Boolean matrix of leaf-bar verdicts for all bars."""
    return inst.leaf_matrix


# ---------------------------------------------------------------------------
# Text format: `interval <n> <alpha>` header and `i <id> <color> <left>
# <right>` records (real endpoints allowed; the loader normalizes).
# ---------------------------------------------------------------------------


def parse_intervals(text: str, require_connected: bool = True) -> IntervalInstance:
    header = None
    rows: list[tuple[int, int, float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "interval":
                if header is not None:
                    raise FormatError(f"line {lineno}: duplicate header")
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "i":
                rows.append((int(parts[1]), int(parts[2]), float(parts[3]), float(parts[4])))
            else:
                raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"line {lineno}: malformed record: {raw!r}") from exc
    if header is None:
        raise FormatError("missing 'interval <n> <alpha>' header")
    n, alpha = header
    if len(rows) != n:
        raise FormatError(f"header declares {n} intervals, found {len(rows)}")
    try:
        inst = normalize(rows)
    except InputError as exc:
        raise FormatError(str(exc)) from exc
    if inst.alpha != alpha:
        raise FormatError(f"header declares alpha={alpha} but colors use 1..{inst.alpha}")
    if require_connected and not inst.connected:
        raise DisconnectedGraphError("overlap graph is not connected")
    return inst


def format_intervals(inst: IntervalInstance) -> str:
    lines = [f"interval {inst.n} {inst.alpha}"]
    for r in sorted(inst.intervals, key=lambda r: r.id):
        lines.append(f"i {r.id} {r.color} {r.left} {r.right}")
    return "\n".join(lines) + "\n"


def load_intervals(path: str, require_connected: bool = True) -> IntervalInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_intervals(fh.read(), require_connected=require_connected)
