"""Colored-graph metric substrate.

Holds the colored simple graph, hop-count distances, nearest-neighbor and
coverage queries, the consistency test, and the exact brute-force solvers
for minimum consistent subsets and minimum dominating sets.
"""

from __future__ import annotations

import math
from collections import deque
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import (
    DisconnectedGraphError,
    FormatError,
    GuardExceededError,
    InputError,
)

DEFAULT_GUARD = 20

# Internal sentinel for "unreachable" in the integer distance matrix.
_UNREACHED = -1


class ColoredGraph:
    """An immutable simple graph with a color id (1..alpha) on every vertex.

    Vertices are integer ids; colors must use every id in 1..alpha at least
    once. Edges are undirected and irreflexive.
    """

    def __init__(self, colors: Mapping[int, int], edges: Iterable[tuple[int, int]]):
        self._color = dict(colors)
        ids = sorted(self._color)
        if len(ids) != len(set(ids)):
            raise InputError("duplicate vertex ids")
        idset = set(ids)
        adjacency: dict[int, set[int]] = {v: set() for v in ids}
        for u, v in edges:
            if u not in idset or v not in idset:
                raise InputError(f"edge ({u},{v}) references unknown vertex")
            if u == v:
                raise InputError(f"self-loop on vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._ids = tuple(ids)
        self._adj = {v: frozenset(adjacency[v]) for v in ids}
        self._index = {v: i for i, v in enumerate(ids)}
        if ids:
            used = set(self._color.values())
            alpha = max(used)
            if min(used) < 1 or used != set(range(1, alpha + 1)):
                raise InputError("colors must use every id in 1..alpha")
            self._alpha = alpha
        else:
            self._alpha = 0

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return self._ids

    @property
    def vertex_count(self) -> int:
        return len(self._ids)

    @property
    def alpha(self) -> int:
        return self._alpha

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def color(self, v: int) -> int:
        try:
            return self._color[v]
        except KeyError:
            raise InputError(f"unknown vertex id {v}") from None

    def colors(self) -> dict[int, int]:
        return dict(self._color)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex id {v}") from None

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self._ids for v in sorted(self._adj[u]) if u < v]

    @cached_property
    def connected(self) -> bool:
        if not self._ids:
            return True
        seen = {self._ids[0]}
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self._ids)

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances; unreachable pairs hold -1."""
        n = len(self._ids)
        dist = np.full((n, n), _UNREACHED, dtype=np.int64)
        for i, src in enumerate(self._ids):
            row = dist[i]
            row[i] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                du = row[self._index[u]]
                for w in self._adj[u]:
                    j = self._index[w]
                    if row[j] == _UNREACHED:
                        row[j] = du + 1
                        queue.append(w)
        return dist

    @cached_property
    def color_array(self) -> np.ndarray:
        return np.array([self._color[v] for v in self._ids], dtype=np.int64)

    def index_of(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex id {v}") from None

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.vertex_count}, m={self.edge_count()}, alpha={self._alpha})"


def bfs_distances(g: ColoredGraph, source: int) -> dict[int, float]:
    """Hop distances from source to every vertex; unreachable maps to math.inf."""
    i = g.index_of(source)
    row = g.distance_matrix[i]
    return {
        v: (math.inf if row[j] == _UNREACHED else int(row[j]))
        for j, v in enumerate(g.vertex_ids)
    }


def shortest_path(g: ColoredGraph, u: int, v: int) -> Optional[list[int]]:
    """One shortest path from u to v as a vertex sequence, or None if disconnected.

    Diagnostic helper; ties broken toward smaller predecessor ids.
    """
    g.index_of(u)
    g.index_of(v)
    if u == v:
        return [u]
    prev: dict[int, int] = {u: u}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        for w in sorted(g.neighbors(cur)):
            if w not in prev:
                prev[w] = cur
                if w == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                queue.append(w)
    return None


def _check_subset(g: ColoredGraph, members: Iterable[int]) -> frozenset[int]:
    sub = frozenset(members)
    for v in sub:
        if v not in g.adjacency:
            raise InputError(f"subset member {v} is not a vertex")
    return sub


def nearest_neighbors(g: ColoredGraph, v: int, members: Iterable[int]) -> frozenset[int]:
    """Members of the candidate set at minimum hop distance from v.

    Unreachable candidates never qualify; if v itself is a candidate the
    result is exactly {v}.
    """
    sub = _check_subset(g, members)
    if not sub:
        raise InputError("candidate set must be nonempty")
    row = g.distance_matrix[g.index_of(v)]
    best = None
    out: list[int] = []
    for u in sub:
        d = row[g.index_of(u)]
        if d == _UNREACHED:
            continue
        if best is None or d < best:
            best = d
            out = [u]
        elif d == best:
            out.append(u)
    return frozenset(out)


def covering_set(g: ColoredGraph, v: int, members: Iterable[int]) -> frozenset[int]:
    """Nearest neighbors of v in the candidate set that share v's color.

    Empty result means v is not covered by the candidate set.
    """
    cv = g.color(v)
    return frozenset(u for u in nearest_neighbors(g, v, members) if g.color(u) == cv)


def is_consistent_subset(g: ColoredGraph, members: Iterable[int]) -> bool:
    """True iff every vertex has a same-color vertex among its nearest members.

    Requires a connected graph and a nonempty subset; members cover
    themselves at distance zero.
    """
    sub = _check_subset(g, members)
    if not sub:
        raise InputError("a consistent subset is nonempty")
    if not g.connected:
        raise DisconnectedGraphError("consistency is defined on connected graphs")
    cols = np.fromiter((g.index_of(u) for u in sorted(sub)), dtype=np.int64)
    return bool(_consistent_mask(g, cols))


def _consistent_mask(g: ColoredGraph, member_idx: np.ndarray) -> bool:
    dist = g.distance_matrix[:, member_idx]
    dmin = dist.min(axis=1)
    same = g.color_array[member_idx][None, :] == g.color_array[:, None]
    return bool(((dist == dmin[:, None]) & same).any(axis=1).all())


def _domination_mask(g: ColoredGraph, member_idx: np.ndarray, closed: np.ndarray) -> bool:
    return bool(closed[:, member_idx].any(axis=1).all())


def _enforce_guard(g: ColoredGraph, guard: Optional[int], what: str) -> None:
    if guard is not None and g.vertex_count > guard:
        raise GuardExceededError(
            f"{what} on {g.vertex_count} vertices exceeds the guard of {guard}; "
            "raise the guard explicitly to override"
        )


def exact_mcs(
    g: ColoredGraph,
    budget: Optional[int] = None,
    guard: Optional[int] = DEFAULT_GUARD,
) -> Optional[frozenset[int]]:
    """Minimum consistent subset by enumeration, smallest ids on ties.

    Subsets are tried by cardinality ascending, lexicographically within one
    cardinality, so the first hit is the optimum. Vertices that are the only
    holder of their color belong to every consistent subset and are fixed up
    front. Returns None when a budget is given and no consistent subset fits.
    """
    _enforce_guard(g, guard, "exact consistent-subset search")
    if not g.connected:
        raise DisconnectedGraphError("exact_mcs requires a connected graph")
    n = g.vertex_count
    if n == 0:
        raise InputError("graph has no vertices")

    by_color: dict[int, list[int]] = {}
    for v in g.vertex_ids:
        by_color.setdefault(g.color(v), []).append(v)
    forced = sorted(v for vs in by_color.values() if len(vs) == 1 for v in vs)
    forced_set = frozenset(forced)
    free = [v for v in g.vertex_ids if v not in forced_set]
    forced_idx = [g.index_of(v) for v in forced]

    all_colors = frozenset(by_color)
    color_of = g.colors()
    limit = n if budget is None else min(budget, n)
    lo = max(len(forced), g.alpha)  # a consistent subset holds every color
    for k in range(lo, limit + 1):
        for extra in combinations(free, k - len(forced)):
            chosen = forced + list(extra)
            if frozenset(color_of[v] for v in chosen) != all_colors:
                continue
            idx = np.array(sorted(forced_idx + [g.index_of(v) for v in extra]), dtype=np.int64)
            if _consistent_mask(g, idx):
                return frozenset(chosen)
    return None


def exact_min_dominating_set(
    g: ColoredGraph, guard: Optional[int] = DEFAULT_GUARD
) -> frozenset[int]:
    """Minimum dominating set by enumeration, smallest ids on ties."""
    _enforce_guard(g, guard, "exact dominating-set search")
    n = g.vertex_count
    if n == 0:
        raise InputError("graph has no vertices")
    closed = np.eye(n, dtype=bool)
    for u in g.vertex_ids:
        for w in g.neighbors(u):
            closed[g.index_of(u), g.index_of(w)] = True
    for k in range(1, n + 1):
        for chosen in combinations(g.vertex_ids, k):
            idx = np.fromiter((g.index_of(v) for v in chosen), dtype=np.int64)
            if _domination_mask(g, idx, closed):
                return frozenset(chosen)
    raise AssertionError("V(G) always dominates")


# ---------------------------------------------------------------------------
# Text format: `graph <n> <alpha>` header, `v <id> <color>` and `e <u> <v>`
# records, `#` comments and blank lines ignored.
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> ColoredGraph:
    header = None
    colors: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "graph":
                if header is not None:
                    raise FormatError(f"line {lineno}: duplicate header")
                header = (int(parts[1]), int(parts[2]))
            elif kind == "v":
                colors[int(parts[1])] = int(parts[2])
            elif kind == "e":
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise FormatError(f"line {lineno}: unknown record {kind!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"line {lineno}: malformed record: {raw!r}") from exc
    if header is None:
        raise FormatError("missing 'graph <n> <alpha>' header")
    n, alpha = header
    if sorted(colors) != list(range(1, n + 1)):
        raise FormatError("vertex ids must be contiguous integers from 1")
    try:
        g = ColoredGraph(colors, edges)
    except InputError as exc:
        raise FormatError(str(exc)) from exc
    if g.alpha != alpha:
        raise FormatError(f"header declares alpha={alpha} but colors use 1..{g.alpha}")
    return g


def format_graph(g: ColoredGraph) -> str:
    lines = [f"graph {g.vertex_count} {g.alpha}"]
    lines += [f"v {v} {g.color(v)}" for v in g.vertex_ids]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> ColoredGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
