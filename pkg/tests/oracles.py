"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from scratch against the plain
definitions: deque-based BFS over dict adjacency, bitmask subset
enumeration, and a recursive chain enumerator. No numpy, no sharing with
the package internals.
"""

from __future__ import annotations

import itertools
from collections import deque


def interval_adjacency(records) -> dict[int, set[int]]:
    adj = {r.id: set() for r in records}
    for a, b in itertools.combinations(records, 2):
        if a.left <= b.right and b.left <= a.right:
            adj[a.id].add(b.id)
            adj[b.id].add(a.id)
    return adj


def chord_adjacency(records) -> dict[int, set[int]]:
    adj = {r.id: set() for r in records}
    for a, b in itertools.combinations(records, 2):
        lo, hi = min(a.a, a.b), max(a.a, a.b)
        if (lo < b.a < hi) != (lo < b.b < hi):
            adj[a.id].add(b.id)
            adj[b.id].add(a.id)
    return adj


def bfs(adj: dict[int, set[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_dists(adj: dict[int, set[int]]) -> dict[int, dict[int, int]]:
    return {v: bfs(adj, v) for v in adj}


def is_connected(adj: dict[int, set[int]]) -> bool:
    if not adj:
        return True
    return len(bfs(adj, next(iter(adj)))) == len(adj)


def covered(dist, colors, targets, candidates) -> bool:
    """Every target has a same-color candidate at its minimum distance."""
    for v in targets:
        reach = [(dist[v][u], u) for u in candidates if u in dist[v]]
        if not reach:
            return False
        dmin = min(d for d, _ in reach)
        if not any(d == dmin and colors[u] == colors[v] for d, u in reach):
            return False
    return True


def is_cs(adj, colors, members) -> bool:
    dist = all_dists(adj)
    return covered(dist, colors, set(adj), set(members))


def mcs_size(adj, colors) -> int:
    """Minimum consistent subset size by full bitmask scan, no early exit."""
    ids = sorted(adj)
    dist = all_dists(adj)
    best = len(ids)
    for mask in range(1, 1 << len(ids)):
        members = {ids[i] for i in range(len(ids)) if mask >> i & 1}
        if len(members) < best and covered(dist, colors, set(ids), members):
            best = len(members)
    return best


def min_domset_size(adj) -> int:
    ids = sorted(adj)
    best = len(ids)
    for mask in range(1, 1 << len(ids)):
        members = {ids[i] for i in range(len(ids)) if mask >> i & 1}
        if len(members) < best and all(
            v in members or adj[v] & members for v in ids
        ):
            best = len(members)
    return best


# ---------------------------------------------------------------------------
# Interval-side oracles.
# ---------------------------------------------------------------------------


def owner_map(records) -> dict[int, int]:
    out = {}
    for r in records:
        out[r.left] = r.id
        out[r.right] = r.id
    return out


def inside_ids(records, bar) -> frozenset[int]:
    own = owner_map(records)
    n = len(records)
    return frozenset(
        own[p] for p in range(max(bar[0] + 1, 1), min(bar[1] - 1, 2 * n) + 1)
    )


def leaf_bar(records, bar) -> bool:
    inside = inside_ids(records, bar)
    if not inside:
        return True
    outside = [r.id for r in records if r.id not in inside]
    if not outside:
        return False
    adj = interval_adjacency(records)
    colors = {r.id: r.color for r in records}
    return covered(all_dists(adj), colors, inside, set(outside))


def useful_cover_members(records, bar) -> frozenset[int]:
    """Reference selection: nearest outside neighbors, one bar-nearest
    representative per color and side, spanning representatives preferred."""
    by_id = {r.id: r for r in records}
    inside = inside_ids(records, bar)
    outside = [r.id for r in records if r.id not in inside]
    dist = all_dists(interval_adjacency(records))
    q: set[int] = set()
    for v in inside:
        dmin = min(dist[v][u] for u in outside if u in dist[v])
        q |= {u for u in outside if u in dist[v] and dist[v][u] == dmin}
    q_l = [by_id[u] for u in q if by_id[u].right <= bar[0]]
    q_r = [by_id[u] for u in q if by_id[u].left >= bar[1]]
    q_o = [by_id[u] for u in q if by_id[u].left <= bar[0] and by_id[u].right >= bar[1]]
    members: set[int] = set()
    for color in sorted({by_id[v].color for v in inside}):
        spans = [r for r in q_o if r.color == color]
        if spans:
            members.add(max(spans, key=lambda r: r.left).id)
            continue
        lefts = [r for r in q_l if r.color == color]
        rights = [r for r in q_r if r.color == color]
        if lefts:
            members.add(max(lefts, key=lambda r: r.right).id)
        if rights:
            members.add(min(rights, key=lambda r: r.left).id)
    return frozenset(members)


def minimum_chain_bars(records):
    """Exhaustive recursive enumeration of feasible chains, smallest count.

    Mirrors the transition semantics from the definitions alone: leaf-bar
    steps, accumulated coverage and disjointness, and pinning of intervals
    whose endpoints both become chain boundaries.
    """
    n = len(records)
    by_id = {r.id: r for r in records}
    colors = {r.id: r.color for r in records}
    adj = interval_adjacency(records)
    dist = all_dists(adj)
    own = owner_map(records)
    last = 2 * n + 1
    all_ids = frozenset(by_id)
    best: list[int | None] = [None]

    def z_for(bar):
        if not inside_ids(records, bar):
            return frozenset()
        return useful_cover_members(records, bar)

    def step(end, x, y, boundaries, bars):
        if best[0] is not None and bars >= best[0]:
            return
        for to in range(end + 1, last + 1):
            bar = (end, to)
            if not leaf_bar(records, bar):
                continue
            x1 = x | z_for(bar)
            y1 = y | inside_ids(records, bar)
            if x1 & y1:
                continue
            if 1 <= to <= 2 * n:
                owner = own[to]
                rec = by_id[owner]
                other = rec.left if rec.right == to else rec.right
                if other in boundaries and owner not in x1 and owner not in y1:
                    x1 = x1 | {owner}
            if not covered(dist, colors, y1, x1):
                continue
            if x1 | y1 == all_ids:
                if best[0] is None or bars + 1 < best[0]:
                    best[0] = bars + 1
            step(to, x1, y1, boundaries | {to}, bars + 1)

    for start in range(0, last + 1):
        step(start, frozenset(), frozenset(), frozenset([start]), 0)
    return best[0]
