"""Leaf bar covers: validation, construction from a consistent subset, and
the left-to-right chain search for a minimum-size cover.

A cover is an ordered contiguous chain of bars together with per-bar member
sets drawn from outside those bars. Validity means: the union of inside
sets is covered by the union of member sets, the two unions partition the
intervals, and they are disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import InputError, NoCoverError
from .graphs import covering_set
from .intervals import Bar, IntervalInstance
from .useful_cover import useful_cover


@dataclass(frozen=True)
class LeafBarCover:
    """Chain of bars with per-bar member sets; x/y are the two unions."""

    bars: tuple[Bar, ...]
    zs: tuple[frozenset[int], ...]
    x: frozenset[int]
    y: frozenset[int]

    @property
    def bar_count(self) -> int:
        return len(self.bars)


@dataclass(frozen=True)
class CoverCheck:
    """Per-condition verdicts plus diagnostics for a candidate cover."""

    valid: bool
    condition1: bool  # y is covered by x
    condition2: bool  # x and y account for every interval
    condition3: bool  # x and y are disjoint
    contiguous: bool
    all_leaf_bars: bool
    uncovered: tuple[int, ...]
    missing: tuple[int, ...]
    overlap: tuple[int, ...]


def _covers(inst: IntervalInstance, targets: frozenset[int], candidates: frozenset[int]) -> tuple[bool, list[int]]:
    """Check every target has a same-color member among its nearest candidates."""
    if not targets:
        return True, []
    if not candidates:
        return False, sorted(targets)
    g = inst.graph
    t_idx = np.fromiter((g.index_of(v) for v in sorted(targets)), dtype=np.int64)
    c_idx = np.fromiter((g.index_of(v) for v in sorted(candidates)), dtype=np.int64)
    sub = g.distance_matrix[np.ix_(t_idx, c_idx)]
    # unreachable pairs hold -1 and must never count as nearest
    reach = sub >= 0
    masked = np.where(reach, sub, np.iinfo(np.int64).max)
    dmin = masked.min(axis=1)
    same = g.color_array[c_idx][None, :] == g.color_array[t_idx][:, None]
    ok = ((masked == dmin[:, None]) & same & reach).any(axis=1)
    bad = [int(g.vertex_ids[t_idx[i]]) for i in np.flatnonzero(~ok)]
    return bool(ok.all()), bad


def is_leaf_bar_cover(inst: IntervalInstance, cover: LeafBarCover) -> CoverCheck:
    """Validate the three cover conditions; leaf-bar-ness and contiguity are
    reported as diagnostics and do not affect the verdict."""
    for bar in cover.bars:
        inst.validate_bar(bar)
    y = frozenset().union(*(inst.inside_ids(b) for b in cover.bars)) if cover.bars else frozenset()
    x = frozenset().union(*cover.zs) if cover.zs else frozenset()
    cond1, uncovered = _covers(inst, y, x)
    everything = frozenset(r.id for r in inst.intervals)
    missing = sorted(everything - (x | y))
    overlap = sorted(x & y)
    cond2 = not missing
    cond3 = not overlap
    contiguous = all(
        cover.bars[i].right == cover.bars[i + 1].left for i in range(len(cover.bars) - 1)
    )
    all_leaf = all(bool(inst.leaf_matrix[b.left, b.right]) for b in cover.bars)
    return CoverCheck(
        valid=cond1 and cond2 and cond3,
        condition1=cond1,
        condition2=cond2,
        condition3=cond3,
        contiguous=contiguous,
        all_leaf_bars=all_leaf,
        uncovered=tuple(uncovered),
        missing=tuple(missing),
        overlap=tuple(overlap),
    )


def _has_consistent_proper_subset(inst: IntervalInstance, members: frozenset[int]) -> bool:
    from itertools import combinations

    g = inst.graph
    ordered = sorted(members)
    colors = {r.id: r.color for r in inst.intervals}
    needed = {r.color for r in inst.intervals}
    for k in range(1, len(ordered)):
        for sub in combinations(ordered, k):
            if {colors[v] for v in sub} != needed:
                continue
            ok, _ = _covers(inst, frozenset(g.vertex_ids) - frozenset(sub), frozenset(sub))
            if ok:
                return True
    return False


def cover_from_consistent_subset(
    inst: IntervalInstance,
    members: frozenset[int],
    validate_minimal: bool = True,
) -> LeafBarCover:
    """Build the endpoint-gap chain of a locally minimal consistent subset.

    Bars run between consecutive endpoints of the subset, extended to the
    sentinels when the subset does not reach labels 1 or 2n. Each bar's
    member set is the part of the subset covering that bar's inside
    intervals; subset members left over after that join the first bar so
    the member union is exactly the subset.
    """
    members = frozenset(members)
    everything = frozenset(r.id for r in inst.intervals)
    if not members or not members <= everything:
        raise InputError("members must be a nonempty set of interval ids")
    ok, _ = _covers(inst, everything - members, members)
    if not ok:
        raise InputError("the given set is not a consistent subset")
    if validate_minimal and _has_consistent_proper_subset(inst, members):
        raise InputError("a proper subset is already consistent")

    points = sorted(p for v in members for p in (inst.by_id[v].left, inst.by_id[v].right))
    bars: list[Bar] = []
    if points[0] > 1:
        bars.append(Bar(0, points[0]))
    bars.extend(Bar(points[i], points[i + 1]) for i in range(len(points) - 1))
    if points[-1] < 2 * inst.n:
        bars.append(Bar(points[-1], 2 * inst.n + 1))

    g = inst.graph
    zs: list[set[int]] = []
    assigned: set[int] = set()
    for bar in bars:
        z: set[int] = set()
        for v in inst.inside_ids(bar):
            z |= covering_set(g, v, members)
        zs.append(z)
        assigned |= z
    zs[0] |= members - assigned

    y = frozenset().union(*(inst.inside_ids(b) for b in bars))
    return LeafBarCover(
        bars=tuple(bars),
        zs=tuple(frozenset(z) for z in zs),
        x=members,
        y=y,
    )


# ---------------------------------------------------------------------------
# Chain search.
#
# States walk boundary points left to right; a transition appends the leaf
# bar between the current boundary and a point to its right, merging the
# bar's useful cover into x and its inside set into y. A transition is
# feasible only if the accumulated x covers the accumulated y and the two
# stay disjoint. When a transition makes both endpoints of an interval
# chain boundaries, that interval can never be accounted for later and is
# absorbed into the transition's member set ("pinned").
# ---------------------------------------------------------------------------


class _Chain(NamedTuple):
    bars: tuple[Bar, ...]
    zs: tuple[frozenset[int], ...]
    x: frozenset[int]
    y: frozenset[int]
    boundaries: frozenset[int]

    @property
    def end(self) -> int:
        return self.bars[-1].right if self.bars else next(iter(self.boundaries))


def _empty_chain(start: int) -> _Chain:
    return _Chain((), (), frozenset(), frozenset(), frozenset([start]))


class _Search:
    def __init__(self, inst: IntervalInstance):
        self.inst = inst
        self.last = 2 * inst.n + 1
        self.all_ids = frozenset(r.id for r in inst.intervals)
        self.maxend = {r.id: r.right for r in inst.intervals}
        self._z_memo: dict[Bar, frozenset[int]] = {}

    def bar_cover_members(self, bar: Bar) -> frozenset[int]:
        got = self._z_memo.get(bar)
        if got is None:
            inside = self.inst.inside_ids(bar)
            got = useful_cover(self.inst, bar).members if inside else frozenset()
            self._z_memo[bar] = got
        return got

    def extend(self, chain: _Chain, to: int) -> Optional[_Chain]:
        k = chain.end
        if to <= k or not self.inst.leaf_matrix[k, to]:
            return None
        bar = Bar(k, to)
        z = set(self.bar_cover_members(bar))
        inside = self.inst.inside_ids(bar)
        x1 = chain.x | z
        y1 = chain.y | inside
        if x1 & y1:
            return None
        if 1 <= to <= 2 * self.inst.n:
            owner = self.inst.owner[to]
            rec = self.inst.by_id[owner]
            other = rec.left if rec.right == to else rec.right
            if other in chain.boundaries and owner not in x1 and owner not in y1:
                z.add(owner)
                x1 = x1 | {owner}
        ok, _ = _covers(self.inst, y1, x1)
        if not ok:
            return None
        return _Chain(
            chain.bars + (bar,),
            chain.zs + (frozenset(z),),
            x1,
            y1,
            chain.boundaries | {to},
        )

    def accepted(self, chain: _Chain) -> bool:
        return chain.x | chain.y == self.all_ids

    def debt(self, chain: _Chain) -> int:
        end = chain.end
        accounted = chain.x | chain.y
        return sum(1 for v, e in self.maxend.items() if e <= end and v not in accounted)


def _dp_sweep(search: _Search) -> Optional[_Chain]:
    """Single-chain sweep: keep one best prefix per boundary point.

    Prefixes are ranked by (intervals already stranded, bar count, bar
    sequence); accepted candidates are recorded as they appear, so the
    stored prefix never hides a completed cover. Fast but not guaranteed
    minimal: feasibility of an extension depends on the stored prefix.
    """
    best: list[Optional[_Chain]] = [None] * (search.last + 1)
    best_accepted: Optional[_Chain] = None
    for to in range(1, search.last + 1):
        ranked: Optional[tuple] = None
        chosen: Optional[_Chain] = None
        for k in range(to):
            sources = (_empty_chain(k), best[k])
            for src in sources:
                if src is None:
                    continue
                ext = search.extend(src, to)
                if ext is None:
                    continue
                if search.accepted(ext):
                    if best_accepted is None or (len(ext.bars), ext.bars) < (
                        len(best_accepted.bars),
                        best_accepted.bars,
                    ):
                        best_accepted = ext
                key = (search.debt(ext), len(ext.bars), ext.bars)
                if ranked is None or key < ranked:
                    ranked = key
                    chosen = ext
        best[to] = chosen
    return best_accepted


def _full_search(
    search: _Search, max_bars: int, state_budget: int
) -> tuple[Optional[_Chain], bool]:
    """Enumerate all feasible chains in layers of increasing bar count.

    Returns (best accepted chain, whether the enumeration completed). The
    first layer holding an accepted chain decides the answer, so a
    completed run is exact. The budget counts extensions and keeps the
    worst case bounded and deterministic; on exhaustion the best accepted
    chain seen so far, if any, is still returned.
    """
    layer: list[_Chain] = [_empty_chain(start) for start in range(0, search.last + 1)]
    expanded = 0
    best: Optional[_Chain] = None
    for _ in range(max_bars):
        nxt: list[_Chain] = []
        for c in layer:
            for to in range(c.end + 1, search.last + 1):
                ext = search.extend(c, to)
                if ext is None:
                    continue
                expanded += 1
                if expanded > state_budget:
                    return best, False
                if search.accepted(ext):
                    if best is None or ext.bars < best.bars:
                        best = ext
                else:
                    nxt.append(ext)
        if best is not None:
            return best, True
        layer = nxt
        if not layer:
            return None, True
    return best, True


def _trivial_chain(search: _Search) -> Optional[_Chain]:
    """The all-unit-gap chain; every interval ends up pinned into x."""
    chain = _empty_chain(0)
    for to in range(1, search.last + 1):
        ext = search.extend(chain, to)
        if ext is None:
            return None
        chain = ext
    return chain if search.accepted(chain) else None


def _to_cover(chain: _Chain) -> LeafBarCover:
    return LeafBarCover(bars=chain.bars, zs=chain.zs, x=chain.x, y=chain.y)


def optimal_leaf_bar_cover(
    inst: IntervalInstance,
    max_bars: Optional[int] = None,
    state_budget: int = 150_000,
) -> LeafBarCover:
    """Minimum-bar chain cover of a connected instance.

    The layered enumeration runs first: when it finishes within its budget
    the answer is exactly minimal, and even on budget exhaustion any chain
    it returns sits in the first accepting layer and so is count-minimal.
    Only when it returns nothing does the fast boundary sweep answer, and
    the unit-gap chain backstops both. Every candidate is re-validated; a
    failure moves to the next route instead of being hidden.
    """
    if not inst.connected:
        raise InputError("cover search requires a connected overlap graph")
    search = _Search(inst)
    cap = max_bars if max_bars is not None else 2 * inst.n + 1

    chain, completed = _full_search(search, cap, state_budget)
    candidates = [chain] if chain is not None else []
    if chain is None and not completed:
        dp = _dp_sweep(search)
        if dp is not None:
            candidates.append(dp)
    candidates.append(_trivial_chain(search))
    for cand in candidates:
        if cand is None:
            continue
        cover = _to_cover(cand)
        if is_leaf_bar_cover(inst, cover).valid:
            return cover
    raise NoCoverError("no accepted chain of leaf bars was found")
