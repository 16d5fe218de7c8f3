"""Per-bar useful covers: at most 2*alpha outside intervals covering the inside.

For a leaf bar, the nearest outside neighbors of the inside intervals are
split by position (entirely left, entirely right, spanning), and one
representative per color is kept per relevant group. Representatives are
chosen by the endpoint nearest the bar: the greatest endpoint for the left
group, the lowest endpoint for the right group, and the greatest left
endpoint for the spanning group. Spanning intervals sit at distance one
from every inside interval, and a bar-nearest side representative is never
farther from an inside interval than any same-color candidate on its side,
so the selection always covers the inside set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import nearest_neighbors
from .intervals import Bar, IntervalInstance, bar_sets, is_leaf_bar


@dataclass(frozen=True)
class QPartition:
    """Nearest outside neighbors of the inside set, split by position."""

    q_l: frozenset[int]
    q_r: frozenset[int]
    q_o: frozenset[int]


@dataclass(frozen=True)
class UsefulCover:
    bar: Bar
    members: frozenset[int]


def _nearest_outside(inst: IntervalInstance, bar: Bar) -> frozenset[int]:
    inside, outside = bar_sets(inst, bar)
    if not inside:
        raise InputError("useful covers are defined for bars with a nonempty inside set")
    if not is_leaf_bar(inst, bar):
        raise InputError(f"bar {tuple(bar)} is not a leaf bar")
    g = inst.graph
    q: set[int] = set()
    for v in inside:
        q |= nearest_neighbors(g, v, outside)
    return frozenset(q)


def partition_q(inst: IntervalInstance, bar: Bar) -> QPartition:
    """Split the nearest outside neighbors by endpoint position around the bar."""
    q = _nearest_outside(inst, bar)
    q_l, q_r, q_o = set(), set(), set()
    for vid in q:
        rec = inst.by_id[vid]
        if rec.right <= bar.left:
            q_l.add(vid)
        elif rec.left >= bar.right:
            q_r.add(vid)
        else:
            # Outside the open bar with endpoints on both sides: spans it.
            q_o.add(vid)
    return QPartition(frozenset(q_l), frozenset(q_r), frozenset(q_o))


def useful_cover(inst: IntervalInstance, bar: Bar) -> UsefulCover:
    """Select the covering representatives for a leaf bar with inside intervals."""
    part = partition_q(inst, bar)
    inside, _ = bar_sets(inst, bar)
    inside_colors = sorted({inst.by_id[v].color for v in inside})

    def side_picks(color: int) -> list[int]:
        picks = []
        lefts = [inst.by_id[v] for v in part.q_l if inst.by_id[v].color == color]
        if lefts:
            picks.append(max(lefts, key=lambda r: r.right).id)
        rights = [inst.by_id[v] for v in part.q_r if inst.by_id[v].color == color]
        if rights:
            picks.append(min(rights, key=lambda r: r.left).id)
        return picks

    members: set[int] = set()
    spanning_colors = {inst.by_id[v].color for v in part.q_o}
    for color in inside_colors:
        if color in spanning_colors:
            spans = [inst.by_id[v] for v in part.q_o if inst.by_id[v].color == color]
            members.add(max(spans, key=lambda r: r.left).id)
        else:
            picks = side_picks(color)
            # A leaf bar guarantees a same-color nearest neighbor for every
            # inside color, so an empty pick here is an internal defect.
            if not picks:
                raise AssertionError(
                    f"leaf bar {tuple(bar)} has no candidate of color {color}"
                )
            members.update(picks)
    return UsefulCover(bar, frozenset(members))
