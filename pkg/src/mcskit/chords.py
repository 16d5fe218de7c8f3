"""Chord diagrams, circle graphs, and the dominating-set-to-MCS gadget.

A diagram places n colored chords on circle positions 1..2n (all distinct).
The circle graph joins chords whose endpoints interleave. The reduction
doubles the diagram: every source chord is copied with color 1, and each
copy gains a pendant chord of its own fresh color that crosses the copy
and nothing else, so dominating sets of the source correspond exactly to
consistent subsets of the gadget, offset by the pendant count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from .errors import DisconnectedGraphError, FormatError, GuardExceededError, InputError
from .graphs import (
    ColoredGraph,
    exact_mcs,
    exact_min_dominating_set,
    is_consistent_subset,
)

REDUCTION_GUARD = 10


class ChordRecord(NamedTuple):
    id: int
    color: int
    a: int
    b: int


class ChordDiagram:
    """n chords over circle positions 1..2n; ids are 1..n."""

    def __init__(self, chords: Sequence[ChordRecord]):
        records = tuple(
            ChordRecord(int(c[0]), int(c[1]), *sorted((int(c[2]), int(c[3])))) for c in chords
        )
        n = len(records)
        if n == 0:
            raise InputError("a chord diagram needs at least one chord")
        if sorted(r.id for r in records) != list(range(1, n + 1)):
            raise InputError("chord ids must be contiguous integers from 1")
        positions = sorted(p for r in records for p in (r.a, r.b))
        if positions != list(range(1, 2 * n + 1)):
            raise InputError("chord endpoints must cover the positions 1..2n exactly once")
        colors = {r.color for r in records}
        alpha = max(colors)
        if min(colors) < 1 or colors != set(range(1, alpha + 1)):
            raise InputError("colors must use every id in 1..alpha")
        self.chords = records
        self.n = n
        self.alpha = alpha
        self.by_id = {r.id: r for r in records}

    @cached_property
    def graph(self) -> ColoredGraph:
        colors = {r.id: r.color for r in self.chords}
        edges = [
            (a.id, b.id)
            for i, a in enumerate(self.chords)
            for b in self.chords[i + 1 :]
            if chords_cross(a, b)
        ]
        return ColoredGraph(colors, edges)

    def __repr__(self) -> str:
        return f"ChordDiagram(n={self.n}, alpha={self.alpha})"


def chords_cross(a: ChordRecord, b: ChordRecord) -> bool:
    """True iff exactly one endpoint of b lies strictly between a's endpoints."""
    pts = {a.a, a.b, b.a, b.b}
    if len(pts) != 4:
        raise InputError("chords may not share an endpoint")
    lo, hi = min(a.a, a.b), max(a.a, a.b)
    return (lo < b.a < hi) != (lo < b.b < hi)


def circle_graph(diagram: ChordDiagram) -> ColoredGraph:
    """Crossing graph of the diagram: vertices are chords, edges are crossings."""
    return diagram.graph


@dataclass(frozen=True)
class ReducedInstance:
    diagram: ChordDiagram
    v1_ids: frozenset[int]
    v2_ids: frozenset[int]
    pendant_of: dict[int, int]


def reduce_domset_to_mcs(source: ChordDiagram) -> ReducedInstance:
    """Build the 2n-chord gadget diagram from a source diagram.

    Source colors are ignored. Copies keep the source crossing pattern and
    all get color 1; pendant i (id n+i, color i+1) occupies two fresh
    positions flanking the lower endpoint of copy i, so it crosses that
    copy and nothing else.
    """
    n = source.n
    # New position layout: walking 1..2n, each position p that is the lower
    # endpoint of a chord is preceded and followed by that chord's pendant
    # endpoints. Flanking consecutive slots cannot trap any other endpoint.
    new_pos: dict[int, int] = {}
    pendant_pos: dict[int, tuple[int, int]] = {}
    cursor = 1
    lower_owner = {min(r.a, r.b): r.id for r in source.chords}
    for p in range(1, 2 * n + 1):
        owner = lower_owner.get(p)
        if owner is not None:
            first = cursor
            new_pos[p] = cursor + 1
            pendant_pos[owner] = (first, cursor + 2)
            cursor += 3
        else:
            new_pos[p] = cursor
            cursor += 1
    chords = [
        ChordRecord(r.id, 1, new_pos[r.a], new_pos[r.b]) for r in source.chords
    ]
    chords += [
        ChordRecord(n + i, i + 1, *pendant_pos[i]) for i in sorted(pendant_pos)
    ]
    diagram = ChordDiagram(chords)
    return ReducedInstance(
        diagram=diagram,
        v1_ids=frozenset(range(1, n + 1)),
        v2_ids=frozenset(range(n + 1, 2 * n + 1)),
        pendant_of={i: n + i for i in range(1, n + 1)},
    )


@dataclass(frozen=True)
class ReductionVerdict:
    n: int
    dominating_size: int
    mcs_size: int
    expected_mcs_size: int
    verdict: bool
    dominating_set: tuple[int, ...]
    consistent_subset: tuple[int, ...]


def verify_reduction_lemma(
    source: ChordDiagram, guard: Optional[int] = REDUCTION_GUARD
) -> ReductionVerdict:
    """Check |MCS(gadget)| == n + |min dominating set(source)| by brute force.

    Also exercises the constructive direction: the pendants plus the copies
    of the dominating set must form a consistent subset of the gadget.
    """
    if guard is not None and source.n > guard:
        raise GuardExceededError(
            f"reduction check on {source.n} chords exceeds the guard of {guard}"
        )
    t = circle_graph(source)
    if not t.connected:
        raise DisconnectedGraphError("the source circle graph must be connected")
    reduced = reduce_domset_to_mcs(source)
    t2 = circle_graph(reduced.diagram)

    domset = exact_min_dominating_set(t, guard=guard)
    mcs = exact_mcs(t2, guard=None if guard is None else 2 * guard)
    assert mcs is not None

    witness = reduced.v2_ids | domset
    if not is_consistent_subset(t2, witness):
        raise AssertionError("pendants plus dominating-set copies failed consistency")

    expected = source.n + len(domset)
    return ReductionVerdict(
        n=source.n,
        dominating_size=len(domset),
        mcs_size=len(mcs),
        expected_mcs_size=expected,
        verdict=len(mcs) == expected,
        dominating_set=tuple(sorted(domset)),
        consistent_subset=tuple(sorted(mcs)),
    )


# ---------------------------------------------------------------------------
# Text format: `chords <n>` header and `c <id> <color> <posA> <posB>`
# records; reduced instances carry extra `pendant <copy-id> <pendant-id>`
# records in the same document.
# ---------------------------------------------------------------------------


def parse_chords(text: str) -> ChordDiagram:
    diagram, pendants = _parse_chord_document(text)
    if pendants:
        raise FormatError("unexpected pendant records in a plain chord diagram")
    return diagram


def parse_reduced(text: str) -> ReducedInstance:
    diagram, pendants = _parse_chord_document(text)
    if not pendants:
        raise FormatError("missing pendant records in a reduced instance")
    v1 = frozenset(pendants)
    v2 = frozenset(pendants.values())
    if v1 | v2 != {r.id for r in diagram.chords} or v1 & v2:
        raise FormatError("pendant map must split the chords into copies and pendants")
    return ReducedInstance(diagram=diagram, v1_ids=v1, v2_ids=v2, pendant_of=pendants)


def _parse_chord_document(text: str) -> tuple[ChordDiagram, dict[int, int]]:
    header = None
    rows: list[ChordRecord] = []
    pendants: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "chords":
                if header is not None:
                    raise FormatError(f"line {lineno}: duplicate header")
                header = int(parts[1])
            elif parts[0] == "c":
                rows.append(
                    ChordRecord(int(parts[1]), int(parts[2]), int(parts[3]), int(parts[4]))
                )
            elif parts[0] == "pendant":
                pendants[int(parts[1])] = int(parts[2])
            else:
                raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"line {lineno}: malformed record: {raw!r}") from exc
    if header is None:
        raise FormatError("missing 'chords <n>' header")
    if len(rows) != header:
        raise FormatError(f"header declares {header} chords, found {len(rows)}")
    try:
        diagram = ChordDiagram(rows)
    except InputError as exc:
        raise FormatError(str(exc)) from exc
    return diagram, pendants


def format_chords(diagram: ChordDiagram) -> str:
    lines = [f"chords {diagram.n}"]
    for r in sorted(diagram.chords, key=lambda r: r.id):
        lines.append(f"c {r.id} {r.color} {r.a} {r.b}")
    return "\n".join(lines) + "\n"


def format_reduced(reduced: ReducedInstance) -> str:
    body = format_chords(reduced.diagram)
    lines = [f"pendant {v1} {v2}" for v1, v2 in sorted(reduced.pendant_of.items())]
    return body + "\n".join(lines) + ("\n" if lines else "")


def load_chords(path: str) -> ChordDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_chords(fh.read())
