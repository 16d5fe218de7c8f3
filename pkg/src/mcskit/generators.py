"""Seeded random instance generators with connectivity guarantees.

Interval instances are drawn as a uniform random perfect matching of the
2n endpoint labels into (left, right) pairs; chord diagrams do the same
over circle positions. Colors are uniform with every color forced to
appear. Whole instances are resampled until the derived graph is
connected, so the distribution is uniform within the connected stratum and
a seed fully determines the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chords import ChordDiagram, ChordRecord
from .errors import InputError
from .intervals import IntervalInstance, IntervalRecord
from .rng import SplitMix64

_MAX_RESAMPLES = 100_000


@dataclass(frozen=True)
class GenConfig:
    n: int
    alpha: int
    seed: int
    connectivity: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be at least 1")
        if not 1 <= self.alpha <= self.n:
            raise InputError("alpha must satisfy 1 <= alpha <= n")


def _random_matching(rng: SplitMix64, count: int) -> list[tuple[int, int]]:
    """Uniform perfect matching of the labels 1..count into sorted pairs."""
    free = list(range(1, count + 1))
    pairs = []
    while free:
        a = free.pop(0)
        b = free.pop(rng.below(len(free)))
        pairs.append((a, b) if a < b else (b, a))
    return sorted(pairs)


def _random_colors(rng: SplitMix64, n: int, alpha: int) -> list[int]:
    while True:
        colors = [rng.below(alpha) + 1 for _ in range(n)]
        if set(colors) == set(range(1, alpha + 1)):
            return colors


def random_interval_instance(cfg: GenConfig) -> IntervalInstance:
    rng = SplitMix64(cfg.seed)
    for _ in range(_MAX_RESAMPLES):
        pairs = _random_matching(rng, 2 * cfg.n)
        colors = _random_colors(rng, cfg.n, cfg.alpha)
        inst = IntervalInstance(
            [IntervalRecord(i + 1, colors[i], *pairs[i]) for i in range(cfg.n)]
        )
        if not cfg.connectivity or inst.connected:
            return inst
    raise InputError(f"no connected instance found for {cfg}")


def random_chord_diagram(cfg: GenConfig) -> ChordDiagram:
    rng = SplitMix64(cfg.seed)
    for _ in range(_MAX_RESAMPLES):
        pairs = _random_matching(rng, 2 * cfg.n)
        colors = _random_colors(rng, cfg.n, cfg.alpha)
        diagram = ChordDiagram(
            [ChordRecord(i + 1, colors[i], *pairs[i]) for i in range(cfg.n)]
        )
        if not cfg.connectivity or diagram.graph.connected:
            return diagram
    raise InputError(f"no connected diagram found for {cfg}")


def manifest_line(cfg: GenConfig, filename: str) -> str:
    return f"{cfg.seed},{cfg.n},{cfg.alpha},{filename}"


MANIFEST_HEADER = "seed,n,alpha,file"
