"""Covers of K_1 joined with H, read level by level through the apex color."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from app.config import ASSIGNMENT_BUDGET
from app.covers import Cover, PermCoverSpec, count_colorings_brute, require_valid
from app.errors import CoverError
from app.hypergraph import Hypergraph, Vertex
from app.utils.assignments import count_avoiding


@dataclass(frozen=True)
class ApexCover:
    """Cover of the join with pair edges {w, v} and the hyperedges of H.

    ``levels[j - 1][v]`` is the color at v of the pair-edge row whose apex
    color is j.
    """

    joined: Hypergraph
    cover: Cover
    apex: Vertex
    inner: Hypergraph
    pair_edges: dict[Vertex, int]
    hyperedges: tuple[int, ...]
    levels: tuple[dict[Vertex, int], ...]

    @property
    def k(self) -> int:
        return self.cover.k

    @classmethod
    def build(cls, joined: Hypergraph, cover: Cover) -> ApexCover:
        if len(joined.apex) != 1:
            raise CoverError("apex cover needs exactly one tagged apex vertex")
        require_valid(joined, cover)
        w = joined.apex[0]
        pair_edges: dict[Vertex, int] = {}
        hyperedges = []
        for index, edge in enumerate(joined.edges):
            if w not in edge:
                hyperedges.append(index)
            elif len(edge) == 2:
                other = edge[0] if edge[1] == w else edge[1]
                pair_edges[other] = index
            else:
                raise CoverError(f"apex {w!r} lies in the non-pair edge {edge}")
        inner = joined.without_vertices([w])
        missing = [v for v in inner.vertices if v not in pair_edges]
        if missing:
            raise CoverError(f"vertices {missing} have no pair edge to the apex")
        k = cover.k
        levels: list[dict[Vertex, int]] = [{} for _ in range(k)]
        for v, index in pair_edges.items():
            rows = cover.rows(index)
            if len(rows) != k:
                raise CoverError(f"pair edge {{{w}, {v}}} needs {k} maps")
            apex_position = joined.edges[index].index(w)
            for row in rows:
                levels[row[apex_position] - 1][v] = row[1 - apex_position]
        return cls(joined, cover, w, inner, pair_edges, tuple(hyperedges), tuple(levels))


@dataclass(frozen=True)
class LevelCheck:
    level: int
    is_level: bool
    matches: tuple[tuple[int, int], ...]
    failing_edge: int | None
    failing_pattern: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "isLevel": self.is_level,
            "matches": [{"edge": e, "row": q} for e, q in self.matches],
            "failingEdge": self.failing_edge,
            "failingPattern": list(self.failing_pattern) if self.failing_pattern else None,
        }


@dataclass(frozen=True)
class ApexDecomposition:
    counts: tuple[int, ...]
    brute_total: int

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def consistent(self) -> bool:
        return self.total == self.brute_total

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "total": self.total,
            "bruteTotal": self.brute_total,
            "consistent": self.consistent,
        }


def level_mapping_check(ac: ApexCover, level: int) -> LevelCheck:
    """Whether every hyperedge has a row matching the level slice (rows are 1-based)."""
    if not 1 <= level <= ac.k:
        raise CoverError(f"level {level} outside 1..{ac.k}")
    slice_ = ac.levels[level - 1]
    matches = []
    for index in ac.hyperedges:
        edge = ac.joined.edges[index]
        pattern = tuple(slice_[v] for v in edge)
        rows = ac.cover.rows(index)
        if pattern not in rows:
            return LevelCheck(level, False, tuple(matches), index, pattern)
        matches.append((index, rows.index(pattern) + 1))
    return LevelCheck(level, True, tuple(matches), None, None)


def apex_decomposition(ac: ApexCover, budget: int = ASSIGNMENT_BUDGET) -> ApexDecomposition:
    """Per apex color j, the colorings of H avoiding the hyperedge maps and the level-j slice.

    Coloring the apex j rules out exactly f(v) = levels[j][v] on each v, so
    the counts must add up to the full count on the join.
    """
    inner = ac.inner
    position = {v: i for i, v in enumerate(inner.vertices)}
    base = []
    for index in ac.hyperedges:
        rows = ac.cover.rows(index)
        if rows:
            base.append(([position[v] for v in ac.joined.edges[index]], np.array(rows, dtype=np.int64)))
    counts = []
    for slice_ in ac.levels:
        unary = [([position[v]], np.array([[color]], dtype=np.int64)) for v, color in slice_.items()]
        counts.append(count_avoiding(inner.n, ac.k, base + unary, budget))
    return ApexDecomposition(tuple(counts), count_colorings_brute(ac.joined, ac.cover, budget))


ApexLayout = list[tuple[Vertex, tuple[Vertex, ...]]]


def apex_layout(joined: Hypergraph) -> ApexLayout:
    """Anchor per edge: the apex on pair edges, the first vertex on hyperedges."""
    w = joined.apex[0]
    layout = []
    for edge in joined.edges:
        anchor = w if w in edge else edge[0]
        layout.append((anchor, tuple(v for v in edge if v != anchor)))
    return layout


def apex_specs(
    layout: ApexLayout, k: int, exhaustive: bool, sample: int = 200, seed: int = 0
) -> Iterator[PermCoverSpec]:
    """Every perfect cover up to row order, or the natural cover and ``sample - 1`` random ones."""
    anchors = tuple(anchor for anchor, _ in layout)
    if exhaustive:
        perms = list(itertools.permutations(range(1, k + 1)))
        per_edge = [
            [tuple(zip(free, combo)) for combo in itertools.product(perms, repeat=len(free))]
            for _, free in layout
        ]
        for columns in itertools.product(*per_edge):
            yield PermCoverSpec(anchors, tuple(columns))
        return
    rng = np.random.default_rng(seed)
    yield PermCoverSpec(anchors, tuple(() for _ in layout))
    for _ in range(sample - 1):
        columns = tuple(
            tuple((v, tuple(int(c) + 1 for c in rng.permutation(k))) for v in free)
            for _, free in layout
        )
        yield PermCoverSpec(anchors, columns)
