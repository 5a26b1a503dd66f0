"""k-fold covers as data, and the permutation/shift normal forms that expand into them.

A perfect family F_e lists, at every vertex of e, k distinct colors across
its rows, so each column is a permutation of [k]. Relabeling rows so the
anchor column reads 1..k leaves one permutation per non-anchor vertex:
every perfect cover is a :class:`PermCoverSpec` up to row order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from app.errors import CoverError
from app.hypergraph import Hypergraph, Vertex

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class PartialMap:
    """Colors on one edge, aligned with the edge's normalized vertex order."""

    edge_index: int
    colors: tuple[int, ...]


@dataclass(frozen=True)
class Cover:
    k: int
    maps: tuple[tuple[PartialMap, ...], ...]

    @property
    def perfect(self) -> bool:
        return all(len(rows) == self.k for rows in self.maps)

    def rows(self, index: int) -> tuple[tuple[int, ...], ...]:
        return tuple(m.colors for m in self.maps[index])

    @classmethod
    def from_rows(cls, k: int, rows: Sequence[Sequence[Sequence[int]]]) -> Cover:
        return cls(
            k,
            tuple(
                tuple(PartialMap(i, tuple(row)) for row in edge_rows)
                for i, edge_rows in enumerate(rows)
            ),
        )

    def with_map(self, index: int, colors: Sequence[int]) -> Cover:
        maps = list(self.maps)
        maps[index] = maps[index] + (PartialMap(index, tuple(colors)),)
        return Cover(self.k, tuple(maps))


@dataclass(frozen=True)
class CoverViolation:
    edge_index: int | None
    pair: tuple[int, int] | None
    message: str

    def to_dict(self) -> dict:
        return {"edge": self.edge_index, "pair": list(self.pair) if self.pair else None, "message": self.message}


def validate_cover(h: Hypergraph, cover: Cover) -> CoverViolation | None:
    """First broken cover invariant, or None."""
    if cover.k < 1:
        return CoverViolation(None, None, f"fold count {cover.k} must be positive")
    if len(cover.maps) != h.m:
        return CoverViolation(None, None, f"cover lists {len(cover.maps)} edges, hypergraph has {h.m}")
    for index, (edge, rows) in enumerate(zip(h.edges, cover.maps)):
        if len(rows) > cover.k:
            return CoverViolation(index, None, f"{len(rows)} maps exceed k={cover.k}")
        for row in rows:
            if row.edge_index != index:
                return CoverViolation(index, None, f"map filed under edge {row.edge_index}")
            if len(row.colors) != len(edge):
                return CoverViolation(index, None, f"map {row.colors} does not match edge {edge}")
            if any(not 1 <= c <= cover.k for c in row.colors):
                return CoverViolation(index, None, f"map {row.colors} uses a color outside 1..{cover.k}")
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                if any(x == y for x, y in zip(rows[a].colors, rows[b].colors)):
                    return CoverViolation(
                        index, (a, b), f"maps {rows[a].colors} and {rows[b].colors} agree at a vertex"
                    )
    return None


def require_valid(h: Hypergraph, cover: Cover) -> Cover:
    violation = validate_cover(h, cover)
    if violation is not None:
        raise CoverError(violation.message)
    return cover


def check_permutation(perm: Sequence[int], k: int) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, k + 1)):
        raise CoverError(f"{perm} is not a permutation of 1..{k}")
    return perm


@dataclass(frozen=True)
class PermCoverSpec:
    """Per edge: an anchor vertex and a permutation for each other vertex.

    Row i puts i on the anchor and ``perm[i - 1]`` on the vertex owning
    ``perm``. Vertices without an entry get the identity.
    """

    anchors: tuple[Vertex, ...]
    columns: tuple[tuple[tuple[Vertex, Permutation], ...], ...]

    def to_dict(self) -> dict:
        return {
            "anchors": list(self.anchors),
            "columns": [[[v, list(perm)] for v, perm in column] for column in self.columns],
        }


@dataclass(frozen=True)
class ShiftSpec:
    """Per edge, per vertex (aligned with the edge order): a shift in Z_k."""

    shifts: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"shifts": [list(s) for s in self.shifts]}


def natural_cover(h: Hypergraph, k: int) -> Cover:
    if k < 1:
        raise CoverError("natural cover needs k >= 1")
    return Cover.from_rows(k, [[[i] * len(edge) for i in range(1, k + 1)] for edge in h.edges])


def identity_spec(h: Hypergraph) -> PermCoverSpec:
    return PermCoverSpec(tuple(edge[0] for edge in h.edges), tuple(() for _ in h.edges))


def expand_spec(spec: PermCoverSpec | ShiftSpec, h: Hypergraph, k: int) -> Cover:
    if isinstance(spec, ShiftSpec):
        return _expand_shift(spec, h, k)
    if len(spec.anchors) != h.m or len(spec.columns) != h.m:
        raise CoverError("permutation spec does not match the hypergraph's edges")
    identity = tuple(range(1, k + 1))
    rows = []
    for edge, anchor, column in zip(h.edges, spec.anchors, spec.columns):
        if anchor not in edge:
            raise CoverError(f"anchor {anchor!r} not in edge {edge}")
        perms: dict[Vertex, Permutation] = {}
        for v, perm in column:
            if v not in edge or v == anchor:
                raise CoverError(f"column vertex {v!r} invalid for edge {edge}")
            perms[v] = check_permutation(perm, k)
        rows.append(
            [[perms.get(v, identity)[i - 1] if v != anchor else i for v in edge] for i in range(1, k + 1)]
        )
    return Cover.from_rows(k, rows)


def _expand_shift(spec: ShiftSpec, h: Hypergraph, k: int) -> Cover:
    if len(spec.shifts) != h.m:
        raise CoverError("shift spec does not match the hypergraph's edges")
    rows = []
    for edge, shifts in zip(h.edges, spec.shifts):
        if len(shifts) != len(edge):
            raise CoverError(f"shift row {shifts} does not match edge {edge}")
        rows.append([[(i - 1 + s) % k + 1 for s in shifts] for i in range(1, k + 1)])
    return Cover.from_rows(k, rows)


def saturate(h: Hypergraph, cover: Cover) -> Cover:
    """Complete every deficient family with rows built from unused colors."""
    rows = []
    for edge, maps in zip(h.edges, cover.maps):
        existing = [list(m.colors) for m in maps]
        missing = cover.k - len(existing)
        if missing > 0:
            unused = [
                sorted(set(range(1, cover.k + 1)) - {row[pos] for row in existing})
                for pos in range(len(edge))
            ]
            existing.extend([[unused[pos][t] for pos in range(len(edge))] for t in range(missing)])
        rows.append(existing)
    return Cover.from_rows(cover.k, rows)


def apply_vertex_gauge(h: Hypergraph, cover: Cover, gauge: Mapping[Vertex, Sequence[int]]) -> Cover:
    """Recolor each vertex v by c -> gauge[v][c - 1]; missing vertices keep colors."""
    checked = {v: check_permutation(g, cover.k) for v, g in gauge.items()}
    rows = []
    for edge, maps in zip(h.edges, cover.maps):
        rows.append(
            [
                [checked[v][c - 1] if v in checked else c for v, c in zip(edge, m.colors)]
                for m in maps
            ]
        )
    return Cover.from_rows(cover.k, rows)
