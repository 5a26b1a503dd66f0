"""Immutable hypergraph value and its edit operations."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from app.errors import HypergraphError

Vertex = int | str
Edge = tuple[Vertex, ...]


def vertex_key(v: Vertex) -> tuple[int, int | str]:
    """Sort key: integers first (numerically), then strings."""
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise HypergraphError(f"Unsupported vertex id: {v!r}")
    return (0, v) if isinstance(v, int) else (1, v)


def sort_vertices(vertices: Iterable[Vertex]) -> tuple[Vertex, ...]:
    return tuple(sorted(set(vertices), key=vertex_key))


def normalize_edge(edge: Iterable[Vertex]) -> Edge:
    return sort_vertices(edge)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set plus an edge family of vertex sets.

    Vertices are kept in canonical order and every edge is stored as a sorted
    tuple. Edges keep first-occurrence order and equal vertex sets collapse.
    Size-1 edges only arise from contraction; they make the hypergraph
    degenerate (no proper coloring exists). ``apex`` tags vertices added by
    :meth:`join_clique` and ``fresh`` is the counter behind generated ids.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    apex: tuple[Vertex, ...] = ()
    fresh: int = field(default=0, compare=False)

    def __post_init__(self):
        vertices = sort_vertices(self.vertices)
        known = set(vertices)
        edges: list[Edge] = []
        seen: set[Edge] = set()
        for raw in self.edges:
            edge = normalize_edge(raw)
            if not edge:
                raise HypergraphError("Empty edge")
            missing = [v for v in edge if v not in known]
            if missing:
                raise HypergraphError(f"Edge {edge} uses unknown vertices {missing}")
            if edge not in seen:
                seen.add(edge)
                edges.append(edge)
        apex = tuple(v for v in self.apex if v in known)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "apex", apex)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable[Vertex]],
        vertices: Iterable[Vertex] | None = None,
        apex: Iterable[Vertex] = (),
    ) -> Hypergraph:
        """Build from user input: rejects edges of size < 2 and repeated vertices."""
        checked: list[Edge] = []
        for raw in edges:
            raw = tuple(raw)
            if len(set(raw)) != len(raw):
                raise HypergraphError(f"Repeated vertex in edge {raw}")
            if len(raw) < 2:
                raise HypergraphError(f"Edge {raw} has fewer than 2 vertices")
            checked.append(raw)
        if vertices is None:
            vertices = [v for edge in checked for v in edge]
        vertices = list(vertices)
        if not vertices:
            raise HypergraphError("Hypergraph needs at least one vertex")
        return cls(tuple(vertices), tuple(checked), tuple(apex))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degenerate(self) -> bool:
        return any(len(edge) == 1 for edge in self.edges)

    @property
    def max_edge_size(self) -> int:
        return max((len(edge) for edge in self.edges), default=0)

    def degree(self, v: Vertex) -> int:
        return sum(1 for edge in self.edges if v in edge)

    def edge(self, index: int) -> Edge:
        self._check_index(index)
        return self.edges[index]

    def edge_index_of(self, vertices: Iterable[Vertex]) -> int:
        target = normalize_edge(vertices)
        try:
            return self.edges.index(target)
        except ValueError:
            raise HypergraphError(f"No edge {target}") from None

    def _check_index(self, index: int) -> None:
        if not 0 <= index < len(self.edges):
            raise HypergraphError(f"Edge index {index} out of range (m={self.m})")

    def _fresh_id(self, prefix: str, counter: int) -> tuple[str, int]:
        known = set(self.vertices)
        while True:
            counter += 1
            candidate = f"~{prefix}{counter}"
            if candidate not in known:
                return candidate, counter

    def delete_edge(self, index: int) -> Hypergraph:
        self._check_index(index)
        edges = self.edges[:index] + self.edges[index + 1 :]
        return Hypergraph(self.vertices, edges, self.apex, self.fresh)

    def contract_set(self, subset: Iterable[Vertex]) -> Hypergraph:
        """Merge ``subset`` into one fresh vertex; parallel images collapse."""
        subset = set(subset)
        if not subset:
            raise HypergraphError("Cannot contract an empty vertex set")
        unknown = subset - set(self.vertices)
        if unknown:
            raise HypergraphError(f"Vertices {sorted(unknown, key=vertex_key)} not in hypergraph")
        merged, counter = self._fresh_id("c", self.fresh)
        vertices = [v for v in self.vertices if v not in subset] + [merged]
        edges = []
        for edge in self.edges:
            if subset.isdisjoint(edge):
                edges.append(edge)
            else:
                edges.append(tuple(v for v in edge if v not in subset) + (merged,))
        apex = tuple(v for v in self.apex if v not in subset)
        return Hypergraph(tuple(vertices), tuple(edges), apex, counter)

    def contract_edge(self, index: int) -> Hypergraph:
        edge = self.edge(index)
        return self.delete_edge(index).contract_set(edge)

    def join_clique(self, p: int) -> Hypergraph:
        """H joined with K_p; the new vertices are tagged as apex vertices."""
        if p < 1:
            raise HypergraphError("join needs p >= 1")
        counter = self.fresh
        fresh: list[Vertex] = []
        probe = self
        for _ in range(p):
            vertex, counter = probe._fresh_id("w", counter)
            fresh.append(vertex)
            probe = Hypergraph(probe.vertices + (vertex,), (), (), counter)
        edges = list(self.edges)
        for i, w in enumerate(fresh):
            edges.extend((w, v) for v in self.vertices)
            edges.extend((w, u) for u in fresh[:i])
        # all clique pairs come last so nested joins match a single join
        pair_edges = [e for e in edges[self.m :] if all(v in fresh for v in e)]
        spoke_edges = [e for e in edges[self.m :] if not all(v in fresh for v in e)]
        return Hypergraph(
            self.vertices + tuple(fresh),
            tuple(self.edges) + tuple(spoke_edges) + tuple(pair_edges),
            self.apex + tuple(fresh),
            counter,
        )

    def without_vertices(self, removed: Iterable[Vertex]) -> Hypergraph:
        """Induced sub-hypergraph on the remaining vertices."""
        removed = set(removed)
        vertices = tuple(v for v in self.vertices if v not in removed)
        edges = tuple(e for e in self.edges if removed.isdisjoint(e))
        apex = tuple(v for v in self.apex if v not in removed)
        return Hypergraph(vertices, edges, apex, self.fresh)

    def canonical_key(self) -> str:
        """Literal normal form: positions in vertex order, edges sorted."""
        position = {v: i for i, v in enumerate(self.vertices)}
        edges = sorted(tuple(position[v] for v in edge) for edge in self.edges)
        body = ";".join(",".join(map(str, edge)) for edge in edges)
        return f"{self.n}|{body}"

    def describe(self) -> str:
        edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"n={self.n} m={self.m} {edges}".rstrip()


def expected_join_size(h: Hypergraph, p: int) -> tuple[int, int]:
    """(n, m) of the join with K_p."""
    return h.n + p, h.m + p * h.n + comb(p, 2)


def spanning_subhypergraph(h: Hypergraph, edge_indices: Sequence[int]) -> Hypergraph:
    return Hypergraph(h.vertices, tuple(h.edges[i] for i in edge_indices), h.apex, h.fresh)
