"""Structural queries: components, girth, cycle census, coloring number."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx
from networkx.utils import UnionFind

from app.errors import HypergraphError
from app.hypergraph.core import Hypergraph, Vertex, sort_vertices, vertex_key

INFINITY = math.inf


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[tuple[Vertex, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_of(self, v: Vertex) -> int:
        for i, block in enumerate(self.blocks):
            if v in block:
                return i
        raise HypergraphError(f"Vertex {v!r} not in partition")


@dataclass(frozen=True)
class CycleWitness:
    """Vertex and edge sequences with vertex[i-1], vertex[i] inside edge[i]."""

    vertex_seq: tuple[Vertex, ...]
    edge_seq: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_seq)

    def is_valid_for(self, h: Hypergraph) -> bool:
        p = self.length
        if p < 2 or len(self.vertex_seq) != p:
            return False
        if len(set(self.vertex_seq)) != p or len(set(self.edge_seq)) != p:
            return False
        return all(
            {self.vertex_seq[i - 1], self.vertex_seq[i]} <= set(h.edges[self.edge_seq[i]])
            for i in range(p)
        )

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertex_seq), "edges": list(self.edge_seq)}


class EdgeGirth(NamedTuple):
    length: float | int
    witness: CycleWitness | None


@dataclass(frozen=True)
class CycleCensus:
    z: int
    t: int
    witnesses: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Classification:
    is_linear: bool
    uniform_rank: int | None


def _partition(vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]]) -> ComponentPartition:
    forest = UnionFind(vertices)
    for edge in edges:
        forest.union(*edge)
    blocks = [sort_vertices(block) for block in forest.to_sets()]
    blocks.sort(key=lambda block: vertex_key(block[0]))
    return ComponentPartition(tuple(blocks))


def components(h: Hypergraph) -> ComponentPartition:
    return _partition(h.vertices, h.edges)


def covered_component_count(h: Hypergraph, edge_indices: Iterable[int]) -> tuple[int, int]:
    """(covered vertex count, component count) of the edges in ``edge_indices``."""
    chosen = [h.edges[i] for i in edge_indices]
    covered = {v for edge in chosen for v in edge}
    if not covered:
        return 0, 0
    return len(covered), _partition(covered, chosen).count


def incidence_graph(h: Hypergraph, skip: int | None = None) -> nx.Graph:
    """Bipartite vertex/edge incidence graph, optionally without edge ``skip``."""
    graph = nx.Graph()
    graph.add_nodes_from(("v", v) for v in h.vertices)
    for i, edge in enumerate(h.edges):
        if i == skip:
            continue
        graph.add_node(("e", i))
        graph.add_edges_from((("e", i), ("v", v)) for v in edge)
    return graph


def two_section(h: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    for edge in h.edges:
        graph.add_edges_from(itertools.combinations(edge, 2))
    return graph


def girth_of_edge(h: Hypergraph, index: int) -> EdgeGirth:
    """Shortest cycle through edge ``index``: 1 + min distance in H - e.

    Distances are counted in edges along alternating vertex/edge walks of the
    incidence graph, which is what the shortest-path search measures after
    halving.
    """
    edge = h.edge(index)
    if len(edge) < 2:
        raise HypergraphError(f"Edge {index} is degenerate")
    graph = incidence_graph(h, skip=index)
    best: list[tuple[Vertex | int, ...]] | None = None
    for u in edge:
        paths = nx.single_source_shortest_path(graph, ("v", u))
        for v in edge:
            if v == u or ("v", v) not in paths:
                continue
            path = paths[("v", v)]
            if best is None or len(path) < len(best):
                best = path
    if best is None:
        return EdgeGirth(INFINITY, None)
    vertex_seq = tuple(node[1] for node in best[0::2])
    edge_seq = (index,) + tuple(node[1] for node in best[1::2])
    return EdgeGirth(len(edge_seq), CycleWitness(vertex_seq, edge_seq))


def girth(h: Hypergraph) -> float | int:
    lengths = [girth_of_edge(h, i).length for i, e in enumerate(h.edges) if len(e) >= 2]
    return min(lengths, default=INFINITY)


def cycle_witness_for_edges(h: Hypergraph, edge_indices: Iterable[int]) -> CycleWitness | None:
    """A cycle using exactly the given edges, or None."""
    chosen = sorted(set(edge_indices))
    if len(chosen) < 2:
        return None
    first, rest = chosen[0], chosen[1:]
    for order in itertools.permutations(rest):
        cyclic = (first,) + order
        if len(cyclic) > 2 and order[0] > order[-1]:
            continue
        found = _distinct_links(h, cyclic)
        if found is not None:
            return CycleWitness(found, tuple(cyclic))
    return None


def _distinct_links(h: Hypergraph, cyclic: Sequence[int]) -> tuple[Vertex, ...] | None:
    p = len(cyclic)
    options = [
        sorted(set(h.edges[cyclic[i]]) & set(h.edges[cyclic[(i + 1) % p]]), key=vertex_key)
        for i in range(p)
    ]
    chosen: list[Vertex] = []

    def extend(i: int) -> bool:
        if i == p:
            return True
        for v in options[i]:
            if v in chosen:
                continue
            chosen.append(v)
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def enumerate_cycles(h: Hypergraph, max_length: int) -> Iterator[CycleWitness]:
    """Every cycle up to ``max_length`` as witnessed sequences, rotations included.

    Brute force over vertex/edge sequences; intended as an oracle on small inputs.
    """
    incident = {v: [i for i, e in enumerate(h.edges) if v in e] for v in h.vertices}

    def walk(vertices: list[Vertex], edges: list[int], target: int) -> Iterator[CycleWitness]:
        if len(vertices) == target:
            start, last = vertices[0], vertices[-1]
            for i in incident[last]:
                if i not in edges and start in h.edges[i]:
                    yield CycleWitness(tuple(vertices), (i,) + tuple(edges))
            return
        last = vertices[-1]
        for i in incident[last]:
            if i in edges:
                continue
            for v in h.edges[i]:
                if v in vertices:
                    continue
                yield from walk(vertices + [v], edges + [i], target)

    for p in range(2, max_length + 1):
        for start in h.vertices:
            yield from walk([start], [], p)


def shortest_cycle_census(h: Hypergraph) -> CycleCensus:
    """Girth z and the edge sets of size z that form a cycle of length z."""
    z = girth(h)
    if z == INFINITY:
        raise HypergraphError("Hypergraph has no cycles")
    z = int(z)
    usable = [i for i, e in enumerate(h.edges) if len(e) >= 2]
    witnesses = tuple(
        frozenset(subset)
        for subset in itertools.combinations(usable, z)
        if cycle_witness_for_edges(h, subset) is not None
    )
    return CycleCensus(z, len(witnesses), witnesses)


def coloring_number(h: Hypergraph) -> int:
    """1 + degeneracy of the 2-section."""
    graph = two_section(h)
    if graph.number_of_nodes() == 0:
        return 1
    return max(nx.core_number(graph).values(), default=0) + 1


def classify(h: Hypergraph) -> Classification:
    is_linear = all(
        len(set(a) & set(b)) <= 1 for a, b in itertools.combinations(h.edges, 2)
    )
    sizes = {len(e) for e in h.edges}
    uniform_rank = sizes.pop() if len(sizes) == 1 else None
    return Classification(is_linear, uniform_rank)


def is_hypertree(h: Hypergraph) -> bool:
    return (
        components(h).count == 1
        and classify(h).is_linear
        and girth(h) == INFINITY
    )
