"""Plain-text hypergraph format.

    # comment
    vertices: a b c
    edge: a b c
    apex: w

Integer-looking ids are read as integers.
"""
from __future__ import annotations

import re
from pathlib import Path

from app.errors import HypergraphFormatError
from app.hypergraph import Hypergraph, Vertex

_INTEGER = re.compile(r"-?\d+")
_DIRECTIVES = ("vertices", "edge", "apex")


def _token_value(token: str) -> Vertex:
    return int(token) if _INTEGER.fullmatch(token) else token


def _tokens(line: str, start: int) -> list[tuple[Vertex, int]]:
    """Values after ``start`` with their 1-based columns."""
    return [
        (_token_value(m.group()), start + m.start() + 1) for m in re.finditer(r"\S+", line[start:])
    ]


def parse_hypergraph_text(text: str, infer_vertices: bool = False) -> Hypergraph:
    declared: list[Vertex] | None = None
    edges: list[tuple[tuple[Vertex, ...], int, list[int]]] = []
    apex: list[tuple[Vertex, int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            column = len(line) - len(line.lstrip()) + 1
            raise HypergraphFormatError("expected 'directive: values'", number, column)
        directive, _ = line.split(":", 1)
        name = directive.strip()
        if name not in _DIRECTIVES:
            column = len(directive) - len(directive.lstrip()) + 1
            raise HypergraphFormatError(f"unknown directive '{name}'", number, column)
        values = _tokens(line, len(directive) + 1)

        if name == "vertices":
            if declared is not None:
                raise HypergraphFormatError("vertices declared twice", number)
            declared = []
            for vertex, column in values:
                if vertex in declared:
                    raise HypergraphFormatError(f"vertex {vertex} declared twice", number, column)
                declared.append(vertex)
        elif name == "edge":
            seen: list[Vertex] = []
            for vertex, column in values:
                if vertex in seen:
                    raise HypergraphFormatError(f"repeated vertex {vertex} in edge", number, column)
                seen.append(vertex)
            if len(seen) < 2:
                raise HypergraphFormatError("edge needs at least 2 vertices", number, len(directive) + 2)
            edges.append((tuple(seen), number, [column for _, column in values]))
        else:
            apex.extend((vertex, number, column) for vertex, column in values)

    if declared is None:
        if not infer_vertices:
            raise HypergraphFormatError("missing 'vertices:' line (or infer vertices from edges)", 1)
        declared = [v for edge, _, _ in edges for v in edge]
    if not declared:
        raise HypergraphFormatError("hypergraph has no vertices", 1)

    known = set(declared)
    first_seen: dict[frozenset, int] = {}
    for edge, number, columns in edges:
        for vertex, column in zip(edge, columns):
            if vertex not in known:
                raise HypergraphFormatError(f"unknown vertex {vertex}", number, column)
        key = frozenset(edge)
        if key in first_seen:
            raise HypergraphFormatError(f"duplicate edge (first on line {first_seen[key]})", number)
        first_seen[key] = number
    for vertex, number, column in apex:
        if vertex not in known:
            raise HypergraphFormatError(f"unknown apex vertex {vertex}", number, column)

    return Hypergraph.from_edges([e for e, _, _ in edges], declared, [v for v, _, _ in apex])


def parse_hypergraph_file(path: str | Path, infer_vertices: bool = False) -> Hypergraph:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Hypergraph file not found: {path}")
    return parse_hypergraph_text(path.read_text(), infer_vertices)


def write_hypergraph(h: Hypergraph) -> str:
    lines = ["vertices: " + " ".join(map(str, h.vertices))]
    lines.extend("edge: " + " ".join(map(str, edge)) for edge in h.edges)
    if h.apex:
        lines.append("apex: " + " ".join(map(str, h.apex)))
    return "\n".join(lines) + "\n"
