"""Cover JSON files: {"k": int, "edges": [{"edge": [...], "maps": [[...], ...]}]}."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from app.covers.model import Cover, require_valid
from app.errors import CoverError
from app.hypergraph import Hypergraph, Vertex


def _match_vertex(raw: Any, lookup: dict[str, Vertex]) -> Vertex:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise CoverError(f"Bad vertex id {raw!r} in cover file")
    try:
        return lookup[str(raw)]
    except KeyError:
        raise CoverError(f"Cover mentions unknown vertex {raw!r}") from None


def cover_from_dict(h: Hypergraph, data: dict) -> Cover:
    """Build and validate a cover; maps are realigned to the normalized edge order."""
    if not isinstance(data, dict) or not isinstance(data.get("k"), int):
        raise CoverError("Cover JSON needs an integer 'k'")
    k = data["k"]
    lookup = {str(v): v for v in h.vertices}
    rows: list[list[list[int]]] = [[] for _ in h.edges]
    seen: set[int] = set()
    for entry in data.get("edges", []):
        try:
            listed = [_match_vertex(v, lookup) for v in entry["edge"]]
            maps = entry["maps"]
        except (KeyError, TypeError):
            raise CoverError("Each cover entry needs 'edge' and 'maps'") from None
        try:
            index = h.edge_index_of(listed)
        except ValueError:
            raise CoverError(f"{listed} is not an edge of the hypergraph") from None
        if index in seen:
            raise CoverError(f"Edge {listed} listed twice")
        seen.add(index)
        order = [listed.index(v) for v in h.edges[index]]
        for row in maps:
            if not isinstance(row, list) or len(row) != len(listed):
                raise CoverError(f"Map {row!r} does not match edge {listed}")
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in row):
                raise CoverError(f"Map {row!r} has non-integer colors")
            rows[index].append([row[j] for j in order])
    return require_valid(h, Cover.from_rows(k, rows))


def cover_to_dict(h: Hypergraph, cover: Cover) -> dict:
    return {
        "k": cover.k,
        "edges": [
            {"edge": list(edge), "maps": [list(row) for row in cover.rows(i)]}
            for i, edge in enumerate(h.edges)
        ],
    }


def load_cover(h: Hypergraph, path: str | Path) -> Cover:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CoverError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return cover_from_dict(h, data)


def dump_cover(h: Hypergraph, cover: Cover, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cover_to_dict(h, cover), indent=2) + "\n")
