"""Instance descriptors such as ``cycle:3:4`` or ``join:1:file:data/x.hg``."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from app.errors import HypergraphError
from app.hypergraph import Hypergraph, complete, hypertree, linear_cycle, random_hypergraph, theta
from app.cli.textformat import parse_hypergraph_file

PROJECT_ROOT = Path(__file__).resolve().parents[2]

_ARITY = {"cycle": 2, "hypertree": 3, "theta": 3, "random": 1}


@dataclass(frozen=True)
class InstanceSpec:
    generator: str
    params: tuple[int, ...] = ()
    path: str | None = None
    inner: InstanceSpec | None = None
    flag: str | None = None

    @property
    def label(self) -> str:
        if self.generator == "file":
            return f"file:{self.path}"
        if self.generator == "join":
            return f"join:{self.params[0]}:{self.inner.label}"
        parts = [self.generator, *map(str, self.params)]
        if self.flag:
            parts.append(self.flag)
        return ":".join(parts)


def _integers(name: str, values: list[str]) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in values)
    except ValueError:
        raise HypergraphError(f"{name} parameters must be integers: {values}") from None


def parse_instance_spec(text: str) -> InstanceSpec:
    name, _, rest = text.partition(":")
    if name == "file":
        if not rest:
            raise HypergraphError("file instance needs a path")
        return InstanceSpec("file", path=rest)
    if name == "join":
        p, _, inner = rest.partition(":")
        (count,) = _integers("join", [p])
        return InstanceSpec("join", (count,), inner=parse_instance_spec(inner))
    values = rest.split(":") if rest else []
    if name == "complete":
        flag = None
        if values and values[-1] == "singletons":
            flag = values.pop()
        if len(values) != 1:
            raise HypergraphError("complete takes one parameter: complete:N[:singletons]")
        return InstanceSpec("complete", _integers(name, values), flag=flag)
    if name not in _ARITY:
        raise HypergraphError(f"Unknown generator: {name}")
    if len(values) != _ARITY[name]:
        raise HypergraphError(f"{name} takes {_ARITY[name]} parameters, got {len(values)}")
    return InstanceSpec(name, _integers(name, values))


def resolve_path(path: str) -> Path:
    candidate = Path(path)
    if not candidate.is_absolute() and not candidate.exists():
        shipped = PROJECT_ROOT / candidate
        if shipped.exists():
            return shipped
    return candidate


def generate(spec: InstanceSpec, infer_vertices: bool = False) -> Hypergraph:
    match spec.generator:
        case "cycle":
            return linear_cycle(*spec.params)
        case "hypertree":
            return hypertree(*spec.params)
        case "theta":
            return theta(*spec.params)
        case "complete":
            return complete(spec.params[0], singletons=spec.flag == "singletons")
        case "random":
            return random_hypergraph(spec.params[0])
        case "join":
            return generate(spec.inner, infer_vertices).join_clique(spec.params[0])
        case "file":
            return parse_hypergraph_file(resolve_path(spec.path), infer_vertices)
    raise HypergraphError(f"Unknown generator: {spec.generator}")


def load_instance(text: str, infer_vertices: bool = False) -> Hypergraph:
    return generate(parse_instance_spec(text), infer_vertices)
