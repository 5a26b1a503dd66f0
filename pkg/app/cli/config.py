"""Run configuration assembled from argv over the environment defaults."""
from __future__ import annotations

from dataclasses import dataclass, field

from app.config import Budgets

OUTPUT_FORMATS = ("markdown", "csv", "json")


@dataclass(frozen=True)
class RunConfig:
    k_range: tuple[int, ...]
    budgets: Budgets = field(default_factory=Budgets)
    output_format: str = "markdown"
    output: str | None = None
    cache: str | None = None
    threads: int = 1
    seed: int = 0

    def __post_init__(self):
        if not self.k_range:
            raise ValueError("k range must not be empty")
        if min(self.k_range) < 1:
            raise ValueError("k must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")
        if self.threads < 1:
            raise ValueError("thread count must be positive")

    @property
    def k(self) -> int:
        return self.k_range[0]

    @classmethod
    def from_bounds(cls, low: int, high: int, **kwargs) -> RunConfig:
        return cls(tuple(range(low, high + 1)), **kwargs)
