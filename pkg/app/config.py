"""Environment-driven defaults shared by the computation modules."""
import os
from dataclasses import dataclass

ASSIGNMENT_BUDGET = int(os.environ.get("HYPERCHROMA_ASSIGNMENT_BUDGET", str(10**8)))
COVER_BUDGET = int(os.environ.get("HYPERCHROMA_COVER_BUDGET", str(10**6)))
SUBSET_BUDGET = int(os.environ.get("HYPERCHROMA_SUBSET_BUDGET", "20"))
INCLUSION_EXCLUSION_BUDGET = int(os.environ.get("HYPERCHROMA_IE_BUDGET", str(10**6)))

_active_faults: set[str] = {
    name.strip() for name in os.environ.get("HYPERCHROMA_FAULT", "").split(",") if name.strip()
}

KNOWN_FAULTS = ("cwd-exponent",)


@dataclass(frozen=True)
class Budgets:
    """Enumeration limits; exceeding one yields an inconclusive result."""

    assignments: int = ASSIGNMENT_BUDGET
    covers: int = COVER_BUDGET
    subset_edges: int = SUBSET_BUDGET

    def __post_init__(self):
        for name in ("assignments", "covers", "subset_edges"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")

    def to_dict(self) -> dict[str, int]:
        return {
            "assignments": self.assignments,
            "covers": self.covers,
            "subset_edges": self.subset_edges,
        }


def enable_fault(name: str) -> None:
    """Switch on a named fault for the rest of the process."""
    if name not in KNOWN_FAULTS:
        raise ValueError(f"Unknown fault: {name}")
    _active_faults.add(name)


def disable_faults() -> None:
    _active_faults.clear()


def fault_active(name: str) -> bool:
    return name in _active_faults


def active_faults() -> tuple[str, ...]:
    return tuple(sorted(_active_faults))
