"""Verification report records and exit-status aggregation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any, Iterable

from app.polynomial import IntPolynomial, format_rational

SCHEMA_VERSION = 1

CLAIM_IDS = (
    "gir1",
    "evencyc",
    "prop1p1",
    "lemma9",
    "join-identity",
    "level",
    "lemma2p1",
    "lemma2p2",
    "th2p1",
    "co2p1",
    "ans3",
)


class Status(StrEnum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"
    HYPOTHESIS_UNMET = "hypothesis-unmet"


EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NO_INPUT = 66
EXIT_INTERNAL = 70


def to_jsonable(value: Any) -> Any:
    """Polynomials become ascending coefficient lists, rationals 'p/q' strings."""
    if isinstance(value, IntPolynomial):
        return value.to_list()
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    return value


@dataclass
class VerificationReport:
    claim_id: str
    instance: str
    k_range: tuple[int, ...]
    status: Status
    payload: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.claim_id not in CLAIM_IDS:
            raise ValueError(f"Unknown claim id: {self.claim_id}")
        self.status = Status(self.status)
        self.k_range = tuple(self.k_range)

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return self.claim_id, self.instance, json.dumps(list(self.k_range))

    def to_dict(self) -> dict[str, Any]:
        return {
            "claimId": self.claim_id,
            "instance": self.instance,
            "kRange": list(self.k_range),
            "status": self.status.value,
            "payload": to_jsonable(self.payload),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        return cls(
            claim_id=data["claimId"],
            instance=data["instance"],
            k_range=tuple(data["kRange"]),
            status=Status(data["status"]),
            payload=data.get("payload", {}),
            notes=list(data.get("notes", [])),
        )


def sort_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: r.sort_key)


def exit_code(reports: Iterable[VerificationReport]) -> int:
    statuses = {r.status for r in reports}
    if Status.VIOLATED in statuses:
        return EXIT_VIOLATED
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def reports_document(reports: Iterable[VerificationReport]) -> dict[str, Any]:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "reports": [r.to_dict() for r in sort_reports(reports)],
    }
