"""Verification report records and the counterexample archive."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

__all__ = ["VerificationReport", "PASS", "FAIL", "EXPLORATORY", "archive_counterexamples", "instance_hash"]

PASS = "PASS"
FAIL = "FAIL"
EXPLORATORY = "EXPLORATORY"


@dataclass
class VerificationReport:
    claim_id: str
    params: dict = field(default_factory=dict)
    instances_tested: int = 0
    counterexamples: list = field(default_factory=list)
    status: str = PASS
    wall_time: float = 0.0
    seed: int = 0
    skipped: int = 0
    budget_skipped: int = 0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(**data)


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def instance_hash(instance: dict) -> str:
    return hashlib.sha256(_canonical(instance).encode()).hexdigest()[:16]


def archive_counterexamples(report: VerificationReport, directory) -> list[Path]:
    """Write each counterexample to ``<directory>/<claim_id>-<hash>.json``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for inst in report.counterexamples:
        path = directory / f"{report.claim_id}-{instance_hash(inst)}.json"
        path.write_text(_canonical(inst) + "\n")
        paths.append(path)
    return paths
