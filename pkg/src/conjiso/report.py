"""Structured pass/fail records with JSON output.

Integers and fractions are written as decimal strings so that no consumer
loses precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass
class Check:
    check_id: str
    params: dict
    lhs: Any
    rhs: Any
    holds: bool
    witness: Any = None
    asserted: bool = True

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "params": to_jsonable(self.params),
            "lhs": to_jsonable(self.lhs),
            "rhs": to_jsonable(self.rhs),
            "holds": bool(self.holds),
            "witness": to_jsonable(self.witness),
        }
        if not self.asserted:
            out["asserted"] = False
        return out


@dataclass
class VerificationReport:
    """A list of checks. ``asserted=False`` marks report-only entries
    (open conjectures) that never count as failures."""

    suite: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check_id, params, lhs, rhs, holds, witness=None, asserted=True) -> Check:
        c = Check(check_id, params, lhs, rhs, bool(holds), witness, asserted)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks if c.asserted)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.asserted and not c.holds]

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)
        self.data.update(other.data)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "data": to_jsonable(self.data),
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), sort_keys=True, **kw)
