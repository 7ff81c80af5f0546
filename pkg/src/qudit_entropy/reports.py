"""Outcome record for a single inequality evaluation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .matfun import SATURATED

PASS_TOL = 1e-10


@dataclass
class InequalityReport:
    """``lhs <= rhs`` checked as ``margin = rhs - lhs >= -tol``.

    Relative-entropy style checks (``D >= 0``) use ``lhs = 0`` and ``rhs = D``.
    """

    name: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    tol: float = PASS_TOL
    parameters: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_sides(cls, name: str, lhs: float, rhs: float, tol: float = PASS_TOL,
                   parameters: dict[str, Any] | None = None) -> "InequalityReport":
        lhs, rhs = float(lhs), float(rhs)
        params = dict(parameters or {})
        if rhs >= SATURATED or math.isinf(rhs):
            params["saturated"] = True
            margin = SATURATED
        else:
            margin = rhs - lhs
        return cls(name, lhs, rhs, margin, margin >= -tol, tol, params)

    @property
    def saturated(self) -> bool:
        return bool(self.parameters.get("saturated", False))

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "pass": self.passed,
            "tol": self.tol,
            "parameters": self.parameters,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "InequalityReport":
        return cls(d["name"], d["lhs"], d["rhs"], d["margin"], d["pass"],
                   d.get("tol", PASS_TOL), dict(d.get("parameters", {})))
