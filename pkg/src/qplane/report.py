"""Verification report shared by the Theorem 1 and Theorem 2 checkers.

JSON schema (one object)::

    {
      "theorem": "theorem1" | "theorem2",
      "order_or_n": int,             # n_max for theorem1, order for theorem2
      "status": "verified" | "failed",
      "failures": [ {...}, ... ],    # one record per offending coefficient
      "elapsed_ms": float,
      "cases": [ {...}, ... ]        # per-n (theorem1) or per-degree (theorem2) summary
    }

Every failure record carries ``"check"`` naming the comparison and
``"xexp"``/``"yexp"`` naming the monomial; the remaining keys depend on the check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERIFIED = "verified"
FAILED = "failed"


@dataclass
class VerificationReport:
    theorem: str
    order_or_n: int
    failures: list[dict] = field(default_factory=list)
    cases: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return FAILED if self.failures else VERIFIED

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        cases = self.cases
        if not timing:
            cases = [{k: v for k, v in c.items() if k != "elapsed_ms"} for c in cases]
        out = {
            "theorem": self.theorem,
            "order_or_n": self.order_or_n,
            "status": self.status,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
            "cases": cases,
        }
        return out

    def to_json(self, timing: bool = True, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    def summary(self) -> str:
        line = f"{self.theorem} up to {self.order_or_n}: {self.status}"
        if self.failures:
            line += f" ({len(self.failures)} failing coefficients)"
        return line
