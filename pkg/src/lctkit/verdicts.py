"""Three-valued verdicts carrying machine-checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

YES = "YES"
NO = "NO"
UNKNOWN = "UNKNOWN"


class HypothesisError(ValueError):
    """The hypotheses of an operation are not met by the input."""


def frac_str(value) -> str:
    """Render an exact rational for certificate payloads."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Verdict:
    """Outcome of one certified check.

    YES and NO always carry a re-checkable certificate; UNKNOWN carries the
    reason (budget exhausted, hypotheses unmet, theory out of scope).
    Certificate payloads hold only JSON-serializable primitives, with exact
    rationals rendered as ``p/q`` strings.
    """

    value: str
    rule: str
    certificate: Mapping[str, Any] = field(default_factory=dict)
    caveats: tuple[str, ...] = ()
    reason: str | None = None

    def __post_init__(self):
        if self.value not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad verdict value {self.value!r}")
        if self.value == UNKNOWN and not self.reason:
            raise ValueError("UNKNOWN verdicts must state a reason")
        if self.value in (YES, NO) and not self.certificate:
            raise ValueError(f"{self.value} verdicts must carry a certificate")

    def to_dict(self) -> dict:
        out = {
            "value": self.value,
            "rule": self.rule,
            "certificate": _plain(self.certificate),
            "caveats": list(self.caveats),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _plain(value):
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return value
