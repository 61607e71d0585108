"""Pass/fail records for checked identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence, Union

Value = Union[int, Sequence[int]]


def _encode(value: Value) -> str | list[str]:
    if isinstance(value, int):
        return str(value)
    return [str(c) for c in value]


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of a checked identity and whether they matched.

    ``routes`` holds any further independently computed values (e.g. the two
    generating-function routes of the composition identity); a report only
    passes when every route agrees with ``lhs`` and ``rhs``.
    """

    check: str
    parameters: dict[str, int]
    lhs: Value
    rhs: Value
    passed: bool
    detail: str = ""
    routes: dict[str, Value] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "parameters": dict(self.parameters),
            "lhs": _encode(self.lhs),
            "rhs": _encode(self.rhs),
            "passed": self.passed,
            "detail": self.detail,
        }
        if self.routes:
            out["routes"] = {k: _encode(v) for k, v in self.routes.items()}
        return out

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{'PASS' if self.passed else 'FAIL'} {self.check} {params}"
        return f"{line}: {self.detail}" if self.detail else line


def compare_coefficients(
    check: str, parameters: dict[str, int], lhs: Sequence[int], rhs: Sequence[int]
) -> VerificationReport:
    """Coefficient-by-coefficient comparison, recording the first mismatch."""
    lhs, rhs = tuple(lhs), tuple(rhs)
    detail = ""
    if lhs != rhs:
        for k in range(max(len(lhs), len(rhs))):
            left = lhs[k] if k < len(lhs) else None
            right = rhs[k] if k < len(rhs) else None
            if left != right:
                detail = f"first mismatch at q^{k}: {left} != {right}"
                break
    return VerificationReport(check, parameters, lhs, rhs, lhs == rhs, detail)
