"""Verification reports: one record per checked identity, serialisable to JSON."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from kerov.partitions import Partition, format_partition

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_VIOLATED = "hypothesis-violated"


def fraction_str(x) -> str:
    """Exact ``"p/q"`` rendering (``"p"`` for integers)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _key(k: Any) -> str:
    if isinstance(k, tuple) and all(isinstance(v, int) for v in k):
        return format_partition(k)
    return fraction_str(k) if isinstance(k, Fraction) else str(k)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, tuple) and all(isinstance(v, int) for v in value):
        return format_partition(value)
    if isinstance(value, dict):
        return {_key(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class CheckReport:
    identity: str
    n: int | None = None
    alpha: Fraction | None = None
    mu: Partition | None = None
    status: str = PASS
    counterexample: dict | None = None
    checked: int = 0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "alpha": None if self.alpha is None else fraction_str(self.alpha),
            "mu": None if self.mu is None else format_partition(self.mu),
            "status": self.status,
            "checked": self.checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def compare(identity: str, cases: Iterable[tuple[dict, Any, Any]], **meta) -> CheckReport:
    """Check ``lhs == rhs`` for every ``(context, lhs, rhs)`` case.

    The first mismatch is kept as the counterexample; checking continues so
    that ``checked`` counts every case.
    """
    report = CheckReport(identity, **meta)
    for context, lhs, rhs in cases:
        report.checked += 1
        if lhs != rhs and report.counterexample is None:
            report.status = FAIL
            report.counterexample = dict(context, lhs=lhs, rhs=rhs)
    return report
