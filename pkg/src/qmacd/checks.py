"""Comparison of operator identities and structured counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .polyring import Composition, XPoly


@dataclass
class CheckResult:
    identity: str
    passed: bool
    cases: int = 0
    slice: str | None = None
    counterexample: dict | None = None
    seconds: float | None = field(default=None, compare=False)

    def to_json(self, timings: bool = False) -> dict:
        out = {"identity": self.identity, "status": "pass" if self.passed else "fail", "cases": self.cases}
        if self.slice is not None:
            out["slice"] = self.slice
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 4)
        return out


def first_difference(lhs: XPoly, rhs: XPoly) -> dict | None:
    """The lexicographically first monomial where two polynomials differ."""
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    for k in keys:
        a, b = lhs.coeff(k), rhs.coeff(k)
        if a != b:
            return {"monomial": list(k), "lhs": str(a), "rhs": str(b)}
    return None


def check_on_inputs(name: str, lhs: Callable[[XPoly], XPoly], rhs: Callable[[XPoly], XPoly],
                    inputs: Iterable[tuple[Composition, XPoly]]) -> CheckResult:
    """Compare two operators on each input; stop at the first failure.

    Inputs are expected in increasing degree, so the reported failure is a
    minimal one.
    """
    count = 0
    for label, f in inputs:
        count += 1
        a, b = lhs(f), rhs(f)
        diff = first_difference(a, b)
        if diff is not None:
            diff = {"input": list(label), **diff}
            return CheckResult(name, False, count, counterexample=diff)
    return CheckResult(name, True, count)
