"""Verification reports and the small harness that fills them."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .qalgebra import LaurentPoly, RationalQ, TruncatedLaurentSeries

PASS = "pass"
FAIL = "fail"


def render_value(value) -> str:
    if isinstance(value, (LaurentPoly, RationalQ, TruncatedLaurentSeries)):
        return value.render()
    return str(value)


def encode_value(value):
    """JSON-ready structured form of a value; coefficients as decimal strings."""
    if isinstance(value, LaurentPoly):
        return value.to_pairs()
    if isinstance(value, RationalQ):
        return {"numerator": value.numerator.to_pairs(),
                "denominator": value.denominator.to_pairs()}
    if isinstance(value, TruncatedLaurentSeries):
        return {"min_exponent": value.min_exponent, "cutoff": value.cutoff,
                "terms": value.to_poly().to_pairs()}
    if isinstance(value, int):
        return str(value)
    return None


def decode_value(data):
    """Inverse of :func:`encode_value`."""
    if data is None:
        return None
    if isinstance(data, str):
        return int(data)
    if isinstance(data, list):
        return LaurentPoly.from_pairs(data)
    if "numerator" in data:
        return RationalQ(LaurentPoly.from_pairs(data["numerator"]),
                         LaurentPoly.from_pairs(data["denominator"]))
    poly = LaurentPoly.from_pairs(data["terms"])
    return TruncatedLaurentSeries.from_poly(poly, data["cutoff"], data["min_exponent"])


@dataclass
class Counterexample:
    params: dict
    lhs: str
    rhs: str
    lhs_value: object = None
    rhs_value: object = None


@dataclass
class VerificationReport:
    """Outcome of checking one identity over a parameter grid.

    ``status`` is ``"fail"`` exactly when ``counterexamples`` is nonempty.
    A report carries everything needed to reproduce a failure: the grid,
    the failing parameters and both sides rendered as text.
    """

    identity_id: str
    grid: dict
    status: str = PASS
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0
    window: list | None = None
    checks: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data["counterexamples"] = [Counterexample(**c) for c in data.get("counterexamples", [])]
        return cls(**data)

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        return cls.from_dict(json.loads(line))

    def summary_line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f" window={self.window}" if self.window else ""
        return (f"{mark:4} {self.identity_id:<12} checks={self.checks:<6} "
                f"{self.elapsed_ms:>7} ms{extra}")


class Verification:
    """Accumulates equality checks into a :class:`VerificationReport`.

    >>> v = Verification("demo", {"n": [0, 3]})
    >>> for n in range(3):
    ...     _ = v.check({"n": n}, n * n, n ** 2)
    >>> v.report().status
    'pass'
    """

    # cap on stored counterexamples; the count of failures is kept in notes
    max_counterexamples = 20

    def __init__(self, identity_id: str, grid: dict):
        self.identity_id = identity_id
        self.grid = grid
        self.counterexamples: list[Counterexample] = []
        self.failures = 0
        self.checks = 0
        self.window = None
        self.notes: dict = {}
        self._start = time.perf_counter()

    def check(self, params: dict, lhs, rhs, equal=None) -> bool:
        self.checks += 1
        ok = (lhs == rhs) if equal is None else equal
        if not ok:
            self.fail(params, lhs, rhs)
        return ok

    def fail(self, params: dict, lhs, rhs) -> None:
        self.failures += 1
        if len(self.counterexamples) < self.max_counterexamples:
            self.counterexamples.append(
                Counterexample(dict(params), render_value(lhs), render_value(rhs),
                               encode_value(lhs), encode_value(rhs))
            )

    def report(self) -> VerificationReport:
        elapsed = int(round((time.perf_counter() - self._start) * 1000))
        notes = dict(self.notes)
        if self.failures > len(self.counterexamples):
            notes["failures"] = self.failures
        return VerificationReport(
            identity_id=self.identity_id,
            grid=self.grid,
            status=FAIL if self.counterexamples else PASS,
            counterexamples=list(self.counterexamples),
            elapsed_ms=elapsed,
            window=list(self.window) if self.window else None,
            checks=self.checks,
            notes=notes,
        )
