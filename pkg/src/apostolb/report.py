"""Verdicts produced by identity checks, and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactq import MultiPoly

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Failure:
    index: tuple
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"index": list(self.index), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of checking one identity over an index sweep.

    ``passed`` is true exactly when ``first_failure`` is None.
    """

    identity_id: str
    params: dict
    max_index: int
    passed: bool
    first_failure: Failure | None = None
    erratum_note: str | None = None
    mode: str = "symbolic"

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must be true exactly when there is no failure")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "max_index": self.max_index,
            "passed": self.passed,
            "mode": self.mode,
            "erratum_note": self.erratum_note,
            "first_failure": None if self.first_failure is None else self.first_failure.to_dict(),
        }


def _text(value) -> str:
    return value.to_text() if isinstance(value, MultiPoly) else str(value)


@dataclass
class Sweep:
    """Accumulates exact comparisons and keeps the first mismatch.

    Indices must be visited in increasing order so the kept failure is the
    minimal one.
    """

    identity_id: str
    params: dict
    erratum_note: str | None = None
    mode: str = "symbolic"
    max_index: int = 0
    failure: Failure | None = field(default=None)

    def check(self, index, lhs, rhs) -> bool:
        if not isinstance(index, tuple):
            index = (index,)
        self.max_index = max(self.max_index, max(index) if index else 0)
        if self.failure is not None:
            return False
        if lhs == rhs:
            return True
        self.failure = Failure(index, _text(lhs), _text(rhs))
        return False

    def fail(self, index, lhs: str, rhs: str) -> None:
        if self.failure is None:
            self.failure = Failure(tuple(index), lhs, rhs)

    @property
    def failed(self) -> bool:
        return self.failure is not None

    def report(self, max_index: int | None = None) -> VerdictReport:
        return VerdictReport(
            identity_id=self.identity_id,
            params=dict(self.params),
            max_index=self.max_index if max_index is None else max_index,
            passed=self.failure is None,
            first_failure=self.failure,
            erratum_note=self.erratum_note,
            mode=self.mode,
        )
