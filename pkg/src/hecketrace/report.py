"""Pass/fail bookkeeping shared by the verification suites."""

from dataclasses import dataclass, field

__all__ = ["CheckReport"]


@dataclass
class CheckReport:
    """Result of running one verification suite.

    failures holds (case key, left value, right value) triples; the report is
    ok exactly when every recorded comparison was an exact match.
    """

    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def record(self, key, left, right):
        self.cases += 1
        if left != right:
            self.failures.append((key, left, right))

    def record_ok(self, key, ok: bool):
        self.cases += 1
        if not ok:
            self.failures.append((key, False, True))

    @property
    def ok(self) -> bool:
        return not self.failures

    def first_failure(self):
        return self.failures[0] if self.failures else None

    def merge(self, other: "CheckReport"):
        self.cases += other.cases
        self.failures.extend((f"{other.name}:{key}", l, r) for key, l, r in other.failures)

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return f"{self.name}: {self.cases} cases, {state}"
