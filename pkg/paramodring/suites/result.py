"""Check outcomes and per-suite results."""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided"

_SEVERITY = {PASS: 0, UNDECIDED: 1, FAIL: 2}


@dataclass
class CheckOutcome:
    check_id: str
    status: str
    witness: str = ""

    def to_dict(self) -> dict:
        return {"check": self.check_id, "status": self.status, "witness": self.witness}


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckOutcome] = field(default_factory=list)
    aborted: bool = False

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    @property
    def worst(self) -> str:
        if not self.checks:
            return PASS
        return max((c.status for c in self.checks), key=_SEVERITY.__getitem__)

    @property
    def exit_code(self) -> int:
        """0 when every check passed, 1 otherwise (undecided counts as not passed)."""
        return 0 if self.worst == PASS and not self.aborted else 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": self.worst,
            "aborted": self.aborted,
            "passed": self.count(PASS),
            "failed": self.count(FAIL),
            "undecided": self.count(UNDECIDED),
            "checks": [c.to_dict() for c in self.checks],
        }

    def table(self) -> str:
        width = max((len(c.check_id) for c in self.checks), default=10)
        lines = [f"== {self.suite} =="]
        for c in self.checks:
            line = f"{c.check_id:<{width}}  {c.status.upper():<9}"
            if c.status != PASS and c.witness:
                line += f"  {c.witness}"
            lines.append(line)
        lines.append(
            f"{self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(UNDECIDED)} undecided"
            + (" (aborted)" if self.aborted else "")
        )
        return "\n".join(lines)
