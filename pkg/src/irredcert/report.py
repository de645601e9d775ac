"""Check reports and the arithmetic half of a witness."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .numtheory import PrimePowerSplit


class Theorem(str, enum.Enum):
    T1 = "T1"  # disk dominance at alpha, n >= alpha + d
    T2 = "T2"  # annulus via |a_j| alpha^j > sum |a_i| beta^i
    T3 = "T3"  # annulus via the (beta/alpha)^(m-j) variant


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INPUT_ERROR = "INPUT_ERROR"


@dataclass(frozen=True)
class ArithmeticWitness:
    """f(n) = sign * p^k * d, prefix s_0..s_{ell-1} divisible by p^k."""

    n: int
    split: PrimePowerSplit
    ell: int

    @property
    def p(self) -> int:
        return self.split.p

    @property
    def k(self) -> int:
        return self.split.k

    @property
    def d(self) -> int:
        return self.split.d

    @property
    def sign(self) -> int:
        return self.split.sign


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    status: Status
    records: list[CheckRecord] = field(default_factory=list)
    theorem: Theorem | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failure(self) -> str | None:
        """Name of the first failed condition, if any."""
        for r in self.records:
            if not r.passed:
                return r.name
        return None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "theorem": self.theorem.value if self.theorem else None,
            "failure": self.failure,
            "records": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in self.records
            ],
        }

    def format(self) -> str:
        head = f"{self.status.value}" + (f" ({self.theorem.value})" if self.theorem else "")
        lines = [head]
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"  [{mark}] {r.name}: {r.detail}")
        return "\n".join(lines)


class _Recorder:
    """Accumulates records; ``check`` returns False once anything has failed."""

    def __init__(self, theorem: Theorem | None = None):
        self.records: list[CheckRecord] = []
        self.theorem = theorem
        self.ok = True

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.records.append(CheckRecord(name, bool(passed), detail))
        self.ok = self.ok and bool(passed)
        return self.ok

    def input_error(self, name: str, detail: str) -> CheckReport:
        self.records.append(CheckRecord(name, False, detail))
        return CheckReport(Status.INPUT_ERROR, self.records, self.theorem)

    def report(self) -> CheckReport:
        return CheckReport(Status.PASS if self.ok else Status.FAIL, self.records, self.theorem)
