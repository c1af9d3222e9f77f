"""
Run reports: what a CLI command checked and the exit code that follows.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from degenlab.certificates.check import ASSERTED_ONLY

PASS = "pass"
FAIL = "fail"
ERRATUM = "erratum"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ASSERTED = 2
EXIT_GRAPH = 3
EXIT_USAGE = 64
EXIT_DATA = 65


@dataclass(frozen=True)
class Verdict:
    suite: str
    subject: str
    status: str
    evidence: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "subject": self.subject, "status": self.status, "evidence": self.evidence}


@dataclass
class RunReport:
    command: str
    verdicts: List[Verdict] = field(default_factory=list)
    exit_code: int = EXIT_OK
    output: str = ""

    def add(self, suite: str, subject: str, status: str, evidence: str = "") -> Verdict:
        verdict = Verdict(suite, subject, status, evidence)
        self.verdicts.append(verdict)
        return verdict

    def settle(self, allow_external: bool = False) -> int:
        """
        Derive the exit code from the verdicts.

        pass and acknowledged errata pass; AssertedOnly passes only with
        allow_external and otherwise exits 2 unless something failed.
        """
        statuses = {v.status for v in self.verdicts}
        if FAIL in statuses:
            self.exit_code = EXIT_FAIL
        elif ASSERTED_ONLY in statuses and not allow_external:
            self.exit_code = EXIT_ASSERTED
        else:
            self.exit_code = EXIT_OK
        return self.exit_code

    @property
    def passed(self) -> bool:
        return self.exit_code == EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "exit_code": self.exit_code,
            "verdicts": [v.to_dict() for v in sorted(self.verdicts, key=lambda v: (v.suite, v.subject))],
        }
