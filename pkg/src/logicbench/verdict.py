from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision or a proof check.

    `ok` is the affirmative answer (tautology, valid, proof checks).  A failed
    proof check carries the offending `line` and a `reason`; a failed semantic
    test carries a `countermodel`.  `definitive` is False when a bounded
    search found nothing but cannot certify validity.
    """

    ok: bool
    countermodel: Any = None
    line: int | None = None
    reason: str = ""
    definitive: bool = True

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "valid" if self.definitive else "no countermodel found (bounded search)"
        if self.line is not None:
            return f"line {self.line}: {self.reason}"
        return self.reason or "invalid"
