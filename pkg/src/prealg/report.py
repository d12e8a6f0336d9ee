from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a check: verdict, first witness, and free-form details.

    ``witness`` is a tuple of basis indices (or another minimal reproducer);
    ``defect`` is the nonzero vector that witness evaluates to.
    """

    name: str
    holds: bool
    witness: tuple | None = None
    defect: tuple | None = None
    info: dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.holds


# identity checkers return the same shape
IdentityReport = Report
