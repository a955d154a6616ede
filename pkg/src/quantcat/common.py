"""Shared plumbing: exceptions, check reports, enumeration budgets."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any

#: Default cap on the number of candidates any single search may enumerate.
#: 2**12, so subset-exhaustive checks cover carriers of up to 12 elements.
DEFAULT_BUDGET = 4096

BUDGET_ENV_VAR = "QUANTCAT_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class CarrierMismatch(ValueError):
    """An element was used with a quantale it does not belong to."""


class PreconditionError(ValueError):
    """A declared precondition of an operation failed; carries the evidence."""

    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value


class ConstructionError(RuntimeError):
    """A construction whose correctness is asserted produced invalid output."""


class BudgetExceeded(Exception):
    """An enumeration would exceed the configured candidate budget."""

    def __init__(self, what: str, needed: int, budget: int, skipped: Any = None):
        self.what = what
        self.needed = needed
        self.budget = budget
        self.skipped = skipped
        msg = f"budget exceeded: {what} needs {needed} candidates, budget is {budget}"
        if skipped is not None:
            msg += f" (skipped: {skipped})"
        super().__init__(msg)


def guard_count(needed: int, budget: int, what: str, skipped: Any = None) -> None:
    if needed > budget:
        raise BudgetExceeded(what, needed, budget, skipped)


@dataclass
class Check:
    """One named pass/fail verdict, with a witness when it fails."""

    name: str
    ok: bool
    witness: Any = None

    def describe(self) -> str:
        mark = "pass" if self.ok else "FAIL"
        if self.witness is None:
            return f"{self.name}: {mark}"
        return f"{self.name}: {mark} ({self.witness})"


@dataclass
class Report:
    """A bundle of checks; ``ok`` iff every check passed."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(ok), witness))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def describe(self) -> str:
        return "; ".join(c.describe() for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok
