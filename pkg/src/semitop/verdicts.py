"""Shared verdict values for window- and truncation-relative checks.

Checkers in this package report a small set of statuses instead of bare
booleans.  Most searches here inspect a finite window or truncation of an
infinite object, so "could not decide within the truncation" is a real
outcome and must never be conflated with a pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
UNDETERMINED = "UNDETERMINED"
NOT_APPLICABLE = "NOT_APPLICABLE"

# Statuses used by search-flavoured checks.
FOUND = "FOUND"
NOT_FOUND_AT_HORIZON = "NOT_FOUND_AT_HORIZON"
VACUOUS = "VACUOUS"
DISTINCT = "DISTINCT"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check, with an optional machine-checkable witness."""

    status: str
    witness: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == PASS

    @property
    def is_fail(self) -> bool:
        return self.status == FAIL


def passed(witness: Any = None, detail: str = "") -> Verdict:
    return Verdict(PASS, witness, detail)


def failed(witness: Any = None, detail: str = "") -> Verdict:
    return Verdict(FAIL, witness, detail)


def undetermined(detail: str = "", witness: Any = None) -> Verdict:
    return Verdict(UNDETERMINED, witness, detail)


def not_applicable(detail: str = "") -> Verdict:
    return Verdict(NOT_APPLICABLE, None, detail)


class HorizonExceeded(Exception):
    """An exact answer would need data beyond the declared horizon."""


class NotReachable(Exception):
    """Element not expressible as a product of generators within the bound."""
