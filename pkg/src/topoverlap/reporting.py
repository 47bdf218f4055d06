"""Check rows shared by the verification reports."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CheckRow", "all_passed"]


@dataclass(frozen=True)
class CheckRow:
    """One verified inequality or predicate: ``lhs <= rhs`` style, with the
    verdict pinned at creation time."""

    check: str
    lhs: object
    rhs: object
    passed: bool


def all_passed(rows) -> bool:
    return all(r.passed for r in rows)
