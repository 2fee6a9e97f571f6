from __future__ import annotations

from dataclasses import dataclass

from .series import TruncatedSeries, first_mismatch


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    order: int
    status: str  # "PASS" or "FAIL"
    first_mismatch: int | None = None
    lhs_coeff: str | None = None
    rhs_coeff: str | None = None
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("PASS", "FAIL"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "PASS") != (self.first_mismatch is None):
            raise ValueError("status must be PASS exactly when there is no mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "order": self.order,
            "status": self.status,
            "first_mismatch": None if self.first_mismatch is None else str(self.first_mismatch),
            "lhs_coeff": self.lhs_coeff,
            "rhs_coeff": self.rhs_coeff,
        }


def compare(check_id: str, order: int, lhs: TruncatedSeries, rhs: TruncatedSeries,
            detail: str = "") -> VerificationReport:
    """Compare two series on their common window and summarise the result."""
    n = first_mismatch(lhs, rhs)
    if n is None:
        return VerificationReport(check_id, order, "PASS", detail=detail)
    return VerificationReport(
        check_id, order, "FAIL", n, str(lhs.get(n)), str(rhs.get(n)), detail
    )


def combine(check_id: str, order: int, reports: list[VerificationReport]) -> VerificationReport:
    """Collapse several sub-checks into one report; the first failure wins."""
    for r in reports:
        if not r.passed:
            return VerificationReport(
                check_id, order, "FAIL", r.first_mismatch, r.lhs_coeff, r.rhs_coeff,
                detail=r.check_id,
            )
    return VerificationReport(check_id, order, "PASS", detail=f"{len(reports)} sub-checks")
