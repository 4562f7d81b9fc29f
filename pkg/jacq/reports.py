from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "fail", "skipped"]


def serialize(value: Any) -> Any:
    """JSON-ready form of exact values: strings for numbers, nested lists/dicts."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [serialize(item) for item in value]
    to_json = getattr(value, "to_json", None)
    if to_json is not None:
        return to_json()
    raise TypeError(f"cannot serialize {type(value).__name__}")


class IdentityReport(BaseModel):
    """Outcome of checking one identity at one index."""

    model_config = ConfigDict(populate_by_name=True)

    identity_id: str
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    status: Status
    passed: Optional[bool] = Field(default=None, alias="pass")
    lhs: Any = None
    rhs: Any = None
    reason: Optional[str] = None

    @classmethod
    def compare(
        cls,
        identity_id: str,
        lhs: Any,
        rhs: Any,
        n: Optional[int] = None,
        r: Optional[int] = None,
        s: Optional[int] = None,
    ) -> IdentityReport:
        passed = bool(lhs == rhs)
        return cls(
            identity_id=identity_id,
            n=n,
            r=r,
            s=s,
            status="pass" if passed else "fail",
            passed=passed,
            lhs=serialize(lhs),
            rhs=serialize(rhs),
        )

    @classmethod
    def skipped(
        cls,
        identity_id: str,
        reason: str,
        n: Optional[int] = None,
        r: Optional[int] = None,
        s: Optional[int] = None,
    ) -> IdentityReport:
        return cls(
            identity_id=identity_id, n=n, r=r, s=s, status="skipped", reason=reason
        )

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def sort_key(self) -> tuple[str, int, int, int]:
        return (
            self.identity_id,
            -1 if self.n is None else self.n,
            -1 if self.r is None else self.r,
            -1 if self.s is None else self.s,
        )

    def to_line(self) -> str:
        return self.model_dump_json(by_alias=True)


class BenchRecord(BaseModel):
    method: str
    n: int
    wall_time: float
    value_digits: int
    multiplications: Optional[int] = None

    def to_line(self) -> str:
        return self.model_dump_json()


def to_csv(rows: Iterable[dict[str, Any]], fieldnames: list[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                key: json.dumps(value) if isinstance(value, (list, dict)) else value
                for key, value in row.items()
                if key in fieldnames
            }
        )
    return buffer.getvalue()
