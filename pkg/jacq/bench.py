"""Time the evaluators of J(n) against each other."""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Optional, Sequence

from jacq.constants import BENCH_METHODS
from jacq.errors import BenchDisagreement, DomainError
from jacq.exactnum import decimal_digits
from jacq.logs import get_logger
from jacq.matrices import build_M, mat_power_counted
from jacq.reports import BenchRecord
from jacq.sequences import SeqKind, binet_J3, closed_form_residue, iterate_term

logger = get_logger("bench")


def evaluate(method: str, n: int) -> tuple[Fraction, Optional[int]]:
    """J(n) by one method, plus the matrix product count for the matrix method."""
    if n < 0:
        raise DomainError(f"bench expects n >= 0, got {n}")
    if method == "recurrence":
        return iterate_term(SeqKind.J3, n), None
    if method == "matrix":
        power, multiplications = mat_power_counted(build_M(int), n)
        return Fraction(power[1, 0]), multiplications
    if method == "binet":
        return binet_J3(n), None
    if method == "closed-form":
        return closed_form_residue(SeqKind.J3, n), None
    raise DomainError(f"unknown method {method!r}; choose from {BENCH_METHODS}")


def run_bench(n: int, methods: Sequence[str] = BENCH_METHODS) -> list[BenchRecord]:
    if not methods:
        raise DomainError("no bench methods given")
    values: dict[str, Fraction] = {}
    records = []
    for method in methods:
        start = time.perf_counter()
        value, multiplications = evaluate(method, n)
        elapsed = time.perf_counter() - start
        values[method] = value
        records.append(
            BenchRecord(
                method=method,
                n=n,
                wall_time=elapsed,
                value_digits=decimal_digits(value.numerator),
                multiplications=multiplications,
            )
        )
        logger.info(f"{method}: J({n}) in {elapsed:.4f}s")
    if len(set(values.values())) > 1:
        reference = methods[0]
        differing = [m for m, v in values.items() if v != values[reference]]
        raise BenchDisagreement(
            f"{', '.join(differing)} disagree with {reference} at n = {n}"
        )
    return records
