"""Rational generating functions with quaternion coefficients.

A series ``N(t) / D(t)`` with ``D(t) = 1 - t - t^2 - 2t^3`` and a numerator of
degree at most 2 has coefficients obeying ``c[n] = c[n-1] + c[n-2] + 2c[n-3]``,
so the stream is produced by that recurrence rather than by long division.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, Sequence

from jacq.errors import DomainError
from jacq.quaternion import Quaternion, jlq_term, jq_term
from jacq.reports import IdentityReport

DENOMINATOR: tuple[int, ...] = (1, -1, -1, -2)

_ZERO = Quaternion.of(0, 0, 0, 0)


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple[Quaternion, ...]
    denominator: tuple[int, ...] = DENOMINATOR
    derived: bool = False

    def __post_init__(self) -> None:
        if len(self.numerator) > len(self.denominator) - 1:
            raise DomainError("numerator degree must be below the denominator's")
        if self.denominator[0] != 1:
            raise DomainError("denominator must have constant term 1")

    def __iter__(self) -> Iterator[Quaternion]:
        return coefficient_stream(self)

    def __getitem__(self, n: int) -> Quaternion:
        if n < 0:
            raise DomainError(f"coefficient index must be >= 0, got {n}")
        return next(islice(coefficient_stream(self), n, None))

    def to_json(self) -> dict[str, object]:
        return {
            "numerator": [q.to_json() for q in self.numerator],
            "denominator": [str(d) for d in self.denominator],
            "derived": self.derived,
        }


def coefficient_stream(series: RationalSeries) -> Iterator[Quaternion]:
    """Taylor coefficients of ``series``, lazily and forever."""
    order = len(series.denominator) - 1
    feedback = [-d for d in series.denominator[1:]]
    history: list[Quaternion] = []
    n = 0
    while True:
        c = series.numerator[n] if n < len(series.numerator) else _ZERO
        for k, weight in enumerate(feedback, start=1):
            if n - k >= 0 and weight:
                c = c + history[-k] * weight
        yield c
        history.append(c)
        if len(history) > order:
            history.pop(0)
        n += 1


def numerator_from_initials(
    q0: Quaternion, q1: Quaternion, q2: Quaternion
) -> tuple[Quaternion, Quaternion, Quaternion]:
    return (q0, q1 - q0, q2 - q1 - q0)


def recover_numerator(
    coefficients: Iterable[Quaternion],
    denominator: Sequence[int] = DENOMINATOR,
    degree: int = 8,
) -> list[Quaternion]:
    """Product of the truncated stream with the denominator, up to ``degree``."""
    if degree < len(denominator) - 1:
        raise DomainError("truncate at a degree >= the denominator's degree")
    head = list(islice(coefficients, degree + 1))
    product = []
    for n in range(degree + 1):
        acc = _ZERO
        for k, d in enumerate(denominator):
            if n - k >= 0 and d:
                acc = acc + head[n - k] * d
        product.append(acc)
    return product


def jq_series() -> RationalSeries:
    """The JQ series: (i+j+2k) + t(1+j+3k) + 2t^2(j+k) over D(t)."""
    return RationalSeries(
        numerator=(
            Quaternion.of(0, 1, 1, 2),
            Quaternion.of(1, 0, 1, 3),
            Quaternion.of(0, 0, 2, 2),
        )
    )


def jlq_series() -> RationalSeries:
    return RationalSeries(
        numerator=numerator_from_initials(jlq_term(0), jlq_term(1), jlq_term(2)),
        derived=True,
    )


def series_coefficient(n: int) -> Quaternion:
    if n < 0:
        raise DomainError(f"series_coefficient expects n >= 0, got {n}")
    return jq_series()[n]


def check_genfunc(n: int) -> IdentityReport:
    if n < 0:
        raise DomainError("genfunc is checked for n >= 0")
    return IdentityReport.compare("genfunc", series_coefficient(n), jq_term(n), n=n)


def check_numerator_recovery(degree: int = 8) -> bool:
    series = jq_series()
    recovered = recover_numerator(coefficient_stream(series), degree=degree)
    padding = [_ZERO] * (degree + 1 - len(series.numerator))
    return recovered == list(series.numerator) + padding
