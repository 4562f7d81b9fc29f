"""Exact arithmetic: rationals and the Eisenstein rationals Q(w).

Every element of Q(w) is kept in the normal form ``p + q*w`` over the basis
{1, w}, reducing with ``w**2 = -1 - w``. Two elements are equal exactly when
their coordinates are, so identity checks are plain equality tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from jacq.errors import NotRational

Rational = Fraction

Scalar = Union[int, Fraction]

_NUMBER = r"[-+]?\d+(?:/\d+)?"
_CYCLO_RE = re.compile(
    rf"^\s*(?P<p>{_NUMBER})\s*(?:\+\s*(?P<q>{_NUMBER})\*w)?\s*$"
)


def as_rational(value: Union[Scalar, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class CycloRational:
    """The number p + q*w, w a primitive cube root of unity."""

    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))

    @classmethod
    def coerce(cls, value: Union[CycloRational, Scalar]) -> CycloRational:
        if isinstance(value, CycloRational):
            return value
        return cls(as_rational(value), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> CycloRational:
        match = _CYCLO_RE.match(text)
        if match is None:
            raise ValueError(f"not an element of Q(w): {text!r}")
        q = match.group("q")
        return cls(Fraction(match.group("p")), Fraction(q) if q else Fraction(0))

    def is_rational(self) -> bool:
        return self.q == 0

    def conj(self) -> CycloRational:
        # w -> w^2 = -1 - w
        return CycloRational(self.p - self.q, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - self.p * self.q + self.q * self.q

    def __add__(self, other: Union[CycloRational, Scalar]) -> CycloRational:
        if not isinstance(other, (CycloRational, int, Fraction)):
            return NotImplemented
        other = CycloRational.coerce(other)
        return CycloRational(self.p + other.p, self.q + other.q)

    def __radd__(self, other: Scalar) -> CycloRational:
        return self + other

    def __neg__(self) -> CycloRational:
        return CycloRational(-self.p, -self.q)

    def __sub__(self, other: Union[CycloRational, Scalar]) -> CycloRational:
        if not isinstance(other, (CycloRational, int, Fraction)):
            return NotImplemented
        return self + (-CycloRational.coerce(other))

    def __rsub__(self, other: Scalar) -> CycloRational:
        return (-self) + other

    def __mul__(self, other: Union[CycloRational, Scalar]) -> CycloRational:
        if isinstance(other, (int, Fraction)):
            return CycloRational(self.p * other, self.q * other)
        if isinstance(other, CycloRational):
            return cyclo_mul(self, other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> CycloRational:
        return self * other

    def __truediv__(self, other: Union[CycloRational, Scalar]) -> CycloRational:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            return CycloRational(self.p / other, self.q / other)
        if isinstance(other, CycloRational):
            denominator = other.norm()
            if denominator == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            return (self * other.conj()) / denominator
        return NotImplemented

    def __pow__(self, exponent: int) -> CycloRational:
        if exponent < 0:
            return (ONE / self) ** -exponent
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if isinstance(other, CycloRational):
            return self.p == other.p and self.q == other.q
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*w"

    def __repr__(self) -> str:
        return f"CycloRational({self})"

    def to_json(self) -> str:
        return str(self)


ZERO = CycloRational(0, 0)
ONE = CycloRational(1, 0)
OMEGA = CycloRational(0, 1)
OMEGA_SQUARED = CycloRational(-1, -1)
# i*sqrt(3) = w - w^2 = 2w + 1
I_SQRT3 = CycloRational(1, 2)


def cyclo_mul(x: CycloRational, y: CycloRational) -> CycloRational:
    return CycloRational(
        x.p * y.p - x.q * y.q,
        x.p * y.q + y.p * x.q - x.q * y.q,
    )


def cyclo_conj(x: CycloRational) -> CycloRational:
    return x.conj()


def omega_pow(n: int) -> CycloRational:
    return (ONE, OMEGA, OMEGA_SQUARED)[n % 3]


def epsilon(r: int) -> int:
    """w1^r + w2^r, which is 2 when 3 divides r and -1 otherwise."""
    return 2 if r % 3 == 0 else -1


def rational_part(x: CycloRational) -> Fraction:
    if not x.is_rational():
        raise NotRational(f"{x} has a nonzero w component")
    return x.p


def decimal_digits(value: int) -> int:
    """Number of decimal digits of |value|, without converting it to a string."""
    value = abs(value)
    digits = max(1, int(value.bit_length() * 0.30102999566398120))
    while 10**digits <= value:
        digits += 1
    while digits > 1 and 10 ** (digits - 1) > value:
        digits -= 1
    return digits
