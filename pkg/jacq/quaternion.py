"""Hamilton quaternions over a commutative coefficient ring.

The same class carries exact rational quaternions (the JQ/jQ values) and
quaternions over Q(w) (the Binet constants alpha, beta, gamma). Only the
Hamilton product needs the basis rules i^2 = j^2 = k^2 = ijk = -1; everything
else is componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, TypeVar

from jacq.errors import DomainError, UnknownIdentity
from jacq.exactnum import CycloRational, omega_pow, rational_part
from jacq.reports import IdentityReport, serialize
from jacq.sequences import BINET_A, J3, LUCAS_COEFF, j3

R = TypeVar("R")

_SCALARS = (int, Fraction, CycloRational)


@dataclass(frozen=True)
class Quaternion(Generic[R]):
    q0: Any
    q1: Any
    q2: Any
    q3: Any

    @classmethod
    def scalar(cls, value: Any) -> Quaternion:
        zero = value * 0
        return cls(value, zero, zero, zero)

    @classmethod
    def of(cls, *components: Any) -> Quaternion:
        return cls(*(Fraction(c) for c in components))

    @property
    def components(self) -> tuple[Any, Any, Any, Any]:
        return (self.q0, self.q1, self.q2, self.q3)

    def map(self, fn: Callable[[Any], Any]) -> Quaternion:
        return Quaternion(*(fn(c) for c in self.components))

    def conjugate(self) -> Quaternion:
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> Any:
        return sum((c * c for c in self.components[1:]), self.q0 * self.q0)

    def __add__(self, other: Any) -> Quaternion:
        if isinstance(other, _SCALARS):
            other = Quaternion.scalar(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(a + b for a, b in zip(self.components, other.components)))

    def __radd__(self, other: Any) -> Quaternion:
        return self + other

    def __neg__(self) -> Quaternion:
        return self.map(lambda c: -c)

    def __sub__(self, other: Any) -> Quaternion:
        if isinstance(other, _SCALARS):
            other = Quaternion.scalar(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> Quaternion:
        return (-self) + other

    def __mul__(self, other: Any) -> Quaternion:
        # scalars embed as r -> (r, 0, 0, 0) and commute with every quaternion
        if isinstance(other, _SCALARS):
            return self.map(lambda c: c * other)
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return NotImplemented

    def __rmul__(self, other: Any) -> Quaternion:
        if isinstance(other, _SCALARS):
            return self.map(lambda c: other * c)
        return NotImplemented

    def __truediv__(self, other: Any) -> Quaternion:
        if isinstance(other, _SCALARS):
            return self.map(lambda c: c / other)
        return NotImplemented

    def to_json(self) -> dict[str, Any]:
        return dict(zip("sijk", (serialize(c) for c in self.components)))

    @classmethod
    def from_json(cls, data: dict[str, str]) -> Quaternion:
        return cls(*(Fraction(data[key]) for key in "sijk"))

    def __str__(self) -> str:
        return f"{self.q0} + {self.q1}i + {self.q2}j + {self.q3}k"


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = x.components
    b0, b1, b2, b3 = y.components
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conjugate()


def quat_norm(q: Quaternion) -> Any:
    return q.norm()


ALPHA = Quaternion.of(1, 2, 4, 8)


@dataclass(frozen=True)
class BinetTriple:
    alpha: Quaternion
    beta: Quaternion
    gamma: Quaternion


def binet_triple() -> BinetTriple:
    one = CycloRational(1)
    beta = Quaternion(one, omega_pow(1), omega_pow(2), omega_pow(3))
    return BinetTriple(
        alpha=ALPHA.map(CycloRational.coerce),
        beta=beta,
        gamma=beta.map(lambda c: c.conj()),
    )


def jq_term(n: int) -> Quaternion:
    if n < 0:
        raise DomainError(f"JQ is defined for n >= 0, got {n}")
    return Quaternion(J3(n), J3(n + 1), J3(n + 2), J3(n + 3))


def jlq_term(n: int) -> Quaternion:
    if n < 0:
        raise DomainError(f"jQ is defined for n >= 0, got {n}")
    return Quaternion(j3(n), j3(n + 1), j3(n + 2), j3(n + 3))


def _rationalize(q: Quaternion) -> Quaternion:
    return q.map(rational_part)


def jq_binet(n: int) -> Quaternion:
    if n < 0:
        raise DomainError(f"JQ is defined for n >= 0, got {n}")
    triple = binet_triple()
    a = BINET_A * omega_pow(n)
    b = BINET_A.conj() * omega_pow(2 * n)
    seven_jq = triple.alpha * 2 ** (n + 1) - triple.beta * a - triple.gamma * b
    return _rationalize(seven_jq / 7)


def jlq_binet(n: int) -> Quaternion:
    if n < 0:
        raise DomainError(f"jQ is defined for n >= 0, got {n}")
    triple = binet_triple()
    a = LUCAS_COEFF * omega_pow(n)
    b = LUCAS_COEFF.conj() * omega_pow(2 * n)
    seven_jq = triple.alpha * 2 ** (n + 3) + triple.beta * a + triple.gamma * b
    return _rationalize(seven_jq / 7)


def quat_sum(n: int) -> Quaternion:
    total = Quaternion.of(0, 0, 0, 0)
    for s in range(n + 1):
        total = total + jlq_term(s)
    return total


# Piecewise right-hand sides, indexed by n mod 3.
LIFT_BRANCHES = (
    Quaternion.of(2, -1, -1, 2),
    Quaternion.of(-1, -1, 2, -1),
    Quaternion.of(-1, 2, -1, -1),
)
T5A_BRANCHES = (
    Quaternion.of(2, -3, 1, 2),
    Quaternion.of(-3, 1, 2, -3),
    Quaternion.of(1, 2, -3, 1),
)
T6_BRANCHES = (
    Quaternion.of(1, -1, 0, 1),
    Quaternion.of(-1, 0, 1, -1),
    Quaternion.of(0, 1, -1, 0),
)
HSUM_BRANCHES = (
    Quaternion.of(1, -4, -5, -7),
    Quaternion.of(1, 2, 1, 5) * -2,
    -Quaternion.of(2, 1, 5, 10),
)
# 49 N(JQ_n) = a 2^(2n) + b 2^n + c
NORM_BRANCHES = ((340, -64, 18), (340, 68, 23), (340, -4, 15))


def _t2(n: int) -> tuple[Any, Any]:
    return jq_term(n) * 3 + jlq_term(n), ALPHA * 2 ** (n + 1)


def _lift(n: int) -> tuple[Any, Any]:
    if n < 2:
        raise DomainError("lemma-e4-lift is stated for n >= 2")
    return (jlq_term(n) - jlq_term(n - 2) * 4) / 3, LIFT_BRANCHES[n % 3]


def _t5a(n: int) -> tuple[Any, Any]:
    return jlq_term(n) - jq_term(n) * 4, T5A_BRANCHES[n % 3]


def _t5b(n: int) -> tuple[Any, Any]:
    return jlq_term(n + 1) + jlq_term(n), jq_term(n + 2) * 3


def _t6(n: int) -> tuple[Any, Any]:
    return jlq_term(n) - jq_term(n + 2), T6_BRANCHES[n % 3]


def _norm(n: int) -> tuple[Any, Any]:
    a, b, c = NORM_BRANCHES[n % 3]
    return 49 * jq_term(n).norm(), Fraction(a * 4**n + b * 2**n + c)


def _hsum(n: int) -> tuple[Any, Any]:
    return quat_sum(n), jlq_term(n + 1) + HSUM_BRANCHES[n % 3]


def product_polynomials(n: int) -> Quaternion:
    """The closed form of 49 JQ_n jQ_n, stated for n = 0 (mod 3), n >= 1."""
    p, p2 = 2**n, 4**n
    return Quaternion.of(
        24 * p - 1328 * p2 + 30,
        64 * p2 - 2 * p + 36,
        2 ** (2 * n + 7) - 205 * 2 ** (n + 1) - 12,
        5 * 2 ** (n + 5) + 2 ** (2 * n + 8) - 24,
    )


def _product(n: int) -> tuple[Any, Any]:
    if n < 1 or n % 3 != 0:
        raise DomainError("the product formula is stated for n >= 1, n = 0 (mod 3)")
    return jq_term(n) * jlq_term(n) * 49, product_polynomials(n)


def _qrec(n: int) -> tuple[Any, Any]:
    return jq_term(n + 3), jq_term(n + 2) + jq_term(n + 1) + jq_term(n) * 2


_QUAT_IDENTITIES: dict[str, Callable[[int], tuple[Any, Any]]] = {
    "t2": _t2,
    "lemma-e4-lift": _lift,
    "t5a": _t5a,
    "t5b": _t5b,
    "t6": _t6,
    "norm": _norm,
    "hsum": _hsum,
    "product": _product,
    "qrec": _qrec,
}

QUAT_IDENTITY_TAGS = tuple(_QUAT_IDENTITIES)


def check_quat_identity(tag: str, n: int) -> IdentityReport:
    try:
        identity = _QUAT_IDENTITIES[tag]
    except KeyError:
        raise UnknownIdentity(f"unknown quaternion identity {tag!r}") from None
    if n < 0:
        raise DomainError(f"{tag} is stated for n >= 0")
    lhs, rhs = identity(n)
    return IdentityReport.compare(tag, lhs, rhs, n=n)


def check_quat_binet(n: int) -> IdentityReport:
    return IdentityReport.compare(
        "qbinet", [jq_binet(n), jlq_binet(n)], [jq_term(n), jlq_term(n)], n=n
    )
