"""Small dense matrices and the generating matrices of the third-order sequence.

Entries may come from a non-commutative ring (quaternions), so products keep
the left factor's entries on the left: ``(AB)[i][j] = sum_k A[i][k] * B[k][j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from jacq.errors import DegenerateModulus, DomainError
from jacq.exactnum import CycloRational, epsilon, omega_pow
from jacq.quaternion import jq_term
from jacq.reports import IdentityReport, serialize
from jacq.sequences import J3, k_aux, sum_direct


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("matrix rows must be non-empty and of equal length")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[Any]]) -> Matrix:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(
        cls, size: int, one: Any = Fraction(1), zero: Any = Fraction(0)
    ) -> Matrix:
        return cls(
            tuple(
                tuple(one if i == j else zero for j in range(size)) for i in range(size)
            )
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        height, width = self.shape
        return height == width

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def map(self, fn: Callable[[Any], Any]) -> Matrix:
        return Matrix(tuple(tuple(fn(x) for x in row) for row in self.rows))

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def scale(self, scalar: Any) -> Matrix:
        """scalar * M, the scalar standing on the left of every entry."""
        return self.map(lambda x: scalar * x)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        height, inner = self.shape
        other_height, width = other.shape
        if inner != other_height:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = []
        for i in range(height):
            row = []
            for j in range(width):
                acc = self.rows[i][0] * other.rows[0][j]
                for k in range(1, inner):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return Matrix(tuple(rows))

    def to_json(self) -> list[list[Any]]:
        return [[serialize(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def _identity_like(m: Matrix) -> Matrix:
    sample = m.rows[0][0]
    return Matrix.identity(m.shape[0], one=sample * 0 + 1, zero=sample * 0)


def mat_power_counted(m: Matrix, n: int) -> tuple[Matrix, int]:
    """m**n by left-to-right binary exponentiation, with the product count."""
    if not m.is_square:
        raise ValueError("only square matrices have powers")
    if n < 0:
        raise DomainError(f"matrix exponent must be >= 0, got {n}")
    if n == 0:
        return _identity_like(m), 0
    result = m
    multiplications = 0
    for bit in bin(n)[3:]:
        result = result @ result
        multiplications += 1
        if bit == "1":
            result = result @ m
            multiplications += 1
    return result, multiplications


def mat_power(m: Matrix, n: int) -> Matrix:
    return mat_power_counted(m, n)[0]


def mat_power_naive(m: Matrix, n: int) -> Matrix:
    result = _identity_like(m)
    for _ in range(n):
        result = result @ m
    return result


def determinant(m: Matrix) -> Any:
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    size = m.shape[0]
    if size == 1:
        return m[0, 0]
    total = m[0, 0] * 0
    for j in range(size):
        minor = Matrix(
            tuple(
                tuple(row[c] for c in range(size) if c != j) for row in m.rows[1:]
            )
        )
        term = m[0, j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def characteristic_polynomial(m: Matrix) -> list[Any]:
    """Coefficients [1, c1, ..., cn] of det(xI - m), highest degree first.

    Faddeev-LeVerrier recursion; needs a field of characteristic zero.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    size = m.shape[0]
    identity = _identity_like(m)
    coefficients = [Fraction(1)]
    aux = Matrix(tuple(tuple(x * 0 for x in row) for row in m.rows))
    for k in range(1, size + 1):
        aux = m @ aux + identity.scale(coefficients[-1])
        trace = sum(((m @ aux)[i, i] for i in range(size)), Fraction(0))
        coefficients.append(-trace / k)
    return coefficients


def build_M(ring: Callable[[int], Any] = Fraction) -> Matrix:
    rows = ((1, 1, 2), (1, 0, 0), (0, 1, 0))
    return Matrix(tuple(tuple(ring(x) for x in row) for row in rows))


def fast_J3(n: int) -> Fraction:
    """J(n) read from entry (2, 1) of M^n, using integer entries."""
    if n < 0:
        raise DomainError(f"fast_J3 expects n >= 0, got {n}")
    return Fraction(mat_power(build_M(int), n)[1, 0])


def power_layout(n: int) -> Matrix:
    return Matrix(
        (
            (J3(n + 1), J3(n) + 2 * J3(n - 1), 2 * J3(n)),
            (J3(n), J3(n - 1) + 2 * J3(n - 2), 2 * J3(n - 1)),
            (J3(n - 1), J3(n - 2) + 2 * J3(n - 3), 2 * J3(n - 2)),
        )
    )


def check_power_layout(n: int) -> IdentityReport:
    if n < 0:
        raise DomainError("the power layout is stated for n >= 0")
    return IdentityReport.compare("gpow", mat_power(build_M(), n), power_layout(n), n=n)


def _require_stride(r: int) -> None:
    if r < 1:
        raise DomainError(f"stride r must be >= 1, got {r}")


def build_Lr(r: int) -> Matrix:
    _require_stride(r)
    e, p = epsilon(r), 2**r
    return Matrix.of(((p + e, -(p * e + 1), p), (1, 0, 0), (0, 1, 0)))


def build_Frn(r: int, n: int) -> Matrix:
    _require_stride(r)
    p = 2**r
    return Matrix(
        tuple(
            (J3(r * (m + 1)), k_aux(r, m).value, p * J3(r * m))
            for m in (n, n - 1, n - 2)
        )
    )


def _stepped_power(base: Matrix, r: int, n: int) -> Matrix:
    """J(r) base^n + 2^r J(-r) base^(n-1), the left side of both stride theorems."""
    return mat_power(base, n).scale(J3(r)) + mat_power(base, n - 1).scale(2**r * J3(-r))


def check_theorem_LF(r: int, n: int) -> IdentityReport:
    _require_stride(r)
    if n < 1:
        raise DomainError("thmLF is stated for n >= 1")
    return IdentityReport.compare(
        "thmLF", _stepped_power(build_Lr(r), r, n), build_Frn(r, n), n=n, r=r
    )


def build_Ar(r: int) -> Matrix:
    _require_stride(r)
    e, p = epsilon(r), 2**r
    return Matrix.of(
        ((1, 0, 0, 0), (1, p + e, -(p * e + 1), p), (0, 1, 0, 0), (0, 0, 1, 0))
    )


def build_Qrn(r: int, n: int) -> Matrix:
    _require_stride(r)
    p = 2**r
    zero = Fraction(0)
    first = (J3(r) + p * J3(-r), zero, zero, zero)
    rest = tuple(
        (sum_direct(r, m), J3(r * (m + 1)), k_aux(r, m).value, p * J3(r * m))
        for m in (n, n - 1, n - 2)
    )
    return Matrix((first,) + rest)


def check_theorem_AQ(r: int, n: int) -> IdentityReport:
    _require_stride(r)
    if n < 2:
        raise DomainError("thmAQ is stated for n >= 2")
    return IdentityReport.compare(
        "thmAQ", _stepped_power(build_Ar(r), r, n), build_Qrn(r, n), n=n, r=r
    )


def _require_nondegenerate(r: int) -> None:
    _require_stride(r)
    if r % 3 == 0:
        raise DegenerateModulus(f"A_{r} repeats the eigenvalue 1 when 3 divides r")


def build_Br(r: int) -> Matrix:
    _require_nondegenerate(r)
    zero, one = CycloRational(0), CycloRational(1)
    diagonal = (one, CycloRational(2**r), omega_pow(r), omega_pow(2 * r))
    return Matrix(
        tuple(
            tuple(diagonal[i] if i == j else zero for j in range(4)) for i in range(4)
        )
    )


def build_Hr(r: int) -> Matrix:
    _require_nondegenerate(r)
    c = CycloRational(Fraction(1, (epsilon(r) - 2) * (2**r - 1)))
    w1, w2 = omega_pow(r), omega_pow(2 * r)
    zero, one = CycloRational(0), CycloRational(1)
    return Matrix(
        (
            (one, zero, zero, zero),
            (c, CycloRational(4**r), w1 * w1, w2 * w2),
            (c, CycloRational(2**r), w1, w2),
            (c, one, one, one),
        )
    )


def check_diagonalization(r: int, n: int) -> IdentityReport:
    _require_nondegenerate(r)
    if n < 1:
        raise DomainError("the diagonalization is checked for n >= 1")
    a = build_Ar(r).map(CycloRational.coerce)
    h = build_Hr(r)
    lhs = mat_power(a, n) @ h
    rhs = h @ mat_power(build_Br(r), n)
    return IdentityReport.compare("diag", lhs, rhs, n=n, r=r)


def _shifted_layout(q: Callable[[int], Any], n: int) -> Matrix:
    return Matrix(
        tuple(
            (q(n + m + 2), q(n + m + 1) + q(n + m) * 2, q(n + m + 1) * 2)
            for m in (2, 1, 0)
        )
    )


def build_Rquat() -> Matrix:
    return _shifted_layout(jq_term, 0)


def rm_layout(n: int) -> Matrix:
    return _shifted_layout(jq_term, n)


def check_theorem_RM(n: int) -> IdentityReport:
    if n < 0:
        raise DomainError("thmRM is stated for n >= 0")
    lhs = build_Rquat() @ mat_power(build_M(), n)
    return IdentityReport.compare("thmRM", lhs, rm_layout(n), n=n)


def check_corollary_conv(n: int) -> IdentityReport:
    if n < 0:
        raise DomainError("corconv is stated for n >= 0")
    q0, q1, q2 = jq_term(0), jq_term(1), jq_term(2)
    rhs = q2 * J3(n + 1) + (q1 + q0 * 2) * J3(n) + q1 * 2 * J3(n - 1)
    return IdentityReport.compare("corconv", jq_term(n + 2), rhs, n=n)


def describe(name: str, r: Optional[int] = None, n: Optional[int] = None) -> Matrix:
    """Look up a named matrix for display."""
    r = 1 if r is None else r
    builders: dict[str, Callable[[], Matrix]] = {
        "M": lambda: build_M() if n is None else mat_power(build_M(), n),
        "L": lambda: build_Lr(r),
        "F": lambda: build_Frn(r, 1 if n is None else n),
        "A": lambda: build_Ar(r),
        "Q": lambda: build_Qrn(r, 2 if n is None else n),
        "B": lambda: build_Br(r),
        "H": lambda: build_Hr(r),
        "R": build_Rquat,
        "RM": lambda: rm_layout(0 if n is None else n),
    }
    try:
        return builders[name]()
    except KeyError:
        raise DomainError(f"unknown matrix {name!r}") from None
