"""Third-order Jacobsthal and Jacobsthal-Lucas numbers.

Terms are exact ``Fraction`` values. The third-order sequences extend to
negative indices through the reverse recurrence
``x[n-3] = (x[n] - x[n-1] - x[n-2]) / 2``, which produces the halves and
quarters of J(-2) = 1/2, J(-3) = -1/4, ...
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from jacq.constants import (
    RESIDUE_U,
    RESIDUE_V,
    SEEDS_J2,
    SEEDS_J2_LUCAS,
    SEEDS_J3,
    SEEDS_J3_LUCAS,
    TERM_TABLE_LIMIT,
)
from jacq.errors import (
    DegenerateModulus,
    DomainError,
    NegativeIndexUnsupported,
    UnknownIdentity,
)
from jacq.exactnum import CycloRational, epsilon, omega_pow, rational_part
from jacq.logs import get_logger
from jacq.reports import IdentityReport

logger = get_logger("sequences")


class SeqKind(str, Enum):
    J3 = "J3"
    j3 = "j3"
    J2 = "J2"
    jL2 = "jL2"

    @property
    def third_order(self) -> bool:
        return self in (SeqKind.J3, SeqKind.j3)


_SEEDS = {
    SeqKind.J3: SEEDS_J3,
    SeqKind.j3: SEEDS_J3_LUCAS,
    SeqKind.J2: SEEDS_J2,
    SeqKind.jL2: SEEDS_J2_LUCAS,
}


@dataclass(frozen=True)
class ResidueConstants:
    """J(n) = (2^(n+1) - u[n % 3]) / 7 and j(n) = (2^(n+3) + v[n % 3]) / 7."""

    u: tuple[int, int, int] = RESIDUE_U
    v: tuple[int, int, int] = RESIDUE_V


RESIDUES = ResidueConstants()


def _step_forward(kind: SeqKind, window: Sequence[Fraction]) -> Fraction:
    if kind.third_order:
        return window[-1] + window[-2] + 2 * window[-3]
    return window[-1] + 2 * window[-2]


def _step_backward(window: Sequence[Fraction]) -> Fraction:
    # window = (x[m+1], x[m+2], x[m+3]); returns x[m]
    return (window[2] - window[1] - window[0]) / 2


class TermTable:
    """Append-only table of the first ``limit`` terms of one sequence.

    Reads of already computed indices take no lock; growth is serialized.
    Indices past the limit are iterated from the last cached window and
    not stored, so the table stays bounded whatever index is asked for.
    """

    def __init__(self, kind: SeqKind, limit: int = TERM_TABLE_LIMIT) -> None:
        self.kind = kind
        self.limit = max(limit, len(_SEEDS[kind]))
        self._forward: list[Fraction] = [Fraction(x) for x in _SEEDS[kind]]
        # _backward[m - 1] holds x[-m]
        self._backward: list[Fraction] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._forward) + len(self._backward)

    def get(self, n: int) -> Fraction:
        if n >= 0:
            if n < len(self._forward):
                return self._forward[n]
            if n >= self.limit:
                return self._beyond(n)
            with self._lock:
                self._extend_forward(n)
            return self._forward[n]
        if not self.kind.third_order:
            raise NegativeIndexUnsupported(
                f"{self.kind.value} is defined for n >= 0 only"
            )
        if -n <= len(self._backward):
            return self._backward[-n - 1]
        if -n > self.limit:
            return iterate_term(self.kind, n)
        with self._lock:
            self._extend_backward(-n)
        return self._backward[-n - 1]

    def _beyond(self, n: int) -> Fraction:
        last = self.limit - 1
        with self._lock:
            self._extend_forward(last)
        order = len(_SEEDS[self.kind])
        window = self._forward[last - order + 1 : last + 1]
        for _ in range(n - last):
            window = window[1:] + [_step_forward(self.kind, window)]
        return window[-1]

    def _extend_forward(self, n: int) -> None:
        terms = self._forward
        start = len(terms)
        while len(terms) <= n:
            terms.append(_step_forward(self.kind, terms))
        if len(terms) > start:
            logger.debug("%s table grown to index %d", self.kind.value, len(terms) - 1)

    def _extend_backward(self, m: int) -> None:
        terms = self._backward
        while len(terms) < m:
            k = len(terms) + 1  # next index to fill is -k
            window = [self._value(-k + 1), self._value(-k + 2), self._value(-k + 3)]
            terms.append(_step_backward(window))

    def _value(self, n: int) -> Fraction:
        if n >= 0:
            if n >= len(self._forward):
                self._extend_forward(n)
            return self._forward[n]
        return self._backward[-n - 1]


_TABLES = {kind: TermTable(kind) for kind in SeqKind}


def term_table(kind: SeqKind) -> TermTable:
    return _TABLES[SeqKind(kind)]


def iterate_term(kind: SeqKind, n: int) -> Fraction:
    """Evaluate a term in linear time and constant space, without the table."""
    if n < 0:
        if not kind.third_order:
            raise NegativeIndexUnsupported(f"{kind.value} is defined for n >= 0 only")
        window = [Fraction(x) for x in _SEEDS[kind]]
        for _ in range(-n):
            window = [_step_backward(window)] + window[:2]
        return window[0]
    window = [Fraction(x) for x in _SEEDS[kind]]
    if n < len(window):
        return window[n]
    order = len(window)
    for _ in range(n - order + 1):
        window = window[1:] + [_step_forward(kind, window)]
    return window[-1]


def seq_term(kind: SeqKind, n: int, *, cache: bool = True) -> Fraction:
    kind = SeqKind(kind)
    if cache:
        return _TABLES[kind].get(n)
    return iterate_term(kind, n)


def J3(n: int) -> Fraction:
    return _TABLES[SeqKind.J3].get(n)


def j3(n: int) -> Fraction:
    return _TABLES[SeqKind.j3].get(n)


def negative_term(n: int) -> Fraction:
    """R(n) from R(n) = -R(n-1)/2 - R(n-2)/2 + R(n-3)/2, R = 0, 0, 1/2, ..."""
    if n < 0:
        raise DomainError("negative_term expects n >= 0")
    window = [Fraction(0), Fraction(0), Fraction(1, 2)]
    if n < 3:
        return window[n]
    for _ in range(n - 2):
        nxt = (-window[2] - window[1] + window[0]) / 2
        window = [window[1], window[2], nxt]
    return window[2]


# Binet coefficients: (3 + 2i*sqrt(3)) = 5 + 4w, a = (5 + 4w) / 3
LUCAS_COEFF = CycloRational(5, 4)
BINET_A = LUCAS_COEFF / 3


def _require_nonnegative(n: int, name: str) -> None:
    if n < 0:
        raise DomainError(f"{name} expects n >= 0, got {n}")


def binet_J3(n: int) -> Fraction:
    _require_nonnegative(n, "binet_J3")
    coeff = (BINET_A / 7) * omega_pow(n)
    value = Fraction(2, 7) * 2**n - coeff - coeff.conj()
    return rational_part(value)


def binet_j3(n: int) -> Fraction:
    _require_nonnegative(n, "binet_j3")
    coeff = (LUCAS_COEFF / 7) * omega_pow(n)
    value = coeff + coeff.conj() + Fraction(8, 7) * 2**n
    return rational_part(value)


def binet_second_order(kind: SeqKind, n: int) -> Fraction:
    kind = SeqKind(kind)
    _require_nonnegative(n, "binet_second_order")
    sign = -1 if n % 2 else 1
    if kind is SeqKind.J2:
        return Fraction(2**n - sign, 3)
    if kind is SeqKind.jL2:
        return Fraction(2**n + sign)
    raise DomainError(f"{kind.value} is not a second-order sequence")


def closed_form_residue(kind: SeqKind, n: int) -> Fraction:
    kind = SeqKind(kind)
    _require_nonnegative(n, "closed_form_residue")
    if kind is SeqKind.J3:
        return Fraction(2 ** (n + 1) - RESIDUES.u[n % 3], 7)
    if kind is SeqKind.j3:
        return Fraction(2 ** (n + 3) + RESIDUES.v[n % 3], 7)
    raise DomainError(f"no residue closed form for {kind.value}")


def step_coefficients(r: int) -> tuple[int, int, int]:
    """Coefficients (2^r + e, -(2^r e + 1), 2^r) of the r-strided recurrence."""
    e = epsilon(r)
    return 2**r + e, -(2**r * e + 1), 2**r


def rstep_next(r: int, s: int, window: Sequence[Fraction]) -> Fraction:
    """Next r-strided term J(rn+s) from (J(r(n-3)+s), J(r(n-2)+s), J(r(n-1)+s))."""
    if r < 1:
        raise DomainError(f"stride r must be >= 1, got {r}")
    w0, w1, w2 = window
    c2, c1, c0 = step_coefficients(r)
    return c2 * w2 + c1 * w1 + c0 * w0


def sum_direct(r: int, n: int) -> Fraction:
    return sum((J3(r * k) for k in range(n + 1)), Fraction(0))


def delta(r: int) -> int:
    return (2 - epsilon(r)) * (2**r - 1)


def sum_closed(r: int, n: int) -> Fraction:
    if r < 1:
        raise DomainError(f"sum_closed expects r >= 1, got {r}")
    if r % 3 == 0:
        raise DegenerateModulus(f"delta_{r} = 0 for r divisible by 3")
    if n < 1:
        raise DomainError(f"sum_closed expects n >= 1, got {n}")
    e, p = epsilon(r), 2**r
    bracket = (
        J3(r * (n + 1))
        - (p * (e - 1) + 1) * J3(r * n)
        + p * J3(r * (n - 1))
        - (J3(r) + p * J3(-r))
    )
    return bracket / delta(r)


def printed_corollary_s2(n: int) -> Fraction:
    """The r = 2 sum exactly as printed, with its -7 coefficient.

    Kept to document the misprint: g5 gives +7, and only +7 matches direct
    summation (n = 2 gives -16/9 here against 6).
    """
    return (J3(2 * (n + 1)) - 7 * J3(2 * n) + 4 * J3(2 * (n - 1)) - 3) / 9


def corrected_corollary_s2(n: int) -> Fraction:
    return (J3(2 * (n + 1)) + 7 * J3(2 * n) + 4 * J3(2 * (n - 1)) - 3) / 9


def partial_sum(kind: SeqKind, n: int) -> Fraction:
    kind = SeqKind(kind)
    return sum((seq_term(kind, k) for k in range(n + 1)), Fraction(0))


@dataclass(frozen=True)
class KAux:
    r: int
    n: int
    value: Fraction


def k_aux(r: int, n: int) -> KAux:
    e, p = epsilon(r), 2**r
    value = -(p * e + 1) * J3(r * n) + p * J3(r * (n - 1))
    return KAux(r=r, n=n, value=value)


def _by_residue(n: int, branches: Sequence[int]) -> int:
    return branches[n % 3]


def _e3(n: int) -> tuple[Fraction, Fraction]:
    return 3 * J3(n) + j3(n), Fraction(2 ** (n + 1))


def _e4(n: int) -> tuple[Fraction, Fraction]:
    if n < 2:
        raise DomainError("e4 is stated for n >= 2")
    return j3(n) - 4 * j3(n - 2), Fraction(6 if n % 3 == 0 else -3)


def _e5(n: int) -> tuple[Fraction, Fraction]:
    return j3(n) - 2 * j3(n - 3), 3 * J3(n)


def _e6(n: int) -> tuple[Fraction, Fraction]:
    return j3(n) - 4 * J3(n), Fraction(_by_residue(n, (2, -3, 1)))


def _e7(n: int) -> tuple[Fraction, Fraction]:
    return j3(n + 1) + j3(n), 3 * J3(n + 2)


def _e8(n: int) -> tuple[Fraction, Fraction]:
    return j3(n) - J3(n + 2), Fraction(_by_residue(n, (1, -1, 0)))


def _e9(n: int) -> tuple[Fraction, Fraction]:
    return j3(n - 3) ** 2 + 3 * J3(n) * j3(n), Fraction(4**n)


def _e10(n: int) -> tuple[Fraction, Fraction]:
    rhs = J3(n + 1) if n % 3 != 0 else J3(n + 1) - 1
    return partial_sum(SeqKind.J3, n), rhs


def _e11(n: int) -> tuple[Fraction, Fraction]:
    rhs = j3(n + 1) - 2 if n % 3 != 0 else j3(n + 1) + 1
    return partial_sum(SeqKind.j3, n), rhs


def _e12(n: int) -> tuple[Fraction, Fraction]:
    return j3(n) ** 2 - 9 * J3(n) ** 2, 2 ** (n + 2) * j3(n - 3)


_SCALAR_IDENTITIES: dict[str, Callable[[int], tuple[Fraction, Fraction]]] = {
    "e3": _e3,
    "e4": _e4,
    "e5": _e5,
    "e6": _e6,
    "e7": _e7,
    "e8": _e8,
    "e9": _e9,
    "e10": _e10,
    "e11": _e11,
    "e12": _e12,
}

SCALAR_IDENTITY_TAGS = tuple(_SCALAR_IDENTITIES) + ("step2r",)


def check_step_identity(r: int) -> IdentityReport:
    """J(2r) = (2^r + e_r) J(r) + 2^r J(-r)."""
    if r < 1:
        raise DomainError(f"step2r expects r >= 1, got {r}")
    p = 2**r
    lhs = J3(2 * r)
    rhs = (p + epsilon(r)) * J3(r) + p * J3(-r)
    return IdentityReport.compare("step2r", lhs, rhs, r=r)


def check_scalar_identity(tag: str, n: int, r: Optional[int] = None) -> IdentityReport:
    if tag == "step2r":
        return check_step_identity(n if r is None else r)
    try:
        identity = _SCALAR_IDENTITIES[tag]
    except KeyError:
        raise UnknownIdentity(f"unknown scalar identity {tag!r}") from None
    if n < 0:
        raise DomainError(f"{tag} is checked for n >= 0")
    lhs, rhs = identity(n)
    return IdentityReport.compare(tag, lhs, rhs, n=n)


def check_lemma1(r: int, s: int, n: int) -> IdentityReport:
    if r < 1 or not 0 <= s < r:
        raise DomainError(f"lemma1 needs r >= 1 and 0 <= s < r, got r={r}, s={s}")
    if n < 3:
        raise DomainError("lemma1 is stated for n >= 3")
    window = [J3(r * (n - k) + s) for k in (3, 2, 1)]
    return IdentityReport.compare(
        "lemma1", rstep_next(r, s, window), J3(r * n + s), n=n, r=r, s=s
    )


def check_sum_formula(r: int, n: int) -> IdentityReport:
    return IdentityReport.compare("g5", sum_closed(r, n), sum_direct(r, n), n=n, r=r)


def check_sum_corollary(n: int) -> IdentityReport:
    if n < 0:
        raise DomainError("the r = 2 sum formula is checked for n >= 0")
    return IdentityReport.compare(
        "n2", corrected_corollary_s2(n), sum_direct(2, n), n=n
    )


def check_negative_sequence(n: int) -> IdentityReport:
    return IdentityReport.compare("h1", negative_term(n), J3(-n), n=n)


def check_binet(n: int) -> IdentityReport:
    """Binet, residue closed form and recurrence agree for J3 and j3."""
    lhs = [
        binet_J3(n),
        closed_form_residue(SeqKind.J3, n),
        binet_j3(n),
        closed_form_residue(SeqKind.j3, n),
    ]
    rhs = [J3(n), J3(n), j3(n), j3(n)]
    return IdentityReport.compare("binet", lhs, rhs, n=n)


def check_binet_second_order(n: int) -> IdentityReport:
    lhs = [binet_second_order(SeqKind.J2, n), binet_second_order(SeqKind.jL2, n)]
    rhs = [seq_term(SeqKind.J2, n), seq_term(SeqKind.jL2, n)]
    return IdentityReport.compare("binet2", lhs, rhs, n=n)
