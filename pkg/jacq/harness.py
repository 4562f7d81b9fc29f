"""Run identity checks over index grids and collect the reports."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Optional, Sequence

from jacq import genfunc, matrices, quaternion, sequences
from jacq.constants import DEFAULT_MAX_R
from jacq.errors import DomainError, UnknownIdentity
from jacq.logs import get_logger
from jacq.reports import IdentityReport

logger = get_logger("harness")

Indexing = Literal["n", "r", "rn", "rsn"]


@dataclass(frozen=True)
class IdentitySpec:
    tag: str
    title: str
    indexing: Indexing
    check: Callable[..., IdentityReport]


@dataclass(frozen=True)
class Summary:
    passed: int
    failed: int
    skipped: int
    counterexample: Optional[IdentityReport]

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _scalar(tag: str) -> Callable[[int], IdentityReport]:
    return lambda n: sequences.check_scalar_identity(tag, n)


def _quat(tag: str) -> Callable[[int], IdentityReport]:
    return lambda n: quaternion.check_quat_identity(tag, n)


_SCALAR_TITLES = {
    "e3": "3J(n) + j(n) = 2^(n+1)",
    "e4": "j(n) - 4j(n-2) = 6 or -3, n >= 2",
    "e5": "j(n) - 2j(n-3) = 3J(n)",
    "e6": "j(n) - 4J(n) = 2, -3, 1 by n mod 3",
    "e7": "j(n+1) + j(n) = 3J(n+2)",
    "e8": "j(n) - J(n+2) = 1, -1, 0 by n mod 3",
    "e9": "j(n-3)^2 + 3J(n)j(n) = 4^n",
    "e10": "partial sums of J",
    "e11": "partial sums of j",
    "e12": "j(n)^2 - 9J(n)^2 = 2^(n+2) j(n-3)",
}

_TABLE: tuple[tuple[str, str, Indexing, Callable[..., IdentityReport]], ...] = (
    ("lemma1", "r-strided recurrence", "rsn", sequences.check_lemma1),
    ("step2r", "J(2r) from J(r) and J(-r)", "r", sequences.check_step_identity),
    ("g5", "closed sum of J(rk)", "rn", sequences.check_sum_formula),
    ("n2", "closed sum for r = 2", "n", sequences.check_sum_corollary),
    ("h1", "negative-index sequence", "n", sequences.check_negative_sequence),
    ("binet", "Binet and residue forms", "n", sequences.check_binet),
    ("binet2", "second-order Binet", "n", sequences.check_binet_second_order),
    ("thmLF", "stepped powers of L_r", "rn", matrices.check_theorem_LF),
    ("thmAQ", "stepped powers of A_r", "rn", matrices.check_theorem_AQ),
    ("diag", "A^n H = H B^n", "rn", matrices.check_diagonalization),
    ("gpow", "layout of M^n", "n", matrices.check_power_layout),
    ("t2", "3JQ(n) + jQ(n) = 2^(n+1) alpha", "n", _quat("t2")),
    ("lemma-e4-lift", "(jQ(n) - 4jQ(n-2)) / 3", "n", _quat("lemma-e4-lift")),
    ("t5a", "jQ(n) - 4JQ(n) by residue", "n", _quat("t5a")),
    ("t5b", "jQ(n+1) + jQ(n) = 3JQ(n+2)", "n", _quat("t5b")),
    ("t6", "jQ(n) - JQ(n+2) by residue", "n", _quat("t6")),
    ("norm", "49 N(JQ(n))", "n", _quat("norm")),
    ("hsum", "partial sums of jQ", "n", _quat("hsum")),
    ("product", "49 JQ(n) jQ(n), n = 0 mod 3", "n", _quat("product")),
    ("qrec", "quaternion recurrence", "n", _quat("qrec")),
    ("qbinet", "quaternion Binet forms", "n", quaternion.check_quat_binet),
    ("genfunc", "generating function coefficients", "n", genfunc.check_genfunc),
    ("thmRM", "R M^n layout", "n", matrices.check_theorem_RM),
    ("corconv", "JQ(n+2) from JQ(0..2)", "n", matrices.check_corollary_conv),
)


def registry() -> dict[str, IdentitySpec]:
    specs = [
        IdentitySpec(tag, title, "n", _scalar(tag))
        for tag, title in _SCALAR_TITLES.items()
    ]
    specs += [IdentitySpec(*row) for row in _TABLE]
    return {spec.tag: spec for spec in specs}


def _grid(
    spec: IdentitySpec, start: int, stop: int, r_from: int, max_r: int
) -> list[dict[str, int]]:
    ns = range(start, stop + 1)
    rs = range(r_from, max_r + 1)
    if spec.indexing == "n":
        return [{"n": n} for n in ns]
    if spec.indexing == "r":
        return [{"r": r} for r in rs]
    if spec.indexing == "rn":
        return [{"r": r, "n": n} for r in rs for n in ns]
    return [{"r": r, "s": s, "n": n} for r in rs for s in range(r) for n in ns]


def _run_one(spec: IdentitySpec, point: dict[str, int]) -> IdentityReport:
    try:
        return spec.check(**point)
    except DomainError as e:
        return IdentityReport.skipped(spec.tag, str(e), **point)


def run_identity(
    tag: str,
    start: int,
    stop: int,
    max_r: int = DEFAULT_MAX_R,
    workers: int = 1,
    r_from: int = 1,
) -> list[IdentityReport]:
    """Check one identity over [start, stop] (and r in [r_from, max_r])."""
    specs = registry()
    if tag not in specs:
        raise UnknownIdentity(f"unknown identity {tag!r}")
    if start > stop:
        raise DomainError(f"empty range: from {start} > to {stop}")
    spec = specs[tag]
    points = _grid(spec, start, stop, r_from, max_r)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(lambda p: _run_one(spec, p), points))
    else:
        reports = [_run_one(spec, p) for p in points]
    reports.sort(key=IdentityReport.sort_key)
    logger.debug(f"{tag}: {len(reports)} records")
    return reports


def run_suite(
    tags: Optional[Sequence[str]],
    start: int,
    stop: int,
    max_r: int = DEFAULT_MAX_R,
    workers: int = 1,
    r_from: int = 1,
) -> list[IdentityReport]:
    """Run several identities; ``None`` means every registered tag."""
    selected = list(registry()) if tags is None else list(tags)
    reports: list[IdentityReport] = []
    for tag in selected:
        reports.extend(run_identity(tag, start, stop, max_r, workers, r_from))
    reports.sort(key=IdentityReport.sort_key)
    return reports


def summarize(reports: Iterable[IdentityReport]) -> Summary:
    passed = failed = skipped = 0
    counterexample = None
    for report in reports:
        if report.status == "pass":
            passed += 1
        elif report.status == "skipped":
            skipped += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = report
    summary = Summary(passed, failed, skipped, counterexample)
    logger.info(f"verified: {passed} passed, {failed} failed, {skipped} skipped")
    if counterexample is not None:
        logger.warning(f"counterexample: {counterexample.to_line()}")
    return summary
