"""Tests for the scalar third- and second-order sequences."""

from fractions import Fraction

import pytest

from jacq.errors import (
    DegenerateModulus,
    DomainError,
    NegativeIndexUnsupported,
    UnknownIdentity,
)
from jacq.sequences import (
    SCALAR_IDENTITY_TAGS,
    J3,
    SeqKind,
    TermTable,
    binet_J3,
    binet_j3,
    binet_second_order,
    check_binet,
    check_binet_second_order,
    check_lemma1,
    check_negative_sequence,
    check_scalar_identity,
    check_step_identity,
    check_sum_corollary,
    check_sum_formula,
    closed_form_residue,
    corrected_corollary_s2,
    iterate_term,
    j3,
    k_aux,
    negative_term,
    partial_sum,
    printed_corollary_s2,
    rstep_next,
    seq_term,
    step_coefficients,
    sum_closed,
    sum_direct,
)


@pytest.mark.unit
class TestSeqTerm:
    """Term evaluation by recurrence."""

    def test_third_order_table(self, j3_table, j3_lucas_table):
        """J and j agree with the printed table for n = 0..10."""
        assert [seq_term(SeqKind.J3, n) for n in range(11)] == j3_table
        assert [seq_term(SeqKind.j3, n) for n in range(11)] == j3_lucas_table

    def test_second_order_terms(self):
        """J2 = 0, 1, 1, 3, 5, 11 and jL2 = 2, 1, 5, 7, 17, 31."""
        assert [seq_term("J2", n) for n in range(6)] == [0, 1, 1, 3, 5, 11]
        assert [seq_term("jL2", n) for n in range(6)] == [2, 1, 5, 7, 17, 31]

    def test_negative_indices(self):
        """Reverse recurrence gives the halves and quarters."""
        expected = [0, Fraction(1, 2), Fraction(-1, 4), Fraction(-1, 8)]
        assert [J3(-k) for k in range(1, 5)] == expected
        assert J3(-5) == Fraction(7, 16)
        assert J3(-6) == Fraction(-9, 32)
        assert [j3(-k) for k in range(1, 4)] == [1, -1, 1]

    def test_cached_and_uncached_agree(self):
        """The term table and the constant-space iteration agree."""
        for kind in SeqKind:
            for n in (0, 1, 2, 7, 40, 123):
                assert seq_term(kind, n) == iterate_term(kind, n)
        assert seq_term(SeqKind.J3, -9, cache=False) == J3(-9)

    @pytest.mark.regression
    @pytest.mark.parametrize("kind", list(SeqKind))
    def test_table_stays_within_its_limit(self, kind):
        """Lookups past the limit are iterated, not stored."""
        table = TermTable(kind, limit=10)
        assert table.get(40) == iterate_term(kind, 40)
        assert table.get(5) == iterate_term(kind, 5)
        assert len(table) == 10

    def test_negative_lookups_past_the_limit(self):
        """Far negative indices fall back to the reverse iteration."""
        table = TermTable(SeqKind.J3, limit=4)
        assert table.get(-9) == J3(-9)
        assert table.get(-3) == Fraction(-1, 4)
        assert len(table) <= 8

    def test_second_order_negative_index_rejected(self):
        """Second-order sequences stop at n = 0."""
        with pytest.raises(NegativeIndexUnsupported):
            seq_term(SeqKind.J2, -1)
        with pytest.raises(DomainError):
            iterate_term(SeqKind.jL2, -3)

    def test_recurrence_holds_far_out(self):
        """J(n) = J(n-1) + J(n-2) + 2J(n-3) for large n."""
        n = 500
        assert J3(n) == J3(n - 1) + J3(n - 2) + 2 * J3(n - 3)

    def test_negative_term_sequence(self):
        """negative_term(n) = J(-n)."""
        for n in range(30):
            assert negative_term(n) == J3(-n)
        with pytest.raises(DomainError):
            negative_term(-1)


@pytest.mark.unit
class TestClosedForms:
    """Binet and residue closed forms."""

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 10, 57, 200])
    def test_binet_matches_recurrence(self, n):
        """Binet values are rational and exact."""
        assert binet_J3(n) == J3(n)
        assert binet_j3(n) == j3(n)

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 99])
    def test_residue_closed_form(self, n):
        """J(n) = (2^(n+1) - u) / 7 and j(n) = (2^(n+3) + v) / 7."""
        assert closed_form_residue(SeqKind.J3, n) == J3(n)
        assert closed_form_residue(SeqKind.j3, n) == j3(n)

    def test_second_order_binet(self):
        """(2^n - (-1)^n) / 3 and 2^n + (-1)^n."""
        assert binet_second_order(SeqKind.J2, 10) == 341
        assert binet_second_order(SeqKind.jL2, 10) == 1025
        with pytest.raises(DomainError):
            binet_second_order(SeqKind.J3, 1)

    def test_closed_forms_reject_negative_n(self):
        """Binet forms are stated for n >= 0."""
        with pytest.raises(DomainError):
            binet_J3(-1)
        with pytest.raises(DomainError):
            closed_form_residue(SeqKind.j3, -1)


@pytest.mark.unit
class TestStridedRecurrence:
    """The r-strided recurrence and the auxiliary K values."""

    def test_step_coefficients(self):
        """r = 1 gives 1, 1, 2 and r = 3 gives 10, -17, 8."""
        assert step_coefficients(1) == (1, 1, 2)
        assert step_coefficients(3) == (10, -17, 8)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_rstep_next(self, r):
        """J(rn + s) from the three previous strided terms."""
        for s in range(r):
            n = 6
            window = [J3(r * (n - k) + s) for k in (3, 2, 1)]
            assert rstep_next(r, s, window) == J3(r * n + s)

    def test_rstep_rejects_bad_stride(self):
        """r must be positive."""
        with pytest.raises(DomainError):
            rstep_next(0, 0, [0, 0, 0])

    def test_k_aux(self):
        """K(1, 3) = -(2*(-1) + 1) J(3) + 2 J(2) = 4."""
        assert k_aux(1, 3).value == 4


@pytest.mark.unit
class TestSums:
    """Direct and closed sums of J(rk)."""

    @pytest.mark.parametrize("r", [1, 2, 4, 5, 7, 8])
    def test_closed_sum_matches_direct(self, r):
        """sum_closed = sum_direct for r not divisible by 3."""
        for n in range(1, 21):
            assert sum_closed(r, n) == sum_direct(r, n)

    def test_r1_specialization(self):
        """r = 1: (J(n+1) + 3J(n) + 2J(n-1) - 1) / 3."""
        for n in range(1, 30):
            expected = (J3(n + 1) + 3 * J3(n) + 2 * J3(n - 1) - 1) / 3
            assert sum_closed(1, n) == expected

    @pytest.mark.parametrize("r", [3, 6])
    def test_degenerate_modulus(self, r):
        """r divisible by 3 makes the denominator vanish."""
        with pytest.raises(DegenerateModulus):
            sum_closed(r, 4)

    def test_sum_domain(self):
        """r >= 1 and n >= 1."""
        with pytest.raises(DomainError):
            sum_closed(0, 4)
        with pytest.raises(DomainError):
            sum_closed(2, 0)

    @pytest.mark.regression
    def test_printed_r2_corollary_is_an_erratum(self):
        """The -7 form gives -16/9 at n = 2; the direct sum is 6."""
        assert sum_direct(2, 2) == 6
        assert printed_corollary_s2(2) == Fraction(-16, 9)
        assert corrected_corollary_s2(2) == 6

    def test_partial_sums(self):
        """partial_sum adds the first n + 1 terms."""
        assert partial_sum(SeqKind.J3, 4) == 0 + 1 + 1 + 2 + 5
        assert partial_sum(SeqKind.j3, 3) == 2 + 1 + 5 + 10


@pytest.mark.unit
class TestScalarIdentities:
    """check_* operations produce passing reports on their domains."""

    @pytest.mark.parametrize("tag", [t for t in SCALAR_IDENTITY_TAGS if t != "step2r"])
    def test_identity_holds(self, tag):
        """Every scalar identity passes for n = 2..60."""
        for n in range(2, 61):
            report = check_scalar_identity(tag, n)
            assert report.status == "pass", report.to_line()

    def test_e4_domain(self):
        """e4 is only stated from n = 2."""
        with pytest.raises(DomainError):
            check_scalar_identity("e4", 1)

    def test_negative_n_rejected(self):
        """Identities are checked for n >= 0."""
        with pytest.raises(DomainError):
            check_scalar_identity("e3", -1)

    def test_unknown_tag(self):
        """Unknown tags raise UnknownIdentity."""
        with pytest.raises(UnknownIdentity):
            check_scalar_identity("e99", 3)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_step2r(self, r):
        """J(2r) from J(r) and J(-r)."""
        assert check_step_identity(r).passed
        assert check_scalar_identity("step2r", 0, r=r).r == r

    def test_lemma1_and_domain(self):
        """lemma1 passes on its domain and rejects n < 3 and s >= r."""
        assert check_lemma1(4, 3, 10).passed
        with pytest.raises(DomainError):
            check_lemma1(4, 3, 2)
        with pytest.raises(DomainError):
            check_lemma1(2, 2, 5)

    def test_sum_checks(self):
        """g5 and n2 pass."""
        assert check_sum_formula(5, 9).passed
        assert check_sum_corollary(7).passed

    @pytest.mark.regression
    def test_r2_sum_holds_from_zero(self):
        """The +7 form of the r = 2 sum holds at n = 0; n < 0 is out of domain."""
        assert corrected_corollary_s2(0) == sum_direct(2, 0) == 0
        assert check_sum_corollary(0).passed
        with pytest.raises(DomainError):
            check_sum_corollary(-1)

    def test_auxiliary_checks(self):
        """h1, binet and binet2 pass."""
        assert check_negative_sequence(12).passed
        assert check_binet(33).passed
        assert check_binet_second_order(20).passed

    def test_report_fields(self):
        """Reports carry the identity tag, indices and serialized sides."""
        report = check_scalar_identity("e3", 4)
        assert report.identity_id == "e3"
        assert report.n == 4
        assert report.lhs == report.rhs == "32"
