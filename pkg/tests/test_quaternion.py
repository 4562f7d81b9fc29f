"""Tests for quaternion arithmetic and the JQ / jQ quaternions."""

from fractions import Fraction

import pytest

from jacq.errors import DomainError, UnknownIdentity
from jacq.exactnum import CycloRational
from jacq.quaternion import (
    ALPHA,
    QUAT_IDENTITY_TAGS,
    Quaternion,
    binet_triple,
    check_quat_binet,
    check_quat_identity,
    jlq_binet,
    jlq_term,
    jq_binet,
    jq_term,
    product_polynomials,
    quat_conj,
    quat_mul,
    quat_norm,
    quat_sum,
)

I = Quaternion.of(0, 1, 0, 0)
J = Quaternion.of(0, 0, 1, 0)
K = Quaternion.of(0, 0, 0, 1)
ONE = Quaternion.of(1, 0, 0, 0)


@pytest.mark.unit
class TestQuaternionAlgebra:
    """Hamilton product and the componentwise operations."""

    def test_basis_rules(self):
        """i^2 = j^2 = k^2 = ijk = -1, ij = k, ji = -k."""
        for unit in (I, J, K):
            assert unit * unit == -ONE
        assert I * J * K == -ONE
        assert I * J == K
        assert J * I == -K
        assert quat_mul(J, K) == I

    def test_product_is_not_commutative(self):
        """JQ(1) jQ(1) differs from jQ(1) JQ(1)."""
        assert jq_term(1) * jlq_term(1) != jlq_term(1) * jq_term(1)

    def test_conjugate_and_norm(self):
        """q conj(q) = N(q) as a scalar quaternion."""
        q = Quaternion.of(1, -2, 3, Fraction(1, 2))
        assert quat_conj(q) == Quaternion.of(1, 2, -3, Fraction(-1, 2))
        assert quat_norm(q) == 1 + 4 + 9 + Fraction(1, 4)
        assert q * q.conjugate() == Quaternion.scalar(q.norm())

    def test_scalar_embedding(self):
        """Rationals embed as (r, 0, 0, 0) and commute."""
        q = jq_term(3)
        assert q * 3 == 3 * q == q * Quaternion.scalar(Fraction(3))
        assert q + 1 == 1 + q == q + ONE
        assert q - 1 == q - ONE
        assert 1 - q == ONE - q

    def test_json_form(self):
        """Components serialize as s, i, j, k strings."""
        data = jlq_term(0).to_json()
        assert data == {"s": "2", "i": "1", "j": "5", "k": "10"}
        assert Quaternion.from_json(data) == jlq_term(0)

    def test_over_cyclotomic_coefficients(self):
        """The Binet quaternions live over Q(w)."""
        triple = binet_triple()
        assert triple.alpha == ALPHA
        assert triple.beta.q1 == CycloRational(0, 1)
        assert triple.gamma.q1 == CycloRational(-1, -1)
        assert triple.beta.q3 == 1


RATIONAL_QUATERNIONS = [
    Quaternion.of(1, -2, 3, Fraction(1, 2)),
    Quaternion.of(0, 1, 1, 2),
    Quaternion.of(Fraction(-3, 4), 5, 0, -1),
]
W = CycloRational(0, 1)
CYCLOTOMIC_QUATERNIONS = [
    Quaternion(CycloRational(1), W, W * W, CycloRational(1)),
    Quaternion(CycloRational(2, -1), CycloRational(0), CycloRational(1, 3), W),
    Quaternion(CycloRational(Fraction(5, 3), Fraction(4, 3)), W, W, -W),
]


@pytest.mark.unit
class TestMultiplicativeLaws:
    """Conjugation reverses products and the norm is multiplicative."""

    @pytest.mark.parametrize(
        "elements", [RATIONAL_QUATERNIONS, CYCLOTOMIC_QUATERNIONS], ids=["Q", "Q(w)"]
    )
    def test_conjugate_of_product(self, elements):
        """conj(xy) = conj(y) conj(x)."""
        for x in elements:
            for y in elements:
                assert quat_conj(x * y) == quat_conj(y) * quat_conj(x)

    @pytest.mark.parametrize(
        "elements", [RATIONAL_QUATERNIONS, CYCLOTOMIC_QUATERNIONS], ids=["Q", "Q(w)"]
    )
    def test_norm_of_product(self, elements):
        """N(xy) = N(x) N(y)."""
        for x in elements:
            for y in elements:
                assert quat_norm(x * y) == quat_norm(x) * quat_norm(y)

    def test_binet_quaternions(self):
        """The same laws hold for the Binet constants over Q(w)."""
        triple = binet_triple()
        x, y = triple.beta, triple.gamma
        assert quat_conj(x * y) == quat_conj(y) * quat_conj(x)
        assert quat_norm(x * y) == quat_norm(x) * quat_norm(y)


@pytest.mark.unit
class TestJacobsthalQuaternions:
    """JQ and jQ terms and their closed forms."""

    def test_first_terms(self):
        """JQ(0), JQ(1) and jQ(0) from the table."""
        assert jq_term(0) == Quaternion.of(0, 1, 1, 2)
        assert jq_term(1) == Quaternion.of(1, 1, 2, 5)
        assert jlq_term(0) == Quaternion.of(2, 1, 5, 10)

    def test_negative_index_rejected(self):
        """JQ and jQ start at n = 0."""
        with pytest.raises(DomainError):
            jq_term(-1)
        with pytest.raises(DomainError):
            jlq_term(-1)

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 17, 90])
    def test_binet_forms(self, n):
        """Quaternion Binet formulas give the recurrence values."""
        assert jq_binet(n) == jq_term(n)
        assert jlq_binet(n) == jlq_term(n)

    def test_product_at_three(self):
        """JQ(3) jQ(3) = -1730 + 84i + 100j + 360k."""
        assert jq_term(3) * jlq_term(3) == Quaternion.of(-1730, 84, 100, 360)
        assert product_polynomials(3) == Quaternion.of(-1730, 84, 100, 360) * 49

    def test_norm_at_zero(self):
        """N(JQ(0)) = 6."""
        assert jq_term(0).norm() == 6

    def test_quat_sum(self):
        """The jQ partial sum adds the first n + 1 quaternions."""
        assert quat_sum(1) == jlq_term(0) + jlq_term(1)


@pytest.mark.unit
class TestQuaternionIdentities:
    """check_quat_identity across every tag."""

    @pytest.mark.parametrize("tag", [t for t in QUAT_IDENTITY_TAGS if t != "product"])
    def test_identity_holds(self, tag):
        """Each identity passes for n = 2..45."""
        for n in range(2, 46):
            report = check_quat_identity(tag, n)
            assert report.passed, report.to_line()

    def test_product_on_multiples_of_three(self):
        """The product closed form holds for n = 3, 6, ..., 60."""
        for n in range(3, 61, 3):
            assert check_quat_identity("product", n).passed

    @pytest.mark.parametrize("n", [0, 1, 2, 4, 5])
    def test_product_domain(self, n):
        """Other residues and n = 0 are outside the stated domain."""
        with pytest.raises(DomainError):
            check_quat_identity("product", n)

    def test_lift_domain(self):
        """The lifted e4 needs n >= 2."""
        with pytest.raises(DomainError):
            check_quat_identity("lemma-e4-lift", 1)

    def test_unknown_tag(self):
        """Unknown tags raise UnknownIdentity."""
        with pytest.raises(UnknownIdentity):
            check_quat_identity("t99", 3)

    def test_qbinet_report(self):
        """qbinet compares both sequences at once."""
        report = check_quat_binet(8)
        assert report.passed
        assert len(report.lhs) == 2
