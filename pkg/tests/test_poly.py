"""Exact polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homcert.poly import BivarPoly, UniPoly


def rational():
    return st.fractions(
        min_value=-10, max_value=10, max_denominator=12
    )


def unipoly(max_deg=6):
    return st.lists(rational(), min_size=0, max_size=max_deg + 1).map(UniPoly)


class TestBivarPoly:
    def test_construction_drops_zeros(self):
        p = BivarPoly({(1, 0): 0, (2, 1): 3})
        assert p.coeffs == {(2, 1): Fraction(3)}
        assert BivarPoly.zero().is_zero()

    def test_algebra(self):
        lam3 = BivarPoly.monomial(3, 0)
        d2 = BivarPoly.monomial(0, 2)
        p = lam3 + 2 * d2
        q = p - lam3
        assert q == BivarPoly({(0, 2): 2})
        assert (p * q).coefficient(3, 2) == 2
        assert (p * q).coefficient(0, 4) == 4
        assert p - p == BivarPoly.zero()

    def test_degrees(self):
        p = BivarPoly({(5, 0): 1, (3, 1): -5})
        assert p.lambda_degree() == 5
        assert p.total_degree() == 5
        assert BivarPoly.monomial(2, 4).total_degree() == 6
        assert BivarPoly.zero().total_degree() == -1

    def test_evaluate(self):
        # lam^4 - 2 d^2 + d at (lam, d) = (3, 3)
        p = BivarPoly({(4, 0): 1, (0, 2): -2, (0, 1): 1})
        assert p.evaluate(3, 3) == 81 - 18 + 3
        assert p.evaluate(Fraction(1, 2), 2) == Fraction(1, 16) - 8 + 2

    def test_substitute_d(self):
        p = BivarPoly({(4, 0): 1, (0, 2): -2, (0, 1): 1})
        u = p.substitute_d(3)
        assert u.degree == 4
        assert u(3) == p.evaluate(3, 3)
        assert u.coeffs[0] == -15

    def test_serialization_roundtrip(self):
        p = BivarPoly({(5, 0): 1, (3, 1): Fraction(-5, 2), (3, 0): 5})
        items = p.coefficient_list()
        assert items == [[3, 0, 5, 1], [3, 1, -5, 2], [5, 0, 1, 1]]
        assert BivarPoly.from_coefficient_list(items) == p

    def test_from_coefficient_list_validation(self):
        with pytest.raises(ValueError):
            BivarPoly.from_coefficient_list([[1, 0, 1]])
        with pytest.raises(ValueError):
            BivarPoly.from_coefficient_list([[1, 0, 1, 1], [1, 0, 2, 1]])

    def test_validation(self):
        with pytest.raises(ValueError):
            BivarPoly({(-1, 0): 1})
        with pytest.raises(TypeError):
            BivarPoly.monomial(1, 0, 0.5)

    def test_immutable(self):
        p = BivarPoly.monomial(1, 1)
        with pytest.raises(AttributeError):
            p.coeffs = {}


class TestUniPoly:
    def test_construction_strips_leading_zeros(self):
        assert UniPoly((1, 2, 0, 0)).degree == 1
        assert UniPoly(()).is_zero()
        assert UniPoly((0,)).is_zero()

    def test_horner_evaluation(self):
        p = UniPoly((1, -2, 3))  # 3x^2 - 2x + 1
        assert p(2) == 9
        assert p(Fraction(1, 3)) == Fraction(1, 3) - Fraction(2, 3) + 1

    def test_algebra(self):
        p = UniPoly((1, 1))  # 1 + x
        q = UniPoly((-1, 1))  # x - 1
        assert p * q == UniPoly((-1, 0, 1))
        assert p + q == UniPoly((0, 2))
        assert p - p == UniPoly(())
        assert 2 * p == UniPoly((2, 2))

    def test_derivative(self):
        p = UniPoly((5, 0, 0, 2))  # 2x^3 + 5
        assert p.derivative() == UniPoly((0, 0, 6))
        assert UniPoly((3,)).derivative().is_zero()

    def test_divmod(self):
        p = UniPoly((-1, 0, 1))  # x^2 - 1
        q = UniPoly((1, 1))  # x + 1
        quo, rem = p.divmod(q)
        assert quo == UniPoly((-1, 1)) and rem.is_zero()
        assert p.divexact(q) == quo
        with pytest.raises(ValueError):
            UniPoly((1, 0, 1)).divexact(q)
        with pytest.raises(ZeroDivisionError):
            p.divmod(UniPoly(()))

    @settings(max_examples=80)
    @given(unipoly(4), unipoly(3))
    def test_divmod_identity(self, a, b):
        if b.is_zero():
            return
        quo, rem = a.divmod(b)
        assert quo * b + rem == a
        assert rem.degree < b.degree or rem.is_zero()

    @settings(max_examples=60)
    @given(unipoly(3), unipoly(3))
    def test_product_division_recovers(self, a, b):
        if b.is_zero():
            return
        assert (a * b).divexact(b) == a

    def test_shift(self):
        p = UniPoly((0, 0, 1))  # x^2
        s = p.shift(1)  # (x+1)^2
        assert s == UniPoly((1, 2, 1))
        assert s(2) == p(3)

    @settings(max_examples=50)
    @given(unipoly(4), rational(), rational())
    def test_shift_property(self, p, a, x):
        assert p.shift(a)(x) == p(x + a)

    def test_content_primitive(self):
        p = UniPoly((Fraction(2, 3), Fraction(4, 3)))
        content, prim = p.content_primitive()
        assert content == Fraction(2, 3)
        assert prim == UniPoly((1, 2))
        assert content * prim == p

    def test_from_terms(self):
        p = UniPoly.from_terms({5: 1, 3: -5})
        assert p.degree == 5
        assert p.coeffs[3] == -5
        assert UniPoly.from_terms({}).is_zero()


class TestQuotientExpansionIdentity:
    """y^k - y0^k - k y0^(k-1) (y - y0) factors as (y - y0)^2 * w(y) with
    w(y) = sum_{a=0}^{k-2} (a + 1) y0^a y^(k-2-a); the certificates' odd
    tangent-line construction relies on this closed form."""

    @pytest.mark.parametrize("k", range(2, 9))
    @pytest.mark.parametrize("d", [2, 3, 5, 9])
    def test_identity(self, k, d):
        y0 = Fraction(-1, d)
        lhs = (
            UniPoly.from_terms({k: 1})
            - UniPoly((y0**k,))
            - UniPoly((-y0, 1)) * (k * y0 ** (k - 1))
        )
        w = UniPoly.from_terms(
            {k - 2 - a: (a + 1) * y0**a for a in range(k - 1)}
        )
        square = UniPoly((-y0, 1)) * UniPoly((-y0, 1))
        assert lhs == square * w
