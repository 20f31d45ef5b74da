from fractions import Fraction

import pytest

from tspp.identities import (
    ASSERTED,
    INFORMATIONAL,
    CheckReport,
    littlewood_plus,
    littlewood_signed,
    littlewood_square,
    littlewood_square_u_minus_one,
    littlewood_u_minus_one,
    pochhammer_check,
    pochhammer_lhs,
    pochhammer_rhs,
    rising,
)
from tspp.ring import ONE, LaurentPoly, parse_poly, poly_substitute
from tspp.tableaux import enumerate_tspp_tableaux, tableau_weight

# frozen from the determinant at the specialisation, n = 2..8
SPEC_READING_LHS = [2, 6, 23, 126, 1233, 22308, 668564]
PRODUCT_VALUES = [3, 6, 21, 126, 1287, 22308, 655044]


def test_report_equality():
    assert CheckReport("a", ONE, ONE).passed
    assert not CheckReport("a", ONE, ONE, mid=2 * ONE).equal
    assert not CheckReport("a", ONE, 2 * ONE).passed
    assert CheckReport("a", ONE, 2 * ONE, status=INFORMATIONAL).passed


def test_plus_examples():
    rep = littlewood_plus(2)
    assert rep.lhs == rep.mid == rep.rhs == parse_poly("1 + x1*x2")
    assert littlewood_plus(1).equal and littlewood_plus(1).rhs == ONE
    rep = littlewood_plus(3)
    assert rep.equal and len(rep.rhs) == 8
    with pytest.raises(ValueError):
        littlewood_plus(0)


def test_signed_examples():
    assert littlewood_signed(1).lhs == parse_poly("1 - x1")
    assert littlewood_signed(1).mid == parse_poly("1 - x1")
    rep = littlewood_signed(2)
    assert rep.equal
    x1, x2 = LaurentPoly.x(1), LaurentPoly.x(2)
    assert rep.rhs == (1 - x1) * (1 - x2) * (1 - x1 * x2)


def test_square_examples():
    rep = littlewood_square(1)
    assert rep.lhs == parse_poly("1 + x1^2")
    assert rep.parameters["det_agrees"] is True
    assert rep.equal
    x1, x2 = LaurentPoly.x(1), LaurentPoly.x(2)
    assert littlewood_square(2).rhs == (1 + x1 ** 2) * (1 + x2 ** 2) * (1 + x1 * x2)


def test_square_has_one_doubling_column():
    for n in range(2, 5):
        top = n - 1
        for T in enumerate_tspp_tableaux(n, -1):
            if any(v > top for _, v in T.cells):
                continue
            w = poly_substitute(tableau_weight(T), {"r": 1, "u": 1, "v": 1, "w": 0, **{f"x{i}": 1 for i in range(1, top + 1)}})
            assert w == 2


def test_u_minus_one_examples():
    assert littlewood_u_minus_one(2).lhs == parse_poly("1 - x1*x2")
    assert littlewood_u_minus_one(1).lhs == ONE
    assert littlewood_u_minus_one(3).equal


@pytest.mark.parametrize("n", range(1, 5))
def test_littlewood_ranges(n):
    for check in (littlewood_plus, littlewood_signed, littlewood_u_minus_one):
        rep = check(n)
        assert rep.status == ASSERTED
        assert rep.equal, rep.name
    if n <= 3:
        assert littlewood_square(n).equal


@pytest.mark.parametrize("n", range(2, 5))
def test_plus_ignores_barred_entries(n):
    bar_free = LaurentPoly()
    top = n
    for T in enumerate_tspp_tableaux(n - 1, 1):
        if all(v <= top for _, v in T.cells):
            bar_free = bar_free + tableau_weight(T)
    rep = littlewood_plus(n)
    assert poly_substitute(bar_free, {"r": 1, "u": 1, "v": 1, "w": 7}) == rep.lhs
    assert poly_substitute(rep.rhs, {"w": 7}) == rep.rhs


def test_square_u_minus_one_is_informational():
    rep = littlewood_square_u_minus_one(1)
    assert rep.status == INFORMATIONAL
    assert rep.passed


def test_rising():
    assert rising(Fraction(5), 0) == 1
    assert rising(Fraction(5), -2) == 1
    assert rising(Fraction(1, 2), 2) == Fraction(3, 4)


def test_pochhammer_rhs_examples():
    assert pochhammer_rhs(3) == 6
    assert pochhammer_rhs(2) == 3
    with pytest.raises(ValueError):
        pochhammer_rhs(1)


def test_pochhammer_rhs_integral():
    for n, expected in zip(range(2, 9), PRODUCT_VALUES):
        value = pochhammer_rhs(n)
        assert value.denominator == 1 and value > 0
        assert value == expected


def test_pochhammer_lhs_values():
    assert [pochhammer_lhs(n) for n in range(2, 9)] == SPEC_READING_LHS
    # the matrix one size larger reproduces every product value
    assert [pochhammer_lhs(n, order=n) for n in range(2, 9)] == PRODUCT_VALUES


def test_pochhammer_check():
    rep = pochhammer_check(3)
    assert rep.lhs == rep.rhs == 6
    assert rep.status == ASSERTED and rep.passed
    two = pochhammer_check(2)
    assert (two.lhs, two.rhs) == (2, 3)
    assert two.status == INFORMATIONAL and two.passed and not two.equal
    for n in (4, 5):
        rep = pochhammer_check(n)
        assert rep.status == INFORMATIONAL and rep.passed
    assert pochhammer_check(5).equal
    assert not pochhammer_check(4).equal
    assert all(pochhammer_check(n, shifted=True).equal for n in range(2, 9))
