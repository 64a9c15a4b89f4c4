from __future__ import annotations

from fractions import Fraction

import pytest

from fkcable import fixtures as fx
from fkcable.alexjones import (
    BadParameter,
    NonUnitLeading,
    alexander_cable,
    alexander_torus,
    colored_jones_cable,
    hbar_jones,
    jones_figure_eight,
    mmr_check,
    symmetric_expansion,
)
from fkcable.cabling import cable_terms, gen_cable
from fkcable.exactalg import LPoly, NPoly
from fkcable.fk_core import FkSeries, Knot

t = LPoly.monomial(1)


def test_alexander_2_11_printed_terms():
    d = alexander_cable(2, 11)
    assert d.min_exp() == -7 and d.coeff(-7) == -1
    assert d.coeff(0) == -1 and d.coeff(5) == 2
    assert d == fx.alexander_printed((2, 11))


def test_alexander_2_13():
    d = alexander_cable(2, 13)
    assert d.coeff(8) == -1 and d.coeff(6) == 2
    assert d == fx.alexander_printed((2, 13))


def test_alexander_3_13():
    d = alexander_cable(3, 13)
    assert d.coeff(15) == -1 and d.coeff(12) == 2
    assert d == fx.alexander_printed((3, 13))


@pytest.mark.parametrize("p,r", [(2, 9), (2, 11), (2, -11), (3, 13), (3, 16), (3, 19), (2, 41)])
def test_alexander_symmetric_and_normalized(p, r):
    d = alexander_cable(p, r)
    assert d.is_palindromic() and d.at_one() == 1 and d.is_integral()


def test_alexander_bad_parameter():
    with pytest.raises(BadParameter):
        alexander_cable(2, 10)
    with pytest.raises(BadParameter):
        alexander_cable(5, 11)
    with pytest.raises(BadParameter):
        alexander_torus(2, 4)


def test_torus_trefoil():
    assert alexander_torus(2, 3) == t - 1 + t**-1


def test_alexander_label_16_printed_is_19():
    printed = fx.alexander_printed((3, 16))
    assert printed != alexander_cable(3, 16)
    assert alexander_cable(3, 16).max_exp() == 18
    # the printed +t^21 must read -t^21 to be symmetric; it then equals the (19,3)-cable
    fixed = printed - LPoly.monomial(21, 2)
    assert fixed == alexander_cable(3, 19)


# -- symmetric expansion -------------------------------------------------------------------


def test_expansion_2_11():
    se = symmetric_expansion(alexander_cable(2, 11), 45)
    assert [se[m] for m in (13, 17, 21, 25, 29, 33)] == [1, 2, 5, 13, 34, 89]
    assert se[35] == -1


@pytest.mark.parametrize("key", sorted(fx.SE_PRINTED))
def test_expansion_printed(key):
    p, r = key
    se = symmetric_expansion(alexander_cable(p, r), 101)
    scale = fx.SE_PRINTED_SCALE[key]
    for m, v in fx.SE_PRINTED[key].items():
        assert scale * se[m] == v, m


def test_expansion_3_13_print_doubles():
    # the cable-3 prints show twice the x = 0 expansion coefficient
    se = symmetric_expansion(alexander_cable(3, 13), 61)
    assert (se[29], se[55]) == (1, -1)


def test_expansion_antisymmetric():
    se = symmetric_expansion(alexander_cable(2, 11), 45)
    assert se[-13] == -se[13]


def test_expansion_rejects_non_monic():
    with pytest.raises(NonUnitLeading):
        symmetric_expansion(2 * t - 3 + 2 * t**-1, 21)


def test_expansion_rejects_unnormalized():
    with pytest.raises(BadParameter):
        symmetric_expansion(-(t - 1 + t**-1), 21)


# -- colored Jones -------------------------------------------------------------------------


def test_trivial_color():
    assert colored_jones_cable(2, 11, 1) == LPoly.one()
    assert colored_jones_cable(3, 13, 1) == LPoly.one()


def test_figure_eight_jones_n2():
    q = LPoly.monomial(1)
    assert jones_figure_eight(2) == q**2 - q + 1 - q**-1 + q**-2


def test_jones_bad_parameter():
    with pytest.raises(BadParameter):
        colored_jones_cable(2, 11, 0)
    with pytest.raises(BadParameter):
        colored_jones_cable(2, 12, 3)


def test_second_order_interpolates():
    H = hbar_jones(2, 11, 2)
    assert H[2] == NPoly([11, 0, -11])


def test_second_order_cable3():
    assert hbar_jones(3, 13, 2)[2] == NPoly([47, 0, -47])


@pytest.mark.parametrize("key", [(2, 11), (2, 13), (3, 13)])
def test_hbar_printed(key):
    printed = fx.JONES_HBAR[key]
    H = hbar_jones(key[0], key[1], max(printed))
    for k, cs in printed.items():
        assert H[k] == NPoly(cs), k


def test_hbar_label_16_printed_is_19():
    printed = fx.JONES_HBAR[(3, 16)]
    H16 = hbar_jones(3, 16, 5)
    H19 = hbar_jones(3, 19, 5)
    assert H16[3] != NPoly(printed[3])
    assert all(H19[k] == NPoly(cs) for k, cs in printed.items())


def test_hbar_low_orders():
    H = hbar_jones(2, 9, 4)
    assert H[0] == NPoly([1]) and H[1] == NPoly([])
    assert all(H[k].degree <= k for k in range(5))


def test_hbar_specific_values():
    assert hbar_jones(2, 11, 4)[4] == NPoly([Fraction(11891, 12), 0, -1137, 0, Fraction(1753, 12)])
    assert hbar_jones(2, 13, 2)[2] == NPoly([17, 0, -17])


# -- MMR ------------------------------------------------------------------------------------


def test_mmr_cable_2_11(cable_2_11):
    report = mmr_check(cable_2_11, alexander_cable(2, 11), r_max=2)
    assert report.ok and report.limit_ok
    assert all(not v for v in report.window_nonzero.values())
    assert report.windows[1][1] > report.windows[1][0]


def test_mmr_window_stable_at_larger_truncation():
    report = mmr_check(gen_cable(2, 5, 201), alexander_cable(2, 11), r_max=1)
    assert report.ok


def test_mmr_cable3():
    assert mmr_check(gen_cable(3, 4, 301), alexander_cable(3, 13), r_max=2).ok


def test_mmr_zero_series():
    Z = FkSeries(Knot.cable(2, 11), 129, norm=2)
    report = mmr_check(Z, alexander_cable(2, 11), r_max=2)
    assert not report.limit_ok
    assert all(not v for r, v in report.window_nonzero.items() if r >= 1)


def test_mmr_sees_printed_60w29_row():
    # with the printed exponent n+12w+8 the hbar^1 window is no longer finite
    F = gen_cable(3, 4, 331)
    w, n = 4, 14
    m = 60 * w + 29
    h_index = 18 * w + 9
    from fkcable.fk_core import h_table

    sign, terms = cable_terms(3, w, m)
    assert (h_index, n + 18 * w + 8) in terms
    h = h_table(h_index)[h_index]
    wrong = F[m] - h.shift(n + 18 * w + 8).scale(2 * sign) + h.shift(n + 12 * w + 8).scale(2 * sign)
    bad = F.with_coeff(m, wrong)
    assert mmr_check(F, alexander_cable(3, 13), r_max=2).ok
    report = mmr_check(bad, alexander_cable(3, 13), r_max=2)
    assert report.limit_ok and report.window_nonzero[1]
