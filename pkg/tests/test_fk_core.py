from __future__ import annotations

import pytest

from fkcable import fixtures as fx
from fkcable.alexjones import alexander_cable, symmetric_expansion
from fkcable.cabling import gen_cable
from fkcable.exactalg import LPoly
from fkcable.fk_core import FkSeries, HTable, Knot, figure_eight, format_h_table, h_table, mirror, q1_limit

q = LPoly.monomial(1)


def test_first_seeds():
    h = h_table(5)
    assert h[1] == 1 and h[3] == 2
    assert h[5] == q**-1 + 3 + q


def test_h13_middle_coefficient():
    assert h_table(13)[13].coeff(0) == 27


def test_seeds_match_printed_table():
    h = h_table(13)
    for k, text in fx.H_SEEDS_LATEX.items():
        assert h[k] == fx.parse_latex_laurent(text), k


def test_h15_window_independent():
    assert HTable(15)[15] == HTable(17)[15]


def test_window_independence_wide():
    a, b = HTable(41), HTable(61)
    for k in range(1, 42, 2):
        assert a[k] == b[k]


def test_palindromic_and_positive():
    h = h_table(61)
    for k, poly in h.items(61):
        assert poly.is_palindromic(), k
        assert poly.sign() == 1, k
        assert poly.is_integral(), k


def test_min_exponent_closed_form():
    # the tail bound used by the surgery map rests on this formula
    h = h_table(101)
    for k, poly in h.items(101):
        assert poly.min_exp() == -(((k - 1) // 2) ** 2 // 4), k


def test_index_out_of_range():
    h = HTable(7)
    with pytest.raises((KeyError, ValueError, IndexError)):
        h[4]


def test_text_table():
    text = format_h_table(h_table(5), 5)
    assert text.splitlines() == ["h_1(q) = 1", "h_3(q) = 2", "h_5(q) = q^-1 + 3 + q"]


# -- mirror -----------------------------------------------------------------------


def test_mirror_involution(cable_2_11):
    assert mirror(mirror(cable_2_11)) == cable_2_11


def test_mirror_f13(cable_2_11):
    assert cable_2_11[13] == LPoly.monomial(6, 2)
    M = mirror(cable_2_11)
    assert M[13] == LPoly.monomial(-6, 2)
    assert M.knot.mirrored and not cable_2_11.knot.mirrored


def test_mirror_zero():
    Z = FkSeries(Knot.cable(2, 11), 9)
    assert mirror(Z).is_zero()


# -- q1_limit ----------------------------------------------------------------------


def test_q1_limit_printed_values(cable_2_11):
    lim = q1_limit(cable_2_11)
    assert [lim[m] for m in (13, 17, 21, 25)] == [1, 2, 5, 13]
    assert lim[35] == -1


def test_q1_limit_figure_eight():
    assert q1_limit(figure_eight(3))[1] == 1


def test_q1_limit_needs_divisible_values():
    F = FkSeries(Knot.cable(2, 11), 3, {1: LPoly.one()}, norm=2)
    with pytest.raises(ArithmeticError):
        q1_limit(F)


@pytest.mark.parametrize("p,w", [(2, 4), (2, 5), (2, 6), (3, 4), (3, 5)])
def test_q1_limit_is_alexander_expansion(p, w):
    F = gen_cable(p, w, 201)
    se = symmetric_expansion(alexander_cable(p, p * w + 1), 201)
    lim = q1_limit(F)
    assert all(lim.get(m, 0) == se[m] for m in range(1, 202, 2))


# -- FkSeries model -----------------------------------------------------------------


def test_series_json_round_trip(cable_2_11):
    assert FkSeries.from_json(cable_2_11.to_json()) == cable_2_11


def test_series_rejects_even_index():
    with pytest.raises(ValueError):
        FkSeries(Knot.figure_eight(), 5, {2: LPoly.one()})
    with pytest.raises(ValueError):
        FkSeries(Knot.figure_eight(), 4)


def test_series_antisymmetric_index(cable_2_11):
    assert cable_2_11[-13] == -cable_2_11[13]
    with pytest.raises(KeyError):
        cable_2_11[131]


def test_sign_constant_per_entry(cable_2_11):
    assert all(f.sign() != 0 for f in cable_2_11.coeffs.values())


def test_text_format(cable_2_11):
    assert "f+_13(q) = 2*q^6" in cable_2_11.format_text().splitlines()
