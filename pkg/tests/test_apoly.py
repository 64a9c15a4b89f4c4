from __future__ import annotations

import json
from fractions import Fraction

import pytest

from fkcable import apoly
from fkcable import fixtures as fx
from fkcable.alexjones import colored_jones_cable, jones_figure_eight_unnormalized
from fkcable.apoly import (
    BadParameter,
    MRecursion,
    NCOperator,
    TMPoly,
    build_ahat2,
    cable_jones_residual,
    companion_coefficients,
    companion_residual,
    m_recursion,
    nc_mul,
    solve_forward,
    verify_annihilation,
)
from fkcable.cabling import gen_cable
from fkcable.exactalg import LPoly
from fkcable.fk_core import FkSeries, Knot, h_table

M = NCOperator.scalar(TMPoly.mono(0, 1))
L = NCOperator.L()


def _tm(t_exp, m_exp, c=1):
    return TMPoly.mono(t_exp, m_exp, c)


# -- nc_mul -----------------------------------------------------------------------------


def test_L_times_M():
    assert nc_mul(L, M) == NCOperator({1: _tm(2, 1)})


def test_L_times_L():
    assert nc_mul(L, L) == NCOperator.L(2)


def test_ML_squared():
    ML = NCOperator({1: _tm(0, 1)})
    assert nc_mul(ML, ML) == NCOperator({2: _tm(2, 2)})


def _act(op: NCOperator, s: int):
    # the sequence n -> x^s at x = q^n, i.e. t^(4 s n)
    return lambda n: op.apply(lambda k: LPoly.monomial(4 * s * k), n)


@pytest.mark.parametrize("s", [-3, 0, 1, 5])
def test_product_matches_composed_action(s):
    ML = NCOperator({1: _tm(0, 1)})
    A = NCOperator({0: _tm(1, 2) + _tm(0, -1), 2: _tm(-3, 1)})
    B = NCOperator({1: _tm(0, 3, 2), 0: _tm(5, 0)})
    for X, Y in ((ML, ML), (A, B), (B, A)):
        prod = nc_mul(X, Y)
        inner = lambda k: Y.apply(lambda j: LPoly.monomial(4 * s * j), k)  # noqa: E731
        for n in range(1, 4):
            assert prod.apply(lambda k: LPoly.monomial(4 * s * k), n) == X.apply(inner, n)


# -- build_ahat2 ------------------------------------------------------------------------


@pytest.mark.parametrize("r", [9, 11, 13, -11])
def test_operator_order_four(r):
    op = build_ahat2(r)
    assert op.order == 4
    assert sorted(op.terms) == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("r", [10, 7, -5, 1])
def test_operator_bad_parameter(r):
    with pytest.raises(BadParameter):
        build_ahat2(r)


def _num(poly: TMPoly, t: Fraction, m: Fraction) -> Fraction:
    total = Fraction(0)
    for me, c in poly.terms.items():
        for e, v in c.items():
            total += v * t**e * m**me
    return total


def _printed_values(t: Fraction, m: Fraction) -> dict[str, Fraction]:
    # direct substitution into the printed tables (single -t^12 M^4 in P1)
    P0 = lambda M: t**6 * M**4 * (-1 + t**12 * M**4)  # noqa: E731
    P1 = lambda M: -(-1 + t**4 * M**2) * (1 + t**4 * M**2) * (  # noqa: E731
        1 - t**4 * M**2 - t**4 * M**4 - t**12 * M**4 - t**12 * M**6 + t**16 * M**8)
    P2 = lambda M: t**10 * M**4 * (-1 + t**4 * M**4)  # noqa: E731
    a = lambda s: t**s * m**2  # noqa: E731
    c2 = P1(a(2)) * P2(a(4))
    Q0 = P0(a(4)) * P1(a(6)) * P0(a(2))
    Q1 = P0(a(4)) * P1(a(6)) * P2(a(2)) - P1(a(6)) * P1(a(2)) * P1(a(4)) + P2(a(4)) * P1(a(2)) * P0(a(6))
    Q2 = c2 * P2(a(6))
    return {"Q0": Q0, "Q1": Q1, "Q2": Q2}


@pytest.mark.parametrize("t,m", [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 7))])
def test_Q_scalar_sanity(t, m):
    cc = companion_coefficients()
    want = _printed_values(t, m)
    got = {k: _num(cc[k], t, m) for k in ("Q0", "Q1", "Q2")}
    assert got == want
    assert sum(got.values()) == sum(want.values())


def _P1_as_printed(Mx: TMPoly) -> TMPoly:
    one = TMPoly.const(1)
    t = lambda e: TMPoly.mono(e, 0)  # noqa: E731
    inner = one - t(4) * Mx**2 - t(4) * Mx**4 - t(12) * Mx**4 - t(12) * Mx**4 - t(12) * Mx**6 + t(16) * Mx**8
    return -((t(4) * Mx**2 - one) * (one + t(4) * Mx**2) * inner)


def test_companion_table_as_printed_fails(monkeypatch):
    J = jones_figure_eight_unnormalized
    assert all(companion_residual(J, n).is_zero() for n in range(1, 6))
    monkeypatch.setattr(apoly, "P1", _P1_as_printed)
    assert all(not companion_residual(J, n).is_zero() for n in range(1, 6))


def test_Q2_as_printed_fails():
    r = 11
    cc = companion_coefficients()
    Q2_printed = cc["c2"] * apoly.P0(apoly._arg(6))
    assert Q2_printed != cc["Q2"]
    B = cc["B"]
    left = NCOperator({1: B, 0: -B.subs(2)})
    right = NCOperator({1: _tm(0, r), 0: _tm(-2 * r, -r)})
    bad = left * NCOperator({0: cc["Q0"], 1: cc["Q1"], 2: Q2_printed}) * right
    J = lambda n: colored_jones_cable(2, r, n, False)  # noqa: E731
    assert all(cable_jones_residual(r, J, n).is_zero() for n in range(1, 4))
    assert any(not bad.apply(J, n).is_zero() for n in range(1, 4))


@pytest.mark.parametrize("r", [9, 11, 13])
def test_operator_annihilates_cable_jones(r):
    J = lambda n: colored_jones_cable(2, r, n, False)  # noqa: E731
    assert all(cable_jones_residual(r, J, n).is_zero() for n in range(1, 5))


# -- m_recursion ----------------------------------------------------------------------


@pytest.mark.parametrize("r,fixture", [(11, "rec11"), (13, "rec13")])
def test_recursion_anchors(r, fixture, request):
    rec = request.getfixturevalue(fixture)
    anchor = fx.RECURSION_ANCHORS[r]
    assert rec.span == anchor["span"]
    assert rec.window == anchor["window"]
    assert [s for s in rec.offsets if s != rec.span] == anchor["offsets"]
    a, b = anchor["divisor"]
    assert rec.divisor_text() == f"q^{{({a}+v)/2}}(1-q^{{({b}+v)/2}})"


def test_recursion_r9(rec9):
    assert rec9.span == 98 and rec9.window == 97
    assert rec9.offsets == sorted(rec9.offsets, reverse=True)


def test_leading_is_divisor_shape(rec11):
    # q^{(115+v)/2}(1 - q^{(89+v)/2}) up to sign at a sample v
    v = 5
    lead = rec11.leading(v)
    want = LPoly.monomial(Fraction(115 + v, 2)) * (1 - LPoly.monomial(Fraction(89 + v, 2)))
    assert lead in (want, -want)


def test_recursion_json_round_trip(rec11):
    again = MRecursion.from_json_obj(json.loads(rec11.to_json()))
    assert again.span == rec11.span and again.templates == rec11.templates


# -- solve_forward --------------------------------------------------------------------


def _series(rows, p, r, m_max) -> FkSeries:
    h = h_table(max(k for _, _, terms in rows for k, _ in terms))
    coeffs = {}
    for sign, m, terms in rows:
        f = LPoly.zero()
        for k, e in terms:
            f = f + h[k].shift(e)
        coeffs[m] = f.scale(2 * sign)
    return FkSeries(Knot.cable(p, r), m_max, coeffs, norm=2)


def test_solve_from_printed_data_r11(rec11):
    # the printed initial data lists representative entries; each must sit in the window used
    window = gen_cable(2, 5, 101)
    printed = _series(fx.CABLE_2_11_INITIAL, 2, 11, 101)
    assert all(window[m] == f for m, f in printed.coeffs.items())
    solved = solve_forward(rec11, window, 109)
    beyond = _series(fx.CABLE_2_11_BEYOND, 2, 11, 109)
    for m in (103, 105, 107, 109):
        assert solved[m] == beyond[m]


def test_solve_from_printed_data_r13(rec13):
    # the printed initial data lists representative entries; each must sit in the window used
    window = gen_cable(2, 6, 105)
    printed = _series(fx.CABLE_2_13_INITIAL, 2, 13, 105)
    assert all(window[m] == f for m, f in printed.coeffs.items())
    solved = solve_forward(rec13, window, 113)
    beyond = _series(fx.CABLE_2_13_BEYOND, 2, 13, 113)
    for m in (107, 109, 111, 113):
        assert solved[m] == beyond[m]


def test_solve_zero_data(rec11):
    zero = FkSeries(Knot.cable(2, 11), 101, norm=2)
    assert solve_forward(rec11, zero, 121).is_zero()


def test_solve_needs_full_window(rec11):
    with pytest.raises(ValueError):
        solve_forward(rec11, gen_cable(2, 5, 99), 121)


def test_solve_detects_wrong_data(rec11):
    F = gen_cable(2, 5, 101)
    bad = F.with_coeff(13, F[13] + LPoly.monomial(3))
    with pytest.raises(ArithmeticError):
        solve_forward(rec11, bad, 129)


# -- verify_annihilation -----------------------------------------------------------------


def test_generated_series_is_annihilated(rec11, cable_2_11):
    report = verify_annihilation(rec11, cable_2_11, v_min=1 - rec11.span)
    assert report.ok
    assert report.max_verified_v == 129 - rec11.span


def test_perturbation_reported(rec11, cable_2_11):
    bad = cable_2_11.with_coeff(57, cable_2_11[57] + 1)
    report = verify_annihilation(rec11, bad, v_min=1 - rec11.span)
    assert not report.ok and report.failures


def test_empty_series_empty_report(rec11):
    report = verify_annihilation(rec11, FkSeries(Knot.cable(2, 11), 129, norm=2))
    assert report.ok and report.checked == [] and report.max_verified_v is None
