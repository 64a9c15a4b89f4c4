"""Acceptance criteria 1-8, exact comparisons, one PASS/FAIL line per criterion.

Each ``test_criterion_N`` prints ``CRITERION N: PASS|FAIL (...)``. Criteria 3
and 6 contain printed values that are misprints; their lines report FAIL,
the literal comparison is kept as a strict expected failure, and the
criterion test itself asserts that everything else holds and that the
only disagreement is the documented one.
"""

from __future__ import annotations

import time

import pytest

import property_suites
from fkcable import fixtures as fx
from fkcable.alexjones import alexander_cable, colored_jones_cable, hbar_jones, jones_figure_eight, symmetric_expansion
from fkcable.apoly import build_ahat2, m_recursion, solve_forward, verify_annihilation
from fkcable.cabling import cable_terms, gen_cable
from fkcable.exactalg import LPoly, NPoly
from fkcable.fk_core import HTable, q1_limit
from fkcable.surgery import SurgerySlope, zhat_for_cable


@pytest.fixture
def emit(capsys):
    def _emit(n: int, ok: bool, note: str, seconds: float) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {n}: {'PASS' if ok else 'FAIL'} ({note}; {seconds:.1f} s)")

    return _emit


def _expand(rows, table) -> dict[int, LPoly]:
    out = {}
    for sign, m, terms in rows:
        f = LPoly.zero()
        for k, e in terms:
            f = f + table[k].shift(e)
        out[m] = f.scale(2 * sign)
    return out


# -- 1 ----------------------------------------------------------------------------------


def test_criterion_1(emit):
    t0 = time.perf_counter()
    table = HTable(31)
    seeds = all(table[k] == fx.parse_latex_laurent(s) for k, s in fx.H_SEEDS_LATEX.items())
    extended = all(table[k].is_palindromic() and table[k].sign() == 1 for k in range(15, 32, 2))
    dt = time.perf_counter() - t0
    ok = seeds and extended and dt < 1
    emit(1, ok, "h_1..h_13 verbatim, h_15..h_31 by exact division", dt)
    assert seeds and extended
    assert dt < 1


# -- 2 ----------------------------------------------------------------------------------


def test_criterion_2(emit):
    t0 = time.perf_counter()
    F11 = gen_cable(2, 5, 109)
    F13 = gen_cable(2, 6, 113)
    table = HTable(49)
    bad = []
    for F, rows in ((F11, fx.CABLE_2_11_INITIAL + fx.CABLE_2_11_BEYOND),
                    (F13, fx.CABLE_2_13_INITIAL + fx.CABLE_2_13_BEYOND)):
        bad += [(F.knot.r, m) for m, f in _expand(rows, table).items() if F[m] != f]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    emit(2, ok, "every printed f_m of the (11,2)- and (13,2)-cables incl. the further pairs", dt)
    assert not bad
    assert dt < 10


# -- 3 ----------------------------------------------------------------------------------


def _row_mismatches(rows, p, ws) -> list[tuple[str, int]]:
    bad = []
    for w in ws:
        for row in rows:
            sign, m, terms = fx.instantiate_row(row, p, w)
            if cable_terms(p, w, m) != (sign, terms):
                bad.append((row[1], w))
    return bad


def test_criterion_3(emit):
    t0 = time.perf_counter()
    F = gen_cable(3, 4, 361)
    table = HTable(111)
    printed = [r for r in fx.CABLE_3_13_BEYOND if r[0]]
    inst_ok = all(F[m] == f for m, f in _expand(printed, table).items()) and F[357].is_zero()
    literal = _row_mismatches(fx.CABLE3_ROWS, 3, range(4, 21))
    corrected = _row_mismatches(fx.corrected_rows(3), 3, range(4, 21))
    depth4 = {r[1] for r in fx.CABLE3_ROWS} >= {"78w+29", "78w+35"}
    dt = time.perf_counter() - t0
    only_known = {name for name, _ in literal} == {"60w+29"} and len(literal) == 17
    ok = inst_ok and not literal and depth4 and dt < 60
    note = "f_355, f_357 = 0, f_359, f_361 match; rows w = 4..20 incl. depth 4 match except the printed f_{60w+29}"
    note += " exponent n+12w+8, which the closed form and the MMR check give as n+18w+8"
    emit(3, ok, note, dt)
    assert inst_ok and depth4 and not corrected and only_known
    assert dt < 60


@pytest.mark.xfail(strict=True, reason="printed row f_{60w+29} carries the exponent n+12w+8 for h_{18w+9}")
def test_criterion_3_rows_as_printed():
    assert not _row_mismatches(fx.CABLE3_ROWS, 3, range(4, 21))


# -- 4 ----------------------------------------------------------------------------------

_SPANS = {9: 98, 11: 102, 13: 106}
_PRINTED_WINDOWS = {11: fx.CABLE_2_11_INITIAL, 13: fx.CABLE_2_13_INITIAL}
_PRINTED_BEYOND = {11: fx.CABLE_2_11_BEYOND, 13: fx.CABLE_2_13_BEYOND}


def _recursion_oracle(r: int) -> tuple[bool, float]:
    t0 = time.perf_counter()
    w = (r - 1) // 2
    rec = m_recursion(build_ahat2(r), r)
    ok = rec.span == _SPANS[r] and rec.window == rec.span - 1
    anchor = fx.RECURSION_ANCHORS.get(r)
    if anchor:
        a, b = anchor["divisor"]
        ok = ok and [s for s in rec.offsets if s != rec.span] == anchor["offsets"]
        ok = ok and rec.divisor_text() == f"q^{{({a}+v)/2}}(1-q^{{({b}+v)/2}})"
    full = gen_cable(2, w, 129)
    window = full.truncate(rec.window)
    table = HTable(49)
    if r in _PRINTED_WINDOWS:
        ok = ok and all(window[m] == f for m, f in _expand(_PRINTED_WINDOWS[r], table).items())
    solved = solve_forward(rec, window, 129)
    ok = ok and all(solved[m] == full[m] for m in range(1, 130, 2))
    if r in _PRINTED_BEYOND:
        ok = ok and all(solved[m] == f for m, f in _expand(_PRINTED_BEYOND[r], table).items())
    report = verify_annihilation(rec, full, v_min=1 - rec.span)
    ok = ok and report.ok and bool(report.checked)
    return ok, time.perf_counter() - t0


def test_criterion_4(emit):
    results = {r: _recursion_oracle(r) for r in (11, 13, 9)}
    dt = sum(t for _, t in results.values())
    ok = all(good and t < 300 for good, t in results.values())
    per = ", ".join(f"r={r} {t:.0f} s" for r, (_, t) in results.items())
    emit(4, ok, f"spans 102/106/98, divisors as printed, forward solve = closed form through f_129 ({per})", dt)
    assert all(good for good, _ in results.values())
    assert all(t < 300 for _, t in results.values())


# -- 5 ----------------------------------------------------------------------------------


def test_criterion_5(emit):
    t0 = time.perf_counter()
    bad = []
    for (p, r), printed in fx.SE_PRINTED.items():
        w = (r - 1) // p
        F = gen_cable(p, w, 301)
        se = symmetric_expansion(alexander_cable(p, r), 301)
        lim = q1_limit(F)
        bad += [(p, r, m) for m in range(1, 302, 2) if lim.get(m, 0) != se[m]]
        scale = fx.SE_PRINTED_SCALE[(p, r)]
        bad += [(p, r, m) for m, v in printed.items() if scale * lim.get(m, 0) != v]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    emit(5, ok, "limits equal the Alexander expansion through m = 301; the p = 3 prints show twice the coefficient", dt)
    assert not bad
    assert dt < 10


# -- 6 ----------------------------------------------------------------------------------


def _hbar_mismatches(key, printed) -> list[int]:
    H = hbar_jones(key[0], key[1], max(printed))
    assert all(H[k].degree <= k for k in range(H.order + 1))
    return [k for k, cs in printed.items() if H[k] != NPoly(cs)]


def test_criterion_6(emit):
    colored_jones_cable.cache_clear()
    jones_figure_eight.cache_clear()
    t0 = time.perf_counter()
    good = {key: _hbar_mismatches(key, fx.JONES_HBAR[key]) for key in ((2, 11), (2, 13), (3, 13))}
    literal = _hbar_mismatches((3, 16), fx.JONES_HBAR[(3, 16)])
    relabelled = _hbar_mismatches((3, 19), fx.JONES_HBAR[(3, 16)])
    dt = time.perf_counter() - t0
    ok = not any(good.values()) and not literal and dt < 300
    note = "all coefficients for (11,2), (13,2), (13,3) through hbar^6 match; the series printed for (16,3)"
    note += f" differs from hbar^{min(literal) if literal else '-'} on and equals the (19,3)-cable expansion"
    emit(6, ok, note, dt)
    assert not any(good.values())
    assert literal and not relabelled
    assert dt < 300


@pytest.mark.xfail(strict=True, reason="the hbar series printed for the (16,3)-cable is that of the (19,3)-cable")
def test_criterion_6_label_as_printed():
    assert not _hbar_mismatches((3, 16), fx.JONES_HBAR[(3, 16)])


# -- 7 ----------------------------------------------------------------------------------


def test_criterion_7(emit):
    t0 = time.perf_counter()
    factors, bad = [], []
    for (p, r), slope, delta, terms in fx.ZHAT_PRINTED:
        Z = zhat_for_cable(p, (r - 1) // p, SurgerySlope.parse(slope), max(terms))
        k = terms[0] // Z.leading()
        factors.append(k)
        if Z.delta != delta or Z.c != 0 or k not in (1, 2) or {e: k * v for e, v in Z.items()} != terms:
            bad.append((p, r, slope))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    emit(7, ok, f"six series and Delta_b exact; printed = factor x computed primitive series, factors {factors}", dt)
    assert not bad
    assert factors == [1, 2, 2, 2, 2, 2]
    assert dt < 120


# -- 8 ----------------------------------------------------------------------------------


def test_criterion_8(emit, rec11):
    t0 = time.perf_counter()
    counts = {name: run() for name, run in property_suites.SUITES.items()}
    counts["annihilation perturbation"] = property_suites.annihilation_perturbation(rec11)
    dt = time.perf_counter() - t0
    ok = all(n >= 1000 for n in counts.values())
    emit(8, ok, ", ".join(f"{name} {n}" for name, n in counts.items()), dt)
    assert ok
