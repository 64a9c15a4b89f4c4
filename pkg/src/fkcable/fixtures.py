"""Published reference values, transcribed in a notation close to the print.

Everything here is data plus the small parsers that turn it into library
objects. The test suite and ``fk verify-all`` compare computed results
against these tables; nothing in the computational modules reads them.

Known misprints are kept verbatim in the tables and listed in ``ERRATA``
together with the corrected reading and the check that adjudicates it.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactalg.lpoly import LPoly

# -- figure-eight seeds, as printed (LaTeX) ----------------------------------------

H_SEEDS_LATEX = {
    1: r"1",
    3: r"2",
    5: r"\frac{1}{q}+3+q",
    7: r"\frac{2}{q^2}+\frac{2}{q}+5+2 q+2 q^2",
    9: r"\frac{1}{q^4}+\frac{3}{q^3}+\frac{4}{q^2}+\frac{5}{q}+8+5 q+4 q^2+3 q^3+q^4",
    11: r"\frac{2}{q^6}+\frac{2}{q^5}+\frac{6}{q^4}+\frac{7}{q^3}+\frac{10}{q^2}+\frac{10}{q}+15+10 q+10 q^2"
    r"+7 q^3+6 q^4+2 q^5+2 q^6",
    13: r"\frac{1}{q^9}+\frac{3}{q^8}+\frac{4}{q^7}+\frac{7}{q^6}+\frac{11}{q^5}+\frac{15}{q^4}+\frac{18}{q^3}"
    r"+\frac{21}{q^2}+\frac{23}{q}+27+23 q+21 q^2+18 q^3+15 q^4+11 q^5+7 q^6+4 q^7+3 q^8+q^9",
}

_TERM = re.compile(
    r"(?P<sign>[+-]?)\s*(?:\\frac\{(?P<fnum>\d+)\}\{(?P<fvar>[a-z])(?:\^\{?(?P<fexp>\d+)\}?)?\}"
    r"|(?P<coef>\d*)\s*(?P<var>[a-z])?(?:\^\{?(?P<exp>-?\d+)\}?)?)"
)


def parse_latex_laurent(text: str, var: str = "q") -> LPoly:
    """Parse sums like ``\\frac{2}{q^2}+5+2 q`` (integer exponents only)."""
    acc: dict[int, int] = {}
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("fnum"):
            if m.group("fvar") != var:
                raise ValueError(f"unexpected variable in {m.group(0)!r}")
            c, e = int(m.group("fnum")), -int(m.group("fexp") or 1)
        else:
            if m.group("var") and m.group("var") != var:
                raise ValueError(f"unexpected variable in {m.group(0)!r}")
            c = int(m.group("coef")) if m.group("coef") else 1
            e = (int(m.group("exp")) if m.group("exp") else 1) if m.group("var") else 0
            if not m.group("coef") and not m.group("var"):
                raise ValueError(f"empty term in {text!r}")
        acc[e] = acc.get(e, 0) + sign * c
    return LPoly(acc)


# -- symbolic rows of the cable patterns --------------------------------------------
# A row is (sign, m, [(h index, q exponent), ...]); m, indices and exponents are
# linear forms in w, n and D (the block offset Delta).

CABLE2_ROWS = [
    ("+", "2w+3", [("1", "n")]),
    ("+", "2w+7", [("3", "n+1")]),
    ("+", "2w+11", [("5", "n+2")]),
    ("+", "10w+7", [("4w+3", "n+2w+1"), ("1", "n+2w+1+D")]),
    ("+", "10w+11", [("4w+5", "n+2w+2"), ("3", "n+2w+6+D")]),
    ("+", "10w+15", [("4w+7", "n+2w+3"), ("5", "n+2w+11+D")]),
    ("+", "18w+11", [("8w+5", "n+4w+2"), ("4w+3", "n+12w+6+D"), ("1", "n+12w+6+2D")]),
    ("+", "18w+15", [("8w+7", "n+4w+3"), ("4w+5", "n+12w+11+D"), ("3", "n+12w+15+2D")]),
    ("-", "6w+5", [("1", "3n")]),
    ("-", "6w+9", [("3", "3n+3")]),
    ("-", "6w+13", [("5", "3n+6")]),
    ("-", "14w+9", [("4w+3", "3n+6w+3"), ("1", "3n+6w+3+D")]),
    ("-", "14w+13", [("4w+5", "3n+6w+6"), ("3", "3n+6w+10+D")]),
]

CABLE3_ROWS = [
    ("+", "6w+5", [("1", "n")]),
    ("+", "6w+11", [("3", "n+2")]),
    ("+", "6w+17", [("5", "n+4")]),
    ("+", "24w+11", [("6w+3", "n+6w+2"), ("1", "n+6w+2+D")]),
    ("+", "24w+17", [("6w+5", "n+6w+4"), ("3", "n+6w+10+D")]),
    ("+", "24w+23", [("6w+7", "n+6w+6"), ("5", "n+6w+18+D")]),
    ("+", "42w+17", [("12w+5", "n+12w+4"), ("6w+3", "n+30w+10+D"), ("1", "n+30w+10+2D")]),
    ("+", "42w+23", [("12w+7", "n+12w+6"), ("6w+5", "n+30w+18+D"), ("3", "n+30w+24+2D")]),
    ("+", "60w+23", [("18w+7", "n+18w+6"), ("12w+5", "n+54w+18+D"), ("6w+3", "n+72w+24+2D"),
                     ("1", "n+72w+24+3D")]),
    ("+", "60w+29", [("18w+9", "n+12w+8"), ("12w+7", "n+54w+26+D"), ("6w+5", "n+72w+38+2D"),
                     ("3", "n+72w+44+3D")]),
    ("+", "78w+29", [("24w+9", "n+24w+8"), ("18w+7", "n+78w+26+D"), ("12w+5", "n+114w+38+2D"),
                     ("6w+3", "n+132w+44+3D"), ("1", "n+132w+44+4D")]),
    ("+", "78w+35", [("24w+11", "n+24w+10"), ("18w+9", "n+78w+34+D"), ("12w+7", "n+114w+52+2D"),
                     ("6w+5", "n+132w+64+3D"), ("3", "n+132w+70+4D")]),
    ("-", "12w+7", [("1", "2n")]),
    ("-", "12w+13", [("3", "2n+4")]),
    ("-", "12w+19", [("5", "2n+8")]),
    ("-", "30w+13", [("6w+3", "2n+12w+4"), ("1", "2n+12w+4+D")]),
    ("-", "30w+19", [("6w+5", "2n+12w+8"), ("3", "2n+12w+14+D")]),
    ("-", "48w+19", [("12w+5", "2n+24w+8"), ("6w+3", "2n+42w+14+D"), ("1", "2n+42w+14+2D")]),
    ("-", "48w+25", [("12w+7", "2n+24w+12"), ("6w+5", "2n+42w+24+D"), ("3", "2n+42w+30+2D")]),
    ("-", "66w+25", [("18w+7", "2n+36w+12"), ("12w+5", "2n+72w+24+D"), ("6w+3", "2n+90w+30+2D"),
                     ("1", "2n+90w+30+3D")]),
    ("-", "66w+31", [("18w+9", "2n+36w+16"), ("12w+7", "2n+72w+34+D"), ("6w+5", "2n+90w+46+2D"),
                     ("3", "2n+90w+52+3D")]),
]

_LIN = re.compile(r"([+-]?)(\d*)([wnD]?)")


def eval_linear(form: str, **values: int) -> int:
    """Evaluate ``"n+12w+6+2D"`` at the given w, n, D."""
    total = 0
    pos = 0
    form = form.replace(" ", "")
    while pos < len(form):
        m = _LIN.match(form, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse linear form {form!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        var = m.group(3)
        total += sign * coef * (values[var] if var else 1)
    return total


def cable_params(p: int, w: int) -> dict[str, int]:
    """``{"w", "n", "D"}`` for the (pw+1, p)-cable."""
    if p == 2:
        return {"w": w, "n": w + 1, "D": 4 * w + 4}
    return {"w": w, "n": 3 * w + 2, "D": 9 * w + 6}


def instantiate_row(row, p: int, w: int) -> tuple[int, int, list[tuple[int, int]]]:
    """``(sign, m, [(h index, exponent), ...])`` of a symbolic row at w."""
    sign, m, terms = row
    vals = cable_params(p, w)
    return (
        1 if sign == "+" else -1,
        eval_linear(m, **vals),
        [(eval_linear(k, **vals), eval_linear(e, **vals)) for k, e in terms],
    )


# -- explicit instances --------------------------------------------------------------
# (sign, m, [(h index, q exponent), ...]); sign 0 marks a printed vanishing f_m.

CABLE_2_11_INITIAL = [
    (1, 13, [(1, 6)]), (1, 17, [(3, 7)]), (1, 21, [(5, 8)]),
    (1, 57, [(23, 17), (1, 41)]), (1, 61, [(25, 18), (3, 46)]), (1, 65, [(27, 19), (5, 51)]),
    (1, 101, [(45, 28), (23, 96), (1, 120)]),
    (-1, 35, [(1, 18)]), (-1, 39, [(3, 21)]), (-1, 43, [(5, 24)]),
    (-1, 79, [(23, 51), (1, 75)]), (-1, 83, [(25, 54), (3, 82)]),
    (-1, 99, [(33, 66), (11, 110)]),
]
CABLE_2_11_BEYOND = [
    (-1, 103, [(35, 69), (13, 117)]),
    (1, 105, [(47, 29), (25, 101), (3, 129)]),
    (-1, 107, [(37, 72), (15, 124)]),
    (1, 109, [(49, 30), (27, 106), (5, 138)]),
]
CABLE_2_13_INITIAL = [
    (1, 15, [(1, 7)]), (1, 19, [(3, 8)]), (1, 23, [(5, 9)]),
    (1, 67, [(27, 20), (1, 48)]), (1, 71, [(29, 21), (3, 53)]),
    (-1, 41, [(1, 21)]), (-1, 45, [(3, 24)]), (-1, 49, [(5, 27)]),
    (-1, 93, [(27, 60), (1, 88)]), (-1, 97, [(29, 63), (3, 95)]),
    (-1, 105, [(33, 69), (7, 109)]),
]
CABLE_2_13_BEYOND = [
    (1, 107, [(47, 30), (21, 98)]),
    (-1, 109, [(35, 72), (9, 116)]),
    (1, 111, [(49, 31), (23, 103)]),
    (-1, 113, [(37, 75), (11, 123)]),
]
CABLE_3_13_BEYOND = [
    (-1, 355, [(101, 228), (75, 492), (49, 678), (23, 786)]),
    (0, 357, []),
    (1, 359, [(111, 124), (85, 418), (59, 634), (33, 772), (7, 832)]),
    (-1, 361, [(103, 232), (77, 502), (51, 694), (25, 808)]),
]

# recursion anchors: span, initial window, relative offsets below the leading
# one, and the divisor q^{(a+v)/2}(1 - q^{(b+v)/2}) as (a, b)
RECURSION_ANCHORS = {
    11: {
        "span": 102,
        "window": 101,
        "offsets": [98, 94, 90, 86, 82] + list(range(80, 18, -2)) + [16, 12, 8, 4, 0],
        "divisor": (115, 89),
    },
    13: {
        "span": 106,
        "window": 105,
        "offsets": [102, 98, 94, 90, 86, 82] + list(range(80, 22, -2)) + [20, 16, 12, 8, 4, 0],
        "divisor": (121, 91),
    },
}

# -- hbar expansions of the normalized colored Jones ----------------------------------
# {hbar order: [coefficient of n^0, n^1, ...]}


def _F(*vals) -> list[Fraction]:
    return [Fraction(v) for v in vals]


JONES_HBAR = {
    (2, 11): {
        0: _F(1), 1: _F(),
        2: _F(11, 0, -11),
        3: _F(-88, 0, 88),
        4: _F("11891/12", 0, -1137, 0, "1753/12"),
        5: _F(-12826, 0, "47036/3", 0, "-8558/3"),
        6: _F("69672971/360", 0, "-991683/4", 0, "224545/4", 0, "-630551/360"),
    },
    (2, 13): {
        0: _F(1), 1: _F(),
        2: _F(17, 0, -17),
        3: _F(-156, 0, 156),
        4: _F("24749/12", 0, -2365, 0, "3631/12"),
        5: _F(-31629, 0, 38662, 0, -7033),
        6: _F("203413517/360", 0, "-8687953/12", 0, "1969367/12", 0, "-1855937/360"),
    },
    (3, 13): {
        0: _F(1), 1: _F(),
        2: _F(47, 0, -47),
        3: _F(-624, 0, 624),
        4: _F("151919/12", 0, -14605, 0, "23341/12"),
        5: _F(-294528, 0, 361088, 0, -66560),
        6: _F("2864712407/360", 0, "-122607733/12", 0, "28027787/12", 0, "-27314027/360"),
    },
    # printed under the label (16, 3); see ERRATA
    (3, 16): {
        0: _F(1), 1: _F(),
        2: _F(111, 0, -111),
        3: _F(-2128, 0, 2128),
        4: _F("253477/4", 0, -73197, 0, "39311/4"),
        5: _F(-2159616, 0, "7947776/3", 0, "-1468928/3"),
    },
}

# -- Alexander polynomials, as printed --------------------------------------------------

ALEXANDER_LATEX = {
    (2, 11): r"-1-\frac{1}{x^7}+\frac{1}{x^6}+\frac{2}{x^5}-\frac{2}{x^4}+\frac{1}{x^3}-\frac{1}{x^2}+\frac{1}{x}"
    r"+x-x^2+x^3-2 x^4+2 x^5+x^6-x^7",
    (2, 13): r"-t^8-\frac{1}{t^8}+t^7+\frac{1}{t^7}+2 t^6+\frac{2}{t^6}-2t^5-\frac{2}{t^5}+t^4+\frac{1}{t^4}"
    r"-t^3-\frac{1}{t^3}+t^2+\frac{1}{t^2}-t-\frac{1}{t}+1",
    (3, 13): r"-t^{15}-\frac{1}{t^{15}}+t^{14}+\frac{1}{t^{14}}+2 t^{12}+\frac{2}{t^{12}}-2 t^{11}-\frac{2}{t^{11}}"
    r"+t^9+\frac{1}{t^9}-t^8-\frac{1}{t^8}+t^6+\frac{1}{t^6}-t^5-\frac{1}{t^5}+t^3+\frac{1}{t^3}-2 t^2"
    r"-\frac{2}{t^2}+t+\frac{1}{t}+1",
    # printed under the label (16, 3); see ERRATA
    (3, 16): r"t^{21}-\frac{1}{t^{21}}+t^{20}+\frac{1}{t^{20}}+2 t^{18}+\frac{2}{t^{18}}-2t^{17}-\frac{2}{t^{17}}"
    r"+t^{15}+\frac{1}{t^{15}}-t^{14}-\frac{1}{t^{14}}+t^{12}+\frac{1}{t^{12}}-t^{11}-\frac{1}{t^{11}}+t^9"
    r"+\frac{1}{t^9}-t^8-\frac{1}{t^8}+t^6+\frac{1}{t^6}-t^5-\frac{1}{t^5}+t^3+\frac{1}{t^3}-2 t^2"
    r"-\frac{2}{t^2}+t+\frac{1}{t}+1",
}


def alexander_printed(key: tuple[int, int]) -> LPoly:
    var = "x" if key == (2, 11) else "t"
    return parse_latex_laurent(ALEXANDER_LATEX[key], var)


# -- q -> 1 limits: printed coefficient of x^{m/2}, m > 0 ---------------------------------
# ``SE_PRINTED_SCALE`` is the printed value divided by the x = 0 expansion
# coefficient of (x^{1/2} - x^{-1/2}) / Delta; the prints are not uniform.

SE_PRINTED = {
    (2, 11): {13: 1, 17: 2, 21: 5, 25: 13, 29: 34, 33: 89, 35: -1, 37: 233, 39: -2, 41: 610, 43: -5},
    (2, 13): {15: 1, 19: 2, 23: 5, 27: 13, 31: 34, 35: 89, 39: 233, 41: -1, 43: 610, 45: -2},
    (3, 13): {29: 2, 35: 4, 41: 10, 47: 26, 53: 68, 55: -2, 59: 178, 61: -4, 65: 466, 67: -10, 71: 1220},
    (3, 16): {35: 2, 41: 4, 47: 10, 53: 26, 59: 68, 65: 178, 67: -2, 71: 466, 73: -4, 77: 1220, 79: -10,
              83: 3194},
}
SE_PRINTED_SCALE = {(2, 11): 1, (2, 13): 1, (3, 13): 2, (3, 16): 2}

# -- surgery q-series: (p, r) cable, slope, printed Delta_b, printed terms ----------------

ZHAT_PRINTED = [
    ((2, 11), "-1/2", Fraction(167, 2), {
        0: -1, 13: 1, 59: -2, 76: 2, 133: -1, 134: -3, 135: -1, 154: 1, 155: 3, 156: 1,
        223: -2, 224: -2, 225: -5, 226: -2, 227: -2, 248: 2, 249: 2}),
    ((2, 11), "-1/3", Fraction(251, 2), {
        0: -2, 13: 2, 89: -4, 106: 4, 201: -2, 202: -6, 203: -2, 222: 2, 223: 6, 224: 2,
        337: -4, 338: -4, 339: -10, 340: -4, 341: -4, 362: 4, 363: 4}),
    ((2, 11), "-1/4", Fraction(335, 2), {
        0: -2, 13: 2, 119: -4, 136: 4, 269: -2, 270: -6, 271: -2, 290: 2, 291: 6, 292: 2,
        451: -4, 452: -4, 453: -10, 454: -4, 455: -4, 476: 4, 477: 4}),
    ((3, 13), "-1", Fraction(419, 2), {
        0: -2, 29: 2, 95: -4, 130: 4, 207: -2, 208: -6, 209: -2, 248: 2, 249: 6, 250: 2,
        337: -4, 338: -4, 339: -10, 340: -4, 341: -4, 384: 4, 385: 4}),
    ((3, 13), "-1/2", Fraction(839, 2), {
        0: -2, 29: 2, 191: -4, 226: 4, 417: -2, 418: -6, 419: -2, 458: 2, 459: 6, 460: 2,
        679: -4, 680: -4, 681: -10, 682: -4, 683: -4, 726: 4, 727: 4}),
    ((3, 13), "-1/3", Fraction(1259, 2), {
        0: -2, 29: 2, 287: -4, 322: 4, 627: -2, 628: -6, 629: -2, 668: 2, 669: 6, 670: 2,
        1021: -4, 1022: -4, 1023: -10, 1024: -4, 1025: -4, 1068: 4}),
]

# -- misprints -----------------------------------------------------------------------------

ERRATA = {
    "cable3-row-60w+29": {
        "printed": ("18w+9", "n+12w+8"),
        "corrected": ("18w+9", "n+18w+8"),
        "evidence": "depth-0 chain exponent n+2j at j=9w+4; the printed exponent breaks the hbar^1 MMR window",
    },
    "jones-hbar-(3,16)": {
        "printed_label": (3, 16),
        "matches": (3, 19),
        "evidence": "every printed coefficient through hbar^5 equals the (19,3)-cable expansion",
    },
    "alexander-(3,16)": {
        "printed_label": (3, 16),
        "matches": (3, 19),
        "evidence": "degree 21 is that of the (19,3)-cable; the printed t^21 and t^-21 signs break the symmetry",
    },
}


def corrected_rows(p: int) -> list:
    """The symbolic rows with the listed misprints replaced."""
    rows = CABLE2_ROWS if p == 2 else CABLE3_ROWS
    if p == 2:
        return list(rows)
    fix = ERRATA["cable3-row-60w+29"]
    out = []
    for sign, m, terms in rows:
        if m == "60w+29":
            terms = [fix["corrected"] if t == fix["printed"] else t for t in terms]
        out.append((sign, m, terms))
    return out
