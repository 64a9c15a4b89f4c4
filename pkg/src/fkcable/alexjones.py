"""Alexander polynomials of cables, their symmetric expansions, colored Jones
polynomials of cables and the hbar (MMR) checks tying them to F_K.

Alexander polynomials are :class:`LPoly` objects read in the variable t
(integer grid), symmetrized and normalized to value 1 at t = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg.hbar import HbarSeries, hbar_moments, interpolate_npoly
from .exactalg.lpoly import LPoly
from .fk_core import FkSeries, q1_limit


class BadParameter(ValueError):
    pass


class NonUnitLeading(ArithmeticError):
    """The Alexander polynomial is not monic; the expansion leaves Z."""


def _t(e: int, c: int = 1) -> LPoly:
    return LPoly.monomial(e, c)


def alexander_figure_eight(p: int = 1) -> LPoly:
    """``Delta_{4_1}(t**p) = -t**p + 3 - t**-p``."""
    return _t(p, -1) + 3 + _t(-p, -1)


def alexander_torus(p: int, r: int) -> LPoly:
    """Symmetrized Alexander polynomial of the (p, r) torus knot."""
    p, r = abs(p), abs(r)
    if p < 1 or r < 1 or gcd(p, r) != 1:
        raise BadParameter(f"torus knot needs coprime nonzero parameters, got ({p}, {r})")
    num = (_t(p * r) - 1) * (_t(1) - 1)
    den = (_t(p) - 1) * (_t(r) - 1)
    return num.divexact(den).shift(Fraction(-(p - 1) * (r - 1), 2))


def alexander_cable(p: int, r: int) -> LPoly:
    """``Delta_{4_1}(t**p) * Delta_{T(p,r)}(t)`` for the (r, p)-cable of 4_1."""
    if p not in (2, 3):
        raise BadParameter(f"p must be 2 or 3, got {p}")
    if gcd(p, r) != 1 or abs(r) <= p:
        raise BadParameter(f"need gcd(p, r) = 1 and |r| > p, got ({p}, {r})")
    delta = alexander_figure_eight(p) * alexander_torus(p, r)
    if delta.at_one() != 1 or not delta.is_palindromic() or not delta.is_integral():
        raise AssertionError("cabling formula produced an invalid Alexander polynomial")
    return delta


@dataclass
class XSeries:
    """Antisymmetric series ``sum_m c_m (x**(m/2) - x**(-m/2))`` over odd m > 0."""

    m_max: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, m: int) -> int:
        if m < 0:
            return -self[-m]
        return self.coeffs.get(m, 0)

    def support(self) -> list[int]:
        return sorted(m for m, c in self.coeffs.items() if c)

    def to_json_obj(self) -> dict:
        return {"m_max": self.m_max, "coeffs": [{"m": m, "c": self.coeffs[m]} for m in self.support()]}

    def format_text(self) -> str:
        parts = []
        for m in self.support():
            c = self.coeffs[m]
            parts.append(f"{c:+d} x^({m}/2)")
        return " ".join(parts) + " + ... (antisymmetrized)"


def _series_div(num: list[int], den: list[int], n_terms: int) -> list[int]:
    """First ``n_terms`` power series coefficients of num/den, den[0] = +-1."""
    d0 = den[0]
    if abs(d0) != 1:
        raise NonUnitLeading(f"constant term {d0} of the denominator is not a unit")
    out = []
    for i in range(n_terms):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * d0)
    return out


def symmetric_expansion(delta: LPoly, m_max: int) -> XSeries:
    """Expansion of ``(x^(1/2) - x^(-1/2)) / Delta(x)`` at x = 0, antisymmetrized.

    The coefficient of ``x^(m/2)`` for m > 0 is returned; the expansion at
    infinity supplies the mirrored negative part. For the cables the
    q -> 1 limit of ``f_m / FkSeries.norm`` is this coefficient.
    """
    if not delta.is_integral() or not delta.is_palindromic():
        raise BadParameter("expected a symmetric Laurent polynomial with integer exponents")
    if delta.at_one() != 1:
        raise BadParameter("normalize Delta(1) = 1 first")
    d = int(-delta.min_exp())
    lo, dense = delta.dense()
    # (x^{1/2} - x^{-1/2}) / Delta = x^{d - 1/2} (x - 1) / D(x),  D(x) = x^d Delta(x)
    n_terms = max(0, (m_max - (2 * d - 1)) // 2 + 1)
    ser = _series_div([-1, 1], dense, n_terms)
    return XSeries(m_max, {2 * d - 1 + 2 * i: c for i, c in enumerate(ser) if c})


# -- colored Jones ---------------------------------------------------------------


@lru_cache(maxsize=None)
def jones_figure_eight(N: int) -> LPoly:
    """Normalized colored Jones of 4_1 in q (cyclotomic sum), ``J_1 = 1``."""
    N = abs(N)
    if N == 0:
        raise BadParameter("color must be nonzero")
    total = LPoly.zero()
    prod = LPoly.one()
    for k in range(N):
        if k:
            prod = prod * (1 - LPoly.monomial(N - k)) * (1 - LPoly.monomial(N + k))
        total = total + prod.shift(-k * N)
    return total


def quantum_integer(n: int) -> LPoly:
    """``[n] = (t^(2n) - t^(-2n)) / (t^2 - t^(-2))`` in t."""
    if n == 0:
        return LPoly.zero()
    return (_t(2 * n) - _t(-2 * n)).divexact(_t(2) - _t(-2))


def jones_figure_eight_unnormalized(m: int) -> LPoly:
    """``[m] J_{4_1,|m|}`` in t, odd under m -> -m."""
    if m == 0:
        return LPoly.zero()
    return quantum_integer(m) * jones_figure_eight(m).subs_power(4)


@lru_cache(maxsize=None)
def colored_jones_cable(p: int, r: int, n: int, normalized: bool = True) -> LPoly:
    """Colored Jones of the (r, p)-cable of 4_1 as a Laurent polynomial in t.

    ``t^{-rp(n^2-1)} sum_k t^{4rk(pk+1)} Jt_{4_1}(2pk + 1)`` with k running
    over ``-(n-1)/2 .. (n-1)/2`` in unit steps; normalized divides by [n].
    """
    if p not in (2, 3):
        raise BadParameter(f"p must be 2 or 3, got {p}")
    if gcd(p, r) != 1:
        raise BadParameter(f"gcd(p, r) must be 1, got ({p}, {r})")
    if n < 1:
        raise BadParameter(f"color must be positive, got {n}")
    total = LPoly.zero()
    for i in range(n):
        k = Fraction(-(n - 1), 2) + i
        e = 4 * r * k * (p * k + 1)
        total = total + jones_figure_eight_unnormalized(int(2 * p * k + 1)).shift(int(e))
    total = total.shift(-r * p * (n * n - 1))
    if normalized:
        total = total.divexact(quantum_integer(n))
    return total


def t_to_q(poly_t: LPoly) -> LPoly:
    """Reinterpret a polynomial in t as one in ``q = t**4``."""
    return LPoly.from_exponents((e / 4, c) for e, c in poly_t.items())


def hbar_jones(p: int, r: int, order: int) -> HbarSeries:
    """hbar expansion of the normalized colored Jones at ``q = e^hbar``.

    Each hbar coefficient is interpolated as a polynomial in n of degree at
    most its order from colors 1 .. order + 2; the extra samples enforce the
    degree bound (InconsistentSamples otherwise).
    """
    if order < 0:
        raise BadParameter("order must be non-negative")
    colors = range(1, order + 3)
    rows = {n: hbar_moments(t_to_q(colored_jones_cable(p, r, n)), order) for n in colors}
    coeffs = []
    for k in range(order + 1):
        coeffs.append(interpolate_npoly([(n, rows[n][k]) for n in colors], k))
    return HbarSeries(coeffs, order)


# -- MMR checks -------------------------------------------------------------------------


@dataclass
class MMRReport:
    limit_ok: bool
    limit_mismatches: list[int] = field(default_factory=list)
    windows: dict[int, tuple[int, int]] = field(default_factory=dict)
    window_nonzero: dict[int, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.limit_ok and not any(self.window_nonzero.values())

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "limit_ok": self.limit_ok,
            "limit_mismatches": self.limit_mismatches,
            "windows": {str(r): list(w) for r, w in self.windows.items()},
            "window_nonzero": {str(r): v for r, v in self.window_nonzero.items()},
        }


def _hbar_part(F: FkSeries, r: int) -> dict[int, Fraction]:
    """``{N: c}``: hbar^r coefficient of ``F_+ / (x^(1/2) - x^(-1/2))`` at x^N.

    ``F_+ = 1/2 sum_{m > 0} f_m x^(m/2)`` is the expansion of F at x = 0;
    dividing by ``x^(1/2) - x^(-1/2) = -x^(-1/2)(1 - x)`` gives
    ``-x^(1/2)/(1 - x) F_+``. Entries are complete for ``N <= (m_max + 1)/2``.
    """
    top = (F.m_max + 1) // 2
    g = {(m + 1) // 2: hbar_moments(F[m], r)[r] / 2 for m in F.support()}
    out = {}
    acc = Fraction(0)
    for N in range(0, top + 1):
        acc += g.get(N, Fraction(0))
        out[N] = -acc
    return out


def mmr_check(F: FkSeries, delta: LPoly, r_max: int = 1, window: tuple[int, int] | None = None) -> MMRReport:
    """q -> 1 limit against the symmetric expansion, then hbar^r finiteness.

    For every ``r <= r_max`` the hbar^r part ``C_r`` of ``F(x, e^hbar)/(x^(1/2) - x^(-1/2))``
    (expanded at x = 0) times ``Delta^(2r+1)`` must be a Laurent polynomial.
    The default window is the upper half of the range where the product is
    fully determined by the truncation.
    """
    se = symmetric_expansion(delta, F.m_max)
    lim = q1_limit(F)
    mism = []
    for m in range(1, F.m_max + 1, 2):
        if lim.get(m, 0) != se[m]:
            mism.append(m)
    report = MMRReport(limit_ok=not mism, limit_mismatches=mism)
    d = int(-delta.min_exp())
    for r in range(0, r_max + 1):
        C = _hbar_part(F, r)
        top = max(C) if C else 0
        power = LPoly.one()
        for _ in range(2 * r + 1):
            power = power * delta
        span = d * (2 * r + 1)
        reliable = top - span
        lo, hi = window if window else (max(span, reliable // 2), reliable)
        report.windows[r] = (lo, hi)
        bad = []
        for N in range(lo, hi + 1):
            acc = Fraction(0)
            for e, c in power.terms.items():
                acc += c * C.get(N - e, Fraction(0))
            if acc:
                bad.append(N)
        report.window_nonzero[r] = bad
    return report
