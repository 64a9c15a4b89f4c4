"""Closed-form coefficient functions of (2,2w+1)- and (3,3w+1)-cables of 4_1.

Every nonzero ``f_m`` of a cable is a signed sum of shifted figure-eight
coefficients ``h_k``. The terms organize into *chains*: arithmetic
progressions where the j-th element contributes ``+-2 h_{2j+1} q**(e0 + j*de)``
to ``f_{m0 + j*dm}``. Chains of depth ``d = 0, 1, 2, ...`` start further out
and stack onto the same ``f_m``.

With ``P = p*w + 1`` and ``n = w + 1`` (p = 2) or ``n = 3w + 2`` (p = 3),
``Delta = 4w + 4`` (p = 2) or ``9w + 6`` (p = 3):

=====  ====  ==================  ===============================  =========
p      sign  m0(d)               e0(d)                            de(d)
=====  ====  ==================  ===============================  =========
2      +     2w + 3 + 4Pd        n + P(2d^2 - d) + d*Delta        4d + 1
2      -     6w + 5 + 4Pd        3n + P(2d^2 + d) + d*Delta       4d + 3
3      +     6w + 5 + 6Pd        n + P(3d^2 - d) + d*Delta        6d + 2
3      -     12w + 7 + 6Pd       2n + P(3d^2 + d) + d*Delta       6d + 4
=====  ====  ==================  ===============================  =========
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg.lpoly import LPoly
from .fk_core import FkSeries, HTable, Knot, h_table


class UnsupportedW(ValueError):
    """The closed form is only claimed for w > 3."""


@dataclass(frozen=True)
class Chain:
    depth: int
    m_start: int
    m_step: int
    exp_start: int
    exp_step: int
    sign: int

    def index_of(self, m: int) -> int | None:
        """Position j of ``f_m`` in this chain, or None if m is not on it."""
        if m < self.m_start or (m - self.m_start) % self.m_step:
            return None
        return (m - self.m_start) // self.m_step

    def term(self, j: int) -> tuple[int, int]:
        """``(h index, q exponent)`` of the j-th element."""
        return 2 * j + 1, self.exp_start + j * self.exp_step


@dataclass(frozen=True)
class ChainFamily:
    sign: int
    p: int
    w: int

    @property
    def P(self) -> int:
        return self.p * self.w + 1

    @property
    def n(self) -> int:
        return self.w + 1 if self.p == 2 else 3 * self.w + 2

    @property
    def delta(self) -> int:
        return 4 * self.w + 4 if self.p == 2 else 9 * self.w + 6

    @property
    def m_step(self) -> int:
        return 2 * self.p

    def chain(self, d: int) -> Chain:
        w, P, n, D, p = self.w, self.P, self.n, self.delta, self.p
        if p == 2 and self.sign > 0:
            m0, e0, de = 2 * w + 3 + 4 * P * d, n + P * (2 * d * d - d) + d * D, 4 * d + 1
        elif p == 2:
            m0, e0, de = 6 * w + 5 + 4 * P * d, 3 * n + P * (2 * d * d + d) + d * D, 4 * d + 3
        elif self.sign > 0:
            m0, e0, de = 6 * w + 5 + 6 * P * d, n + P * (3 * d * d - d) + d * D, 6 * d + 2
        else:
            m0, e0, de = 12 * w + 7 + 6 * P * d, 2 * n + P * (3 * d * d + d) + d * D, 6 * d + 4
        return Chain(d, m0, self.m_step, e0, de, self.sign)

    def chains(self, m_max: int) -> list[Chain]:
        """All chains starting at or below ``m_max``."""
        out = []
        d = 0
        while True:
            c = self.chain(d)
            if c.m_start > m_max:
                return out
            out.append(c)
            d += 1

    def terms(self, m: int) -> list[tuple[int, int, int]]:
        """``(depth, h index, q exponent)`` for every chain element landing on f_m."""
        out = []
        for c in self.chains(m):
            j = c.index_of(m)
            if j is not None:
                k, e = c.term(j)
                out.append((c.depth, k, e))
        return out


def _check(p: int, w: int) -> None:
    if p not in (2, 3):
        raise ValueError(f"only p in (2, 3) is supported, got {p}")
    if w <= 3:
        raise UnsupportedW(f"the cable formulas need w > 3, got w={w}")


def chains(p: int, w: int, sign: int) -> ChainFamily:
    _check(p, w)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ChainFamily(sign, p, w)


def w_from_r(p: int, r: int) -> int:
    """Invert r = p*w + 1."""
    if (r - 1) % p:
        raise ValueError(f"r={r} is not of the form {p}*w + 1")
    return (r - 1) // p


def cable_terms(p: int, w: int, m: int) -> tuple[int, list[tuple[int, int]]]:
    """``(sign, [(h index, q exponent), ...])`` describing f_m; empty list means zero."""
    _check(p, w)
    plus = ChainFamily(1, p, w).terms(m)
    minus = ChainFamily(-1, p, w).terms(m)
    if plus and minus:
        raise AssertionError(f"positive and negative chains collide at m={m}")
    if plus:
        return 1, [(k, e) for _, k, e in plus]
    if minus:
        return -1, [(k, e) for _, k, e in minus]
    return 0, []


def gen_cable(p: int, w: int, m_max: int, table: HTable | None = None) -> FkSeries:
    """The closed-form series of the (pw+1, p)-cable through ``f_{m_max}``."""
    _check(p, w)
    if m_max < 1 or m_max % 2 == 0:
        raise ValueError("m_max must be odd and positive")
    fams = [ChainFamily(1, p, w), ChainFamily(-1, p, w)]
    contrib: dict[int, list[tuple[int, int, int]]] = {}
    kmax = 1
    for fam in fams:
        for c in fam.chains(m_max):
            for j in range((m_max - c.m_start) // c.m_step + 1):
                k, e = c.term(j)
                contrib.setdefault(c.m_start + j * c.m_step, []).append((fam.sign, k, e))
                kmax = max(kmax, k)
    table = table or h_table(kmax)
    coeffs = {}
    for m, terms in contrib.items():
        signs = {s for s, _, _ in terms}
        if len(signs) != 1:
            raise AssertionError(f"positive and negative chains collide at m={m}")
        f = LPoly.zero()
        for s, k, e in terms:
            f = f + table[k].shift(e).scale(2 * s)
        coeffs[m] = f
    return FkSeries(Knot.cable(p, p * w + 1), m_max, coeffs, norm=2)


def format_terms(p: int, w: int, m: int) -> str:
    """Paper-style rendering, e.g. ``f+_105(q) = 2(h_47 q^29 + h_25 q^101 + h_3 q^129)``."""
    sign, terms = cable_terms(p, w, m)
    if not terms:
        return f"f_{m}(q) = 0"
    body = " + ".join(f"h_{k} q^{e}" for k, e in terms)
    tag = "+" if sign > 0 else "-"
    lead = "2" if sign > 0 else "-2"
    return f"f{tag}_{m}(q) = {lead}({body})" if len(terms) > 1 else f"f{tag}_{m}(q) = {lead} h_{terms[0][0]} q^{terms[0][1]}"
