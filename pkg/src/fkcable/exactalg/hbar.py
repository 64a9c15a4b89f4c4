"""Truncated power series in hbar with coefficients polynomial in a color n.

Rationals are :class:`fractions.Fraction` throughout; nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .lpoly import LPoly


class InconsistentSamples(ValueError):
    """Samples do not come from a polynomial of the claimed degree."""


def ratcoeff(num: int, den: int = 1) -> Fraction:
    """Reduced rational with positive denominator."""
    return Fraction(num, den)


class NPoly:
    """Polynomial in the color ``n`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``n**k``; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NPoly([other])
        if not isinstance(other, NPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "NPoly") -> "NPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return NPoly(x + y for x, y in zip(a, b))

    def __mul__(self, other: "NPoly") -> "NPoly":
        if not self.coeffs or not other.coeffs:
            return NPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return NPoly(out)

    def __repr__(self) -> str:
        return f"NPoly({self!s})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json_obj(cls, obj: Sequence[str]) -> "NPoly":
        return cls(Fraction(c) for c in obj)


class HbarSeries:
    """``sum_k coeffs[k] * hbar**k`` truncated after ``hbar**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [c if isinstance(c, NPoly) else NPoly([c]) for c in coeffs]
        cs = cs[: order + 1]
        cs += [NPoly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def __getitem__(self, k: int) -> NPoly:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __mul__(self, other: "HbarSeries") -> "HbarSeries":
        order = min(self.order, other.order)
        out = [NPoly()] * (order + 1)
        for i in range(order + 1):
            for j in range(order + 1 - i):
                out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return HbarSeries(out, order)

    def __repr__(self) -> str:
        terms = [f"({c})*hbar^{k}" for k, c in enumerate(self.coeffs) if c.coeffs]
        return "HbarSeries(" + (" + ".join(terms) or "0") + f"; O(hbar^{self.order + 1}))"

    def to_json_obj(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json_obj() for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj) -> "HbarSeries":
        return cls([NPoly.from_json_obj(c) for c in obj["coeffs"]], obj["order"])


def hbar_expand_qpow(a, order: int) -> HbarSeries:
    """Series of ``q**a = exp(a*hbar)`` through ``hbar**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    a = Fraction(a)
    return HbarSeries([a**k / factorial(k) for k in range(order + 1)], order)


def hbar_moments(poly: LPoly, order: int) -> list[Fraction]:
    """hbar-coefficients of ``poly(q = exp(hbar))`` through ``hbar**order``.

    Uses power sums ``sum_e c_e * e**k`` so the cost is linear in the number
    of terms per order.
    """
    sums = [0] * (order + 1)
    for e, c in poly.terms.items():
        p = c
        for k in range(order + 1):
            sums[k] += p
            p *= e
    den = poly.den
    return [Fraction(s, factorial(k) * den**k) for k, s in enumerate(sums)]


def interpolate_npoly(samples: Sequence[tuple], degree_bound: int) -> NPoly:
    """Polynomial of degree <= ``degree_bound`` through ``(n, value)`` samples.

    Uses the first ``degree_bound + 1`` samples (Newton divided differences)
    and checks the rest against the result.
    """
    pts = [(Fraction(n), Fraction(v)) for n, v in samples]
    if len({n for n, _ in pts}) != len(pts):
        raise ValueError("sample points must be distinct")
    if len(pts) < degree_bound + 1:
        raise ValueError(f"need at least {degree_bound + 1} samples, got {len(pts)}")
    base = pts[: degree_bound + 1]
    xs = [n for n, _ in base]
    dd = [v for _, v in base]
    for level in range(1, len(base)):
        for i in range(len(base) - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = NPoly([dd[-1]])
    for i in range(len(base) - 2, -1, -1):
        poly = poly * NPoly([-xs[i], 1]) + NPoly([dd[i]])
    for n, v in pts[degree_bound + 1 :]:
        if poly(n) != v:
            raise InconsistentSamples(
                f"sample at n={n} gives {v}, degree-{degree_bound} fit predicts {poly(n)}"
            )
    return poly
