"""Laurent polynomials with integer coefficients on a fractional exponent grid.

An :class:`LPoly` stores exponents scaled by a grid denominator ``den`` in
{1, 2, 4}: the term ``c * q**(e / den)`` is kept as ``terms[e] = c``. The
grid is always reduced to the smallest admissible denominator, so two equal
polynomials have identical ``(den, terms)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from .kernels import divexact_dense, mul_dense

GRIDS = (1, 2, 4)

Exponent = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class GridError(ValueError):
    """An exponent does not fit on the q^(1/4) grid."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _scaled(exp: Exponent) -> tuple[int, int]:
    """Return ``(scaled, den)`` for an exponent on the quarter grid."""
    f = Fraction(exp)
    if 4 % f.denominator:
        raise GridError(f"exponent {f} is not a multiple of 1/4")
    return f.numerator, f.denominator


def _normalize(terms: dict[int, int], den: int) -> tuple[dict[int, int], int]:
    terms = {e: c for e, c in terms.items() if c}
    while den > 1 and all(e % 2 == 0 for e in terms):
        terms = {e // 2: c for e, c in terms.items()}
        den //= 2
    return terms, den


class LPoly:
    """Immutable Laurent polynomial in ``q`` with exponents in (1/den)Z."""

    __slots__ = ("den", "terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, den: int = 1):
        if den not in GRIDS:
            raise GridError(f"grid denominator must be one of {GRIDS}, got {den}")
        t, d = _normalize(dict(terms or {}), den)
        object.__setattr__(self, "terms", t)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LPoly is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int], den: int) -> "LPoly":
        # terms are assumed zero-free; only the grid is renormalized
        obj = object.__new__(cls)
        if den > 1 and all(e % 2 == 0 for e in terms):
            terms, den = _normalize(terms, den)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls) -> "LPoly":
        return cls._raw({}, 1)

    @classmethod
    def one(cls) -> "LPoly":
        return cls._raw({0: 1}, 1)

    @classmethod
    def constant(cls, c: int) -> "LPoly":
        return cls._raw({0: int(c)} if c else {}, 1)

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1) -> "LPoly":
        """``coeff * q**exp``; ``exp`` may be an int or a quarter-grid Fraction."""
        e, d = _scaled(exp)
        if not coeff:
            return cls.zero()
        return cls._raw({e: int(coeff)}, d)

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[Exponent, int]]) -> "LPoly":
        """Build from ``(exponent, coefficient)`` pairs; repeated exponents add."""
        acc: dict[int, int] = {}
        for exp, c in pairs:
            e, d = _scaled(exp)
            e *= 4 // d
            acc[e] = acc.get(e, 0) + int(c)
        return cls(acc, 4)

    @classmethod
    def from_dense(cls, lo: int, coeffs: list[int], den: int = 1) -> "LPoly":
        return cls({lo + i: c for i, c in enumerate(coeffs) if c}, den)

    # -- inspection ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Fraction, int]]:
        """``(exponent, coefficient)`` pairs sorted by exponent."""
        return [(Fraction(e, self.den), c) for e, c in sorted(self.terms.items())]

    def coeff(self, exp: Exponent) -> int:
        e, d = _scaled(exp)
        if self.den % d:
            return 0
        return self.terms.get(e * (self.den // d), 0)

    def min_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(min(self.terms), self.den)

    def max_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(max(self.terms), self.den)

    def at_one(self) -> int:
        """Value at q = 1."""
        return sum(self.terms.values())

    def sign(self) -> int:
        """+1 or -1 if every coefficient shares that sign, 0 for mixed or zero."""
        vals = self.terms.values()
        if not vals:
            return 0
        if all(c > 0 for c in vals):
            return 1
        if all(c < 0 for c in vals):
            return -1
        return 0

    def is_palindromic(self) -> bool:
        return self == self.invert_q()

    def is_integral(self) -> bool:
        """True when every exponent is an integer."""
        return self.den == 1

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- grid helpers ---------------------------------------------------

    def on_grid(self, den: int) -> dict[int, int]:
        """Terms rescaled to grid ``den`` (which must be a multiple of self.den)."""
        if den == self.den:
            return self.terms
        k = den // self.den
        return {e * k: c for e, c in self.terms.items()}

    def dense(self, den: int | None = None) -> tuple[int, list[int]]:
        """``(lowest scaled exponent, dense coefficient list)`` on grid ``den``."""
        den = den or self.den
        t = self.on_grid(den)
        if not t:
            return 0, []
        lo, hi = min(t), max(t)
        out = [0] * (hi - lo + 1)
        for e, c in t.items():
            out[e - lo] = c
        return lo, out

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LPoly":
        if isinstance(other, LPoly):
            return other
        if isinstance(other, int):
            return LPoly.constant(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LPoly.constant(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.den, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self) -> "LPoly":
        return LPoly._raw({e: -c for e, c in self.terms.items()}, self.den)

    def __add__(self, other) -> "LPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = _lcm(self.den, other.den)
        acc = dict(self.on_grid(den))
        for e, c in other.on_grid(den).items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LPoly._raw(acc, den)

    __radd__ = __add__

    def __sub__(self, other) -> "LPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def __mul__(self, other) -> "LPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return LPoly.zero()
        den = _lcm(self.den, other.den)
        a = self.on_grid(den)
        b = other.on_grid(den)
        if len(a) == 1 or len(b) == 1:
            if len(a) != 1:
                a, b = b, a
            ((ea, ca),) = a.items()
            return LPoly._raw({ea + e: ca * c for e, c in b.items()}, den)
        alo, ahi = min(a), max(a)
        blo, bhi = min(b), max(b)
        span = (ahi - alo + 1) + (bhi - blo + 1)
        if span <= 4 * (len(a) + len(b)):
            _, da = _dense_of(a)
            _, db = _dense_of(b)
            prod = mul_dense(da, db)
            lo = alo + blo
            return LPoly._raw({lo + i: c for i, c in enumerate(prod) if c}, den)
        acc: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                acc[k] = acc.get(k, 0) + ca * cb
        return LPoly._raw({e: c for e, c in acc.items() if c}, den)

    __rmul__ = __mul__

    def scale(self, c: int) -> "LPoly":
        if not c:
            return LPoly.zero()
        return LPoly._raw({e: c * v for e, v in self.terms.items()}, self.den)

    def shift(self, exp: Exponent) -> "LPoly":
        """Multiply by ``q**exp``."""
        e, d = _scaled(exp)
        den = _lcm(self.den, d)
        e *= den // d
        return LPoly._raw({k + e: c for k, c in self.on_grid(den).items()}, den)

    def __pow__(self, n: int) -> "LPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial inverse needs a unit coefficient")
            return LPoly._raw({-e * (-n): c ** (-n)}, self.den)
        out = LPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divexact(self, other: "LPoly") -> "LPoly":
        """Exact quotient; raises :class:`NotDivisible` if a remainder is left."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LPoly.zero()
        den = _lcm(self.den, other.den)
        alo, da = _dense_of(self.on_grid(den))
        blo, db = _dense_of(other.on_grid(den))
        try:
            quot = divexact_dense(da, db)
        except ArithmeticError:
            raise NotDivisible(f"{self!s} is not divisible by {other!s}") from None
        lo = alo - blo
        return LPoly._raw({lo + i: c for i, c in enumerate(quot) if c}, den)

    def invert_q(self) -> "LPoly":
        """The substitution q -> 1/q."""
        return LPoly._raw({-e: c for e, c in self.terms.items()}, self.den)

    def subs_power(self, k: int) -> "LPoly":
        """The substitution q -> q**k for a nonzero integer k."""
        if k == 0:
            return LPoly.constant(self.at_one())
        return LPoly({e * k: c for e, c in self.terms.items()}, self.den)

    # -- serialization --------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "grid_denominator": self.den,
            "terms": [[e, str(c)] for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LPoly":
        den = int(obj["grid_denominator"])
        terms = {int(e): int(c) for e, c in obj["terms"]}
        return cls(terms, den)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "LPoly":
        return cls.from_json_obj(json.loads(text))

    # -- printing -------------------------------------------------------

    def __repr__(self) -> str:
        return f"LPoly({self!s})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "q") -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.items():
            if exp == 0:
                mono = ""
            elif exp == 1:
                mono = var
            elif exp.denominator == 1:
                mono = f"{var}^{exp.numerator}"
            else:
                mono = f"{var}^({exp})"
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _dense_of(terms: Mapping[int, int]) -> tuple[int, list[int]]:
    lo, hi = min(terms), max(terms)
    out = [0] * (hi - lo + 1)
    for e, c in terms.items():
        out[e - lo] = c
    return lo, out


q = LPoly.monomial(1)


def lp_arith(a: LPoly, b: LPoly | int, kind: str) -> LPoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (b an int) on two values."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        if not isinstance(b, int):
            raise TypeError("scale takes an integer factor")
        return a.scale(b)
    raise ValueError(f"unknown operation {kind!r}")


def lp_div_exact(a: LPoly, b: LPoly) -> LPoly:
    return a.divexact(b)


def lp_invert_q(a: LPoly) -> LPoly:
    return a.invert_q()
