"""Two-variable series data model and the figure-eight coefficient table.

A knot complement series is stored through its coefficient functions::

    F_K(x, q) = 1/2 * sum_{m odd > 0} f_m(q) * (x**(m/2) - x**(-m/2))

For the figure-eight knot ``f_m = h_m`` are generated by a seven-term
recursion from seeds ``h_1 .. h_13``. Cable series use the same container
with the factor 2 convention in which the cable coefficients are printed
(``f_13 = 2 q**6`` for the (11, 2)-cable, for example).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .exactalg.lpoly import LPoly

# seeds h_1 .. h_13 as (lowest exponent, coefficients)
_H_SEEDS = {
    1: (0, [1]),
    3: (0, [2]),
    5: (-1, [1, 3, 1]),
    7: (-2, [2, 2, 5, 2, 2]),
    9: (-4, [1, 3, 4, 5, 8, 5, 4, 3, 1]),
    11: (-6, [2, 2, 6, 7, 10, 10, 15, 10, 10, 7, 6, 2, 2]),
    13: (-9, [1, 3, 4, 7, 11, 15, 18, 21, 23, 27, 23, 21, 18, 15, 11, 7, 4, 3, 1]),
}


class HTableError(ValueError):
    """An extended h_k failed a structural check (palindromic, positive)."""


def _mono(num2: int, coeff: int = 1) -> LPoly:
    """``coeff * q**(num2 / 2)``."""
    return LPoly.monomial(Fraction(num2, 2), coeff)


def _h_bracket(h: Mapping[int, LPoly], m: int) -> LPoly:
    """The bracketed sum in the recursion for ``h_{m+14}``; exponents doubled."""

    def poly(*terms: tuple[int, int]) -> LPoly:
        acc: dict[int, int] = {}
        for c, e2 in terms:
            acc[e2] = acc.get(e2, 0) + c
        return LPoly(acc, 2)

    # (sign, 2*exponent)
    return (
        h[m] * poly((1, m + 17), (-1, 2 * m + 18))
        + h[m + 2] * poly((1, m + 15), (-1, m + 17), (1, 2 * m + 18), (-1, 2 * m + 20))
        + h[m + 4]
        * poly(
            (-1, m + 11), (-1, m + 17), (-1, m + 19), (1, 3 * m + 21),
            (1, 2 * m + 16), (1, 2 * m + 18), (1, 2 * m + 24), (-1, 14),
        )
        + h[m + 6]
        * poly(
            (-1, m + 9), (1, m + 11), (-1, m + 15), (-1, m + 17), (1, 3 * m + 25),
            (1, 2 * m + 18), (1, 2 * m + 20), (-1, 2 * m + 24), (1, 2 * m + 26), (-1, 10),
        )
        + h[m + 8]
        * poly(
            (1, m + 11), (1, m + 13), (-1, m + 17), (1, m + 19), (-1, 3 * m + 31),
            (-1, 2 * m + 16), (1, 2 * m + 18), (-1, 2 * m + 22), (-1, 2 * m + 24), (1, 4),
        )
        + h[m + 10]
        * poly(
            (1, m + 9), (1, m + 11), (1, m + 17), (-1, 3 * m + 35),
            (-1, 2 * m + 18), (-1, 2 * m + 24), (-1, 2 * m + 26), (1, 0),
        )
        + h[m + 12] * poly((1, m + 11), (-1, m + 13), (1, 2 * m + 22), (-1, 2 * m + 24))
    )


class HTable:
    """Lazily extended table of the figure-eight coefficient functions h_k.

    ``table[k]`` returns ``h_k`` for odd ``k >= 1``, running the recursion as
    far as needed. Every division by ``q**((m + 13)/2) - 1`` must be exact;
    a :class:`~fkcable.exactalg.lpoly.NotDivisible` here means the recursion
    data is corrupt.
    """

    def __init__(self, kmax: int = 13, check: bool = True):
        self._h: dict[int, LPoly] = {k: LPoly.from_dense(lo, cs) for k, (lo, cs) in _H_SEEDS.items()}
        self.check = check
        self.extend(kmax)

    @property
    def kmax(self) -> int:
        return max(self._h)

    def extend(self, kmax: int) -> None:
        while self.kmax < kmax:
            m = self.kmax - 12
            num = -(_mono(-m - 11) * _h_bracket(self._h, m))
            hk = num.divexact(_mono(m + 13) - 1)
            if self.check:
                if not hk.is_integral() or hk.sign() != 1:
                    raise HTableError(f"h_{m + 14} is not a positive integral Laurent polynomial")
                if not hk.is_palindromic():
                    raise HTableError(f"h_{m + 14} is not palindromic")
            self._h[m + 14] = hk

    def __getitem__(self, k: int) -> LPoly:
        if k < 1 or k % 2 == 0:
            raise KeyError(f"h_k is defined for odd k >= 1, got {k}")
        self.extend(k)
        return self._h[k]

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._h))

    def items(self, kmax: int | None = None) -> list[tuple[int, LPoly]]:
        kmax = self.kmax if kmax is None else kmax
        self.extend(kmax)
        return [(k, self._h[k]) for k in range(1, kmax + 1, 2)]


_SHARED: HTable | None = None


def shared_table() -> HTable:
    """Process-wide memoized table."""
    global _SHARED
    if _SHARED is None:
        _SHARED = HTable()
    return _SHARED


def h_table(kmax: int) -> HTable:
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    table = shared_table()
    table.extend(kmax)
    return table


# -- knot descriptors ----------------------------------------------------


@dataclass(frozen=True)
class Knot:
    """Figure-eight (``p == 1``) or its (pw+1, p)-cable, possibly mirrored."""

    p: int = 1
    r: int = 0
    mirrored: bool = False

    @classmethod
    def figure_eight(cls) -> "Knot":
        return cls()

    @classmethod
    def cable(cls, p: int, r: int) -> "Knot":
        return cls(p, r)

    @property
    def is_cable(self) -> bool:
        return self.p > 1

    def mirror(self) -> "Knot":
        return Knot(self.p, self.r, not self.mirrored)

    def __str__(self) -> str:
        base = "4_1" if not self.is_cable else f"C({self.r},{self.p})(4_1)"
        return f"m({base})" if self.mirrored else base

    def to_json_obj(self) -> dict:
        if not self.is_cable:
            return {"type": "figure-eight", "mirror": self.mirrored}
        return {"type": "cable", "p": self.p, "r": self.r, "mirror": self.mirrored}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Knot":
        mirrored = bool(obj.get("mirror", False))
        if obj["type"] == "figure-eight":
            return cls(1, 0, mirrored)
        return cls(int(obj["p"]), int(obj["r"]), mirrored)


@dataclass(frozen=True)
class FkSeries:
    """Truncated series ``{m: f_m(q)}`` for odd ``1 <= m <= m_max``.

    Missing keys are zero coefficient functions. ``norm`` is the integer
    by which the stored ``f_m`` exceed the normalization whose q -> 1 limit
    is the Alexander expansion (1 for the figure-eight, 2 for cables).
    """

    knot: Knot
    m_max: int
    coeffs: Mapping[int, LPoly] = field(default_factory=dict)
    norm: int = 1

    def __post_init__(self):
        if self.m_max < 1 or self.m_max % 2 == 0:
            raise ValueError(f"m_max must be odd and positive, got {self.m_max}")
        clean = {}
        for m, f in self.coeffs.items():
            if m % 2 == 0 or not 1 <= m <= self.m_max:
                raise ValueError(f"coefficient index {m} outside odd range [1, {self.m_max}]")
            if f:
                clean[m] = f
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, m: int) -> LPoly:
        if m < 0:
            return -self[-m]
        if m > self.m_max:
            raise KeyError(f"f_{m} lies beyond the truncation m_max={self.m_max}")
        return self.coeffs.get(m, LPoly.zero())

    def support(self) -> list[int]:
        return list(self.coeffs)

    def truncate(self, m_max: int) -> "FkSeries":
        return FkSeries(self.knot, m_max, {m: f for m, f in self.coeffs.items() if m <= m_max}, self.norm)

    def with_coeff(self, m: int, f: LPoly) -> "FkSeries":
        cs = dict(self.coeffs)
        cs[m] = f
        return FkSeries(self.knot, max(self.m_max, m), cs, self.norm)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "knot": self.knot.to_json_obj(),
            "m_max": self.m_max,
            "norm": self.norm,
            "fm": [{"m": m, "poly": f.to_json_obj()} for m, f in self.coeffs.items()],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "FkSeries":
        coeffs = {int(e["m"]): LPoly.from_json_obj(e["poly"]) for e in obj["fm"]}
        return cls(Knot.from_json_obj(obj["knot"]), int(obj["m_max"]), coeffs, int(obj.get("norm", 1)))

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "FkSeries":
        return cls.from_json_obj(json.loads(text))

    def format_text(self) -> str:
        lines = [f"# F_K for {self.knot}, m <= {self.m_max}"]
        for m, f in self.coeffs.items():
            tag = {1: "+", -1: "-"}.get(f.sign(), "")
            lines.append(f"f{tag}_{m}(q) = {f}")
        return "\n".join(lines)


def figure_eight(m_max: int) -> FkSeries:
    """F for the figure-eight knot, ``f_m = h_m``."""
    table = h_table(m_max)
    return FkSeries(Knot.figure_eight(), m_max, {k: h for k, h in table.items(m_max)})


def mirror(F: FkSeries) -> FkSeries:
    """Series of the mirror knot: q -> 1/q on every coefficient function."""
    return FkSeries(F.knot.mirror(), F.m_max, {m: f.invert_q() for m, f in F.coeffs.items()}, F.norm)


def q1_limit(F: FkSeries) -> dict[int, int]:
    """``{m: f_m(1) / norm}`` for every stored ``m``.

    With the norm divided out this is the x^(m/2) coefficient of the
    expansion of ``(x^(1/2) - x^(-1/2)) / Delta(x)`` at x = 0.
    """
    out = {}
    for m, f in F.coeffs.items():
        v, rem = divmod(f.at_one(), F.norm)
        if rem:
            raise ArithmeticError(f"f_{m}(1) is not divisible by the norm {F.norm}")
        out[m] = v
    return out


def format_h_table(table: HTable, kmax: int) -> str:
    return "\n".join(f"h_{k}(q) = {h}" for k, h in table.items(kmax))
