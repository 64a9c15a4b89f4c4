"""Laplace-transform surgery map: q-series of -p/r surgeries on a knot from F_K.

``L_{-p/r}^{(b)}: x^u q^v -> q^{u^2 r/p} q^v`` when ``r u - b`` lies in the
selected class, applied to ``(x^{1/(2r)} - x^{-1/(2r)}) F_K(x, q)``.

Every ``r u`` appearing here lies in ``Z + (r+1)/2``; Spin^c labels b are taken
relative to that coset, so ``b = 0`` keeps the terms with
``r u - (r+1)/2 in p Z`` (all terms when p = 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .fk_core import FkSeries


class TruncationInsufficient(ValueError):
    """The requested order exceeds what the truncated F_K determines."""


class BadSlope(ValueError):
    pass


@dataclass(frozen=True)
class SurgerySlope:
    """Slope ``-p/r`` with p, r > 0 and Spin^c label b (mod p)."""

    p: int
    r: int
    b: int = 0

    def __post_init__(self):
        if self.p < 1 or self.r < 1:
            raise BadSlope(f"only negative slopes -p/r with p, r > 0 are supported, got -{self.p}/{self.r}")
        if gcd(self.p, self.r) != 1:
            raise BadSlope(f"p and r must be coprime, got {self.p}, {self.r}")
        object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def parse(cls, text: str, b: int = 0) -> "SurgerySlope":
        """From ``"-1/2"``, ``"-1"`` and the like."""
        f = Fraction(text)
        if f >= 0:
            raise BadSlope(f"slope must be negative, got {text}")
        f = -f
        return cls(f.numerator, f.denominator, b)

    def __str__(self) -> str:
        return f"-{self.p}/{self.r}" if self.r != 1 else f"-{self.p}"


@dataclass
class QSeries:
    """``2^{-c} q^{delta} sum_k coeffs[k] q^k``, exact through ``q^{order}``."""

    delta: Fraction
    coeffs: dict[int, int]
    order: int
    c: int = 0
    sign_flipped: bool = False
    raw_min: Fraction | None = None

    def items(self) -> list[tuple[int, int]]:
        return sorted((k, v) for k, v in self.coeffs.items() if v and k <= self.order)

    def leading(self) -> int:
        items = self.items()
        return items[0][1] if items else 0

    def to_json_obj(self) -> dict:
        return {
            "delta": str(self.delta),
            "dyadic_c": self.c,
            "order": self.order,
            "sign_flipped": self.sign_flipped,
            "raw_min_exponent": None if self.raw_min is None else str(self.raw_min),
            "terms": [[k, v] for k, v in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def format_text(self) -> str:
        body = []
        for k, v in self.items():
            mono = "" if k == 0 else (" q" if k == 1 else f" q^{k}")
            body.append(f"{v:+d}{mono}")
        scale = f"2^-{self.c} " if self.c else ""
        return f"{scale}q^({self.delta}) ( " + " ".join(body) + f" + O(q^{self.order + 1}) )"


def min_exponent_bound(m: int) -> Fraction:
    """Lower bound for the lowest q-power of f_m used to certify truncations.

    The figure-eight coefficients satisfy ``min h_k = -floor(((k-1)/2)^2 / 4)``
    (checked in the test suite far beyond the seeds), and every cable f_m is
    a sum of ``h_k q^e`` with ``k <= m`` and ``e >= 0``.
    """
    return Fraction(-m * m, 16)


def _selected(slope: SurgerySlope, u: Fraction) -> bool:
    shifted = slope.r * u - Fraction(slope.r + 1, 2) - slope.b
    if shifted.denominator != 1:
        raise AssertionError("r*u is off the expected coset")
    return shifted.numerator % slope.p == 0


def _exponent(slope: SurgerySlope, u: Fraction) -> Fraction:
    return u * u * slope.r / slope.p


def guaranteed_top(F: FkSeries, slope: SurgerySlope) -> Fraction:
    """All monomials from f_m with m > m_max have q-exponent above this value."""
    m = F.m_max + 2
    u = Fraction(m, 2) - Fraction(1, 2 * slope.r)
    growth = Fraction(slope.r, 4 * slope.p) - Fraction(1, 16)
    if growth <= 0:
        raise TruncationInsufficient("the quadratic exponent growth does not dominate; no finite order is certified")
    # the bound is increasing in m once growth > 0 and m exceeds a few units
    return _exponent(slope, u) + min_exponent_bound(m)


def laplace_raw(F: FkSeries, slope: SurgerySlope) -> dict[Fraction, Fraction]:
    """``{exponent: coefficient}`` of the transform of every stored monomial."""
    if F.knot.mirrored:
        raise BadSlope("mirrored series have no certified tail bound for negative slopes")
    half = Fraction(1, 2 * slope.r)
    out: dict[Fraction, Fraction] = {}
    for m in F.support():
        fm = F[m]
        # (x^h - x^-h) * 1/2 f_m (x^{m/2} - x^{-m/2})
        for u, sgn in (
            (Fraction(m, 2) + half, 1),
            (-Fraction(m, 2) + half, -1),
            (Fraction(m, 2) - half, -1),
            (-Fraction(m, 2) - half, 1),
        ):
            if not _selected(slope, u):
                continue
            base = _exponent(slope, u)
            for e, c in fm.items():
                key = base + e
                out[key] = out.get(key, Fraction(0)) + Fraction(sgn * c, 2)
    return {e: c for e, c in out.items() if c}


def prefactor_shift(slope: SurgerySlope) -> Fraction:
    """The ``d`` in ``q^d``: ``-(r^2 + 1)/(4 r p)``.

    With this shift the transform of the unknot,
    ``(x^{1/(2r)} - x^{-1/(2r)})(x^{1/2} - x^{-1/2})``, becomes the symmetric
    ``q^{1/(2p)} - q^{-1/(2p)}`` (up to sign).
    """
    return -Fraction(slope.r * slope.r + 1, 4 * slope.r * slope.p)


def dyadic_primitive(coeffs: dict[int, Fraction | int]) -> tuple[dict[int, int], int]:
    """``(primitive integer coefficients, k)`` with ``coeffs = 2^k * primitive``."""
    vals = {key: Fraction(v) for key, v in coeffs.items() if v}
    k = 0
    while vals and any(v.denominator != 1 for v in vals.values()):
        vals = {key: v * 2 for key, v in vals.items()}
        k -= 1
    while vals and all(v.numerator % 2 == 0 for v in vals.values()):
        vals = {key: v / 2 for key, v in vals.items()}
        k += 1
    return {key: int(v) for key, v in vals.items()}, k


def laplace_zhat(F: FkSeries, slope: SurgerySlope, q_max: int | None = None) -> QSeries:
    """Normalized q-series of the ``slope`` surgery on the knot of F.

    Coefficients are divided by ``F.norm`` (so the q -> 1 limit of F is the
    symmetric expansion), ``c >= 0`` is the least power with ``2^c * coeffs``
    integral, ``delta`` is the lowest surviving exponent plus
    :func:`prefactor_shift`, and the overall sign is fixed so the leading
    coefficient is negative.
    """
    raw = laplace_raw(F, slope)
    if not raw:
        return QSeries(Fraction(0), {}, q_max or 0)
    raw_min = min(raw)
    top = guaranteed_top(F, slope)
    order = floor(top - raw_min) - 1
    if q_max is None:
        q_max = order
    elif q_max > order:
        raise TruncationInsufficient(
            f"q_max={q_max} exceeds the certified order {order} for m_max={F.m_max}; raise m_max"
        )
    terms: dict[int, Fraction] = {}
    for e, c in raw.items():
        k = e - raw_min
        if k.denominator != 1:
            raise AssertionError("exponents do not share a common fractional part")
        if k <= q_max:
            terms[int(k)] = c / F.norm
    c_exp = 0
    while any((v * 2**c_exp).denominator != 1 for v in terms.values()):
        c_exp += 1
    ints = {k: int(v * 2**c_exp) for k, v in terms.items() if v}
    flipped = False
    if ints and ints[min(ints)] > 0:
        ints = {k: -v for k, v in ints.items()}
        flipped = True
    return QSeries(raw_min + prefactor_shift(slope), ints, q_max, c_exp, flipped, raw_min)


def required_m_max(raw_min: Fraction, slope: SurgerySlope, q_max: int) -> int:
    """Smallest odd m_max whose certified order reaches ``q_max``.

    ``raw_min`` is the lowest exponent of the transform, which only depends
    on the first few coefficient functions.
    """
    m_max = 1
    while True:
        u = Fraction(m_max + 2, 2) - Fraction(1, 2 * slope.r)
        top = _exponent(slope, u) + min_exponent_bound(m_max + 2)
        if floor(top - raw_min) - 1 >= q_max:
            return m_max
        m_max += 2


def zhat_for_cable(p: int, w: int, slope: SurgerySlope, q_max: int) -> QSeries:
    """:func:`laplace_zhat` of the (pw+1, p)-cable with the truncation chosen automatically."""
    from .cabling import gen_cable

    probe = gen_cable(p, w, 8 * p * w + 31)
    raw = laplace_raw(probe, slope)
    if not raw:
        raise TruncationInsufficient("no term survives the selection rule in the probe window")
    if min(raw) >= guaranteed_top(probe, slope):
        raise TruncationInsufficient("the probe window does not certify the lowest exponent")
    m_max = max(required_m_max(min(raw), slope, q_max), probe.m_max)
    return laplace_zhat(gen_cable(p, w, m_max), slope, q_max)
