"""Quantum A-polynomial of (r,2)-cables of 4_1 and the induced f_m recursion.

Operators live in the q-Weyl algebra generated by ``M`` and ``L`` over
``Z[t, 1/t]`` with ``L M = t**2 M L``; on sequences ``M g(n) = t**(2n) g(n)``
and ``L g(n) = g(n + 1)``, and ``q = t**4``, ``x = M**2``.

Two entries of the published operator tables are corrected here, each
confirmed by an independent exact identity (see ``companion_residual`` and
``cable_jones_residual``):

* the inner factor of ``P1`` carries a single ``-t**12 M**4`` term;
* ``Q2 = P1(t, t^2 M^2) P2(t, t^4 M^2) P2(t, t^6 M^2)``, the coefficient of
  the top shift after eliminating even companion colors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

from .exactalg.lpoly import LPoly, NotDivisible
from .fk_core import FkSeries


class BadParameter(ValueError):
    pass


class GridViolation(ArithmeticError):
    """Quarter powers of q survived where only half-integer powers may appear."""


class NonSolvableLeading(ArithmeticError):
    pass


def _t(e: int, c: int = 1) -> LPoly:
    """``c * t**e`` as a univariate polynomial in t."""
    return LPoly.monomial(e, c)


class TMPoly:
    """Laurent polynomial in commuting ``t`` and ``M``: ``{M exponent: poly in t}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, LPoly] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def mono(cls, t_exp: int, m_exp: int, coeff: int = 1) -> "TMPoly":
        return cls({m_exp: _t(t_exp, coeff)})

    @classmethod
    def const(cls, c: int) -> "TMPoly":
        return cls({0: LPoly.constant(c)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int, int]]) -> "TMPoly":
        """From ``(coeff, t exponent, M exponent)`` triples."""
        out = cls()
        for c, te, me in pairs:
            out = out + cls.mono(te, me, c)
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TMPoly) and self.terms == other.terms

    def __add__(self, other: "TMPoly") -> "TMPoly":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc[e] + c if e in acc else c
        return TMPoly(acc)

    def __neg__(self) -> "TMPoly":
        return TMPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TMPoly") -> "TMPoly":
        return self + (-other)

    def __mul__(self, other) -> "TMPoly":
        if isinstance(other, int):
            return TMPoly({e: c.scale(other) for e, c in self.terms.items()})
        acc: dict[int, LPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                p = c1 * c2
                acc[k] = acc[k] + p if k in acc else p
        return TMPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TMPoly":
        out = TMPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def subs(self, t_shift: int, m_power: int = 1) -> "TMPoly":
        """Substitute ``M -> t**t_shift * M**m_power``."""
        return TMPoly({e * m_power: c.shift(t_shift * e) for e, c in self.terms.items()})

    def evaluate(self, n: int) -> LPoly:
        """Value at ``M = t**(2n)``, as a polynomial in t."""
        acc = LPoly.zero()
        for e, c in self.terms.items():
            acc = acc + c.shift(2 * n * e)
        return acc

    def m_range(self) -> tuple[int, int]:
        return min(self.terms), max(self.terms)

    def __repr__(self) -> str:
        parts = [f"({c.format('t')})*M^{e}" for e, c in sorted(self.terms.items())]
        return "TMPoly(" + " + ".join(parts) + ")"


class NCOperator:
    """``sum_k coeffs[k](t, M) L**k`` in normal form (L to the right)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, TMPoly] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        if any(k < 0 for k in self.terms):
            raise ValueError("negative powers of L are not supported")

    @classmethod
    def L(cls, k: int = 1) -> "NCOperator":
        return cls({k: TMPoly.const(1)})

    @classmethod
    def scalar(cls, c: TMPoly) -> "NCOperator":
        return cls({0: c})

    @property
    def order(self) -> int:
        return max(self.terms) if self.terms else -1

    def __eq__(self, other) -> bool:
        return isinstance(other, NCOperator) and self.terms == other.terms

    def __add__(self, other: "NCOperator") -> "NCOperator":
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return NCOperator(acc)

    def __neg__(self) -> "NCOperator":
        return NCOperator({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "NCOperator") -> "NCOperator":
        return self + (-other)

    def __mul__(self, other: "NCOperator") -> "NCOperator":
        return nc_mul(self, other)

    def apply(self, seq, n: int) -> LPoly:
        """Value at ``n`` of the operator applied to ``seq`` (a callable n -> t-poly)."""
        acc = LPoly.zero()
        for k, c in self.terms.items():
            acc = acc + c.evaluate(n) * seq(n + k)
        return acc


def nc_mul(A: NCOperator, B: NCOperator) -> NCOperator:
    """Normal-ordered product using ``L**i b(M) = b(t**(2i) M) L**i``."""
    acc: dict[int, TMPoly] = {}
    for i, a in A.terms.items():
        for j, b in B.terms.items():
            term = a * b.subs(2 * i)
            k = i + j
            acc[k] = acc[k] + term if k in acc else term
    return NCOperator(acc)


# -- operator tables -------------------------------------------------------

def P0(M: TMPoly) -> TMPoly:
    return TMPoly.mono(6, 0) * M**4 * (TMPoly.const(-1) + TMPoly.mono(12, 0) * M**4)


def P1(M: TMPoly) -> TMPoly:
    one = TMPoly.const(1)
    t = lambda e: TMPoly.mono(e, 0)  # noqa: E731
    inner = (
        one - t(4) * M**2 - t(4) * M**4 - t(12) * M**4 - t(12) * M**6 + t(16) * M**8
    )
    return -((t(4) * M**2 - one) * (one + t(4) * M**2) * inner)


def P2(M: TMPoly) -> TMPoly:
    return TMPoly.mono(10, 0) * M**4 * (TMPoly.const(-1) + TMPoly.mono(4, 0) * M**4)


def b_numerator(M: TMPoly) -> TMPoly:
    """Inhomogeneous term of the 4_1 recursion times ``t**2 - t**-2``."""
    one = TMPoly.const(1)
    t = lambda e: TMPoly.mono(e, 0)  # noqa: E731
    return M * (one + t(4) * M**2) * (t(4) * M**4 - one) * (t(14) * M**4 - t(2))


def _arg(shift: int) -> TMPoly:
    """The argument ``t**shift * M**2``."""
    return TMPoly.mono(shift, 2)


def companion_coefficients() -> dict[str, TMPoly]:
    """c_j, Q_j and B (numerator) as functions of the cable meridian M."""
    p0 = {s: P0(_arg(s)) for s in (2, 4, 6)}
    p1 = {s: P1(_arg(s)) for s in (2, 4, 6)}
    p2 = {s: P2(_arg(s)) for s in (2, 4, 6)}
    c0 = p0[4] * p1[6]
    c1 = -(p1[2] * p1[6])
    c2 = p1[2] * p2[4]
    Q0 = c0 * p0[2]
    Q1 = c0 * p2[2] + c1 * p1[4] + c2 * p0[6]
    Q2 = c2 * p2[6]
    B = c0 * b_numerator(_arg(2)) + c1 * b_numerator(_arg(4)) + c2 * b_numerator(_arg(6))
    return {"c0": c0, "c1": c1, "c2": c2, "Q0": Q0, "Q1": Q1, "Q2": Q2, "B": B}


@lru_cache(maxsize=None)
def build_ahat2(r: int) -> NCOperator:
    """Denominator-free annihilator of the (r,2)-cable, L-degree 4.

    ``(B(M) L - B(t^2 M)) Q (M^r L + t^{-2r} M^{-r})``, which is the published
    operator left-multiplied by ``B(t^2 M) B(M)`` and the constant
    ``t^2 - t^-2``.
    """
    if r % 2 == 0:
        raise BadParameter(f"r must be odd, got {r}")
    if abs(r) <= 8:
        raise BadParameter(f"the operator is stated for |r| > 8, got {r}")
    cc = companion_coefficients()
    B = cc["B"]
    left = NCOperator({1: B, 0: -B.subs(2)})
    Q = NCOperator({0: cc["Q0"], 1: cc["Q1"], 2: cc["Q2"]})
    right = NCOperator({1: TMPoly.mono(0, r), 0: TMPoly.mono(-2 * r, -r)})
    return left * Q * right


# -- f_m recursion ----------------------------------------------------------


def _qv_text(a2: Fraction, k: int) -> str:
    """``q^{(a2 + k v)/2}``."""
    vpart = "v" if k == 1 else f"{k}v"
    a2 = Fraction(a2)
    num = str(a2.numerator) if a2.denominator == 1 else f"{a2}"
    return f"q^{{({num}+{vpart})/2}}"


@dataclass
class MRecursion:
    """Linear relation ``sum_s T_s(v) f_{v+s} = 0`` for every odd v.

    ``templates[s]`` maps a power k of ``Y = q**(v/2)`` to a polynomial in q
    (quarter grid), so ``T_s(v) = sum_k templates[s][k] * q**(k v / 2)``.
    """

    r: int
    span: int
    templates: dict[int, dict[int, LPoly]]
    window: int = 0

    @property
    def offsets(self) -> list[int]:
        """Offsets with nonzero coefficient, strictly decreasing."""
        return sorted(self.templates, reverse=True)

    def coefficient(self, s: int, v: int) -> LPoly:
        acc = LPoly.zero()
        for k, c in self.templates.get(s, {}).items():
            acc = acc + c.shift(Fraction(k * v, 2))
        return acc

    def relation(self, v: int) -> dict[int, LPoly]:
        return {s: self.coefficient(s, v) for s in self.offsets}

    def leading(self, v: int) -> LPoly:
        return self.coefficient(self.span, v)

    def divisor_text(self) -> str:
        """Leading template written as ``q^{(a+v)/2}(1-q^{(b+v)/2})`` up to sign.

        Falls back to the raw template when it is not a monomial times a
        binomial in q and q^v.
        """
        lead = self.templates[self.span]
        mons = sorted((k, c) for k, c in lead.items())
        if len(mons) == 2 and all(len(c) == 1 for _, c in mons):
            (k1, c1), (k2, c2) = mons
            (a1, s1), = c1.items()
            (a2, s2), = c2.items()
            if abs(s1) == abs(s2) == 1 and k2 - k1 == 1:
                head = _qv_text(2 * a1, k1)
                tail = _qv_text(2 * (a2 - a1), 1)
                sign = "-" if s1 * s2 < 0 else "+"
                return f"{head}(1{sign}{tail})"
        return " + ".join(f"({c})*q^({k}v/2)" for k, c in mons)

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "span": self.span,
            "window": self.window,
            "divisor": self.divisor_text(),
            "templates": [
                {"offset": s, "terms": [{"ypow": k, "poly": c.to_json_obj()} for k, c in sorted(t.items())]}
                for s, t in sorted(self.templates.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "MRecursion":
        templates = {
            int(e["offset"]): {int(t["ypow"]): LPoly.from_json_obj(t["poly"]) for t in e["terms"]}
            for e in obj["templates"]
        }
        return cls(int(obj["r"]), int(obj["span"]), templates, int(obj.get("window", 0)))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _lift_grid(poly_t: LPoly) -> LPoly:
    """Reinterpret a polynomial in t as a polynomial in q = t**4."""
    if poly_t.den != 1:
        raise GridViolation("t-polynomial with fractional exponents")
    return LPoly(poly_t.terms, 4)


def _to_sympy(polys: list[TMPoly]):
    import sympy

    t, M = sympy.symbols("t M")
    t_lo = min(e for P in polys for c in P.terms.values() for e in c.terms)
    m_lo = min(P.m_range()[0] for P in polys)
    out = []
    for P in polys:
        d = {(e - t_lo, me - m_lo): c for me, lp in P.terms.items() for e, c in lp.terms.items()}
        out.append(sympy.Poly.from_dict(d, (t, M), domain=sympy.ZZ))
    return out, t_lo, m_lo


def _from_sympy(poly, t_lo: int = 0, m_lo: int = 0) -> TMPoly:
    acc: dict[int, dict[int, int]] = {}
    for (et, em), c in poly.terms():
        acc.setdefault(em + m_lo, {})[et + t_lo] = int(c)
    return TMPoly({me: LPoly(d) for me, d in acc.items()})


def remove_content(op: NCOperator) -> NCOperator:
    """Divide every coefficient by their common factor in Z[t, M].

    Left-dividing by a polynomial in (t, M) does not change the solution
    space, but shortens the induced f_m recursion. Monomial factors are
    handled separately by the grid normalization.
    """
    import sympy

    ks = sorted(op.terms)
    polys, _, _ = _to_sympy([op.terms[k] for k in ks])
    g = polys[0]
    for p in polys[1:]:
        g = sympy.gcd(g, p)
    if g.total_degree() == 0:
        return op
    out = {}
    for k, p in zip(ks, polys):
        quo, rem = sympy.div(p, g)
        if not rem.is_zero:
            raise ArithmeticError("content division left a remainder")
        out[k] = _from_sympy(quo)
    return NCOperator(out)


def m_recursion(op: NCOperator, r: int = 0, reduce: bool = True) -> MRecursion:
    """Coefficient-level recursion for ``F`` induced by ``op F = 0``.

    ``op`` annihilates the unnormalized colored Jones polynomial, so it acts
    on ``F`` itself (the factor ``x^{1/2} - x^{-1/2}`` is already inside F).
    With ``reduce`` the common (t, M) factor of the coefficients is removed
    first, which gives the shortest relation.

    With ``M = x**(1/2)`` and ``F(q**k x) = 1/2 sum_m f_m q**(k m / 2) x**(m/2)``
    the coefficient of ``M**N`` in ``sum_k a_k(t, M) F(q**k x)`` is
    ``sum_{k,e} a_{k,e}(t) t**(2k(N-e)) f_{N-e}``.
    """
    if reduce:
        op = remove_content(op)
    e_lo = min(c.m_range()[0] for c in op.terms.values())
    e_hi = max(c.m_range()[1] for c in op.terms.values())
    if len({e % 2 for c in op.terms.values() for e in c.terms}) != 1:
        raise GridViolation("x-exponents of mixed parity; the relation does not close on odd m")
    span = e_hi - e_lo
    # f_{v+s} pairs with M exponent e = e_hi - s, and t^{2k(v+s)} = t^{2ks} * Y^k
    templates: dict[int, dict[int, LPoly]] = {}
    for k, c in op.terms.items():
        for e, poly_t in c.terms.items():
            s = e_hi - e
            term = _lift_grid(poly_t.shift(2 * k * s))
            slot = templates.setdefault(s, {})
            slot[k] = slot[k] + term if k in slot else term
    templates = {s: {k: c for k, c in t.items() if c} for s, t in templates.items()}
    templates = {s: t for s, t in templates.items() if t}
    rec = MRecursion(r, span, templates, window=span - 1)
    _normalize_grid(rec)
    lead = rec.templates.get(span, {})
    if not lead or not any(abs(c.coeff(c.min_exp())) == 1 for c in lead.values()):
        raise NonSolvableLeading("leading template has no unit coefficient; exact solving is impossible")
    return rec


def _normalize_grid(rec: MRecursion) -> None:
    """Multiply through by a q^{1/4}-power so every coefficient sits on the half grid."""
    residues = set()
    for t in rec.templates.values():
        for k, c in t.items():
            for e in c.on_grid(4):
                residues.add(e % 2)
    if len(residues) > 1:
        raise GridViolation("q^(1/4) powers of both parities; operator transcription error")
    if residues == {1}:
        for s, t in rec.templates.items():
            rec.templates[s] = {k: c.shift(Fraction(1, 4)) for k, c in t.items()}


_REC_CACHE: dict[int, MRecursion] = {}


def recursion_for(r: int, cache_dir: str | None = None) -> MRecursion:
    """The content-free f_m recursion of the (r,2)-cable, memoized per r.

    With ``cache_dir`` the derived templates are also stored as JSON, since
    the content removal takes tens of seconds.
    """
    if r in _REC_CACHE:
        return _REC_CACHE[r]
    path = None
    if cache_dir:
        path = Path(cache_dir) / f"mrec_r{r}.json"
        if path.exists():
            rec = MRecursion.from_json_obj(json.loads(path.read_text()))
            _REC_CACHE[r] = rec
            return rec
    rec = m_recursion(build_ahat2(r), r)
    _REC_CACHE[r] = rec
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(rec.to_json())
    return rec


def leading_factorization(rec: MRecursion, v: int) -> tuple[int, Fraction, LPoly]:
    """Split the leading coefficient at ``v`` as ``sign * q**e * rest`` with rest(0) = 1."""
    lead = rec.leading(v)
    lo = lead.min_exp()
    rest = lead.shift(-lo)
    c0 = rest.coeff(0)
    if abs(c0) != 1:
        return 0, lo, rest
    return c0, lo, rest.scale(c0)


# -- solving and checking -------------------------------------------------------


def solve_forward(rec: MRecursion, initial: FkSeries, m_max: int, progress=None) -> FkSeries:
    """Extend ``initial`` (complete through the recursion window) up to ``m_max``.

    Each new coefficient is obtained by exact division by the leading
    coefficient; a :class:`NotDivisible` means the initial data or the
    operator is wrong.
    """
    window = rec.span - 1
    if initial.m_max < window:
        raise ValueError(f"initial data must cover f_1..f_{window}, got m_max={initial.m_max}")
    f = {m: initial[m] for m in range(1, initial.m_max + 1, 2)}
    offsets = [s for s in rec.offsets if s != rec.span]
    m = initial.m_max + 2
    while m <= m_max:
        v = m - rec.span
        acc = LPoly.zero()
        for s in offsets:
            fm = f[v + s] if v + s > 0 else -f[-(v + s)]
            if fm:
                acc = acc + rec.coefficient(s, v) * fm
        if acc:
            try:
                new = (-acc).divexact(rec.leading(v))
            except NotDivisible:
                raise NotDivisible(f"f_{m} is not a Laurent polynomial: recursion and initial data disagree") from None
            if not new.is_integral():
                raise GridViolation(f"f_{m} has fractional q-exponents")
        else:
            new = LPoly.zero()
        f[m] = new
        if progress:
            progress(m)
        m += 2
    return FkSeries(initial.knot, m_max, f, initial.norm)


@dataclass
class AnnihilationReport:
    residuals: dict[int, LPoly] = field(default_factory=dict)
    checked: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not r for r in self.residuals.values())

    @property
    def failures(self) -> list[int]:
        return [v for v, r in self.residuals.items() if r]

    @property
    def max_verified_v(self) -> int | None:
        good = [v for v in self.checked if not self.residuals[v]]
        return max(good) if good else None

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "failures": {str(v): self.residuals[v].to_json_obj() for v in self.failures},
            "max_verified_v": self.max_verified_v,
        }


def verify_annihilation(rec: MRecursion, F: FkSeries, v_min: int = 1, v_max: int | None = None) -> AnnihilationReport:
    """Residual of every relation instance whose indices lie in ``[-m_max, m_max]``.

    Negative indices are folded with ``f_{-m} = -f_m``; ``v_min`` below 1
    includes those folded instances. ``v_max`` optionally stops early.
    """
    report = AnnihilationReport()
    if F.is_zero():
        return report
    top = F.m_max - rec.span if v_max is None else min(v_max, F.m_max - rec.span)
    v = v_min if v_min % 2 else v_min + 1
    while v <= top:
        acc = LPoly.zero()
        for s in rec.offsets:
            fm = F[v + s]
            if fm:
                acc = acc + rec.coefficient(s, v) * fm
        report.residuals[v] = acc
        report.checked.append(v)
        v += 2
    return report


# -- independent identities ---------------------------------------------------------


def companion_residual(jones, n: int) -> LPoly:
    """``(t^2-t^-2)(P0 J(n) + P1 J(n+1) + P2 J(n+2)) - b_numerator`` at M = t^(2n).

    ``jones(n)`` is the unnormalized colored Jones polynomial of 4_1 as a
    polynomial in t; the result is zero exactly when the P-tables are right.
    """
    M = TMPoly.mono(0, 1)
    lhs = (
        P0(M).evaluate(n) * jones(n)
        + P1(M).evaluate(n) * jones(n + 1)
        + P2(M).evaluate(n) * jones(n + 2)
    )
    return lhs * (_t(2) - _t(-2)) - b_numerator(M).evaluate(n)


def cable_jones_residual(r: int, cable_jones, n: int) -> LPoly:
    """``build_ahat2(r)`` applied to the cable's unnormalized colored Jones at n."""
    return build_ahat2(r).apply(cable_jones, n)
