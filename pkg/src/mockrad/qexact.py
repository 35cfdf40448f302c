"""Exact truncated Laurent series in q^(1/D), plus the bivariate variant.

A :class:`FracSeries` stores coefficients of q^(e/D) for integer e below a
truncation bound ``trunc`` (also counted in 1/D units): the series is *known*
for all exponents e/D with e < trunc and unknown beyond.  Coefficients are
exact rationals, stored as plain ``int`` whenever the denominator is 1 so the
hot convolution loops run on machine/big integers.

:class:`BiSeries` is the same structure with coefficients that are Laurent
polynomials in w^(1/2) (:class:`WPoly`, exponents kept as doubled integers).

All values are immutable by convention: no public operation mutates its
inputs, and instances may be shared freely between threads once built.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Union

from .errors import (
    IrrationalPhase,
    NonPositiveOrder,
    NonStabilizing,
    NonvanishingRemainder,
    OutOfWindow,
    ZeroLeadingTerm,
)

Rat = Union[int, Fraction]


def _norm(v: Rat) -> Rat:
    """Collapse Fractions with denominator 1 to int (fast path for arithmetic)."""
    if type(v) is int:
        return v
    if v.denominator == 1:
        return int(v)
    return v


def rat_str(v: Rat) -> str:
    """Render an exact rational as "p/q" in lowest terms ("p/1" for integers)."""
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def rat_parse(s: str) -> Rat:
    num, _, den = s.partition("/")
    if not den:
        raise ValueError(f"expected 'p/q', got {s!r}")
    return _norm(Fraction(int(num), int(den)))


# ---------------------------------------------------------------------------
# FracSeries
# ---------------------------------------------------------------------------


class FracSeries:
    """Truncated series sum_e c_e q^(e/D), known for all e < trunc."""

    __slots__ = ("D", "trunc", "coeffs")

    def __init__(self, D: int, trunc: int, coeffs: dict | None = None):
        if D <= 0:
            raise ValueError("lattice denominator D must be positive")
        self.D = D
        self.trunc = trunc
        cc = {}
        if coeffs:
            for e, v in coeffs.items():
                if e >= trunc:
                    continue
                v = _norm(v)
                if v:
                    cc[e] = v
        self.coeffs = cc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, D: int, trunc: int) -> "FracSeries":
        return cls(D, trunc)

    @classmethod
    def monomial(cls, coeff: Rat, e: int, D: int, trunc: int) -> "FracSeries":
        return cls(D, trunc, {e: coeff})

    @classmethod
    def one(cls, D: int, trunc: int) -> "FracSeries":
        return cls(D, trunc, {0: 1})

    # -- helpers -----------------------------------------------------------

    def rescale(self, D2: int) -> "FracSeries":
        """Re-express on a finer lattice 1/D2 (D must divide D2)."""
        if D2 == self.D:
            return self
        if D2 % self.D:
            raise ValueError(f"cannot rescale lattice {self.D} -> {D2}")
        f = D2 // self.D
        return FracSeries(D2, self.trunc * f, {e * f: v for e, v in self.coeffs.items()})

    def lowest(self) -> int:
        """Lowest exponent carrying a nonzero coefficient, or trunc if none."""
        return min(self.coeffs) if self.coeffs else self.trunc

    def is_zero(self) -> bool:
        return not self.coeffs

    def restrict(self, trunc: int) -> "FracSeries":
        if trunc >= self.trunc:
            return self
        return FracSeries(self.D, trunc, {e: v for e, v in self.coeffs.items() if e < trunc})

    def shift(self, e0: int) -> "FracSeries":
        """Multiply by q^(e0/D)."""
        return FracSeries(self.D, self.trunc + e0, {e + e0: v for e, v in self.coeffs.items()})

    def scale(self, c: Rat) -> "FracSeries":
        if not c:
            return FracSeries(self.D, self.trunc)
        return FracSeries(self.D, self.trunc, {e: v * c for e, v in self.coeffs.items()})

    def __neg__(self) -> "FracSeries":
        return self.scale(-1)

    def __add__(self, other: "FracSeries") -> "FracSeries":
        return series_add(self, other)

    def __sub__(self, other: "FracSeries") -> "FracSeries":
        return series_add(self, other.scale(-1))

    def __mul__(self, other: "FracSeries") -> "FracSeries":
        return series_mul(self, other)

    def __eq__(self, other: object) -> bool:
        """Equality on the overlap of the truncation windows (D-normalized)."""
        if not isinstance(other, FracSeries):
            return NotImplemented
        return series_agree(self, other)

    __hash__ = None  # overlap equality is not hash-compatible

    def __repr__(self) -> str:
        terms = sorted(self.coeffs.items())[:8]
        body = " + ".join(f"({v})q^({e}/{self.D})" for e, v in terms)
        more = " + ..." if len(self.coeffs) > 8 else ""
        return f"<FracSeries {body or '0'}{more} | O(q^{self.trunc}/{self.D})>"

    def coefficient(self, exponent: Rat) -> Rat:
        return coefficient_at(self, exponent)


def _common(a: FracSeries, b: FracSeries) -> tuple[FracSeries, FracSeries]:
    D = a.D * b.D // gcd(a.D, b.D)
    return a.rescale(D), b.rescale(D)


def series_add(a: FracSeries, b: FracSeries) -> FracSeries:
    a, b = _common(a, b)
    t = min(a.trunc, b.trunc)
    cc = {e: v for e, v in a.coeffs.items() if e < t}
    for e, v in b.coeffs.items():
        if e < t:
            s = cc.get(e, 0) + v
            if s:
                cc[e] = s
            else:
                cc.pop(e, None)
    return FracSeries(a.D, t, cc)


def series_mul(a: FracSeries, b: FracSeries) -> FracSeries:
    a, b = _common(a, b)
    la, lb = a.lowest(), b.lowest()
    t = min(a.trunc + lb, b.trunc + la)
    cc: dict = {}
    bi = list(b.coeffs.items())
    for ea, va in a.coeffs.items():
        lim = t - ea
        for eb, vb in bi:
            if eb < lim:
                e = ea + eb
                s = cc.get(e, 0) + va * vb
                if s:
                    cc[e] = s
                else:
                    cc.pop(e, None)
    return FracSeries(a.D, t, cc)


def series_pow(a: FracSeries, n: int) -> FracSeries:
    if n < 0:
        return series_pow(series_invert(a), -n)
    if n == 0:
        return FracSeries.one(a.D, a.trunc - a.lowest())
    out = a
    for _ in range(n - 1):
        out = series_mul(out, a)
    return out


def series_invert(a: FracSeries) -> FracSeries:
    """Invert a series whose lowest stored coefficient is nonzero."""
    if a.is_zero():
        raise ZeroLeadingTerm("cannot invert a series that vanishes on its window")
    e0 = a.lowest()
    c0 = a.coeffs[e0]
    trel = a.trunc - e0
    rel = {e - e0: v for e, v in a.coeffs.items()}
    inv0 = _norm(Fraction(1, 1) / c0)
    out = {0: inv0}
    rel_items = sorted(rel.items())
    for n in range(1, trel):
        s = 0
        for e, v in rel_items:
            if e <= 0:
                continue
            if e > n:
                break
            u = out.get(n - e)
            if u is not None:
                s += v * u
        if s:
            out[n] = _norm(-s * inv0)
    return FracSeries(a.D, a.trunc - 2 * e0, {e - e0: v for e, v in out.items()})


def series_substitute_power(a: FracSeries, k: int) -> FracSeries:
    """Substitute q -> q^k (k >= 1), e.g. to build series in 2*tau."""
    if k <= 0:
        raise ValueError("substitution power must be positive")
    return FracSeries(a.D, a.trunc * k, {e * k: v for e, v in a.coeffs.items()})


def infinite_product(
    factors: Callable[[int], FracSeries], trunc: int, D: int
) -> FracSeries:
    """Product of factors(1), factors(2), ... truncated at q^(trunc/D).

    Each factor must have constant term 1 and its remaining terms must start
    at q-order >= c*n for some fixed c > 0 so that only finitely many factors
    intersect the window.
    """
    acc = FracSeries.one(D, trunc)
    target = Fraction(trunc, D)
    c_floor = None
    n = 0
    while True:
        n += 1
        if c_floor is not None and c_floor * n >= target:
            break
        f = factors(n)
        rest = series_add(f, FracSeries.monomial(-1, 0, f.D, f.trunc))
        if rest.is_zero():
            m_n = Fraction(rest.trunc, rest.D)
        else:
            m_n = Fraction(rest.lowest(), rest.D)
        if m_n <= 0:
            raise NonStabilizing(f"factor {n} has no positive minimal q-order")
        ratio = m_n / n
        c_floor = ratio if c_floor is None else min(c_floor, ratio)
        if m_n < target:
            acc = series_mul(acc, f)
            win = target * acc.D
            if win.denominator == 1 and acc.trunc > int(win):
                acc = acc.restrict(int(win))
    win = target * acc.D
    if win.denominator == 1 and acc.trunc > int(win):
        acc = acc.restrict(int(win))
    return acc


def coefficient_at(a: FracSeries, exponent: Rat) -> Rat:
    """Exact coefficient of q^exponent; 0 for absent on-lattice exponents."""
    e = Fraction(exponent) * a.D
    if e.denominator != 1:
        raise ValueError(f"exponent {exponent} is not on the 1/{a.D} lattice")
    e = int(e)
    if e >= a.trunc:
        raise OutOfWindow(f"exponent {exponent} is at or beyond the truncation window")
    return a.coeffs.get(e, 0)


def series_agree(a: FracSeries, b: FracSeries, min_order: Rat | None = None) -> bool:
    """True iff a and b agree coefficientwise on the overlap of their windows.

    If min_order is given, additionally require the overlap to reach at least
    q^min_order, so a comparison cannot pass vacuously through truncation.
    """
    a, b = _common(a, b)
    t = min(a.trunc, b.trunc)
    if min_order is not None and Fraction(t, a.D) < Fraction(min_order):
        return False
    for e, v in a.coeffs.items():
        if e < t and b.coeffs.get(e, 0) != v:
            return False
    for e, v in b.coeffs.items():
        if e < t and e not in a.coeffs:
            return False
    return True


def first_disagreement(a: FracSeries, b: FracSeries):
    """Smallest exponent where a and b differ on the overlap, or None."""
    a, b = _common(a, b)
    t = min(a.trunc, b.trunc)
    bad = [e for e in set(a.coeffs) | set(b.coeffs) if e < t and a.coeffs.get(e, 0) != b.coeffs.get(e, 0)]
    if not bad:
        return None
    e = min(bad)
    return Fraction(e, a.D), Fraction(a.coeffs.get(e, 0)), Fraction(b.coeffs.get(e, 0))


def series_half_shift(a: FracSeries) -> FracSeries:
    """Apply tau -> tau + 1/2, i.e. q^(e/D) -> e^(pi i e/D) q^(e/D).

    Only permitted when every phase is a rational sign, which requires D | e
    for all stored exponents; otherwise raises IrrationalPhase.
    """
    cc = {}
    for e, v in a.coeffs.items():
        if 2 * e % a.D:
            raise IrrationalPhase(f"exponent {e}/{a.D} gives phase exp(pi i {e}/{a.D})")
        if e % a.D:
            # phase would be +/- i: leaves the rational coefficient ring
            raise IrrationalPhase(f"exponent {e}/{a.D} gives an imaginary phase")
        cc[e] = v if (e // a.D) % 2 == 0 else -v
    return FracSeries(a.D, a.trunc, cc)


def series_to_json(a: FracSeries) -> dict:
    return {
        "D": a.D,
        "trunc": a.trunc,
        "terms": [[e, rat_str(v)] for e, v in sorted(a.coeffs.items())],
    }


def series_from_json(obj: dict) -> FracSeries:
    return FracSeries(int(obj["D"]), int(obj["trunc"]),
                      {int(e): rat_parse(s) for e, s in obj["terms"]})


# ---------------------------------------------------------------------------
# WPoly: finitely supported Laurent polynomial in w^(1/2)
# ---------------------------------------------------------------------------


class WPoly:
    """Exact Laurent polynomial in w^(1/2); key m means w^(m/2)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict | None = None):
        cc = {}
        if coeffs:
            for m, v in coeffs.items():
                v = _norm(v)
                if v:
                    cc[m] = v
        self.c = cc

    @classmethod
    def const(cls, v: Rat) -> "WPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, v: Rat, m: int) -> "WPoly":
        return cls({m: v})

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WPoly):
            return self.c == other.c
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "WPoly") -> "WPoly":
        cc = dict(self.c)
        for m, v in other.c.items():
            s = cc.get(m, 0) + v
            if s:
                cc[m] = s
            else:
                cc.pop(m, None)
        out = WPoly.__new__(WPoly)
        out.c = cc
        return out

    def __neg__(self) -> "WPoly":
        out = WPoly.__new__(WPoly)
        out.c = {m: -v for m, v in self.c.items()}
        return out

    def __sub__(self, other: "WPoly") -> "WPoly":
        return self + (-other)

    def __mul__(self, other: "WPoly") -> "WPoly":
        cc: dict = {}
        oi = list(other.c.items())
        for ma, va in self.c.items():
            for mb, vb in oi:
                m = ma + mb
                s = cc.get(m, 0) + va * vb
                if s:
                    cc[m] = s
                else:
                    cc.pop(m, None)
        out = WPoly.__new__(WPoly)
        out.c = cc
        return out

    def scale(self, v: Rat) -> "WPoly":
        if not v:
            return WPoly()
        return WPoly({m: u * v for m, u in self.c.items()})

    def shift(self, m0: int) -> "WPoly":
        """Multiply by w^(m0/2)."""
        out = WPoly.__new__(WPoly)
        out.c = {m + m0: v for m, v in self.c.items()}
        return out

    def degrees(self) -> tuple[int, int]:
        if not self.c:
            raise ValueError("zero polynomial has no degree span")
        return min(self.c), max(self.c)

    def eval_minus_one(self) -> Rat:
        """Evaluate at w^(1/2) = -1 (the Euler-number specialization)."""
        return _norm(sum(v if m % 2 == 0 else -v for m, v in self.c.items()))

    def exact_div(self, d: "WPoly") -> "WPoly":
        """Exact division by d; raises NonvanishingRemainder if not divisible."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero WPoly")
        if self.is_zero():
            return WPoly()
        rem = dict(self.c)
        slo, _ = self.degrees()
        dlo, dhi = d.degrees()
        dlead = d.c[dhi]
        m_floor = slo - dlo  # smallest exponent an exact quotient can contain
        q: dict = {}
        while rem:
            rhi = max(rem)
            m = rhi - dhi
            if m < m_floor:
                raise NonvanishingRemainder(f"remainder of degree {rhi} survives division")
            coef = rem[rhi]
            if isinstance(coef, int) and isinstance(dlead, int) and coef % dlead == 0:
                cq = coef // dlead
            else:
                cq = _norm(Fraction(coef) / Fraction(dlead))
            q[m] = cq
            for md, vd in d.c.items():
                mm = md + m
                s = rem.get(mm, 0) - vd * cq
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
            if rem and max(rem) >= rhi:
                raise NonvanishingRemainder("degree did not drop during division")
        return WPoly(q)

    def is_palindromic(self, total: int) -> bool:
        """Check c[m] == c[total - m] for all m (doubled-exponent pivot)."""
        return all(self.c.get(total - m, 0) == v for m, v in self.c.items())

    def __repr__(self) -> str:
        terms = ", ".join(f"w^{m}/2:{v}" for m, v in sorted(self.c.items())[:6])
        return f"<WPoly {terms}{'...' if len(self.c) > 6 else ''}>"


# ---------------------------------------------------------------------------
# BiSeries: q-series with WPoly coefficients
# ---------------------------------------------------------------------------


class BiSeries:
    """Truncated series sum_e P_e(w^(1/2)) q^(e/D) with WPoly coefficients."""

    __slots__ = ("D", "trunc", "coeffs")

    def __init__(self, D: int, trunc: int, coeffs: dict | None = None):
        if D <= 0:
            raise ValueError("lattice denominator D must be positive")
        self.D = D
        self.trunc = trunc
        cc = {}
        if coeffs:
            for e, p in coeffs.items():
                if e >= trunc:
                    continue
                if not isinstance(p, WPoly):
                    p = WPoly(p)
                if p:
                    cc[e] = p
        self.coeffs = cc

    @classmethod
    def zero(cls, D: int, trunc: int) -> "BiSeries":
        return cls(D, trunc)

    @classmethod
    def one(cls, D: int, trunc: int) -> "BiSeries":
        return cls(D, trunc, {0: WPoly.const(1)})

    @classmethod
    def monomial(cls, v: Rat, e: int, m: int, D: int, trunc: int) -> "BiSeries":
        return cls(D, trunc, {e: WPoly.monomial(v, m)})

    @classmethod
    def from_frac(cls, a: FracSeries) -> "BiSeries":
        return cls(a.D, a.trunc, {e: WPoly.const(v) for e, v in a.coeffs.items()})

    def rescale(self, D2: int) -> "BiSeries":
        if D2 == self.D:
            return self
        if D2 % self.D:
            raise ValueError(f"cannot rescale lattice {self.D} -> {D2}")
        f = D2 // self.D
        return BiSeries(D2, self.trunc * f, {e * f: p for e, p in self.coeffs.items()})

    def lowest(self) -> int:
        return min(self.coeffs) if self.coeffs else self.trunc

    def is_zero(self) -> bool:
        return not self.coeffs

    def restrict(self, trunc: int) -> "BiSeries":
        if trunc >= self.trunc:
            return self
        return BiSeries(self.D, trunc, {e: p for e, p in self.coeffs.items() if e < trunc})

    def shift(self, e0: int, m0: int = 0) -> "BiSeries":
        """Multiply by q^(e0/D) w^(m0/2)."""
        return BiSeries(self.D, self.trunc + e0,
                        {e + e0: (p.shift(m0) if m0 else p) for e, p in self.coeffs.items()})

    def scale(self, v: Rat) -> "BiSeries":
        if not v:
            return BiSeries(self.D, self.trunc)
        return BiSeries(self.D, self.trunc, {e: p.scale(v) for e, p in self.coeffs.items()})

    def scale_w(self, p0: WPoly) -> "BiSeries":
        if p0.is_zero():
            return BiSeries(self.D, self.trunc)
        return BiSeries(self.D, self.trunc, {e: p * p0 for e, p in self.coeffs.items()})

    def __add__(self, other: "BiSeries") -> "BiSeries":
        a, b = _bicommon(self, other)
        t = min(a.trunc, b.trunc)
        cc = {e: p for e, p in a.coeffs.items() if e < t}
        for e, p in b.coeffs.items():
            if e < t:
                s = cc.get(e)
                s = p if s is None else s + p
                if s:
                    cc[e] = s
                else:
                    cc.pop(e, None)
        return BiSeries(a.D, t, cc)

    def __neg__(self) -> "BiSeries":
        return self.scale(-1)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        a, b = _bicommon(self, other)
        la, lb = a.lowest(), b.lowest()
        t = min(a.trunc + lb, b.trunc + la)
        cc: dict = {}
        bi = list(b.coeffs.items())
        for ea, pa in a.coeffs.items():
            lim = t - ea
            for eb, pb in bi:
                if eb < lim:
                    e = ea + eb
                    prod = pa * pb
                    s = cc.get(e)
                    s = prod if s is None else s + prod
                    if s:
                        cc[e] = s
                    else:
                        cc.pop(e, None)
        return BiSeries(a.D, t, cc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        ok, _ = bipoly_clear_compare(self, other)
        return ok

    __hash__ = None

    def mul_geom_inv(self, a_w: int, d_q: int) -> "BiSeries":
        """Multiply by 1/(1 - w^(a_w/2) q^(d_q/D)) via the linear recurrence.

        Requires d_q > 0.  Much faster than building the geometric series and
        convolving when the factor has monomial coefficients.
        """
        if d_q <= 0:
            raise NonPositiveOrder("geometric factor needs positive q-order")
        t = self.trunc
        out: dict = {}
        for e in sorted(self.coeffs):
            out[e] = self.coeffs[e]
        e_min = self.lowest()
        for e in range(e_min, t):
            p = out.get(e)
            if p is None:
                continue
            e2 = e + d_q
            if e2 < t:
                add = p.shift(a_w)
                s = out.get(e2)
                s = add if s is None else s + add
                if s:
                    out[e2] = s
                else:
                    out.pop(e2, None)
        return BiSeries(self.D, t, out)

    def mul_binomial(self, v: Rat, a_w: int, d_q: int) -> "BiSeries":
        """Multiply by (1 + v * w^(a_w/2) q^(d_q/D))."""
        other = BiSeries(self.D, max(self.trunc, d_q + 1), {0: WPoly.const(1), d_q: WPoly.monomial(v, a_w)})
        return self * other

    def divide_exact(self, den: "BiSeries") -> "BiSeries":
        """Exact series division: solve self = Q * den with WPoly-exact steps.

        The t=0 coefficient of den must be nonzero (after shifting out its
        lowest q-order), and every per-order division must leave no remainder;
        a remainder raises NonvanishingRemainder.
        """
        num, den = _bicommon(self, den)
        if den.is_zero():
            raise ZeroLeadingTerm("division by a series with empty window")
        e0 = den.lowest()
        d0 = den.coeffs[e0]
        dterms = sorted((e - e0, p) for e, p in den.coeffs.items())
        lo = num.lowest() - e0
        # num = Q*den: Q_n solvable while the coefficient of q^(n+e0) is known
        # in num and unpolluted by den terms beyond den.trunc
        t = min(num.trunc - e0, den.trunc - 2 * e0 + lo)
        q: dict = {}
        for n in range(lo, t):
            acc = num.coeffs.get(n + e0, WPoly())
            for de, dp in dterms:
                if de == 0:
                    continue
                if de > n - lo:
                    break
                qq = q.get(n - de)
                if qq is not None:
                    acc = acc - qq * dp
            if acc:
                q[n] = acc.exact_div(d0)
        return BiSeries(num.D, t, q)

    def specialize_minus_one(self) -> FracSeries:
        """Set w^(1/2) = -1, collapsing to a FracSeries."""
        return FracSeries(self.D, self.trunc,
                          {e: p.eval_minus_one() for e, p in self.coeffs.items()})

    def map_exponents(self, fn: Callable[[int, int], tuple[int, int]], D2: int, trunc2: int) -> "BiSeries":
        """Rebuild with (e, m) -> fn(e, m); used for variable substitutions."""
        cc: dict = {}
        for e, p in self.coeffs.items():
            for m, v in p.c.items():
                e2, m2 = fn(e, m)
                if e2 >= trunc2:
                    continue
                row = cc.setdefault(e2, {})
                s = row.get(m2, 0) + v
                if s:
                    row[m2] = s
                else:
                    row.pop(m2, None)
        return BiSeries(D2, trunc2, {e: WPoly(row) for e, row in cc.items() if row})

    def __repr__(self) -> str:
        ee = sorted(self.coeffs)[:4]
        body = "; ".join(f"q^{e}/{self.D}: {self.coeffs[e]!r}" for e in ee)
        return f"<BiSeries {body}{'...' if len(self.coeffs) > 4 else ''} | O(q^{self.trunc}/{self.D})>"


def _bicommon(a: BiSeries, b: BiSeries) -> tuple[BiSeries, BiSeries]:
    D = a.D * b.D // gcd(a.D, b.D)
    return a.rescale(D), b.rescale(D)


def bipoly_clear_compare(lhs: BiSeries, rhs: BiSeries, min_order: Rat | None = None):
    """Compare two cleared-form BiSeries on the overlap of their windows.

    Returns (ok, report).  On failure the report holds the smallest offending
    (q-exponent, w-exponent) pair with both coefficient values; on a window
    too short for min_order the report says so.
    """
    a, b = _bicommon(lhs, rhs)
    t = min(a.trunc, b.trunc)
    if min_order is not None and Fraction(t, a.D) < Fraction(min_order):
        return False, {"reason": "window", "have": Fraction(t, a.D), "need": Fraction(min_order)}
    for e in sorted(set(a.coeffs) | set(b.coeffs)):
        if e >= t:
            continue
        pa = a.coeffs.get(e, WPoly())
        pb = b.coeffs.get(e, WPoly())
        if pa.c != pb.c:
            bad = sorted(m for m in set(pa.c) | set(pb.c) if pa.c.get(m, 0) != pb.c.get(m, 0))
            m = bad[0]
            return False, {
                "reason": "coefficient",
                "q_exponent": Fraction(e, a.D),
                "w_exponent": Fraction(m, 2),
                "lhs": Fraction(pa.c.get(m, 0)),
                "rhs": Fraction(pb.c.get(m, 0)),
            }
    return True, None


def biseries_to_json(a: BiSeries) -> dict:
    return {
        "D": a.D,
        "trunc": a.trunc,
        "terms": [[e, [[m, rat_str(v)] for m, v in sorted(p.c.items())]]
                  for e, p in sorted(a.coeffs.items())],
    }


def biseries_from_json(obj: dict) -> BiSeries:
    return BiSeries(int(obj["D"]), int(obj["trunc"]),
                    {int(e): WPoly({int(m): rat_parse(s) for m, s in row})
                     for e, row in obj["terms"]})
