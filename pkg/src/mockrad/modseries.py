"""Eta, the unary thetas, the mixed mock forms f_j = h_j / eta^6, and exact
verification of the classical class-number identities.

All verifiers work in cleared form (both sides multiplied by the same theta
denominators) so no non-unit series inversion is needed, and each returns a
first-discrepancy report alongside the boolean for debuggability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classnum import h_series, hurwitz, r3_table, uneven_class_count
from .errors import OutOfWindow
from .qexact import (
    FracSeries,
    Rat,
    coefficient_at,
    first_disagreement,
    infinite_product,
    series_add,
    series_agree,
    series_half_shift,
    series_invert,
    series_mul,
    series_pow,
    series_substitute_power,
)

# ---------------------------------------------------------------------------
# Basic series
# ---------------------------------------------------------------------------


def eta(order: int) -> FracSeries:
    """Dedekind eta: q^(1/24) prod_{n>=1} (1 - q^n), on the D = 24 lattice,
    truncated at q^order."""
    prod = infinite_product(
        lambda n: FracSeries(1, order + 1, {0: 1, n: -1}), order + 1, 1
    )
    return prod.rescale(24).shift(1)


def eta_pentagonal(order: int) -> FracSeries:
    """Eta via the pentagonal number expansion; oracle for the product form."""
    trunc = 24 * order + 1
    coeffs = {}
    n = 0
    while True:
        stop = True
        for m in (n, -n) if n else (0,):
            e = (6 * m + 1) ** 2
            if e < trunc:
                stop = False
                coeffs[e] = 1 if m % 2 == 0 else -1
        if stop:
            break
        n += 1
    return FracSeries(24, trunc, coeffs)


def eta_power(m: int, order: int, scale: int = 1) -> FracSeries:
    """eta(scale * tau)^m truncated at q^order (m may be negative)."""
    base = eta(max(order, 1) + 1)
    if scale != 1:
        base = series_substitute_power(base, scale)
    out = series_pow(base, m)
    win = Fraction(order) * out.D
    return out.restrict(int(win)) if out.trunc > win else out


def theta_unary(j: int, order: int) -> FracSeries:
    """Theta_j(tau) = sum_n q^((2n+j)^2 / 4) on the D = 4 lattice."""
    if j not in (0, 1):
        raise ValueError("j must be 0 or 1")
    trunc = 4 * order
    coeffs: dict[int, Rat] = {}
    n = 0
    while True:
        hit = False
        for m in (n, -n) if n else (0,):
            e = (2 * m + j) ** 2
            if e < trunc:
                coeffs[e] = coeffs.get(e, 0) + 1
                hit = True
        if not hit and (2 * n + j) ** 2 >= trunc and (2 * -n + j) ** 2 >= trunc:
            break
        n += 1
    return FracSeries(4, trunc, coeffs)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Product prod eta(k*tau)^m described by (scale k, exponent m) pairs."""

    factors: tuple[tuple[int, int], ...]
    coeff: Rat = 1

    def __post_init__(self):
        if not self.factors:
            raise ValueError("eta quotient needs at least one factor")
        if any(k <= 0 for k, _ in self.factors):
            raise ValueError("eta scales must be positive")


THETA0_QUOTIENT = EtaQuotientSpec(((2, 5), (1, -2), (4, -2)))
THETA1_QUOTIENT = EtaQuotientSpec(((4, 2), (2, -1)), coeff=2)


def eta_quotient(spec: EtaQuotientSpec, order: int) -> FracSeries:
    out = None
    for k, m in spec.factors:
        part = eta_power(m, order + 2, scale=k)
        out = part if out is None else series_mul(out, part)
    out = out.scale(spec.coeff)
    win = Fraction(order) * out.D
    return out.restrict(int(win)) if out.trunc > win else out


def f_series(j: int, order: int) -> FracSeries:
    """f_j = h_j / eta^6 = sum_{n} alpha_j(n) q^(n - (j+1)/4), to q^order."""
    h = h_series(j, order + 1)
    inv6 = eta_power(-6, order + 1)
    out = series_mul(h, inv6)
    win = Fraction(order) * out.D
    return out.restrict(int(win)) if out.trunc > win else out


def alpha(j: int, n: int) -> Rat:
    """Exact coefficient alpha_j(n) of q^(n - (j+1)/4) in f_j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = f_series(j, n + 1)
    return coefficient_at(f, Fraction(4 * n - (j + 1), 4))


# ---------------------------------------------------------------------------
# Identity verifiers
# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    name: str
    ok: bool
    order: int
    discrepancy: tuple | None = None

    def as_dict(self) -> dict:
        d = {"identity": self.name, "ok": self.ok, "order": self.order}
        if self.discrepancy is not None:
            e, lv, rv = self.discrepancy
            d["first_discrepancy"] = {
                "q_exponent": f"{e.numerator}/{e.denominator}",
                "lhs": f"{lv.numerator}/{lv.denominator}",
                "rhs": f"{rv.numerator}/{rv.denominator}",
            }
        return d


def _compare(name: str, lhs: FracSeries, rhs: FracSeries, order: int) -> IdentityReport:
    ok = series_agree(lhs, rhs, min_order=order)
    if ok:
        return IdentityReport(name, True, order)
    diff = first_disagreement(lhs, rhs)
    if diff is None:
        # windows never reached the requested order: report as failure loudly
        raise OutOfWindow(f"{name}: comparison window shorter than requested order {order}")
    return IdentityReport(name, False, order, diff)


def _lambert_kronecker(order: int) -> FracSeries:
    """sum_{n in Z} (2n-1) q^(n^2) / (1 - q^(2n-1)), expanded exactly.

    Terms with 2n-1 < 0 are rewritten as 1/(1-x) = -x^(-1)/(1-x^(-1)) so every
    geometric variable has positive q-order.  Minimal order of the n-th term is
    n^2 for n >= 1 and (n-1)^2 for n <= 0.
    """
    trunc = order
    acc: dict[int, Rat] = {}
    n = 1
    while n * n < trunc:
        # direct branch: (2n-1) q^(n^2) sum_m q^((2n-1)m)
        step = 2 * n - 1
        e = n * n
        while e < trunc:
            acc[e] = acc.get(e, 0) + step
            e += step
        n += 1
    n = 0
    while (n - 1) * (n - 1) < trunc:
        # rewrite branch: -(2n-1) q^(n^2 + (1-2n)) sum_m q^((1-2n)m)
        step = 1 - 2 * n
        e = n * n + step
        while e < trunc:
            acc[e] = acc.get(e, 0) - (2 * n - 1)
            e += step
        n -= 1
    return FracSeries(1, trunc, acc)


def verify_kronecker_identity(order: int, sixth: Rat = Fraction(1, 6)) -> IdentityReport:
    """h_1 = -(1/(2 Theta_0)) q^(-1/4) (Lambert sum) + (1/6) Theta_1^3, cleared
    by 2 Theta_0.  The `sixth` knob exists only for mutation tests."""
    th0 = theta_unary(0, order + 2)
    th1 = theta_unary(1, order + 2)
    lhs = series_mul(h_series(1, order + 2), th0).scale(2)
    lam = _lambert_kronecker(order + 2).rescale(4).shift(-1)  # q^(-1/4) factor
    rhs = series_add(-lam, series_mul(th0, series_pow(th1, 3)).scale(2 * Fraction(sixth)))
    return _compare("kronecker_h1", lhs, rhs, order)


def _lambert_watson(order: int) -> FracSeries:
    """sum_{n in Z} (n - 1/2) q^((n-1/2)^2) / (q^(1/2-n) - q^(n-1/2)).

    With r = n - 1/2 the summand is r q^(r^2 + r) / (1 - q^(2r)); the r < 0
    half is rewritten to positive q-order.  Lattice D = 4 (exponents r^2 + r
    + 2rm land on integers, but r^2 alone sits on quarter-integers during
    assembly).
    """
    trunc = 4 * order
    acc: dict[int, Rat] = {}
    n = 1
    while True:
        base = (2 * n - 1) ** 2 + 2 * (2 * n - 1)  # 4(r^2 + r), r = n - 1/2
        if base >= trunc:
            break
        step = 4 * (2 * n - 1)  # 4 * 2r
        e = base
        while e < trunc:
            acc[e] = acc.get(e, 0) + Fraction(2 * n - 1, 2)
            e += step
        n += 1
    n = 0
    while True:
        # r = n - 1/2 < 0: r q^(r^2+r)/(1-q^(2r)) = -r q^(r^2 - r) sum q^(-2rm)
        m_abs = 1 - 2 * n  # = -2r > 0
        base = (2 * n - 1) ** 2 - 2 * (2 * n - 1)  # 4(r^2 - r)
        if base >= trunc:
            break
        step = 4 * m_abs
        e = base
        while e < trunc:
            acc[e] = acc.get(e, 0) - Fraction(2 * n - 1, 2)
            e += step
        n -= 1
    return FracSeries(4, trunc, acc)


def uneven_series(order: int) -> FracSeries:
    """sum_{n>=0} F(4n+3) q^(n+3/4) with F the unweighted odd-class count."""
    trunc = 4 * order
    coeffs = {}
    n = 0
    while 4 * n + 3 < trunc:
        v = uneven_class_count(4 * n + 3)
        if v:
            coeffs[4 * n + 3] = v
        n += 1
    return FracSeries(4, trunc, coeffs)


def verify_watson_identity(order: int, mutate_sign: bool = False) -> IdentityReport:
    """Two-part check of the odd-class-number identity.

    (i)  Theta_1^3 = sum r(4n+3) q^(n+3/4) with r(n) from Theta_0^3
         (equivalently the three-squares counts).
    (ii) sum F(4n+3) q^(n+3/4) = (1/4) Theta_1^3 - (1/Theta_0) * (half-integer
         Lambert sum), cleared by Theta_0, with F the unweighted count of
         classes of odd discriminant.
    """
    th0 = theta_unary(0, order + 2)
    th13 = series_pow(theta_unary(1, order + 2), 3)
    tab = r3_table(4 * (order + 2) + 3)
    rcoeffs = {}
    n = 0
    while 4 * n + 3 < th13.trunc:
        if tab[4 * n + 3]:
            rcoeffs[4 * n + 3] = tab[4 * n + 3]
        n += 1
    rside = FracSeries(4, th13.trunc, rcoeffs)
    rep1 = _compare("watson_theta1_cubed", th13, rside, order)
    if not rep1.ok:
        return rep1

    lam = _lambert_watson(order + 2)
    if mutate_sign:
        lam = lam.scale(-1)
    lhs = series_mul(uneven_series(order + 2), th0)
    rhs = series_add(series_mul(th13, th0).scale(Fraction(1, 4)), -lam)
    return _compare("watson_uneven_classes", lhs, rhs, order)


def _lambert_mordell(order: int) -> FracSeries:
    """sum_{n in Z} n (-1)^n q^(n^2) / (1 + q^(2n)), integer lattice."""
    trunc = order
    acc: dict[int, Rat] = {}
    n = 1
    while n * n < trunc:
        sign = -1 if n % 2 else 1
        # n >= 1: n(-1)^n q^(n^2) sum_m (-1)^m q^(2nm)
        e, m = n * n, 0
        while e < trunc:
            acc[e] = acc.get(e, 0) + n * sign * (1 if m % 2 == 0 else -1)
            e += 2 * n
            m += 1
        # n <= -1 partner: (-n)(-1)^n q^(n^2+2n... ) rewritten:
        # term(-n) = -n(-1)^n q^(n^2) q^(2n)/(1+q^(2n))
        e, m = n * n + 2 * n, 0
        while e < trunc:
            acc[e] = acc.get(e, 0) - n * sign * (1 if m % 2 == 0 else -1)
            e += 2 * n
            m += 1
        n += 1
    return FracSeries(1, trunc, acc)


def hurwitz_series(order: int) -> FracSeries:
    """sum_{n >= 0, n = 0,3 mod 4} H(n) q^n (includes H(0) = -1/12)."""
    coeffs = {}
    for n in range(order):
        if n % 4 in (0, 3):
            v = hurwitz(n)
            if v:
                coeffs[n] = v
    return FracSeries(1, order, coeffs)


def verify_mordell_identity(order: int, twelfth: Rat = Fraction(1, 12)) -> IdentityReport:
    """sum H(n) q^n = -(1/(2 Theta_0(tau+1/2))) (alternating Lambert sum)
    - (1/12) Theta_0^3, cleared by 2 Theta_0(tau+1/2)."""
    th0 = theta_unary(0, order + 2).rescale(4)
    th0_half = series_half_shift(th0)
    lhs = series_mul(hurwitz_series(order + 2), th0_half).scale(2)
    lam = _lambert_mordell(order + 2)
    rhs = series_add(
        -lam.rescale(4),
        series_mul(series_pow(theta_unary(0, order + 2), 3), th0_half).scale(-2 * Fraction(twelfth)),
    )
    return _compare("mordell_hurwitz", lhs, rhs, order)


def theta0_cubed_matches_r3(order: int) -> bool:
    """Cross-module oracle: coefficients of Theta_0^3 equal the lattice counts."""
    th = series_pow(theta_unary(0, order + 1), 3)
    tab = r3_table(order)
    return all(coefficient_at(th, n) == tab[n] for n in range(order))


def integrality_witness(order: int) -> tuple[FracSeries, FracSeries]:
    """The two combinations whose coefficients must be integers:
    3 f_1 and 3 f_0 + (1/4) eta(2 tau)^(-3)."""
    three_f1 = f_series(1, order).scale(3)
    comb = series_add(f_series(0, order).scale(3), eta_power(-3, order, scale=2).scale(Fraction(1, 4)))
    return three_f1, comb
