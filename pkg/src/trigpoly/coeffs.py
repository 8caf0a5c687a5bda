"""Expansion coefficients for cos(pi*x) in powers of (1/4 - x^2).

The target identity is

    cos(pi*x) = sum_{j>=1} c_j * (1/4 - x^2)^j,      c_j = t_j * pi^(2j),

where each weight t_j is given by the alternating series

    t_j = sum_{k>=0} (-pi^2/4)^k * binom(j+k, j) / (2j+2k)!

and satisfies 0 < t_j < 1/(2j)!.  This module computes t_j by three
independent routes -- the series itself, a three-term recurrence, and a
half-integer Bessel-function identity -- plus an exact symbolic form,
each with a rigorous truncation/rounding certificate.

The generalized series T_j(z) = sum_k (-z)^k binom(j+k,j)/(2j+2k)!
recovers t_j at z = pi^2/4 and is exposed for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from mpmath import mp, mpf

from .intervals import IntervalValue, interval_dps, pi_interval
from .precision import (
    DEFAULT_DIGITS,
    DEFAULT_INDEX_LIMIT,
    ExtReal,
    require_digits,
    require_index,
    to_mpf,
    working,
)

__all__ = [
    "CoefficientEntry",
    "CoefficientTable",
    "SeriesTerm",
    "SymbolicCoefficient",
    "coeff_bessel",
    "coeff_direct",
    "coeff_recurrence",
    "coeff_symbolic",
    "coefficient_table",
    "bessel_j_half_integer",
    "gamma_half",
    "general_series_direct",
    "general_series_recurrence",
    "pi_interval",
    "series_terms",
]

Route = Literal["recurrence", "direct", "bessel"]


@dataclass(frozen=True)
class SeriesTerm:
    """One alternating term a_{j,k} = (-pi^2/4)^k binom(j+k,j)/(2j+2k)!."""

    j: int
    k: int
    a_jk: ExtReal


@dataclass(frozen=True)
class CoefficientEntry:
    j: int
    value: ExtReal
    route: Route
    trunc_bound: ExtReal


@dataclass(frozen=True)
class CoefficientTable:
    """Immutable table of weights t_1..t_J with per-entry certificates.

    trunc_bound is an upper bound on |stored - exact| for each entry and
    is kept below 10**-precision_digits relative to the value.
    """

    entries: tuple[CoefficientEntry, ...]
    precision_digits: int

    def __post_init__(self):
        for pos, entry in enumerate(self.entries, start=1):
            if entry.j != pos:
                raise ValueError("entries must be contiguous in j starting at 1")
            if not entry.value > 0:
                raise ValueError(f"coefficient {entry.j} not positive")
        with working(self.precision_digits):
            for entry in self.entries:
                if not entry.value.value * mpf(math.factorial(2 * entry.j)) < 1:
                    raise ValueError(
                        f"coefficient {entry.j} violates the 1/(2j)! upper bound"
                    )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def value(self, j: int) -> ExtReal:
        return self.entries[j - 1].value

    def bound(self, j: int) -> ExtReal:
        return self.entries[j - 1].trunc_bound


def _rel_threshold(digits: int) -> mpf:
    return mpf(10) ** (-(digits + 5))


def _work_eps() -> mpf:
    # one-ulp relative rounding bound at the current working precision
    return mpf(10) ** (1 - mp.dps)


def series_terms(j: int, count: int, digits: int = DEFAULT_DIGITS) -> list[SeriesTerm]:
    """The first `count` alternating terms of the series for t_j."""
    require_digits(digits)
    if j < 1 or count < 1:
        raise ValueError("j and count must be >= 1")
    out = []
    with working(digits):
        z = mp.pi ** 2 / 4
        zpow = mpf(1)
        for k in range(count):
            mag = zpow * mpf(math.comb(j + k, j)) / mpf(math.factorial(2 * j + 2 * k))
            sign = 1 if k % 2 == 0 else -1
            out.append(SeriesTerm(j, k, ExtReal(sign * mag, digits)))
            zpow *= z
    return out


def _alternating_sum(first_mag: mpf, ratio_at, digits: int) -> tuple[mpf, mpf]:
    """Sum an alternating series given |term_0| and k -> |t_{k+1}|/|t_k|.

    Terms may grow while the ratio is >= 1; once it drops below 1 it
    stays below 1 (the ratios here are decreasing in k), so the first
    omitted term bounds the tail.  Returns (sum, certificate), where the
    certificate covers truncation plus summation rounding.

    Stops when the next term is below 10**-(digits+5) relative to the
    running sum; a tiny absolute floor keeps this terminating when the
    exact sum is zero (e.g. the j=0 series at z = pi^2/4, which sums to
    cos(pi/2)).
    """
    thresh = _rel_threshold(digits)
    floor = first_mag * thresh
    s = mpf(0)
    mag = first_mag
    sign = 1
    k = 0
    while True:
        s += sign * mag
        ratio = ratio_at(k)
        nxt = mag * ratio
        if ratio < 1 and nxt <= thresh * max(abs(s), floor):
            break
        mag = nxt
        sign = -sign
        k += 1
        if k > 100000:  # pragma: no cover
            raise ArithmeticError("alternating series failed to terminate")
    rounding = (k + 3) * _work_eps() * max(abs(s), first_mag)
    return s, nxt + rounding


def coeff_direct(
    j: int,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> tuple[ExtReal, ExtReal]:
    """Weight t_j summed directly from its alternating series.

    Returns (value, trunc_bound); the bound is the first omitted term
    plus a rounding allowance, valid because the term magnitudes
    strictly decrease (their ratio is pi^2/(8(k+1)(2j+2k+1)) < 1 for
    every j >= 1, k >= 0).
    """
    require_digits(digits)
    require_index(j, limit)
    if j < 1:
        raise ValueError("j must be >= 1")
    with working(digits):
        z = mp.pi ** 2 / 4

        def ratio_at(k: int) -> mpf:
            return z / (2 * (k + 1) * (2 * j + 2 * k + 1))

        first = mpf(1) / mpf(math.factorial(2 * j))
        s, bound = _alternating_sum(first, ratio_at, digits)
        if not (0 < s and s * mpf(math.factorial(2 * j)) < 1):  # pragma: no cover
            raise ArithmeticError(f"computed t_{j} escaped (0, 1/(2j)!)")
        return ExtReal(+s, digits), ExtReal(+bound, digits)


def _cancellation_allowance(j_max: int, z: float) -> int:
    """Extra decimal digits consumed by forward recurrence cancellation.

    The wanted solution decays like 1/(2j)! while each recurrence step
    combines terms of comparable size, so roughly log10(8 j^2 / z)
    digits cancel per step.  Summing that over the steps (plus slack)
    bounds the total loss.
    """
    loss = sum(max(0.0, math.log10(8.0 * i * i / z)) for i in range(2, j_max + 1))
    return int(math.ceil(loss)) + 10


def coeff_recurrence(
    j_max: int,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> CoefficientTable:
    """Weights t_1..t_{j_max} by the three-term recurrence.

        t_j = 2(2j-3)/(pi^2 j) * t_{j-1} - 1/(pi^2 j (j-1)) * t_{j-2},

    seeded with t_0 = 0 and t_1 = 1/pi.  The recurrence tracks the
    minimal (factorially decaying) solution, so forward evaluation
    cancels heavily; the working precision is raised by a per-run
    allowance and a forward error bound is carried alongside the values
    (a few ulps per product, compounded through the recurrence).  The
    certificate stored per entry is that accumulated rounding bound.
    """
    require_digits(digits)
    require_index(j_max, limit)
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    extra = _cancellation_allowance(j_max, z=math.pi ** 2 / 4)
    for _ in range(3):
        result = _recurrence_attempt(j_max, digits, extra)
        if result is not None:
            return result
        extra += max(20, extra // 2)  # pragma: no cover
    raise ArithmeticError("recurrence error bound failed to converge")  # pragma: no cover


def _recurrence_attempt(j_max: int, digits: int, extra: int) -> CoefficientTable | None:
    budget = mpf(10) ** (-digits)
    with working(digits, extra=extra):
        eps = _work_eps()
        pi2 = mp.pi ** 2
        vals = [mpf(0), 1 / mp.pi]
        errs = [mpf(0), 2 * eps * vals[1]]
        for j in range(2, j_max + 1):
            a = 2 * (2 * j - 3) / (pi2 * j)
            b = 1 / (pi2 * j * (j - 1))
            v = a * vals[j - 1] - b * vals[j - 2]
            e = (
                a * errs[j - 1]
                + b * errs[j - 2]
                + 6 * eps * (a * abs(vals[j - 1]) + b * abs(vals[j - 2]))
            )
            if not v > 0 or e > abs(v) * budget:
                return None
            vals.append(v)
            errs.append(e)
    entries = []
    with working(digits):
        for j in range(1, j_max + 1):
            entries.append(
                CoefficientEntry(
                    j=j,
                    value=ExtReal(+vals[j], digits),
                    route="recurrence",
                    trunc_bound=ExtReal(+(errs[j] + abs(vals[j]) * _work_eps()), digits),
                )
            )
    return CoefficientTable(entries=tuple(entries), precision_digits=digits)


# --- exact symbolic forms ------------------------------------------------

@dataclass(frozen=True)
class SymbolicCoefficient:
    """Exact form t_j = N_j(pi^2) / (D_j * pi^(2j-1)).

    numerator holds the integer coefficients of N_j as a polynomial in
    pi^2 (constant term first); denominator is the positive integer D_j,
    reduced against the numerator's content.
    """

    index: int
    numerator: tuple[int, ...]
    denominator: int

    @property
    def pi_power(self) -> int:
        return 2 * self.index - 1

    def evaluate(self, digits: int = DEFAULT_DIGITS) -> ExtReal:
        require_digits(digits)
        with working(digits):
            u = mp.pi ** 2
            acc = mpf(0)
            for c in reversed(self.numerator):
                acc = acc * u + c
            return ExtReal(+(acc / self.denominator / mp.pi ** self.pi_power), digits)

    def evaluate_interval(self, digits: int = DEFAULT_DIGITS) -> IntervalValue:
        """Enclosure of t_j from an enclosure of pi."""
        with interval_dps(digits):
            p = pi_interval(digits)
            u = p ** 2
            acc = IntervalValue(0)
            for c in reversed(self.numerator):
                acc = acc * u + c
            return acc / self.denominator / p ** self.pi_power

    def y_coefficient_interval(self, digits: int = DEFAULT_DIGITS) -> IntervalValue:
        """Enclosure of the y-basis coefficient c_j = t_j pi^(2j) = pi N_j(pi^2)/D_j."""
        with interval_dps(digits):
            p = pi_interval(digits)
            u = p ** 2
            acc = IntervalValue(0)
            for c in reversed(self.numerator):
                acc = acc * u + c
            return acc * p / self.denominator

    def as_string(self) -> str:
        terms = []
        for power, c in enumerate(self.numerator):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                pi_part = "pi^2" if power == 1 else f"pi^{2 * power}"
                body = pi_part if mag == 1 else f"{mag}*{pi_part}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        num = " ".join(terms) if terms else "0"
        if len(terms) > 1:
            num = f"({num})"
        pi_den = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
        den = pi_den if self.denominator == 1 else f"({self.denominator}*{pi_den})"
        return f"{num}/{den}"


@lru_cache(maxsize=None)
def coeff_symbolic(j_max: int) -> tuple[SymbolicCoefficient, ...]:
    """Exact closed forms of t_1..t_{j_max} via the recurrence over rationals.

    Writing t_j = R_j(u)/pi^(2j-1) with u = pi^2 turns the recurrence into

        R_j(u) = 2(2j-3)/j * R_{j-1}(u) - u/(j(j-1)) * R_{j-2}(u),

    with R_0 = 0 and R_1 = 1, which is exact in Fraction arithmetic.
    """
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    polys: list[list[Fraction]] = [[Fraction(0)], [Fraction(1)]]
    for j in range(2, j_max + 1):
        a = Fraction(2 * (2 * j - 3), j)
        b = Fraction(1, j * (j - 1))
        p1 = [a * c for c in polys[j - 1]]
        p2 = [Fraction(0)] + [b * c for c in polys[j - 2]]  # multiply by u
        n = max(len(p1), len(p2))
        p1 += [Fraction(0)] * (n - len(p1))
        p2 += [Fraction(0)] * (n - len(p2))
        polys.append([x - y for x, y in zip(p1, p2)])
    return tuple(_normalize_symbolic(j, polys[j]) for j in range(1, j_max + 1))


def _normalize_symbolic(j: int, coeffs: list[Fraction]) -> SymbolicCoefficient:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    denom = math.lcm(*(c.denominator for c in coeffs))
    nums = [int(c * denom) for c in coeffs]
    content = math.gcd(denom, *(abs(n) for n in nums))
    return SymbolicCoefficient(
        index=j,
        numerator=tuple(n // content for n in nums),
        denominator=denom // content,
    )


# --- Bessel route ---------------------------------------------------------

def gamma_half(n: int, digits: int = DEFAULT_DIGITS) -> ExtReal:
    """Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!) for integer n >= 0."""
    require_digits(digits)
    if n < 0:
        raise ValueError("n must be >= 0")
    with working(digits):
        val = mp.sqrt(mp.pi) * mpf(math.factorial(2 * n)) / mpf(4 ** n * math.factorial(n))
        return ExtReal(+val, digits)


def bessel_j_half_integer(j: int, x, digits: int = DEFAULT_DIGITS) -> ExtReal:
    """J_{j-1/2}(x) for x > 0 by the defining power series.

    J_nu(x) = sum_k (-1)^k (x/2)^(nu+2k) / (k! Gamma(nu+k+1)); at
    nu = j - 1/2 the Gamma values are Gamma((j+k) + 1/2), supplied by
    gamma_half.  Terms are summed as given until their ratio drops
    below 1, after which the alternating tail bound applies.
    """
    require_digits(digits)
    if j < 0:
        raise ValueError("j must be >= 0")
    with working(digits, extra=5):
        xv = to_mpf(x)
        if not xv > 0:
            raise ValueError("x must be positive")
        half = xv / 2
        half2 = half * half
        nu = j - mpf(1) / 2

        def ratio_at(k: int) -> mpf:
            return half2 / ((k + 1) * (nu + k + 1))

        first = mp.power(half, nu) / gamma_half(j, digits + 5).value
        s, _ = _alternating_sum(first, ratio_at, digits)
        return ExtReal(+s, digits)


def coeff_bessel(
    j: int,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> ExtReal:
    """Weight t_j via the identity t_j = pi^(1-j)/(2 j!) * J_{j-1/2}(pi/2)."""
    require_digits(digits)
    require_index(j, limit)
    if j < 1:
        raise ValueError("j must be >= 1")
    with working(digits, extra=5):
        arg = mp.pi / 2
        jval = bessel_j_half_integer(j, arg, digits + 5).value
        pref = mp.power(mp.pi, 1 - j) / (2 * mpf(math.factorial(j)))
        return ExtReal(+(pref * jval), digits)


# --- generalized series T_j(z) -------------------------------------------

def general_series_direct(
    j: int,
    z,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> ExtReal:
    """T_j(z) = sum_k (-z)^k binom(j+k,j)/(2j+2k)! for z > 0.

    j = 0 is permitted (T_0(z) = cos(sqrt(z))); it seeds the recurrence
    route.  Successive term magnitudes have ratio z/(2(k+1)(2j+2k+1)),
    so the sum proceeds term by term until the ratio is below 1 and the
    alternating tail bound takes over.
    """
    require_digits(digits)
    require_index(j, limit)
    if j < 0:
        raise ValueError("j must be >= 0")
    with working(digits, extra=5):
        zv = to_mpf(z)
        if not zv > 0:
            raise ValueError("z must be positive")

        def ratio_at(k: int) -> mpf:
            return zv / (2 * (k + 1) * (2 * j + 2 * k + 1))

        first = mpf(1) / mpf(math.factorial(2 * j))
        s, _ = _alternating_sum(first, ratio_at, digits)
        return ExtReal(+s, digits)


def general_series_recurrence(
    j_max: int,
    z,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> list[ExtReal]:
    """T_1(z)..T_{j_max}(z) by the recurrence

        T_j(z) = (2j-3)/(2jz) T_{j-1}(z) - 1/(4j(j-1)z) T_{j-2}(z),

    seeded with T_0, T_1 from the direct series.  Restricted to z > 0,
    where the direct series and the Bessel form both converge; the same
    cancellation allowance as the t_j recurrence applies (scaled by z).
    """
    require_digits(digits)
    require_index(j_max, limit)
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    zf = float(to_mpf(z))
    if not zf > 0:
        raise ValueError("z must be positive")
    extra = _cancellation_allowance(j_max, z=zf) if j_max >= 2 else 0
    seed_digits = digits + extra
    t0 = general_series_direct(0, z, seed_digits, limit=max(limit, j_max))
    t1 = general_series_direct(1, z, seed_digits, limit=limit)
    with working(digits, extra=extra):
        zv = to_mpf(z)
        vals = [t0.value, t1.value]
        for j in range(2, j_max + 1):
            a = mpf(2 * j - 3) / (2 * j * zv)
            b = mpf(1) / (4 * j * (j - 1) * zv)
            vals.append(a * vals[j - 1] - b * vals[j - 2])
    with working(digits):
        return [ExtReal(+v, digits) for v in vals[1:]]


def coefficient_table(
    j_max: int,
    digits: int = DEFAULT_DIGITS,
    route: Route = "recurrence",
    limit: int = DEFAULT_INDEX_LIMIT,
) -> CoefficientTable:
    """Build the t_1..t_{j_max} table by the requested route."""
    if route == "recurrence":
        return coeff_recurrence(j_max, digits, limit)
    entries = []
    with working(digits):
        loose = mpf(10) ** (-(digits + 4))
        for j in range(1, j_max + 1):
            if route == "direct":
                value, bound = coeff_direct(j, digits, limit)
            elif route == "bessel":
                value = coeff_bessel(j, digits, limit)
                bound = ExtReal(+(abs(value.value) * loose), digits)
            else:
                raise ValueError(f"unknown route {route!r}")
            entries.append(CoefficientEntry(j=j, value=value, route=route, trunc_bound=bound))
    return CoefficientTable(entries=tuple(entries), precision_digits=digits)
