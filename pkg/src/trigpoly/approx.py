"""Polynomial approximants for cos(pi*x) and sin(pi*x) with certified bounds.

The degree-m approximant is the m-th partial sum of the expansion in the
shifted variable y:

    cos(pi*x) ~ sum_{j=1}^m c_j y^j,  y = 1/4 - x^2,
    sin(pi*x) ~ sum_{j=1}^m c_j y^j,  y = x(1-x),

with identical coefficients c_j = t_j pi^(2j) in both cases (the sine
form is the cosine form shifted by 1/2).  Because every c_j is positive
and the dropped tail is a positive series in y, the partial sums
increase monotonically to the target function on the canonical domains,
and the truncation error obeys the closed-form bound implemented by
`error_bound`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from mpmath import mp, mpf

from .coeffs import coeff_recurrence
from .precision import (
    DEFAULT_DIGITS,
    DEFAULT_INDEX_LIMIT,
    IndexLimitError,
    require_digits,
    to_mpf,
    working,
)

__all__ = [
    "COS_PI_X",
    "SIN_PI_X",
    "ApproxPolynomial",
    "DomainError",
    "ErrorCertificate",
    "MaclaurinPoly",
    "build_poly",
    "bound_sup",
    "error_bound",
    "eval_poly",
    "maclaurin_eval",
    "maclaurin_eval_hp",
    "select_degree",
    "sin_taylor_coefficient",
    "taylor_coeffs_at_zero",
]

COS_PI_X = "cos_pi_x"
SIN_PI_X = "sin_pi_x"
FuncTag = Literal["cos_pi_x", "sin_pi_x"]

# certified-bound domains, open intervals
_DOMAINS = {COS_PI_X: (-0.5, 0.5), SIN_PI_X: (0.0, 1.0)}


class DomainError(ValueError):
    """The certified error bound is only asserted on the canonical domain."""


def _check_func(func: str) -> None:
    if func not in _DOMAINS:
        raise ValueError(f"func must be {COS_PI_X!r} or {SIN_PI_X!r}, got {func!r}")


@dataclass(frozen=True)
class ApproxPolynomial:
    """Degree-m approximant in the shifted basis (powers of y).

    y_coeffs are the machine-precision coefficients used for fast
    evaluation (rounded once from extended precision); hp_coeffs retain
    the extended-precision values for verification work.
    """

    func: FuncTag
    degree_m: int
    y_coeffs: tuple[float, ...]
    hp_coeffs: tuple[mpf, ...]
    precision_digits: int = DEFAULT_DIGITS

    def y_of(self, x: float) -> float:
        if self.func == COS_PI_X:
            return 0.25 - x * x
        return x * (1.0 - x)

    def y_of_hp(self, x) -> mpf:
        xv = to_mpf(x)
        if self.func == COS_PI_X:
            return mpf(1) / 4 - xv * xv
        return xv * (1 - xv)

    def eval(self, x: float) -> float:
        """Machine-precision Horner evaluation in y."""
        y = self.y_of(x)
        acc = 0.0
        for c in reversed(self.y_coeffs):
            acc = acc * y + c
        return acc * y

    __call__ = eval

    def eval_hp(self, x) -> mpf:
        """Extended-precision Horner evaluation, for verification."""
        with working(self.precision_digits):
            y = self.y_of_hp(x)
            acc = mpf(0)
            for c in reversed(self.hp_coeffs):
                acc = acc * y + c
            return acc * y


def build_poly(func: FuncTag, m: int, digits: int = DEFAULT_DIGITS) -> ApproxPolynomial:
    """Construct the degree-m approximant; c_j = t_j pi^(2j) in extended precision."""
    _check_func(func)
    require_digits(digits)
    if m < 1:
        raise ValueError("m must be >= 1")
    table = coeff_recurrence(m, digits)
    with working(digits):
        pi2 = mp.pi ** 2
        hp = []
        p = mpf(1)
        for j in range(1, m + 1):
            p *= pi2
            hp.append(+(table.value(j).value * p))
        if not all(c > 0 for c in hp):  # pragma: no cover
            raise ArithmeticError("expansion coefficients must be positive")
    return ApproxPolynomial(
        func=func,
        degree_m=m,
        y_coeffs=tuple(float(c) for c in hp),
        hp_coeffs=tuple(hp),
        precision_digits=digits,
    )


def eval_poly(poly: ApproxPolynomial, x: float) -> float:
    return poly.eval(x)


@dataclass(frozen=True)
class ErrorCertificate:
    """One-sided truncation-error bound for the degree-m approximant.

    bound = leading_term / (1 - q_m) with
    leading_term = pi^(2m+2) y^(m+1) / (2m+2)! and
    q_m = (pi^2/4) / ((2m+4)(2m+3)); valid for x inside `domain`, where
    0 < reference - approximant < bound.
    """

    func: FuncTag
    m: int
    leading_term: float
    q_m: float
    tail_factor: float
    bound: float
    domain: tuple[float, float]
    bound_hp: mpf = field(repr=False, compare=False, default=None)


def _q_of(m: int) -> mpf:
    return (mp.pi ** 2 / 4) / ((2 * m + 4) * (2 * m + 3))


def _bound_parts(m: int, y) -> tuple[mpf, mpf, mpf]:
    lead = mp.pi ** (2 * m + 2) * y ** (m + 1) / mpf(math.factorial(2 * m + 2))
    q = _q_of(m)
    return lead, q, lead / (1 - q)


def _round_up(x_hp: mpf) -> float:
    out = float(x_hp)
    if mpf(out) < x_hp:
        out = math.nextafter(out, math.inf)
    return out


def error_bound(
    func: FuncTag, m: int, x: float, digits: int = DEFAULT_DIGITS
) -> ErrorCertificate:
    """Certified truncation bound at x; x must lie in the open canonical domain."""
    _check_func(func)
    require_digits(digits)
    if m < 1:
        raise ValueError("m must be >= 1")
    lo, hi = _DOMAINS[func]
    if not (lo < x < hi):
        raise DomainError(f"{func} bound only asserted on ({lo}, {hi}); got x={x}")
    with working(digits):
        xv = to_mpf(x)
        y = (mpf(1) / 4 - xv * xv) if func == COS_PI_X else xv * (1 - xv)
        lead, q, bound = _bound_parts(m, y)
        return ErrorCertificate(
            func=func,
            m=m,
            leading_term=float(lead),
            q_m=float(q),
            tail_factor=float(1 / (1 - q)),
            bound=_round_up(bound),
            domain=(lo, hi),
            bound_hp=+bound,
        )


def bound_sup(m: int, digits: int = DEFAULT_DIGITS) -> mpf:
    """Supremum of the certified bound over the domain (attained at y = 1/4)."""
    with working(digits):
        _, _, bound = _bound_parts(m, mpf(1) / 4)
        return +bound


def select_degree(
    func: FuncTag,
    tol,
    digits: int = DEFAULT_DIGITS,
    limit: int = DEFAULT_INDEX_LIMIT,
) -> int:
    """Minimal m whose certified bound is <= tol everywhere on the domain.

    The sup of the bound sits at y = 1/4 (x = 0 for cosine, x = 1/2 for
    sine), since y^(m+1) is increasing in y and y <= 1/4; the answer is
    therefore identical for both function tags.
    """
    _check_func(func)
    require_digits(digits)
    with working(digits):
        tol_v = to_mpf(tol)
        if not tol_v > 0:
            raise ValueError("tol must be positive")
        for m in range(1, limit + 1):
            if bound_sup(m, digits) <= tol_v:
                return m
    raise IndexLimitError(
        f"no degree <= {limit} meets tol={tol}; raise the index limit"
    )


@dataclass(frozen=True)
class MaclaurinPoly:
    """Odd partial sum S_m(x) = sum_{j=1}^m (-1)^(j-1) (pi x)^(2j-1)/(2j-1)!."""

    m: int
    coefficients: tuple[float, ...]  # of x^1, x^3, ..., x^(2m-1)

    @classmethod
    def build(cls, m: int) -> "MaclaurinPoly":
        if m < 1:
            raise ValueError("m must be >= 1")
        coeffs = [
            (-1) ** (j - 1) * math.pi ** (2 * j - 1) / math.factorial(2 * j - 1)
            for j in range(1, m + 1)
        ]
        return cls(m=m, coefficients=tuple(coeffs))

    def eval(self, x: float) -> float:
        x2 = x * x
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x2 + c
        return acc * x

    __call__ = eval


def maclaurin_eval(m: int, x: float) -> float:
    """S_m(x) in machine precision."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = math.pi * x
    term = t
    acc = t
    for j in range(1, m):
        term *= -t * t / ((2 * j) * (2 * j + 1))
        acc += term
    return acc


def maclaurin_eval_hp(m: int, x, digits: int = DEFAULT_DIGITS) -> mpf:
    """S_m(x) in extended precision."""
    if m < 1:
        raise ValueError("m must be >= 1")
    with working(digits):
        t = mp.pi * to_mpf(x)
        term = t
        acc = +t
        for j in range(1, m):
            term *= -t * t / ((2 * j) * (2 * j + 1))
            acc += term
        return +acc


def taylor_coeffs_at_zero(poly: ApproxPolynomial) -> list[mpf]:
    """Monomial coefficients of the sine approximant, orders 0..2m.

    Expands sum_j c_j (x(1-x))^j exactly by binomials in extended
    precision: the x^n coefficient is sum_j c_j (-1)^(n-j) binom(j, n-j).
    """
    if poly.func != SIN_PI_X:
        raise ValueError("monomial expansion is defined for the sine form")
    m = poly.degree_m
    with working(poly.precision_digits):
        out = [mpf(0)] * (2 * m + 1)
        for j in range(1, m + 1):
            c = poly.hp_coeffs[j - 1]
            for i in range(0, j + 1):
                out[j + i] += c * ((-1) ** i * math.comb(j, i))
        return [+v for v in out]


def sin_taylor_coefficient(n: int, digits: int = DEFAULT_DIGITS) -> mpf:
    """Coefficient of x^n in the Maclaurin series of sin(pi*x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 0:
        return mpf(0)
    with working(digits):
        return +((-1) ** ((n - 1) // 2) * mp.pi ** n / mpf(math.factorial(n)))
