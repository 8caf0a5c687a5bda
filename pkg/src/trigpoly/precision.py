"""Extended-precision arithmetic carrier and working-precision control.

All real-valued computation in this package runs through mpmath at a
working precision of ``requested digits + GUARD_DIGITS``.  The guard
digits absorb rounding in series summation and coefficient products;
routines that lose more than that (the three-term recurrences) add
their own cancellation allowance on top.

mpmath's context precision is process-global, so precision-sensitive
sections are serialized with a reentrant lock; results are pure
functions of their inputs and immutable outputs are safe to share
across threads.  Machine-precision evaluation paths never enter these
sections and run fully concurrently.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

# shared with the interval context manager (same lock: reentrancy keeps
# nested working()/interval_dps() sections deadlock-free)
PRECISION_LOCK = threading.RLock()

GUARD_DIGITS = 20
MIN_DIGITS = 30
DEFAULT_DIGITS = 50

# Coefficients beyond this index underflow any practical use; the exact
# factorials involved also grow without bound.  Callers may raise it.
DEFAULT_INDEX_LIMIT = 200


class PrecisionError(ValueError):
    """Requested decimal precision is below the supported floor."""


class IndexLimitError(ValueError):
    """Coefficient index exceeds the configured factorial-growth limit."""


def require_digits(digits: int) -> None:
    if digits < MIN_DIGITS:
        raise PrecisionError(
            f"precision too low: need >= {MIN_DIGITS} significant digits, got {digits}"
        )


def require_index(j: int, limit: int = DEFAULT_INDEX_LIMIT) -> None:
    if j > limit:
        raise IndexLimitError(f"coefficient index {j} exceeds the configured limit {limit}")


@contextmanager
def working(digits: int, extra: int = 0):
    """Context with mp precision set to digits + guard (+ extra) decimals."""
    with PRECISION_LOCK:
        with mp.workdps(digits + GUARD_DIGITS + extra):
            yield mp


def to_mpf(x) -> mpf:
    """Coerce ints, fractions, floats, strings and ExtReal to mpf.

    Conversion happens at the *current* working precision; ints and
    floats are exact, fractions round once.
    """
    if isinstance(x, ExtReal):
        return x.value
    if isinstance(x, Fraction):
        return mpf(x.numerator) / mpf(x.denominator)
    return mpf(x)


@dataclass(frozen=True)
class ExtReal:
    """An extended-precision real tagged with its requested decimal precision.

    Arithmetic between ExtReals (and ints, fractions, mpf) is correctly
    rounded at the working precision of the more precise operand.
    """

    value: mpf
    precision_digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.precision_digits < MIN_DIGITS:
            raise PrecisionError(
                f"ExtReal requires >= {MIN_DIGITS} digits, got {self.precision_digits}"
            )

    @classmethod
    def from_value(cls, x, digits: int = DEFAULT_DIGITS) -> "ExtReal":
        with working(digits):
            return cls(+to_mpf(x), digits)

    def _digits_with(self, other) -> int:
        if isinstance(other, ExtReal):
            return max(self.precision_digits, other.precision_digits)
        return self.precision_digits

    def _binop(self, other, op):
        digits = self._digits_with(other)
        with working(digits):
            return ExtReal(op(self.value, to_mpf(other)), digits)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("ExtReal only supports integer powers")
        with working(self.precision_digits):
            return ExtReal(self.value ** n, self.precision_digits)

    def __neg__(self):
        return ExtReal(-self.value, self.precision_digits)

    def __abs__(self):
        return ExtReal(abs(self.value), self.precision_digits)

    def sqrt(self) -> "ExtReal":
        with working(self.precision_digits):
            return ExtReal(mp.sqrt(self.value), self.precision_digits)

    # comparisons are exact on the stored values
    def _cmp_value(self, other):
        return other.value if isinstance(other, ExtReal) else to_mpf(other)

    def __lt__(self, other):
        return self.value < self._cmp_value(other)

    def __le__(self, other):
        return self.value <= self._cmp_value(other)

    def __gt__(self, other):
        return self.value > self._cmp_value(other)

    def __ge__(self, other):
        return self.value >= self._cmp_value(other)

    def __eq__(self, other):
        if isinstance(other, (ExtReal, int, float, mpf, Fraction)):
            return self.value == self._cmp_value(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def to_str(self, digits: int | None = None) -> str:
        return mp.nstr(self.value, digits or self.precision_digits)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"ExtReal({self.to_str(min(self.precision_digits, 20))}, digits={self.precision_digits})"


def pi_value(digits: int = DEFAULT_DIGITS) -> mpf:
    """pi correctly rounded at the working precision for `digits`."""
    with working(digits):
        return +mp.pi
