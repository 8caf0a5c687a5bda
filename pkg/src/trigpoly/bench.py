"""Accuracy-versus-cost benchmark for the sine approximants.

Compares the shifted-basis approximants (Horner in y = x(1-x)) against
Maclaurin partial sums and the platform's math.sin over a grid.

Error columns are deterministic: each method's output is compared with
a 50-digit reference, in extended precision, so they measure the method
itself (for the approximants, the mathematical truncation error; for
native sin, the libm implementation error).  Timing columns measure the
machine-precision evaluation paths and are informational only.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

from mpmath import mp, mpf

from .approx import SIN_PI_X, build_poly, bound_sup, maclaurin_eval, maclaurin_eval_hp
from .precision import DEFAULT_DIGITS, working

__all__ = ["BenchConfig", "BenchRow", "run_bench", "rows_to_csv", "write_csv"]

CSV_HEADER = "method,m,ns_per_eval,max_abs_err,mean_abs_err,certified_bound"

# keep each timed repetition above this many ns so clock granularity is noise
_MIN_REP_NS = 20_000_000


@dataclass(frozen=True)
class BenchConfig:
    grid_size: int = 2048
    m_list: tuple[int, ...] = (1, 2, 3, 4)
    repetitions: int = 5
    domain: tuple[float, float] = (0.0, 1.0)
    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.grid_size < 1000:
            raise ValueError("grid_size must be >= 1000")
        if self.repetitions < 3:
            raise ValueError("repetitions must be >= 3")
        if not self.m_list or any(m < 1 for m in self.m_list):
            raise ValueError("m_list must contain positive degrees")


@dataclass(frozen=True)
class BenchRow:
    method: str
    m: int | None
    ns_per_eval: float
    max_abs_err: float
    mean_abs_err: float
    certified_bound: float | None = None


# module-level sink defeats dead-code elimination in the timing loops
_sink = 0.0


def _time_per_eval(fn, xs, repetitions: int) -> float:
    global _sink
    batches = 1
    while True:
        t0 = time.perf_counter_ns()
        acc = 0.0
        for _ in range(batches):
            for x in xs:
                acc += fn(x)
        elapsed = time.perf_counter_ns() - t0
        if elapsed >= _MIN_REP_NS:
            break
        batches *= 2
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        acc = 0.0
        for _ in range(batches):
            for x in xs:
                acc += fn(x)
        times.append(time.perf_counter_ns() - t0)
        _sink += acc
    return statistics.median(times) / (batches * len(xs))


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    """One row per method: approximants for each m, matched Maclaurin sums, native sin."""
    n = cfg.grid_size
    lo, hi = cfg.domain
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    digits = cfg.digits
    with working(digits):
        refs = [mp.sin(mp.pi * x) for x in xs]
    rows = []

    for m in cfg.m_list:
        poly = build_poly(SIN_PI_X, m, digits)
        with working(digits):
            errs = [abs(poly.eval_hp(x) - r) for x, r in zip(xs, refs)]
            max_err, mean_err = max(errs), sum(errs) / len(errs)
            certified = float(bound_sup(m, digits))
        rows.append(
            BenchRow(
                method="Q_m",
                m=m,
                ns_per_eval=_time_per_eval(poly.eval, xs, cfg.repetitions),
                max_abs_err=float(max_err),
                mean_abs_err=float(mean_err),
                certified_bound=certified,
            )
        )

    for m in cfg.m_list:
        with working(digits):
            errs = [abs(maclaurin_eval_hp(m, x, digits) - r) for x, r in zip(xs, refs)]
            max_err, mean_err = max(errs), sum(errs) / len(errs)
        rows.append(
            BenchRow(
                method="S_m",
                m=m,
                ns_per_eval=_time_per_eval(lambda x, m=m: maclaurin_eval(m, x), xs, cfg.repetitions),
                max_abs_err=float(max_err),
                mean_abs_err=float(mean_err),
            )
        )

    with working(digits):
        errs = [abs(mpf(math.sin(math.pi * x)) - r) for x, r in zip(xs, refs)]
        max_err, mean_err = max(errs), sum(errs) / len(errs)
    rows.append(
        BenchRow(
            method="native_sin",
            m=None,
            ns_per_eval=_time_per_eval(lambda x: math.sin(math.pi * x), xs, cfg.repetitions),
            max_abs_err=float(max_err),
            mean_abs_err=float(mean_err),
        )
    )
    return rows


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.method,
                    "" if r.m is None else str(r.m),
                    f"{r.ns_per_eval:.6g}",
                    repr(r.max_abs_err),
                    repr(r.mean_abs_err),
                    "" if r.certified_bound is None else repr(r.certified_bound),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_csv(rows, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(rows_to_csv(rows))
