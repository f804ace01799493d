"""Convergence experiments on the ultraradical series.

``k0_term_table`` and ``partial_sums`` tabulate the raw outer terms of K0
and their running sums with no truncation logic, so rounding noise in the
high-order terms shows up exactly as it is produced. ``accuracy_scan`` and
``terms_vs_error`` measure the end-to-end series solver against bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .coefficients import CoefficientTable, table_for
from .errors import BringQuinticError, DivergenceError, DomainError
from .solver import solve_bisection, solve_series
from .ultraradicals import TruncationPolicy, k0_term

DEFAULT_CHECKPOINTS = (11, 21, 31, 41)
ORACLE_TOL = 1e-14


@dataclass(frozen=True)
class TermTable:
    a: float
    entries: Tuple[Tuple[int, float], ...]

    @property
    def terms(self) -> Tuple[float, ...]:
        return tuple(t for _, t in self.entries)


@dataclass(frozen=True)
class PartialSumTable:
    a_values: Tuple[float, ...]
    checkpoints: Tuple[int, ...]
    sums: Tuple[Tuple[float, ...], ...]  # sums[i][j] = S_{checkpoints[j]} at a_values[i]

    def row(self, a: float) -> Tuple[float, ...]:
        return self.sums[self.a_values.index(a)]


@dataclass(frozen=True)
class ScanPoint:
    a: float
    series_root: float
    oracle_root: float
    abs_error: float
    m_used: int
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _raw_terms(a: float, count: int, coeffs: Optional[CoefficientTable]) -> List[float]:
    if a == 0:
        raise DomainError("K0 terms are undefined at a = 0")
    if coeffs is None:
        coeffs = table_for(5 * max(count - 1, 1))
    return [k0_term(m, a, coeffs) for m in range(count)]


def k0_term_table(a: float, m_max: int, coeffs: Optional[CoefficientTable] = None) -> TermTable:
    """T_0..T_{m_max} of K0 at ``a``, T_0 = 1, with no cancellation guard."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    terms = _raw_terms(float(a), m_max + 1, coeffs)
    return TermTable(float(a), tuple(enumerate(terms)))


def partial_sums(
    a_values: Sequence[float],
    checkpoints: Sequence[int] = DEFAULT_CHECKPOINTS,
    coeffs: Optional[CoefficientTable] = None,
) -> PartialSumTable:
    """S_N = T_0 + ... + T_{N-1} for every a and every checkpoint N.

    Terms are added one at a time in ascending m with plain floating-point
    addition, so for |a| near or below 1 the sums carry the full
    cancellation noise of the high-order terms.
    """
    checkpoints = tuple(int(n) for n in checkpoints)
    if not checkpoints or min(checkpoints) < 1:
        raise ValueError(f"checkpoints must be positive, got {checkpoints}")
    a_values = tuple(float(a) for a in a_values)
    wanted = set(checkpoints)
    rows = []
    for a in a_values:
        running = 0.0
        found = {}
        for n, term in enumerate(_raw_terms(a, max(checkpoints), coeffs), start=1):
            running += term
            if n in wanted:
                found[n] = running
        rows.append(tuple(found[n] for n in checkpoints))
    return PartialSumTable(a_values, checkpoints, tuple(rows))


def log_grid(a_min: float, a_max: float, count: int) -> List[float]:
    if count == 1:
        return [float(a_min)]
    lo, hi = math.log(a_min), math.log(a_max)
    grid = [math.exp(lo + (hi - lo) * i / (count - 1)) for i in range(count)]
    grid[0], grid[-1] = float(a_min), float(a_max)
    return grid


def accuracy_scan(
    a_min: float,
    a_max: float,
    count: int,
    policy: Optional[TruncationPolicy] = None,
) -> List[ScanPoint]:
    """Unpolished series root against a bisection oracle on a log-spaced grid.

    A solver failure at one grid point is recorded in ``ScanPoint.error``
    and the scan carries on. A single point (``count=1``) is allowed when
    a_min == a_max.
    """
    if not a_min > 1:
        raise DivergenceError(f"scan needs a_min > 1 for the series method, got {a_min!r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if a_max < a_min or (count > 1 and a_max == a_min):
        raise ValueError(f"need a_max > a_min for count > 1, got [{a_min}, {a_max}]")
    points = []
    for a in log_grid(a_min, a_max, count):
        oracle = solve_bisection(a, ORACLE_TOL).root
        try:
            report = solve_series(a, policy, polish=False)
        except BringQuinticError as exc:
            points.append(ScanPoint(a, math.nan, oracle, math.nan, 0, f"{exc.kind}: {exc}"))
            continue
        points.append(
            ScanPoint(
                a,
                report.root,
                oracle,
                abs(report.root - oracle),
                max(report.ultraradicals.m_used),
            )
        )
    return points


def terms_vs_error(
    a: float,
    m_values: Sequence[int],
    base_policy: Optional[TruncationPolicy] = None,
) -> List[Tuple[int, float]]:
    """Unpolished series error against bisection as the outer-term cap grows."""
    if not a > 1:
        raise DivergenceError(f"terms_vs_error needs a > 1, got {a!r}")
    base = base_policy or TruncationPolicy()
    oracle = solve_bisection(a, ORACLE_TOL).root
    out = []
    for m in m_values:
        policy = TruncationPolicy(m, base.rel_term_tol, base.cancellation_guard)
        root = solve_series(a, policy, polish=False).root
        out.append((m, abs(root - oracle)))
    return out
