"""Ultraradical series K0..K4.

Substituting the binomial expansion of (1 - y)**(1/5) into the rearranged
quintic, with y = x/a, gives an infinite series in y. Reducing every power
y**5 and above with y**5 = a**-4 * (1 - y) leaves a quartic

    K4*y**4 + K3*y**3 + K2*y**2 + K1*y + K0 = 0

whose coefficients are series in a**-4:

    K0 = 1        + sum_{m>=1} (-1)**m a**(-4m)     D(m, +1)
    K1 = -a**(4/5) + sum_{m>=1} (-1)**m a**(-4(m-1)) D(m, -3)
    Kj =            sum_{m>=1} (-1)**m a**(-4(m-1)) D(m, j - 4)   (j = 2, 3, 4)

with the alternating binomial difference

    D(m, offset) = sum_{n=0}^{m-1} (-1)**n C(m-1, n) c_{4m+n+offset}.

D(m, .) is an (m-1)-th finite difference of a slowly decaying sequence, so
it cancels heavily as m grows. Near |a| = 1 the rounding error in the c_k,
amplified by up to 2**(m-1), overtakes the true value around m = 10..14.
The truncation policy exists to stop before that point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .coefficients import CoefficientTable, table_for
from .errors import DivergenceError, DomainError

# D(m, offset) offset for K0..K4
SERIES_OFFSETS = (1, -3, -2, -1, 0)


class StopReason(str, enum.Enum):
    TOLERANCE = "tolerance"
    CANCELLATION_GUARD = "cancellation_guard"
    M_MAX = "m_max"


@dataclass(frozen=True)
class TruncationPolicy:
    """How many outer terms of each K series to sum.

    Attributes:
        m_max: Hard cap on outer terms.
        rel_term_tol: Stop once |T_m| <= rel_term_tol * |partial sum|.
        cancellation_guard: Stop (without adding T_m) once |T_m| >= |T_{m-1}|,
            i.e. when rounding noise has started to dominate.
    """

    m_max: int = 14
    rel_term_tol: float = 1e-16
    cancellation_guard: bool = True

    def __post_init__(self):
        if isinstance(self.m_max, bool) or not isinstance(self.m_max, int) or self.m_max < 1:
            raise ValueError(f"m_max must be a positive integer, got {self.m_max!r}")
        if not self.rel_term_tol > 0:
            raise ValueError(f"rel_term_tol must be positive, got {self.rel_term_tol!r}")

    @property
    def required_capacity(self) -> int:
        return 5 * self.m_max


@dataclass(frozen=True)
class UltraradicalSet:
    """Evaluated K0..K4 at one value of a, with per-series truncation data."""

    a: float
    K0: float
    K1: float
    K2: float
    K3: float
    K4: float
    m_used: Tuple[int, int, int, int, int]
    stop_reason: Tuple[StopReason, StopReason, StopReason, StopReason, StopReason]

    @property
    def values(self) -> Tuple[float, float, float, float, float]:
        return (self.K0, self.K1, self.K2, self.K3, self.K4)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "K0": self.K0,
            "K1": self.K1,
            "K2": self.K2,
            "K3": self.K3,
            "K4": self.K4,
            "m_used": list(self.m_used),
            "stop_reason": [r.value for r in self.stop_reason],
        }


def inner_alternating_sum(m: int, offset: int, coeffs: Optional[CoefficientTable] = None) -> float:
    """D(m, offset) = sum_{n<m} (-1)**n C(m-1, n) c_{4m+n+offset}.

    Binomials are exact integers; the products are summed with math.fsum so
    the summation itself adds no error beyond one final rounding.

    Raises:
        ValueError: If m < 1 or the lowest index falls below 1.
        CapacityError: If the table lacks c_{5m-1+offset}.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if 4 * m + offset < 1:
        raise ValueError(f"offset {offset} reaches below c_1 at m={m}")
    if coeffs is None:
        coeffs = table_for(5 * m - 1 + offset)
    coeffs.require(5 * m - 1 + offset)
    base = 4 * m + offset
    terms = []
    for n in range(m):
        weight = float(math.comb(m - 1, n))
        term = weight * coeffs[base + n]
        terms.append(-term if n % 2 else term)
    return math.fsum(terms)


def k0_term(m: int, a: float, coeffs: Optional[CoefficientTable] = None) -> float:
    """m-th outer term of K0: (-1)**m a**(-4m) D(m, +1), with T_0 = 1.

    No truncation logic is applied here; for |a| near 1 and m beyond about
    12 the result is dominated by rounding noise.
    """
    if a == 0:
        raise DomainError("k0_term is undefined at a = 0")
    if m == 0:
        return 1.0
    sign = -1.0 if m % 2 else 1.0
    return sign * inner_alternating_sum(m, SERIES_OFFSETS[0], coeffs) * a ** (-4 * m)


def _sum_series(
    a: float,
    index: int,
    closed_term: float,
    policy: TruncationPolicy,
    coeffs: CoefficientTable,
) -> Tuple[float, int, StopReason]:
    offset = SERIES_OFFSETS[index]
    terms = []
    partial = closed_term
    previous = None
    reason = StopReason.M_MAX
    for m in range(1, policy.m_max + 1):
        power = 4 * m if index == 0 else 4 * (m - 1)
        sign = -1.0 if m % 2 else 1.0
        term = sign * inner_alternating_sum(m, offset, coeffs) * a ** (-power)
        if policy.cancellation_guard and previous is not None and abs(term) >= abs(previous):
            reason = StopReason.CANCELLATION_GUARD
            break
        terms.append(term)
        partial += term
        if abs(term) <= policy.rel_term_tol * abs(partial):
            reason = StopReason.TOLERANCE
            break
        previous = term
    return math.fsum([closed_term, *terms]), len(terms), reason


def evaluate_ultraradicals(
    a: float,
    policy: Optional[TruncationPolicy] = None,
    coeffs: Optional[CoefficientTable] = None,
) -> UltraradicalSet:
    """Evaluate K0..K4 at ``a`` under ``policy``.

    Only a > 1 is accepted. Negative a must be handled by the caller through
    the odd symmetry of x**5 + x, which keeps a**(4/5) on its real branch.

    Raises:
        DivergenceError: If |a| <= 1.
        DomainError: If a is negative or not finite.
        CapacityError: If an explicitly passed ``coeffs`` is too short for
            ``policy.m_max``. The default table is extended instead.
    """
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"a must be finite, got {a!r}")
    if abs(a) <= 1:
        raise DivergenceError(
            f"ultraradical series diverge numerically for |a| <= 1 (a={a!r}); "
            "use the newton or bisection method instead"
        )
    if a < 0:
        raise DomainError("evaluate_ultraradicals needs a > 0; apply x(-a) = -x(a) first")
    if policy is None:
        policy = TruncationPolicy()
    if coeffs is None:
        coeffs = table_for(policy.required_capacity)
    coeffs.require(policy.required_capacity)

    a45 = math.exp(0.8 * math.log(a))
    closed = (1.0, -a45, 0.0, 0.0, 0.0)
    values, used, reasons = [], [], []
    for index in range(5):
        value, m_used, reason = _sum_series(a, index, closed[index], policy, coeffs)
        values.append(value)
        used.append(m_used)
        reasons.append(reason)
    return UltraradicalSet(a, *values, m_used=tuple(used), stop_reason=tuple(reasons))
