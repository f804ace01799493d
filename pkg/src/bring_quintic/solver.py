"""Real root of x**5 + x = a.

``solve_series`` runs the ultraradical pipeline: evaluate K0..K4, normalize
the quartic in y = x/a, solve it in closed form and keep the root in (0, 1).
The other solvers reach the same root without the series and serve as
references for it.

f(x) = x**5 + x - a is odd in (x, a) and strictly increasing, so there is
exactly one real root, it has the sign of a, and root(-a) = -root(a).
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from .coefficients import CoefficientTable
from .errors import (
    ConvergenceError,
    DegenerateNormalizationError,
    DivergenceError,
    DomainError,
    SelectionError,
)
from .polysolve import (
    DEFAULT_IMAG_TOL,
    PolynomialRealCoeffs,
    RootSet,
    real_roots_in_open_interval,
    solve_quartic,
)
from .ultraradicals import TruncationPolicy, UltraradicalSet, evaluate_ultraradicals

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100
DEFAULT_BRING_TERMS = 200

# 4 / (5 * 5**(1/4)): radius of convergence of the Bring radical series.
BRING_RADICAL_RADIUS = 4 / (5 * 5 ** 0.25)

# Known leading coefficients of BR(a) = a - a^5 + 5a^9 - 35a^13 + 285a^17 - 2530a^21 + ...
BRING_RADICAL_REFERENCE = (1, 1, 5, 35, 285, 2530)

_EPS = sys.float_info.epsilon


class Method(str, enum.Enum):
    SERIES = "series"
    NEWTON = "newton"
    BISECTION = "bisection"
    BRING_RADICAL = "bring_radical"


@dataclass(frozen=True)
class SolveRequest:
    a: float
    method: Method = Method.SERIES
    policy: TruncationPolicy = field(default_factory=TruncationPolicy)
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter!r}")


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve.

    ``unpolished_root`` is set by the series method and holds the root
    straight from the quartic, before any Newton correction.
    """

    root: float
    scaled_root: Optional[float]
    residual: float
    method: Method
    terms_or_iterations: int
    ultraradicals: Optional[UltraradicalSet] = None
    quartic_roots: Optional[RootSet] = None
    polished: bool = False
    unpolished_root: Optional[float] = None

    def to_dict(self, details: bool = False) -> dict:
        out = {
            "root": self.root,
            "scaled_root": self.scaled_root,
            "residual": self.residual,
            "method": self.method.value,
            "terms_or_iterations": self.terms_or_iterations,
            "polished": self.polished,
            "unpolished_root": self.unpolished_root,
        }
        if details:
            out["ultraradicals"] = self.ultraradicals.to_dict() if self.ultraradicals else None
            out["quartic_roots"] = self.quartic_roots.to_dict() if self.quartic_roots else None
        return out


def _quintic(x: float, a: float) -> float:
    x2 = x * x
    return (x2 * x2 * x + x) - a


def residual(x: float, a: float) -> float:
    """|x**5 + x - a|, always evaluated as ((x*x)**2 * x + x) - a."""
    return abs(_quintic(x, a))


def attainable_tol(tol: float, a: float) -> float:
    """``tol`` floored at the rounding level of evaluating the residual near |a|.

    Even the correctly rounded root leaves a residual of a few ulp of |a|, so
    for large |a| a fixed absolute target below that cannot be met.
    """
    return max(tol, 16 * _EPS * max(1.0, abs(a)))


def _scaled(x: float, a: float) -> Optional[float]:
    return None if a == 0 else x / a


def _check_finite(a: float) -> float:
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"a must be finite, got {a!r}")
    return a


def solve_series(
    a: float,
    policy: Optional[TruncationPolicy] = None,
    tol: float = DEFAULT_TOL,
    polish: bool = True,
    coeffs: Optional[CoefficientTable] = None,
) -> SolveReport:
    """Solve x**5 + x = a through the ultraradical quartic.

    The pipeline works on |a| and negates the root for a < 0. Among the
    quartic roots inside (0, 1) the one whose x = |a| * y has the smallest
    quintic residual is kept. If that residual exceeds ``tol`` and ``polish``
    is set, a single Newton step is applied and ``polished`` is reported.
    With ``polish=False`` the quartic root is returned as is and ``tol`` is
    not enforced.

    Raises:
        DivergenceError: If |a| <= 1.
        DegenerateNormalizationError: If |K4| < 1e-300.
        SelectionError: If no quartic root lies in (0, 1).
        ConvergenceError: If the polished residual still exceeds ``tol``.
    """
    a = _check_finite(a)
    if abs(a) <= 1:
        raise DivergenceError(
            f"series method requires |a| > 1, got a={a!r}; the ultraradical series "
            "diverge numerically for |a| <= 1, use newton or bisection"
        )
    sign = -1.0 if a < 0 else 1.0
    magnitude = abs(a)
    target = attainable_tol(tol, magnitude)

    ultra = evaluate_ultraradicals(magnitude, policy, coeffs)
    if abs(ultra.K4) < 1e-300:
        raise DegenerateNormalizationError(f"|K4| = {abs(ultra.K4)!r} is too small to normalize by")
    k4 = ultra.K4
    quartic = PolynomialRealCoeffs((1.0, ultra.K3 / k4, ultra.K2 / k4, ultra.K1 / k4, ultra.K0 / k4))
    roots = solve_quartic(quartic)
    candidates = real_roots_in_open_interval(roots, 0.0, 1.0, DEFAULT_IMAG_TOL)
    if not candidates:
        raise SelectionError(f"no quartic root in (0, 1) at a={a!r}", roots.roots)

    y = min(candidates, key=lambda t: residual(magnitude * t, magnitude))
    x = magnitude * y
    unpolished = x
    res = residual(x, magnitude)
    polished = False
    if polish and res > target:
        x = x - _quintic(x, magnitude) / (5 * x ** 4 + 1)
        polished = True
        res = residual(x, magnitude)
        if res > target:
            raise ConvergenceError(
                f"residual {res:.3e} above tol {target:.3e} after one Newton polish", sign * x
            )
    scaled = x / magnitude if polished else y
    return SolveReport(
        root=sign * x,
        scaled_root=scaled,
        residual=res,
        method=Method.SERIES,
        terms_or_iterations=max(ultra.m_used),
        ultraradicals=ultra,
        quartic_roots=roots,
        polished=polished,
        unpolished_root=sign * unpolished,
    )


def solve_newton(
    a: float,
    x0: Optional[float] = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SolveReport:
    """Newton iteration x <- x - f(x)/f'(x) on f(x) = x**5 + x - a.

    The default start sign(a) * max(1, |a|)**(1/5) lies on the far side of
    the root, where f is convex, so the iterates decrease monotonically in
    magnitude.

    Raises:
        ConvergenceError: If |f(x)| > tol after ``max_iter`` steps.
    """
    a = _check_finite(a)
    if x0 is None:
        x0 = math.copysign(max(1.0, abs(a)) ** 0.2, a) if a != 0 else 0.0
    target = attainable_tol(tol, a)
    x = float(x0)
    iterations = 0
    while True:
        fx = _quintic(x, a)
        if abs(fx) <= target:
            break
        if iterations >= max_iter:
            raise ConvergenceError(f"newton did not reach tol {target:.3e} in {max_iter} iterations", x)
        x -= fx / (5 * x ** 4 + 1)
        iterations += 1
    return SolveReport(
        root=x,
        scaled_root=_scaled(x, a),
        residual=abs(fx),
        method=Method.NEWTON,
        terms_or_iterations=iterations,
    )


def solve_bisection(a: float, tol: float = DEFAULT_TOL) -> SolveReport:
    """Bisection on [0, max(1, a)] (mirrored for a < 0).

    Halving stops once the bracket is no wider than ``tol`` and the better
    endpoint meets the residual target, or once the bracket cannot shrink in
    binary64. It always terminates.
    """
    a = _check_finite(a)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    target = attainable_tol(tol, a)
    lo, hi = (0.0, max(1.0, a)) if a >= 0 else (min(-1.0, a), 0.0)
    iterations = 0
    while True:
        best = min((lo, hi), key=lambda t: residual(t, a))
        if hi - lo <= tol and residual(best, a) <= target:
            break
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            break
        iterations += 1
        fm = _quintic(mid, a)
        if fm == 0:
            best = mid
            break
        if fm < 0:
            lo = mid
        else:
            hi = mid
    return SolveReport(
        root=best,
        scaled_root=_scaled(best, a),
        residual=residual(best, a),
        method=Method.BISECTION,
        terms_or_iterations=iterations,
    )


def bring_radical_coefficient(k: int) -> int:
    """|coefficient| of a**(4k+1) in BR(a): C(5k, k) / (4k + 1), an integer."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    numerator = math.comb(5 * k, k)
    quotient, remainder = divmod(numerator, 4 * k + 1)
    assert remainder == 0
    return quotient


_computed = tuple(bring_radical_coefficient(k) for k in range(len(BRING_RADICAL_REFERENCE)))
if _computed != BRING_RADICAL_REFERENCE:
    raise RuntimeError(f"Bring radical coefficients {_computed} disagree with {BRING_RADICAL_REFERENCE}")
del _computed


def solve_bring_radical(a: float, terms: int = DEFAULT_BRING_TERMS, tol: float = DEFAULT_TOL) -> SolveReport:
    """Sum the first ``terms`` terms of BR(a) = sum_k (-1)**k C(5k,k)/(4k+1) a**(4k+1).

    Consecutive terms are generated by their exact ratio so no huge integer
    ever becomes a float.

    Raises:
        DivergenceError: If |a| is not below the radius 4/(5 * 5**(1/4)).
        ConvergenceError: If the truncated sum misses ``tol``; raise ``terms``.
    """
    a = _check_finite(a)
    if abs(a) >= BRING_RADICAL_RADIUS:
        raise DivergenceError(
            f"Bring radical series diverges for |a| >= {BRING_RADICAL_RADIUS:.7f}, got a={a!r}"
        )
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    a4 = a ** 4
    term = a
    collected = [term]
    for k in range(terms - 1):
        ratio = (
            (5 * k + 1) * (5 * k + 2) * (5 * k + 3) * (5 * k + 4) * (5 * k + 5)
            / ((k + 1) * (4 * k + 2) * (4 * k + 3) * (4 * k + 4) * (4 * k + 5))
        )
        term = -term * ratio * a4
        if term == 0:
            break
        collected.append(term)
    x = math.fsum(collected)
    res = residual(x, a)
    target = attainable_tol(tol, a)
    if res > target:
        raise ConvergenceError(f"{len(collected)} Bring radical terms leave residual {res:.3e}", x)
    return SolveReport(
        root=x,
        scaled_root=_scaled(x, a),
        residual=res,
        method=Method.BRING_RADICAL,
        terms_or_iterations=len(collected),
    )


def solve(request: SolveRequest) -> SolveReport:
    if request.method is Method.SERIES:
        return solve_series(request.a, request.policy, request.tol)
    if request.method is Method.NEWTON:
        return solve_newton(request.a, tol=request.tol, max_iter=request.max_iter)
    if request.method is Method.BISECTION:
        return solve_bisection(request.a, request.tol)
    if request.method is Method.BRING_RADICAL:
        return solve_bring_radical(request.a, tol=request.tol)
    raise ValueError(f"unknown method {request.method!r}")
