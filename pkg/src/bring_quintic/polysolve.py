"""Closed-form roots of real polynomials of degree 1 to 4.

The quartic is solved by Ferrari's method: shift to a depressed quartic,
take the largest real root of the resolvent cubic, split into two
quadratics and solve those. The cubic uses Cardano's formula when it has one
real root and the trigonometric form when it has three. Every solver returns
the largest-magnitude real root it can compute directly and obtains the
others by deflation, which keeps the product-of-roots relation intact.

Ferrari's shift loses small roots when another root is orders of magnitude
larger. ``solve_quartic(..., safeguard=True)`` repairs such roots with Newton
steps on the original polynomial and, failing that, by deflating the
dominant root. It is off by default so the closed-form result is what callers
see; the quintic solver polishes on its own terms.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

DEFAULT_IMAG_TOL = 1e-9
# Relative residuals (|p(z)| over the largest term at |z|) for the quartic safeguards.
_REFINE_BELOW = 64 * sys.float_info.epsilon
_ACCEPT = 1e-10


@dataclass(frozen=True)
class PolynomialRealCoeffs:
    """Real coefficients, highest degree first."""

    coefficients: Tuple[float, ...]

    def __init__(self, coefficients: Sequence[float]):
        coeffs = tuple(float(c) for c in coefficients)
        if not 2 <= len(coeffs) <= 5:
            raise ValueError(f"degree must be 1..4, got {len(coeffs) - 1}")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError(f"coefficients must be finite, got {coeffs}")
        if coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * z + c
        return acc

    def monic(self) -> Tuple[float, ...]:
        lead = self.coefficients[0]
        return tuple(c / lead for c in self.coefficients[1:])


@dataclass(frozen=True)
class RootSet:
    roots: Tuple[complex, ...]
    max_residual: float

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def to_dict(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "max_residual": self.max_residual,
        }


def _root_set(p: PolynomialRealCoeffs, roots: Sequence[complex]) -> RootSet:
    roots = tuple(complex(z) for z in roots)
    residual = max(abs(p(z)) for z in roots)
    return RootSet(roots, residual)


def _quadratic_roots(a: float, b: float, c: float) -> List[complex]:
    # Exact discriminant, so real/complex classification is never a rounding accident.
    disc = float(Fraction(b) ** 2 - 4 * Fraction(a) * Fraction(c))
    if disc >= 0:
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        if q == 0:
            return [0j, 0j]
        return [complex(q / a), complex(c / q)]
    re = -b / (2 * a)
    im = abs(math.sqrt(-disc) / (2 * a))
    return [complex(re, im), complex(re, -im)]


def _cubic_real_root(b: float, c: float, d: float) -> float:
    """One real root of x**3 + b x**2 + c x + d.

    With three real roots this is the largest in magnitude. With one real
    root it is that root.
    """
    shift = b / 3
    p = c - b * shift
    q = (2 * b * b * b / 27 - b * c / 3) + d
    if p == 0 and q == 0:
        return -shift
    half_q = q / 2
    third_p = p / 3
    disc = half_q * half_q + third_p * third_p * third_p
    if disc > 0 or third_p >= 0:
        w = -half_q - math.copysign(math.sqrt(max(disc, 0.0)), half_q)
        if w == 0:
            # q = 0 with p >= 0: t = 0 is the real root.
            return -shift
        u = math.copysign(abs(w) ** (1 / 3), w)
        v = -third_p / u
        x_real = u + v - shift
        # Complex pair: -(u+v)/2 - shift +- i*sqrt(3)/2*(u - v).
        re = -(u + v) / 2 - shift
        im = math.sqrt(3) / 2 * (u - v)
        modulus_sq = re * re + im * im
        if d != 0 and modulus_sq > x_real * x_real:
            # A real root smaller than the pair cancels against the shift;
            # the product of roots recovers it accurately.
            return -d / modulus_sq
        return x_real
    rho = math.sqrt(-third_p)
    rho3 = rho * rho * rho
    if rho3 == 0:
        # p and q so small that disc underflowed; t^3 = -q is all that is left.
        return math.copysign(abs(q) ** (1 / 3), -q) - shift
    arg = max(-1.0, min(1.0, -half_q / rho3))
    theta = math.acos(arg) / 3
    # Pick by magnitude after undoing the shift; a small root recovered as
    # t - shift would carry the cancellation error into the deflation.
    candidates = [2 * rho * math.cos(theta - 2 * math.pi * k / 3) - shift for k in range(3)]
    return max(candidates, key=abs)


def _cubic_roots(b: float, c: float, d: float) -> List[complex]:
    if d == 0:
        return [0j, *_quadratic_roots(1.0, b, c)]
    x1 = _cubic_real_root(b, c, d)
    if abs(x1) < sys.float_info.min:
        # Subnormal x1 has lost its relative precision; plain synthetic division.
        linear = b + x1
        return [complex(x1), *_quadratic_roots(1.0, linear, c + x1 * linear)]
    # Quotient x^2 + L x + C. C from the product of roots is always accurate.
    # L forward (b + x1) errs by about eps |x1|, backward ((C - c) / x1) by
    # about eps max(|C|, |c|) / |x1|; take the smaller.
    const = -d / x1
    if x1 * x1 < max(abs(const), abs(c)):
        linear = b + x1
    else:
        linear = (const - c) / x1
    return [complex(x1), *_quadratic_roots(1.0, linear, const)]


def _quartic_roots(b: float, c: float, d: float, e: float, safeguard: bool = False) -> List[complex]:
    if e == 0:
        # Exact zero root; shifting first would smear a multiple root at 0.
        return [0j, *_cubic_roots(b, c, d)]
    if not safeguard:
        return _ferrari_roots(b, c, d, e)
    monic = (1.0, b, c, d, e)
    roots = [_refine(monic, z) for z in _ferrari_roots(b, c, d, e)]
    worst = max(_relative_residual(monic, z) for z in roots)
    if worst <= _ACCEPT:
        return roots
    # Roots spread over many orders of magnitude: the depressing shift wipes
    # out the small ones. Deflating by the largest root is stable instead.
    z1 = max(roots, key=abs)
    shared = [z1] if z1.imag == 0 else [z1, z1.conjugate()]
    others = list(roots)
    for z in shared:
        others.remove(min(others, key=lambda w: abs(w - z)))
    deflated = [_refine(monic, z) for z in _deflated_roots(monic, z1)]

    # The dominant roots are shared; only the rest is compared.
    def largest_residual(zs):
        return max(abs(_horner_with_derivative(monic, z)[0]) for z in zs)

    if largest_residual(deflated) < largest_residual(others):
        return shared + deflated
    return roots


def _deflated_roots(monic: Sequence[float], z1: complex) -> List[complex]:
    """Roots of p / (x - z1), or of p / ((x - z1)(x - conj z1)) for complex z1.

    Backward deflation (from the constant term) is the stable direction when
    z1 is the largest root.
    """
    _, b, c, d, e = monic
    if z1.imag == 0:
        x1 = z1.real
        d1 = -e / x1
        c1 = (d1 - d) / x1
        b1 = (c1 - c) / x1
        return _cubic_roots(b1, c1, d1)
    # Quotient by x^2 - s x + t with s = 2 Re(z1), t = |z1|^2.
    s, t = 2 * z1.real, abs(z1) ** 2
    c1 = e / t
    b1 = (d + s * c1) / t
    return _quadratic_roots(1.0, b1, c1)


def _ferrari_roots(b: float, c: float, d: float, e: float) -> List[complex]:
    shift = b / 4
    b2 = b * b
    p = c - 3 * b2 / 8
    q = d - b * c / 2 + b2 * b / 8
    r = e - b * d / 4 + b2 * c / 16 - 3 * b2 * b2 / 256

    # Resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0, in monic form.
    resolvent = _cubic_roots(p, p * p / 4 - r, -q * q / 8)
    m = max(z.real for z in resolvent if z.imag == 0)

    scale = max(math.sqrt(abs(p)), math.sqrt(math.sqrt(abs(r))))
    if m <= 0 or abs(q) <= sys.float_info.epsilon * scale ** 3:
        # Biquadratic: y^4 + p y^2 + r = 0. A q below the rounding level of
        # y^4 would only drive m into underflow and make q / (2 s) meaningless.
        ys = []
        for z in _quadratic_roots(1.0, p, r):
            w = cmath.sqrt(z)
            ys.extend([w, -w])
    else:
        s = math.sqrt(2 * m)
        half = q / (2 * s)
        beta_minus = p / 2 + m - half
        beta_plus = p / 2 + m + half
        # beta_plus * beta_minus = r; recover the smaller one from the product.
        if abs(beta_plus) >= abs(beta_minus):
            if beta_plus != 0:
                beta_minus = r / beta_plus
        else:
            beta_plus = r / beta_minus
        ys = _quadratic_roots(1.0, s, beta_minus) + _quadratic_roots(1.0, -s, beta_plus)
    return [complex(y.real - shift, y.imag) for y in ys]


def _refine(coeffs: Sequence[float], z: complex, steps: int = 8) -> complex:
    """Newton steps on the unshifted polynomial, only for roots that need them.

    A root far smaller than the others loses digits to the depressing shift.
    Steps are taken while the residual is large compared with the terms of
    the polynomial at |z| and each step reduces it. Horner with real
    coefficients is exactly conjugate-symmetric, so pairs stay paired.
    """
    value, deriv = _horner_with_derivative(coeffs, z)
    for _ in range(steps):
        if abs(value) <= _REFINE_BELOW * _term_scale(coeffs, z) or deriv == 0:
            break
        candidate = z - value / deriv
        if z.imag == 0:
            candidate = complex(candidate.real, 0.0)
        new_value, new_deriv = _horner_with_derivative(coeffs, candidate)
        if not abs(new_value) < abs(value):
            break
        z, value, deriv = candidate, new_value, new_deriv
    return z


def _term_scale(coeffs: Sequence[float], z: complex) -> float:
    """Largest |coefficient * z**power|: the size rounding errors are measured against."""
    mag = abs(z)
    degree = len(coeffs) - 1
    return max(abs(cf) * mag ** (degree - i) for i, cf in enumerate(coeffs))


def _relative_residual(coeffs: Sequence[float], z: complex) -> float:
    value, _ = _horner_with_derivative(coeffs, z)
    return abs(value) / _term_scale(coeffs, z)


def _horner_with_derivative(coeffs: Sequence[float], z: complex) -> Tuple[complex, complex]:
    value = deriv = 0j
    for cf in coeffs:
        deriv = deriv * z + value
        value = value * z + cf
    return value, deriv


def solve_quadratic(p: PolynomialRealCoeffs) -> RootSet:
    """Both roots of a quadratic.

    The larger-magnitude root comes from the sign-matched discriminant form
    and the other from the product of roots, avoiding cancellation.
    """
    if p.degree != 2:
        raise ValueError(f"expected degree 2, got {p.degree}")
    a, b, c = p.coefficients
    return _root_set(p, _quadratic_roots(a, b, c))


def solve_cubic(p: PolynomialRealCoeffs) -> RootSet:
    if p.degree != 3:
        raise ValueError(f"expected degree 3, got {p.degree}")
    return _root_set(p, _cubic_roots(*p.monic()))


def solve_quartic(p: PolynomialRealCoeffs, safeguard: bool = False) -> RootSet:
    """All four roots of a real quartic by Ferrari's method.

    Args:
        p: A degree-4 polynomial.
        safeguard: Repair roots whose residual is poor compared with the
            size of the polynomial's terms (Newton on p, then deflation of
            the dominant root). Off by default, in which case the roots are
            exactly what the closed form gives.

    Returns:
        The four roots with the worst residual |p(z)| in ``max_residual``.
    """
    if p.degree != 4:
        raise ValueError(f"expected degree 4, got {p.degree}")
    return _root_set(p, _quartic_roots(*p.monic(), safeguard=safeguard))


def solve_polynomial(p: PolynomialRealCoeffs) -> RootSet:
    if p.degree == 1:
        a, b = p.coefficients
        return _root_set(p, [complex(-b / a)])
    return {2: solve_quadratic, 3: solve_cubic, 4: solve_quartic}[p.degree](p)


def real_roots_in_open_interval(
    rs: RootSet, lo: float, hi: float, imag_tol: float = DEFAULT_IMAG_TOL
) -> List[float]:
    """Real parts of the numerically real roots lying strictly inside (lo, hi).

    A root counts as real when |imag| <= imag_tol * (1 + |real|).
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    if imag_tol < 0:
        raise ValueError("imag_tol must be non-negative")
    picked = [
        z.real
        for z in rs.roots
        if abs(z.imag) <= imag_tol * (1 + abs(z.real)) and lo < z.real < hi
    ]
    return sorted(picked)
