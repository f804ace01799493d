"""Acceptance criteria, one test each, at the stated tolerances.

Every check returns (ok, detail); the test prints one PASS/FAIL line and then
asserts. The lines are also collected in ``LINES`` and repeated at the end of
the pytest run (see conftest.py). Run directly with ``python tests/test_acceptance.py``
for the verdict lines alone.
"""

import contextlib
import io
import math
import random
import time

import pytest

from bring_quintic.cli import main
from bring_quintic.coefficients import coefficient_closed_form, generate_coefficients
from bring_quintic.diagnostics import k0_term_table, partial_sums
from bring_quintic.polysolve import PolynomialRealCoeffs, solve_quartic
from bring_quintic.solver import (
    bring_radical_coefficient,
    solve_bisection,
    solve_bring_radical,
    solve_newton,
    solve_series,
)
from bring_quintic.ultraradicals import TruncationPolicy, evaluate_ultraradicals

import published as pub

LINES = []


def _rel(got, want):
    return abs(got - want) / abs(want)


def ac1_coefficient_table():
    out = io.StringIO()
    start = time.perf_counter()
    with contextlib.redirect_stdout(out):
        code = main(["tables", "c", "--max-k", "36"])
    elapsed = time.perf_counter() - start
    rows = [line.split(",") for line in out.getvalue().splitlines()[1:]]
    values = [float(v) for _, v in rows]
    worst = max(_rel(g, w) for g, w in zip(values, pub.C_TABLE))
    ok = code == 0 and len(values) == 36 and worst <= 1e-12 and elapsed < 1.0
    return ok, f"36 rows, worst rel err {worst:.2e} (<= 1e-12), {elapsed:.3f} s (< 1 s)"


def ac2_ultraradicals():
    u = evaluate_ultraradicals(pub.WORKED_A, TruncationPolicy(m_max=3))
    errors = [abs(g - w) for g, w in zip(u.values, pub.WORKED_K)]
    return max(errors) <= 1e-6, f"worst abs err {max(errors):.2e} (<= 1e-6)"


def ac3_quartic_ratios():
    u = evaluate_ultraradicals(pub.WORKED_A, TruncationPolicy(m_max=3))
    ratios = (u.K0 / u.K4, u.K1 / u.K4, u.K2 / u.K4, u.K3 / u.K4)
    errors = [abs(g - w) for g, w in zip(ratios, pub.WORKED_RATIOS)]
    return max(errors) <= 1e-5, f"worst abs err {max(errors):.2e} (<= 1e-5)"


def ac4_worked_root():
    r = solve_series(pub.WORKED_A, polish=False)
    dx = abs(r.root - pub.WORKED_ROOT)
    dy = abs(r.scaled_root - pub.WORKED_SCALED_ROOT)
    ok = dx <= 1e-9 and dy <= 1e-9 and not r.polished
    return ok, f"x={r.root!r} (err {dx:.1e}), x/a={r.scaled_root!r} (err {dy:.1e})"


def ac5_term_table():
    terms = k0_term_table(1.0, 12).terms
    errors = {m: _rel(terms[m], pub.K0_TERMS_AT_ONE[m]) for m in range(1, 13)}
    bad = {m: e for m, e in errors.items() if e > 1e-6}
    detail = "all m=1..12 within 1e-6 rel" if not bad else "over 1e-6 rel at " + ", ".join(
        f"m={m} ({e:.1e})" for m, e in bad.items()
    )
    return not bad, detail


def ac6a_partial_sums_convergent():
    table = partial_sums([1.5, 1.2, 1.0])
    errors = [
        abs(got - want)
        for a in (1.5, 1.2, 1.0)
        for got, want in zip(table.row(a), pub.K0_PARTIAL_SUMS[a])
    ]
    return max(errors) <= 1e-7, f"|a| in {{1.5, 1.2, 1}}: worst abs err {max(errors):.2e} (<= 1e-7)"


def ac6b_partial_sums_divergent():
    s11, s21, s31, s41 = partial_sums([0.85]).row(0.85)
    ordered = s41 > s31 > s21 > s11
    ok = ordered and s41 > 100
    return ok, (
        f"|a|=0.85: S11={s11:.10g} S21={s21:.10g} S31={s31:.10g} S41={s41:.10g}; "
        f"ordering {'holds' if ordered else 'fails'}, S41 > 100 {'holds' if s41 > 100 else 'fails'}"
    )


def ac7_oracle_equivalence():
    lo, hi = math.log(1.1), math.log(1000.0)
    grid = [math.exp(lo + (hi - lo) * i / 99) for i in range(100)]
    start = time.perf_counter()
    worst = 0.0
    for a in grid:
        series = solve_series(a, polish=False).root
        oracle = solve_bisection(a).root
        worst = max(worst, abs(series - oracle) / max(1.0, abs(oracle)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 10.0
    return ok, f"100 points, worst scaled diff {worst:.1e} (<= 1e-8), {elapsed:.2f} s (< 10 s)"


def ac8_newton():
    r = solve_newton(pub.WORKED_A, x0=1.0)
    ok = r.residual <= 1e-12 and r.terms_or_iterations <= 10
    return ok, f"{r.terms_or_iterations} iterations (<= 10), residual {r.residual:.1e} (<= 1e-12)"


def ac9_bring_radical():
    coeffs = tuple(bring_radical_coefficient(k) for k in range(6))
    diffs = {a: abs(solve_bring_radical(a).root - solve_bisection(a).root) for a in (0.05, 0.1, 0.3, 0.5)}
    ok = coeffs == pub.BRING_RADICAL_COEFFICIENTS and max(diffs.values()) <= 1e-10
    return ok, f"coefficients {coeffs}, worst diff vs bisection {max(diffs.values()):.1e} (<= 1e-10)"


def _random_quartic_roots(rng):
    r = [rng.uniform(-10, 10) for _ in range(4)]
    kind = rng.randrange(3)
    if kind == 0:
        return [complex(x) for x in r]
    z = complex(r[0], r[1])
    if kind == 1:
        return [z, z.conjugate(), complex(r[2]), complex(r[3])]
    w = complex(r[2], r[3])
    return [z, z.conjugate(), w, w.conjugate()]


def _expand(roots):
    coeffs = [1 + 0j]
    for r in roots:
        coeffs = [u - r * v for u, v in zip(coeffs + [0], [0] + coeffs)]
    return [c.real for c in coeffs]


def ac10_property_suites():
    failures = []
    rng = random.Random(10)
    for _ in range(1000):
        coeffs = _expand(_random_quartic_roots(rng))
        p = PolynomialRealCoeffs(coeffs)
        roots = solve_quartic(p).roots
        scale = max(abs(c) for c in coeffs)
        if any(abs(p(z)) > 1e-8 * scale for z in roots):
            failures.append("quartic residual")
        if abs(sum(roots) + coeffs[1]) > 1e-9 * abs(coeffs[1]):
            failures.append("quartic Vieta sum")
        prod = roots[0] * roots[1] * roots[2] * roots[3]
        if abs(prod - coeffs[4]) > 1e-9 * abs(coeffs[4]):
            failures.append("quartic Vieta product")
        for z in roots:
            if z.imag != 0 and not any(
                w.real == z.real and abs(w.imag + z.imag) <= 2 * math.ulp(z.imag) for w in roots
            ):
                failures.append("quartic conjugates")
    for a in (1.5, 2.0, 9.09375, 50.0):
        if solve_series(-a).root != -solve_series(a).root:
            failures.append(f"odd symmetry at {a}")
    for i in range(200):
        a = 1.01 * 1.06 ** i
        for polish in (True, False):
            if not 0 < solve_series(a, polish=polish).scaled_root < 1:
                failures.append(f"scaled root bound at {a}")
    table = generate_coefficients(200)
    for k in range(1, 201):
        if abs(table[k] - coefficient_closed_form(k)) > 1e-15 * table[k]:
            failures.append(f"recurrence vs closed form at k={k}")
    unique = sorted(set(failures))
    detail = "quartic x1000, odd symmetry, scaled-root bound x400, recurrence k<=200 all green"
    return not unique, detail if not unique else "failed: " + "; ".join(unique[:5])


CRITERIA = [
    ("AC1", "coefficient table", ac1_coefficient_table),
    ("AC2", "ultraradical values", ac2_ultraradicals),
    ("AC3", "quartic ratios", ac3_quartic_ratios),
    ("AC4", "worked-example root", ac4_worked_root),
    ("AC5", "K0 term table", ac5_term_table),
    ("AC6a", "partial sums, |a| >= 1", ac6a_partial_sums_convergent),
    ("AC6b", "partial sums, |a| = 0.85", ac6b_partial_sums_divergent),
    ("AC7", "oracle equivalence", ac7_oracle_equivalence),
    ("AC8", "Newton comparison", ac8_newton),
    ("AC9", "Bring radical", ac9_bring_radical),
    ("AC10", "property suites", ac10_property_suites),
]


def _verdict(label, name, check):
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'}  {label} {name}: {detail}"
    LINES.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("label, name, check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(label, name, check):
    ok, line = _verdict(label, name, check)
    assert ok, line


if __name__ == "__main__":
    results = [_verdict(*criterion)[0] for criterion in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
