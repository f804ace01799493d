import math
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bring_quintic.coefficients import generate_coefficients
from bring_quintic.errors import CapacityError, DivergenceError, DomainError
from bring_quintic.ultraradicals import (
    SERIES_OFFSETS,
    StopReason,
    TruncationPolicy,
    evaluate_ultraradicals,
    inner_alternating_sum,
    k0_term,
)

from oracles import exact_c, exact_inner, reduced_series_coefficient

EPS = sys.float_info.epsilon


@pytest.mark.parametrize(
    "m, offset, expected",
    [
        (1, 1, 0.025536),
        (2, 1, 0.001496322048),
        (2, 0, 0.0019183616),
        (1, -3, 0.2),
    ],
)
def test_inner_sum_examples(m, offset, expected):
    assert inner_alternating_sum(m, offset) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("index", range(5))
@pytest.mark.parametrize("m", range(1, 11))
def test_general_form_matches_direct_reduction(index, m):
    # Exact check of the closed general form against reducing y^k mod y^5 + b y - b.
    offset = SERIES_OFFSETS[index]
    if index == 0:
        formula = (-1) ** m * exact_inner(m, offset)
    else:
        formula = (-1) ** (m + 1) * exact_inner(m + 1, offset)
    assert formula == reduced_series_coefficient(index, m)


@pytest.mark.parametrize("offset", SERIES_OFFSETS)
@pytest.mark.parametrize("m", range(1, 16))
def test_float_inner_sum_within_rounding_bound(m, offset):
    exact = exact_inner(m, offset)
    got = inner_alternating_sum(m, offset)
    # Each c_k carries at most ~k ulp from the recurrence; C(m-1, n) sums to 2^(m-1).
    c_max = float(exact_c(4 * m + offset))
    bound = 2 ** (m - 1) * c_max * (5 * m + 2) * EPS
    assert abs(got - float(exact)) <= bound


@pytest.mark.parametrize("m", range(1, 13))
def test_k1_identity_holds_exactly_per_power(m):
    # Coefficient of a^(-4m): K1 gives (-1)^(m+1) D(m+1, -3), -0.2*K0 gives -0.2 (-1)^m D(m, 1).
    assert exact_inner(m + 1, -3) == Fraction(1, 5) * exact_inner(m, 1)


def test_capacity_error_for_short_table():
    table = generate_coefficients(20)
    with pytest.raises(CapacityError) as info:
        inner_alternating_sum(5, 1, table)
    assert info.value.required_index == 25
    with pytest.raises(CapacityError):
        evaluate_ultraradicals(3.0, TruncationPolicy(m_max=14), table)


def test_invalid_m():
    with pytest.raises(ValueError):
        inner_alternating_sum(0, 1)


@pytest.mark.parametrize(
    "m, expected, tol",
    [(1, -0.025536, 1e-15), (2, 0.001496322, 1e-9), (5, -5.23045e-07, 1e-11)],
)
def test_k0_term_examples(m, expected, tol):
    assert k0_term(m, 1.0) == pytest.approx(expected, abs=tol)


def test_k0_term_zero_is_one():
    assert k0_term(0, 3.0) == 1.0
    with pytest.raises(DomainError):
        k0_term(1, 0.0)


@pytest.mark.parametrize("a", [1.5, 2.0, 10.0])
@pytest.mark.parametrize("m", range(1, 15))
def test_k0_term_scaling(a, m):
    scaled = k0_term(m, 1.0) * a ** (-4 * m)
    assert abs(k0_term(m, a) - scaled) <= 2 * math.ulp(scaled)


@pytest.mark.parametrize("a", [1.2, 1.5, 3.0, -1.2])
def test_terms_decay_before_noise_floor(a):
    for m in range(1, 11):
        assert abs(k0_term(m + 1, a)) < abs(k0_term(m, a))


@pytest.mark.parametrize("m", range(1, 13))
def test_coefficient_magnitude_dominance(m):
    k2, k3, k4 = (abs(inner_alternating_sum(m, off)) for off in (-2, -1, 0))
    assert k2 > k3 > k4


def test_worked_example_values():
    u = evaluate_ultraradicals(9.09375, TruncationPolicy(m_max=3))
    expected = (0.999996266, -6.047824804, -0.079999488, -0.047999629, -0.033599719)
    for got, want in zip(u.values, expected):
        assert got == pytest.approx(want, abs=1e-6)


def test_huge_a_reduces_to_leading_terms():
    u = evaluate_ultraradicals(1e12)
    assert 1 - 1e-15 <= u.K0 <= 1
    assert u.K4 == pytest.approx(-0.0336, abs=1e-12)
    assert u.K2 == pytest.approx(-0.08, abs=1e-12)
    assert u.K3 == pytest.approx(-0.048, abs=1e-12)
    assert u.K1 == pytest.approx(-(1e12 ** 0.8) - 0.2, rel=1e-15)
    assert all(r is StopReason.TOLERANCE for r in u.stop_reason)


def test_k0_at_one_and_a_half():
    assert evaluate_ultraradicals(1.5).K0 == pytest.approx(0.995013473, abs=1e-8)


@pytest.mark.parametrize("a", [1.5, 2.0, 9.09375, 100.0])
def test_k1_identity_numerically(a):
    u = evaluate_ultraradicals(a, TruncationPolicy(m_max=14))
    assert abs(u.K1 + math.exp(0.8 * math.log(a)) + 0.2 * u.K0) <= 1e-9


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1.5, max_value=1e6))
def test_k1_identity_property(a):
    u = evaluate_ultraradicals(a)
    assert abs(u.K1 - (-(a ** 0.8) - 0.2 * u.K0)) <= 1e-9 * (1 + abs(u.K1))


@pytest.mark.parametrize("a", [1.0, 0.5, 0.0, -1.0, -0.3])
def test_divergence_gate(a):
    with pytest.raises(DivergenceError):
        evaluate_ultraradicals(a)


def test_negative_a_needs_symmetry():
    with pytest.raises(DomainError) as info:
        evaluate_ultraradicals(-3.0)
    assert not isinstance(info.value, DivergenceError)


def test_non_finite_a():
    with pytest.raises(DomainError):
        evaluate_ultraradicals(math.inf)


def test_cancellation_guard_stops_near_one():
    guarded = evaluate_ultraradicals(1.0001, TruncationPolicy(m_max=40))
    assert StopReason.CANCELLATION_GUARD in guarded.stop_reason
    assert max(guarded.m_used) < 40
    raw = evaluate_ultraradicals(1.0001, TruncationPolicy(m_max=40, cancellation_guard=False))
    assert StopReason.M_MAX in raw.stop_reason


def test_m_max_caps_terms():
    u = evaluate_ultraradicals(1.2, TruncationPolicy(m_max=2))
    assert u.m_used == (2, 2, 2, 2, 2)
    assert all(r is StopReason.M_MAX for r in u.stop_reason)


@pytest.mark.parametrize("kwargs", [{"m_max": 0}, {"rel_term_tol": 0.0}, {"rel_term_tol": -1.0}])
def test_policy_validation(kwargs):
    with pytest.raises(ValueError):
        TruncationPolicy(**kwargs)


def test_set_to_dict_round_trip_fields():
    d = evaluate_ultraradicals(2.0).to_dict()
    assert set(d) == {"a", "K0", "K1", "K2", "K3", "K4", "m_used", "stop_reason"}
    assert all(isinstance(r, str) for r in d["stop_reason"])
