import math

import pytest
from hypothesis import given, strategies as st

from parity600.golden import KAPPA, ONE, TAU, ZERO, GoldenNumber, mul, render, sign

PHI = (1 + math.sqrt(5)) / 2
small = st.integers(-500, 500)  # triple products stay inside the 2**31 guard
golden = st.builds(GoldenNumber, small, small)


@given(golden, golden, golden)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x
    assert x + (-x) == ZERO


@given(golden, golden)
def test_sign_is_multiplicative(x, y):
    assert sign(x * y) == sign(x) * sign(y)


@given(golden)
def test_sign_agrees_with_float(x):
    f = x.a + x.b * PHI
    if abs(f) > 1e-6:
        assert sign(x) == (1 if f > 0 else -1)
    assert float(x) == pytest.approx(f)


@given(golden, golden)
def test_order_is_total_and_compatible(x, y):
    assert (x < y) + (x == y) + (x > y) == 1
    if x <= y:
        assert x + TAU <= y + TAU


def test_defining_relations():
    assert TAU * TAU == TAU + ONE
    assert KAPPA == TAU - ONE
    assert TAU * KAPPA == ONE
    assert mul(KAPPA, KAPPA) == ONE - KAPPA


def test_sign_near_zero():
    # 8 - 5*tau is about -0.09; F_n - F_{n+1} tau alternates in sign
    assert sign(GoldenNumber(8, -5)) == -1
    assert sign(GoldenNumber(-13, 8)) == -1
    assert sign(GoldenNumber(21, -13)) == -1
    assert sign(GoldenNumber(34, -21)) == 1
    assert sign(ZERO) == 0


@pytest.mark.parametrize("tok, val", [("0", ZERO), ("1", ONE), ("t", TAU), ("-k", -KAPPA), ("2", ONE + ONE)])
def test_parse(tok, val):
    assert GoldenNumber.parse(tok) == val


@pytest.mark.parametrize("tok", ["x", "3t", "", "--1"])
def test_parse_rejects(tok):
    with pytest.raises(ValueError):
        GoldenNumber.parse(tok)


def test_render():
    assert render(TAU) == "τ"
    assert render(-ONE) == "−1"
    assert render(-TAU) == "−τ"
    assert render(KAPPA + KAPPA) == "2κ"


def test_overflow_is_detected():
    big = GoldenNumber(2**30, 2**30)
    with pytest.raises(OverflowError):
        big * big
