import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gauss_ramanujan import ramanujan
from gauss_ramanujan.ramanujan import MAX_PERIOD, orthogonality_defect, ramanujan_sum, sequence, totient


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _von_sterneck(R, m):
    # S_R(m) = sum over d | gcd(R, m) of mu(R/d) d
    g = math.gcd(R, m)
    return sum(_mobius(R // d) * d for d in range(1, g + 1) if g % d == 0)


@given(st.integers(1, 60), st.integers(0, 500))
def test_matches_divisor_formula(R, m):
    assert ramanujan_sum(R, m) == pytest.approx(_von_sterneck(R, m), abs=1e-9)


def test_large_argument_keeps_phase():
    assert ramanujan_sum(7, 7 * 10**15) == pytest.approx(6.0, abs=1e-9)
    assert ramanujan_sum(7, 7 * 10**15 + 1) == pytest.approx(-1.0, abs=1e-9)


@pytest.mark.parametrize("k, phi", [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (9, 6), (10, 4), (36, 12), (97, 96)])
def test_totient_values(k, phi):
    assert totient(k) == phi


@given(st.integers(1, 2000))
def test_totient_brute_force(k):
    assert totient(k) == sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)


def test_totient_domain():
    with pytest.raises(ValueError):
        totient(0)


@pytest.mark.parametrize("R", [0, -3, MAX_PERIOD + 1])
def test_period_domain(R):
    with pytest.raises(ValueError):
        ramanujan.ramanujan_sums(R, [0])


def test_listed_sequences():
    assert sequence(1).raw == (1.0,)
    assert sequence(2).raw == (1.0, -1.0)
    assert sequence(3).raw == (2.0, -1.0, -1.0)
    assert sequence(4).raw == (2.0, 0.0, -2.0, 0.0)
    assert sequence(3).listed_form == (1.0, -0.5, -0.5)
    assert sequence(2).weights == pytest.approx((1 / math.sqrt(2), -1 / math.sqrt(2)), abs=1e-16)


@given(st.integers(1, 200))
def test_unit_norm(R):
    assert np.linalg.norm(sequence(R).weights) == pytest.approx(1.0, abs=1e-14)


@given(st.integers(1, 40), st.integers(1, 40))
def test_orthogonality(R1, R2):
    if R1 == R2:
        with pytest.raises(ValueError):
            orthogonality_defect(R1, R2)
    else:
        assert abs(orthogonality_defect(R1, R2)) <= 1e-8
