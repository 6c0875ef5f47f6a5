import math

import mpmath
import pytest

from relscott import (
    SCHWINGER_COEFFICIENT,
    Coupling,
    schwinger_shift,
    schwinger_shift_bruteforce,
    scott_coefficient,
    shift,
    zeta_double_sum_identity_check,
)
from relscott.scott_shift import direct_channel_sum

mpmath.mp.dps = 30

# |s(gamma)/gamma^2 - SCHWINGER_COEFFICIENT| <= K gamma^2 for gamma <= 0.3;
# K fitted once (observed max 0.297 at gamma=0.3) and frozen.
SMALL_GAMMA_K = 0.35


def test_schwinger_coefficient_value():
    ref = float(mpmath.zeta(3) - 5 * mpmath.pi**2 / 24)
    assert SCHWINGER_COEFFICIENT == pytest.approx(ref, rel=1e-14)
    assert SCHWINGER_COEFFICIENT == pytest.approx(-0.8541106804006887, rel=1e-14)


def test_schwinger_shift_values():
    assert schwinger_shift(1.0) == SCHWINGER_COEFFICIENT
    assert schwinger_shift(0.0) == 0.0
    assert schwinger_shift(0.5) == pytest.approx(SCHWINGER_COEFFICIENT / 4.0, rel=1e-15)
    assert schwinger_shift(Coupling(0.3)) == pytest.approx(0.09 * SCHWINGER_COEFFICIENT, rel=1e-15)
    with pytest.raises(ValueError):
        schwinger_shift(1.0001)


def test_bruteforce_l0_channel():
    # complete l=0 channel sums to -(zeta(3) - (3/4) zeta(4))
    ref = -(float(mpmath.zeta(3)) - 0.75 * float(mpmath.zeta(4)))
    got = schwinger_shift_bruteforce(1.0, 0, 4000)
    assert got == pytest.approx(ref, abs=1e-7)


def test_bruteforce_gamma_zero():
    assert schwinger_shift_bruteforce(0.0, 100, 100) == 0.0


def test_bruteforce_gamma_scaling():
    a = schwinger_shift_bruteforce(1.0, 40, 200)
    b = schwinger_shift_bruteforce(0.5, 40, 200)
    assert b == pytest.approx(a / 4.0, rel=1e-13)


def test_bruteforce_converges_to_closed_form():
    # truncation envelope: |bruteforce - closed form| <= 10/l_max at gamma=1
    for l_max in (50, 100, 200):
        got = schwinger_shift_bruteforce(1.0, l_max, 4000)
        assert abs(got - SCHWINGER_COEFFICIENT) <= 10.0 / l_max


def test_bruteforce_cutoff_validation():
    with pytest.raises(ValueError):
        schwinger_shift_bruteforce(0.5, -1, 100)
    with pytest.raises(ValueError):
        schwinger_shift_bruteforce(0.5, 10, 0)


def test_zeta_identity_s3():
    chk = zeta_double_sum_identity_check(3.0)
    ref = float(mpmath.zeta(2) - mpmath.zeta(3))
    assert chk.zeta_difference == pytest.approx(ref, rel=1e-13)
    assert chk.zeta_difference == pytest.approx(0.442877163689, abs=1e-12)
    assert abs(chk.double_sum - chk.zeta_difference) <= chk.tail_bound


def test_zeta_identity_s4():
    chk = zeta_double_sum_identity_check(4.0)
    assert chk.zeta_difference == pytest.approx(0.119733669448, abs=1e-12)
    assert abs(chk.double_sum - chk.zeta_difference) <= chk.tail_bound


def test_zeta_identity_large_s():
    # dominated by the m=n=1 diagonal term 2^-s
    chk = zeta_double_sum_identity_check(60.0)
    assert chk.double_sum == pytest.approx(2.0**-60, rel=1e-9)
    assert chk.zeta_difference == pytest.approx(2.0**-60, rel=1e-9)


def test_zeta_identity_domain():
    with pytest.raises(ValueError):
        zeta_double_sum_identity_check(2.0)


def test_shift_gamma_zero():
    res = shift(0.0)
    assert res.value == 0.0
    assert res.tail_estimate == 0.0


def test_shift_domain_errors():
    with pytest.raises(ValueError):
        shift(1.0)
    with pytest.raises(ValueError):
        shift(-0.1)
    with pytest.raises(ValueError):
        shift(0.5, 1e-11)
    with pytest.raises(ValueError):
        shift(0.5, 0.1)


def test_shift_negative_and_certified():
    for g in (0.05, 0.3, 0.6, 0.9, 0.99):
        res = shift(g, 1e-8)
        assert res.value < 0.0
        assert 0.0 <= res.tail_estimate <= res.target_tol
        assert res.l_max > 0 and res.n_max > 0


def test_shift_small_gamma_matches_schwinger():
    res = shift(0.01, 1e-10)
    assert res.value / 1e-4 == pytest.approx(-0.854, abs=2e-3)


def test_shift_small_gamma_consistency_constant():
    for g in (0.05, 0.1, 0.2, 0.3):
        res = shift(g, 1e-10)
        assert abs(res.value / g**2 - SCHWINGER_COEFFICIENT) <= SMALL_GAMMA_K * g**2


def test_shift_strong_coupling_limit():
    # 1/2 + s -> -1.91 as gamma -> 1 (approach is O(sqrt(1-gamma^2)))
    res = shift(1.0 - 1e-10, 1e-6)
    assert 0.5 + res.value == pytest.approx(-1.91, abs=0.02)


def test_shift_tail_containment():
    # a 1e-10 run is the reference; looser runs must contain it within
    # their reported tail estimates
    for g in (0.3, 0.7, 0.95):
        ref = shift(g, 1e-10)
        for tol in (1e-4, 1e-6, 1e-8):
            res = shift(g, tol)
            assert abs(res.value - ref.value) <= res.tail_estimate + ref.tail_estimate


def test_shift_tail_containment_near_one():
    # the j = 1/2 channels lose their gap as gamma -> 1; the certificate must
    # stay honest there too
    for g in (0.99, 0.999, 0.9999):
        ref = shift(g, 1e-9)
        res = shift(g, 1e-6)
        assert abs(res.value - ref.value) <= res.tail_estimate + ref.tail_estimate


def test_monotone_refinement_direct_sums():
    g = 0.6
    prev = 0.0
    for l_cut, n_cut in ((4, 50), (8, 100), (16, 200), (32, 400)):
        cur = direct_channel_sum(g, l_cut, n_cut)
        assert cur <= prev + 1e-15  # all added terms negative
        prev = cur


def test_monotone_refinement_reported_values():
    g = 0.8
    coarse = shift(g, 1e-4)
    fine = shift(g, 1e-8)
    assert abs(fine.value - coarse.value) <= coarse.tail_estimate


def test_shift_deterministic():
    a = shift(0.77, 1e-8)
    b = shift(0.77, 1e-8)
    assert a.value == b.value  # bit identical
    assert a.tail_estimate == b.tail_estimate
    assert (a.l_max, a.n_max) == (b.l_max, b.n_max)


def test_scott_coefficient():
    res = scott_coefficient(0.0)
    assert res.q == 0.5
    got = scott_coefficient(0.01, 1e-9)
    assert got.q == pytest.approx(0.5 - 0.854e-4, abs=3e-7)
    assert got.tail_estimate <= 1e-9
    # strictly decreasing in gamma
    qs = [scott_coefficient(g, 1e-8).q for g in (0.1, 0.3, 0.5, 0.7, 0.9)]
    assert all(a > b for a, b in zip(qs, qs[1:]))


def test_shift_accepts_coupling_or_float():
    a = shift(Coupling(0.4), 1e-8)
    b = shift(0.4, 1e-8)
    assert a.value == b.value


# 40-digit-arithmetic references (same channel structure, exact arithmetic,
# cutoffs L=600, N=3000 plus closed-form tails), frozen with their own
# residual envelopes estimated from cutoff-doubling deltas.
MP_REFERENCE = {
    0.2: (-0.03462488405782744, 1e-11),
    0.5: (-0.2342005734448872, 5e-10),
    0.9: (-1.100627560519426, 3e-9),
}


def test_shift_against_extended_precision_reference():
    for g, (ref, ref_err) in MP_REFERENCE.items():
        res = shift(g, 1e-8)
        assert abs(res.value - ref) <= res.tail_estimate + ref_err
