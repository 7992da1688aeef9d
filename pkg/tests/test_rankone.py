from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hoshift.errors import DomainError, IndicialCollisionError, ParameterPoleError
from hoshift.hyperfun import eval_F
from hoshift.rankone import (F_rank_one, classical_shift_check, frobenius_build, frobenius_eval,
                             gauss_2f1, order_for)
from hoshift.root_system import build_bc

from oracles import hyp2f1_mp, ode_F

# (k1, k2, lambda) = (2, 1, 2.7) at s = 0.3; ODE oracle and 50-digit 2F1 agree to 1e-15
FROB_GOLDEN = 0.83264146075583066055
# 2F1(2, 3; 4; 0.3), 50-digit series
GAUSS_GOLDEN = 1.6912822993293126226


def test_normalization_at_identity():
    fs = frobenius_build(2, 1, 2.7 + 0.3j, 60)
    assert fs.coeffs[0] == 1
    assert frobenius_eval(fs, 1.0)[0] == 1


def test_trivial_eigenfunction():
    fs = frobenius_build(0, 0, 0.0, 30)
    assert np.all(fs.coeffs[1:] == 0)


def test_zero_multiplicity_is_cosine():
    # k = 0: F = cosh(lambda x) in x = t/2; on the torus cos(lambda t / 2)
    for lam in (1j, 2.5, 0.7 + 0.4j):
        for t in (0.3, 1.0, 2.0):
            assert abs(F_rank_one(lam, 0, 0, np.cos(t)) - np.cos(lam * t / 2)) < 1e-13
    assert abs(F_rank_one(1j, 0, 0, np.cos(1.0)) - ode_F(0, 0, 1j, 1.0)) < 1e-11


def test_golden_value_and_oracles():
    v = F_rank_one(2.7, 2, 1, 0.3)
    ode = ode_F(2, 1, 2.7, np.arccos(0.3))
    gauss = hyp2f1_mp((2 / 2 + 1 + 2.7) / 2, (2 / 2 + 1 - 2.7) / 2, 2, 0.35)
    assert abs(ode - gauss) < 1e-10
    assert abs(v - FROB_GOLDEN) < 1e-14
    assert abs(v - ode) < 1e-10


@pytest.mark.parametrize("k1,k2,lam,t", [(2, 1, 2.7, 0.4), (4, 1, 1.3 + 0.8j, 1.1),
                                         (0.5, 1.5, 3.3, 2.2), (2, 3, 0.2j, 0.9)])
def test_compact_picture_against_ode(k1, k2, lam, t):
    v = F_rank_one(lam, k1, k2, np.cos(t))
    assert abs(v - ode_F(k1, k2, lam, t)) < 1e-10 * max(1, abs(v))


@pytest.mark.parametrize("k1,k2,lam,t", [(2, 1, 2.7, 0.8), (4, 1, 1.3 + 0.8j, 1.5)])
def test_noncompact_picture_against_ode(k1, k2, lam, t):
    v = F_rank_one(lam, k1, k2, np.cosh(t))
    assert abs(v - ode_F(k1, k2, lam, t, "noncompact")) < 1e-10 * abs(v)


def test_noncompact_matches_chamber_assembly():
    lam, m, t = 2.4 + 0.3j, (2, 0, 1), 0.8
    frob = F_rank_one(lam, 2, 1, np.cosh(t))
    ch = eval_F([lam], m, build_bc(1), [t / 2], 120).value
    assert abs(frob - ch) < 1e-9 * abs(frob)


def test_domain_and_collision_errors():
    fs = frobenius_build(2, 1, 1.5, 40)
    with pytest.raises(DomainError):
        frobenius_eval(fs, -0.95)
    with pytest.raises(IndicialCollisionError):
        frobenius_build(-3, 0, 1.2, 40)  # c = -1


def test_series_residual_is_beyond_truncation():
    """Exact rational check: L(m) on the truncated series only leaves order > M."""
    k1, k2, lam, M = Fraction(2), Fraction(1), Fraction(5, 2), 12
    rho = k1 / 2 + k2
    a, b, c = (rho + lam) / 2, (rho - lam) / 2, (1 + k1 + k2) / 2
    coeffs = [Fraction(1)]
    for j in range(M):
        coeffs.append(coeffs[-1] * (j + a) * (j + b) / ((j + 1) * (j + c)))
    # u(1-u) F'' + (c - (1 + rho) u) F' - ab F, coefficient by coefficient
    res = [Fraction(0)] * (M + 2)
    for j, cj in enumerate(coeffs):
        res[j] -= a * b * cj
        if j >= 1:
            res[j - 1] += c * j * cj
            res[j] -= (1 + rho) * j * cj
        if j >= 2:
            res[j - 1] += j * (j - 1) * cj
            res[j] -= j * (j - 1) * cj
    assert all(r == 0 for r in res[:M])
    assert res[M] != 0
    fs = frobenius_build(float(k1), float(k2), float(lam), M)
    assert np.allclose(fs.coeffs, [float(x) for x in coeffs], rtol=1e-14)


@given(st.floats(0.3, 5.0), st.floats(-2.0, 2.0), st.floats(0.05, 2.5), st.integers(1, 4))
def test_weyl_symmetry_in_lambda(re, im, t, q):
    lam = complex(re, im)
    k1, k2 = 2 * (q - 1), 1
    a = F_rank_one(lam, k1, k2, np.cos(t))
    b = F_rank_one(-lam, k1, k2, np.cos(t))
    assert abs(a - b) < 1e-10 * max(1, abs(a))


def test_evenness_via_ode_from_both_sides():
    for t in (0.5, 1.3):
        assert abs(ode_F(2, 1, 1.9, t) - ode_F(2, 1, 1.9, -t)) < 1e-9


def test_order_heuristic_grows_with_lambda():
    assert order_for(80, 0.8) > order_for(2, 0.8)


def test_gauss_2f1_examples():
    assert gauss_2f1(1.3, 2.2, 0.7, 0) == 1
    assert abs(gauss_2f1(1, 1, 2, 0.5) - 2 * np.log(2)) < 1e-15
    assert abs(gauss_2f1(2, 3, 4, 0.3) - GAUSS_GOLDEN) < 1e-14
    assert abs(hyp2f1_mp(2, 3, 4, 0.3) - GAUSS_GOLDEN) < 1e-17
    with pytest.raises(ParameterPoleError):
        gauss_2f1(1, 1, -2, 0.3)
    with pytest.raises(DomainError):
        gauss_2f1(1, 1, 2, 0.95)


params = st.complex_numbers(max_magnitude=4, allow_nan=False, allow_infinity=False)
zs = st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False)


@given(params, params, params.filter(lambda c: min(abs(c + n) for n in range(8)) > 0.1), zs)
def test_gauss_2f1_against_mpmath(a, b, c, z):
    ref = hyp2f1_mp(a, b, c, z)
    assert abs(gauss_2f1(a, b, c, z) - ref) < 1e-11 * max(1, abs(ref))


@pytest.mark.parametrize("a,b,c,z", [(1, 1, 2, 0.5), (2.5, -1.2, 3.7, 0.4), (0.3, 0.8, 1.4, 0.0)])
def test_classical_shift_examples(a, b, c, z):
    lhs, rhs = classical_shift_check(a, b, c, z)
    assert abs(lhs - rhs) < 1e-12
    if z == 0:
        assert lhs == rhs == a * b / c
