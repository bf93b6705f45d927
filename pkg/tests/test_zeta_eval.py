import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from zetalab.errors import DomainError, NumericalFailure, PoleError, SingularityError
from zetalab.gamma import gamma
from zetalab.zeta_eval import (
    EMParams,
    EvalResult,
    Method,
    default_em_params,
    em_zeta,
    em_zeta_values,
    eta_series,
    integral_zeta,
    tail_bound,
    tail_integral,
    truncated_zeta,
    zeta_from_eta,
)

ZETA2 = math.pi**2 / 6


def test_gamma_against_mpmath():
    rng = np.random.default_rng(1)
    for _ in range(300):
        z = complex(rng.uniform(-4.5, 6), rng.uniform(-40, 40))
        ref = oracles.gamma(z)
        assert abs(gamma(z) - ref) <= 1e-12 * abs(ref)
    assert gamma(5) == pytest.approx(24, rel=1e-14)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_emparams_validation():
    assert EMParams(10).j == 5
    with pytest.raises(DomainError):
        EMParams(0)
    with pytest.raises(DomainError):
        EMParams(10, m=13)
    with pytest.raises(DomainError):
        EMParams(10, j=11)


def test_eval_result_rejects_negative_bound():
    with pytest.raises(NumericalFailure):
        EvalResult(1j, Method.EM, -1.0, False)


# -- eta ----------------------------------------------------------------------

def test_eta_closed_forms():
    assert eta_series(1, 10**6).value.real == pytest.approx(math.log(2), abs=1e-10)
    assert eta_series(2, 10**6).value.real == pytest.approx(ZETA2 / 2, abs=1e-12)
    r = eta_series(2, 10**6)
    assert r.method is Method.ETA and not r.rigorous


def test_eta_vanishes_at_first_zero():
    assert abs(eta_series(complex(0.5, 14.134725)).value) < 1e-3
    assert abs(zeta_from_eta(complex(0.5, 14.134725)).value) < 1e-5


@pytest.mark.parametrize("terms", [2, 5, 101])
def test_eta_term_validation(terms):
    with pytest.raises(DomainError):
        eta_series(0.5, terms)


def test_eta_domain():
    with pytest.raises(DomainError):
        eta_series(complex(0, 3))
    with pytest.raises(DomainError):
        eta_series(complex(float("nan"), 1))


def test_zeta_from_eta_values():
    assert zeta_from_eta(2).value.real == pytest.approx(ZETA2, abs=1e-9)
    z = zeta_from_eta(0.5).value
    assert z.real == pytest.approx(-1.4603545, abs=1e-7)
    assert abs(z - em_zeta(0.5).value) < 1e-8


@pytest.mark.parametrize("k", [0, 1, -3])
def test_zeta_from_eta_excluded_points(k):
    s = complex(1, 2 * math.pi * k / math.log(2))
    with pytest.raises(SingularityError):
        zeta_from_eta(s, 1000)
    with pytest.raises(SingularityError):
        integral_zeta(s)


# -- Euler-Maclaurin ----------------------------------------------------------

def test_em_known_values():
    assert abs(em_zeta(2, EMParams(50, 10)).value - ZETA2) < 1e-12
    assert abs(em_zeta(-2, EMParams(50, 10)).value) < 1e-10
    assert abs(em_zeta(-4).value) < 1e-10


@pytest.mark.parametrize("N,m", [(50, 8), (100, 10), (200, 12)])
def test_em_negative_axis_stable_across_params(N, m):
    assert abs(em_zeta(0, EMParams(N, m)).value + 0.5) < 1e-10
    assert abs(em_zeta(-1, EMParams(N, m)).value + 1 / 12) < 1e-10


def test_em_against_mpmath_in_strip():
    rng = np.random.default_rng(2)
    for _ in range(50):
        s = complex(rng.uniform(-3, 3), rng.uniform(-60, 60))
        ref = oracles.zeta(s)
        r = em_zeta(s)
        assert abs(r.value - ref) < 1e-10 * max(1.0, abs(ref))
        assert abs(r.value - ref) <= r.error_bound


def test_em_errors():
    with pytest.raises(PoleError):
        em_zeta(1)
    with pytest.raises(DomainError):
        em_zeta(-20, EMParams(50, 10))


def test_em_default_params():
    assert default_em_params(complex(0.5, 14.1)) == EMParams(50, 10)
    assert default_em_params(complex(0.5, 70.2)) == EMParams(142, 10)
    assert default_em_params(-4).N == 8


def test_em_reports_heuristic_bound():
    r = em_zeta(complex(0.5, 20), EMParams(20, 3))
    assert not r.rigorous and r.method is Method.EM
    assert abs(r.value - oracles.zeta(complex(0.5, 20))) <= r.error_bound


def test_em_vector_matches_scalar():
    s = np.array([0.5 + 3j, 0.7 - 12j, 2.0 + 0j])
    vec = em_zeta_values(s, 60, 10)
    for z, v in zip(s, vec):
        assert v == pytest.approx(em_zeta(z, EMParams(60, 10)).value, abs=1e-14)


EULER_GAMMA = 0.5772156649015329


def test_pole_residue():
    # (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2)
    for h in (1e-2, 1e-3, 1e-4):
        s = 1 + h
        assert abs((s - 1) * em_zeta(s).value - (1 + EULER_GAMMA * h)) < 0.1 * h * h
    assert abs(1e-4 * em_zeta(1 + 1e-4).value - 1) < 6e-5


# -- integral -------------------------------------------------------------------

def test_integral_values():
    assert abs(integral_zeta(2).value - ZETA2) < 1e-8
    assert abs(integral_zeta(3).value - 1.2020569031595942) < 1e-8
    s = complex(0.5, 1)
    assert abs(integral_zeta(s).value - em_zeta(s).value) < 1e-7


def test_integral_large_ordinate():
    # rotated contour keeps accuracy where the real-axis integrand cancels to ~e^{-pi t/2}
    for t in (15.0, 30.0, -45.0):
        s = complex(0.6, t)
        assert abs(integral_zeta(s).value - oracles.zeta(s)) < 1e-10


def test_integral_small_sigma():
    s = complex(0.05, 3)
    assert abs(integral_zeta(s).value - oracles.zeta(s)) < 1e-10


def test_integral_validation():
    with pytest.raises(DomainError):
        integral_zeta(complex(-0.1, 2))
    with pytest.raises(DomainError):
        integral_zeta(2, quad_points=32)


# -- floor-function tail --------------------------------------------------------

def test_tail_bound_examples():
    assert tail_bound(0.5, 4) == pytest.approx(0.5, rel=1e-15)
    assert tail_bound(complex(0.5, 14), 10**6) == pytest.approx(
        math.hypot(0.5, 14) / (0.5 * 1000), rel=1e-12)
    values = [tail_bound(complex(0.7, 3), N) for N in (1, 2, 5, 10, 100)]
    assert values == sorted(values, reverse=True)
    with pytest.raises(DomainError):
        tail_bound(complex(0, 1), 3)


@pytest.mark.parametrize("N", [10, 50, 200])
def test_truncated_form_plus_tail_is_zeta(N):
    rng = np.random.default_rng(N)
    for _ in range(10):
        s = complex(rng.uniform(0.1, 2), rng.uniform(-30, 30))
        lhs = truncated_zeta(s, N) - tail_integral(s, N)
        assert abs(lhs - em_zeta(s).value) < 1e-8


def test_tail_decays():
    mags = [abs(tail_integral(2, N)) for N in (10, 100, 1000, 10000)]
    assert mags == sorted(mags, reverse=True)
    assert mags[-1] < 1e-4


def test_tail_domain():
    with pytest.raises(DomainError):
        tail_integral(complex(-0.5, 1), 10)


# -- properties -----------------------------------------------------------------

strip = st.builds(complex, st.floats(0.05, 0.99), st.floats(-40, 40))


@settings(max_examples=40, deadline=None)
@given(s=strip)
def test_conjugate_symmetry(s):
    for fn in (em_zeta, lambda z: zeta_from_eta(z, 2000), lambda z: integral_zeta(z, 64)):
        try:
            a, b = fn(s).value, fn(s.conjugate()).value
        except DomainError:
            continue
        assert abs(b - a.conjugate()) <= 1e-12 * abs(a)


@settings(max_examples=20, deadline=None)
@given(s=st.builds(complex, st.floats(0.5, 0.99), st.floats(-30, 30)))
def test_cross_agreement_within_bounds(s):
    em = em_zeta(s)
    eta = zeta_from_eta(s)
    integ = integral_zeta(s)
    for a, b in ((em, eta), (em, integ), (eta, integ)):
        gap = abs(a.value - b.value)
        assert gap <= a.error_bound + b.error_bound
        assert gap < 1e-6
