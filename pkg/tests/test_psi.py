import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmrad.psi import (
    CATALOG,
    DomainError,
    H_psi,
    PsiSpec,
    circle_min_modulus,
    circle_min_real,
    convexity_radius,
    extremal_convexity_function,
    extremal_hpsi,
    hpsi_coefficients,
    hpsi_prime_closed,
    hpsi_prime_series,
    psi_eval,
    psi_prime,
    psi_series,
)
from harmrad.series import reciprocal
from oracles import hpsi_by_recurrence, kappa_exp_hpsi, psi_coefficients

NAMES = [s.name for s in CATALOG]


@pytest.mark.parametrize("spec", CATALOG, ids=NAMES)
def test_psi_series_matches_mpmath_taylor(spec):
    ours = psi_series(spec, 20).coeffs
    assert np.allclose(ours.imag, 0)
    assert np.allclose(ours.real, psi_coefficients(spec.name, 20), rtol=1e-11, atol=1e-13)


@pytest.mark.parametrize("spec", CATALOG, ids=NAMES)
def test_hpsi_matches_recurrence(spec):
    p = psi_coefficients(spec.name, 30)
    ref = hpsi_by_recurrence(p, 30)
    assert np.allclose(extremal_hpsi(spec, 30).coeffs.real, ref, rtol=1e-10, atol=1e-13)


def test_kappa_exp_bell_numbers():
    assert np.allclose(extremal_hpsi(PsiSpec.kappa_exp(), 40).coeffs.real, kappa_exp_hpsi(40), rtol=1e-12)


def test_koebe_coefficients():
    c = extremal_hpsi(PsiSpec.janowski(1, -1), 25).coeffs.real
    assert np.allclose(c, np.arange(26))


@pytest.mark.parametrize("spec", CATALOG, ids=NAMES)
def test_log_derivative_identity(spec):
    """z h'/h = psi coefficientwise (both sides divided by z)."""
    h = extremal_hpsi(spec, 32)
    zhp_over_z = h.derive()
    h_over_z = h.coeffs[1:]
    from harmrad.series import PowerSeries

    ratio = zhp_over_z * reciprocal(PowerSeries(h_over_z))
    assert ratio.allclose(psi_series(spec, 31), rtol=1e-11, atol=1e-11)


@pytest.mark.parametrize("spec", CATALOG, ids=NAMES)
def test_hpsi_prime_closed_vs_series(spec):
    for r in np.linspace(0, 0.5, 11):
        assert hpsi_prime_closed(spec, r) == pytest.approx(float(hpsi_prime_series(spec, np.array([r]))[0]), rel=1e-10, abs=1e-10)


def test_adaptive_truncation_grows_with_radius():
    s = PsiSpec.janowski(1, -1)
    assert hpsi_coefficients(s, 0.6).size > hpsi_coefficients(s, 0.2).size


@pytest.mark.parametrize("spec", CATALOG, ids=NAMES)
def test_psi_prime_matches_difference(spec):
    z = 0.3 + 0.2j
    h = 1e-6
    fd = (psi_eval(spec, z + h) - psi_eval(spec, z - h)) / (2 * h)
    assert abs(psi_prime(spec, z) - fd) < 1e-8


def test_parse_and_names():
    assert PsiSpec.parse("janowski:1,-1") == PsiSpec.janowski(1, -1)
    assert PsiSpec.parse("power:0.5").name == "power:0.5"
    assert str(PsiSpec.lemniscate()) == "lemniscate"
    for bad in ("nope", "janowski:1", "janowski:-1,1", "power:2", "diskm:0.4", "lemniscate:1"):
        with pytest.raises(ValueError):
            PsiSpec.parse(bad)


def test_domain_check():
    with pytest.raises(DomainError):
        psi_eval(PsiSpec.exponential(), 1.0)


def test_circle_minimum_at_zero_radius():
    assert circle_min_modulus(PsiSpec.exponential(), 0.0).value == 1.0


@pytest.mark.parametrize("r", [0.1, 0.35, 0.7])
def test_known_circle_minima(r):
    assert circle_min_modulus(PsiSpec.exponential(), r).value == pytest.approx(math.exp(-r), abs=1e-12)
    assert circle_min_modulus(PsiSpec.lemniscate(), r).value == pytest.approx(math.sqrt(1 - r), abs=1e-12)
    assert circle_min_real(PsiSpec.janowski(1, -1), r).value == pytest.approx((1 - r) / (1 + r), abs=1e-12)


@pytest.mark.parametrize("spec", [PsiSpec.lemniscate(), PsiSpec.sigmoid(), PsiSpec.janowski(1, -1)], ids=str)
def test_closed_convexity_bound_not_above_extremal(spec):
    for r in (0.1, 0.2, 0.3):
        closed = H_psi(spec, r)
        assert closed.sharp
        th = np.linspace(0, 2 * np.pi, 4001)
        ext = extremal_convexity_function(spec, r * np.exp(1j * th)).min()
        assert closed.value <= ext + 1e-9


def test_koebe_convexity_radius():
    rc = convexity_radius(PsiSpec.janowski(1, -1))
    assert rc.value == pytest.approx(2 - math.sqrt(3), abs=1e-11)
    assert rc.sharp


def test_fallback_bound_is_labelled():
    b = H_psi(PsiSpec.sine(), 0.2)
    assert not b.sharp


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CATALOG), st.floats(0.01, 0.9))
def test_circle_min_bounded_by_samples(spec, r):
    th = np.linspace(0, 2 * np.pi, 997)
    sampled = np.abs(psi_eval(spec, r * np.exp(1j * th))).min()
    assert circle_min_modulus(spec, r).value <= sampled + 1e-12
