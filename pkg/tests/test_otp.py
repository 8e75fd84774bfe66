import numpy as np
import pytest

from circleorth import measure as M
from circleorth.algebra import LaurentPolynomial
from circleorth.otp import build_otp, coefficients, orthonormality_residual, otp_expansion_check, trig_view

# (a, b, beta, iota, jmath, varsigma, zeta) for n = 1, 2, 3 by 30-digit quadrature Gram-Schmidt
ORACLE = {
    "bs05": [(0.61237243569579452, 0.61237243569579452, 0, 0.5, 0, 0, 0),
             (0.61237243569579452, 0.61237243569579452, 0, 0.5, 0, 0, 0.5),
             (0.61237243569579452, 0.61237243569579452, 0, 0.5, 0, 0, 0.5)],
    "fourier08": [(0.58309518948453005, 0.70710678118654752, 0, 0.4, 0, 0, 0),
                  (0.6183469424008423, 0.64807406984078602, 0, 0.58823529411764706, 0, 0, 0.4),
                  (0.62879616362110177, 0.63620901028035178, 0, 0.52307692307692308, 0, 0, 0.47619047619047619)],
    "asym": [(0.66988805034871312, 0.70710678118654752, 0.15, 0.2, 0, 0, 0),
             (0.691009326436316, 0.67304343483987606, 0.022137158142323479, 0.22284122562674095, 0,
              -0.10027855153203343, 0.2),
             (0.6841975338414124, 0.67910278982880449, -0.0039556354497539181, 0.20342879219587579,
              0.035603929345570262, -0.039986478002607814, 0.23735952897046842)],
}


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_frozen_coefficients(key, bs05, asym):
    m = {"bs05": bs05, "fourier08": M.fourier([1.0, 0.4]), "asym": asym}[key]
    o = build_otp(m, 3)
    got = np.array([[o.a[n], o.b[n], o.beta[n], o.iota[n], o.jmath[n], o.varsigma[n], o.zeta[n]]
                    for n in (1, 2, 3)])
    assert np.allclose(got, ORACLE[key], atol=1e-13)


def test_lebesgue_values():
    o = build_otp(M.uniform(), 4)
    assert np.allclose(o.a[1:], 2 ** -0.5) and np.allclose(o.b[1:], 2 ** -0.5)
    for k, v in coefficients(o).items():
        if k not in ("a", "b"):
            assert np.allclose(v, 0)


@pytest.mark.parametrize("idx", range(7))
def test_orthonormality_to_level_10(suite, idx):
    m = suite[idx]
    assert orthonormality_residual(build_otp(m, 10), m) < 1e-10


def test_expansions(suite):
    for m in suite:
        for r in otp_expansion_check(build_otp(m, 6), m):
            assert r.passed, (m.name, r)


def test_real_on_circle(asym):
    o = build_otp(asym, 4)
    th = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    S, P = trig_view(o, th)
    assert S.shape == (5, 64)
    # sigma_1 is a combination of 1, sin, cos; pi_1 of 1 and sin only
    assert abs(o.pi[1].coeff(1) + o.pi[1].coeff(-1)) < 1e-14
    assert isinstance(o.sigma[1], LaurentPolynomial)


def test_sine_processed_first(asym):
    # b_1 comes from sin alone; with cos first it would also absorb <sin, cos>
    o = build_otp(asym, 1)
    s = LaurentPolynomial.sin_basis(1)
    b2 = asym.inner_r(s, s) - asym.integrate(s) ** 2
    assert np.isclose(o.b[1] ** 2, b2.real, atol=1e-14)
