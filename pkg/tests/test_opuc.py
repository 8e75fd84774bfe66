import numpy as np
import pytest

from circleorth import measure as M
from circleorth.opuc import (build_opuc, gram_matrix, gram_schmidt_oracle, integral_identities,
                             orthonormal_from_verblunsky, szego_recursion, szego_recursion_check)

# Verblunsky coefficients from a 30-digit Toeplitz solve of the closed-form weights
ALPHA_FOURIER08 = [0.4, -0.19047619047619048, 0.094117647058823529, -0.046920821114369501,
                   0.023443223443223443, -0.011719465299395715]
ALPHA_ASYM = [0.2, -0.041666666666666667 - 0.15625j, 0.0038997214484679666 + 0.066852367688022284j,
              0.026569596480332812 - 0.02154898278326063j, -0.017407961880845447 + 0.0044429420002897571j,
              0.0074817356407214838 + 0.0039260404310277929j]


def test_frozen_alphas(asym):
    assert np.allclose(build_opuc(M.fourier([1.0, 0.4]), 6).alpha, ALPHA_FOURIER08, atol=1e-13)
    assert np.allclose(build_opuc(asym, 6).alpha, ALPHA_ASYM, atol=1e-13)


def test_lebesgue_is_monomials():
    s = build_opuc(M.uniform(), 5)
    for n in range(6):
        assert s.phi[n] == M.LaurentPolynomial.monomial(n)
    assert np.allclose(s.kappa, 1)


def test_kappa_from_alpha(bs05):
    s = build_opuc(bs05, 3)
    assert np.isclose(s.kappa[1], 1 / np.sqrt(0.75))
    assert np.allclose(s.kappa[1:], s.kappa[1])


@pytest.mark.parametrize("idx", range(7))
def test_orthogonality_to_degree_20(suite, idx):
    m = suite[idx]
    s = build_opuc(m, 20)
    G = gram_matrix(s, m)
    assert np.max(np.abs(G - np.diag(s.kappa ** -2.0))) < 1e-10


@pytest.mark.parametrize("idx", range(7))
def test_dual_path(suite, idx):
    m = suite[idx]
    a, b = build_opuc(m, 12), gram_schmidt_oracle(m, 12)
    for n in range(13):
        assert np.max(np.abs(a.phi[n].dense(0, n) - b.phi[n].dense(0, n))) < 1e-9


def test_szego_recursions(geometric):
    for r in szego_recursion_check(build_opuc(geometric, 15)):
        assert r.passed, r


def test_orthonormal_from_verblunsky_norm():
    phi = orthonormal_from_verblunsky([0.3, -0.2j])
    m = M.bernstein_szego([0.3, -0.2j])
    assert np.isclose(m.inner_c(phi, phi), 1)
    assert len(szego_recursion([0.1, 0.2])) == 3


def test_integral_identities(suite):
    for m in suite:
        rs = {r.id: r for r in integral_identities(build_opuc(m, 10), m)}
        for rid in ("INT-PHISTAR", "INT-ZPHI", "INT-ZPHISTAR-CORR", "INT-Z2PHI-CORR"):
            assert rs[rid].passed, (m.name, rs[rid])


def test_lebesgue_integral_guards():
    rs = {r.id: r for r in integral_identities(build_opuc(M.uniform(), 4), M.uniform())}
    assert rs["INT-ZPHI"].vacuous and len(rs["INT-ZPHI"].skipped) == 4
    assert rs["INT-ZPHISTAR"].passed


def test_sublead_integrals_need_kappa_factor(bs05):
    # int tau Phi_n^* dmu equals -a_{n+1,n} kappa_n^-2, not -a_{n+1,n}
    rs = {r.id: r for r in integral_identities(build_opuc(bs05, 6), bs05)}
    assert rs["INT-ZPHISTAR-CORR"].max_residual < 1e-14
    assert rs["INT-ZPHISTAR"].max_residual > 0.1
