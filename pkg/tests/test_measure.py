import numpy as np
import pytest

from circleorth import measure as M
from circleorth.algebra import LaurentPolynomial
from circleorth.errors import InsufficientMomentsError, MeasureError, TrivialMeasureError
from circleorth.opuc import build_opuc


def test_uniform_moments():
    m = M.uniform()
    assert m.tau_moment(0) == 1
    assert np.allclose(m.tau_moment(np.arange(1, 30)), 0)


def test_bernstein_szego_single_alpha_is_poisson_kernel(bs05):
    # weight 0.75 / (1.25 - cos theta) has Fourier coefficients 0.5^|k|
    k = np.arange(-20, 21)
    assert np.allclose(bs05.tau_moment(k), 0.5 ** np.abs(k), atol=1e-14)
    th = np.linspace(0, 2 * np.pi, 50)
    assert np.allclose(bs05.weight(th), 0.75 / (1.25 - np.cos(th)))


def test_fourier_weight_moments():
    m = M.fourier([1.0, 0.4])
    assert np.isclose(m.tau_moment(0), 1)
    assert np.isclose(m.tau_moment(1), 0.4) and np.isclose(m.tau_moment(-1), 0.4)
    assert abs(m.tau_moment(2)) < 1e-15


def test_atoms_enter_moments():
    m = M.uniform_plus_atoms([(np.pi / 2, 0.25)])
    assert np.isclose(m.total_mass, 1)
    assert np.isclose(m.tau_moment(1), 0.25j)
    assert np.isclose(m.integrate(LaurentPolynomial.monomial(-2)), -0.25)


def test_inner_products():
    m = M.uniform()
    z = LaurentPolynomial.monomial(1)
    assert np.isclose(m.inner_c(z, z), 1)
    assert np.isclose(m.inner_r(z, z), 0)  # bilinear, no conjugation
    assert np.isclose(m.inner_r(z, z.reflect()), 1)


def test_bernstein_szego_reproduces_alphas():
    al = [0.3 + 0.1j, -0.2, 0.15j]
    s = build_opuc(M.bernstein_szego(al), 6)
    assert np.allclose(s.alpha, al + [0, 0, 0], atol=1e-13)


def test_errors():
    with pytest.raises(MeasureError):
        M.fourier([1.0, 0.6])  # 1 + 1.2 cos is negative somewhere
    with pytest.raises(MeasureError):
        M.uniform_plus_atoms([(0, 0.7), (1, 0.4)])
    with pytest.raises(InsufficientMomentsError):
        M.uniform().tau_moment(10 ** 6)
    with pytest.raises(TrivialMeasureError):
        build_opuc(M.atomic([(0, 0.5), (1, 0.5)]), 3)


def test_measure_from_dict():
    m = M.measure_from_dict({"weight": {"kind": "bernstein_szego", "alphas": [[0.3, 0.1], "-0.2", 0.0]},
                             "atoms": [{"theta": 1.0, "mass": 0.1}], "quadrature_points": 1024})
    assert m.quadrature_points == 1024 and len(m.atoms) == 1
    assert np.isclose(m.total_mass, 1)
    assert M.parse_complex("0.3+0.1i") == 0.3 + 0.1j
    with pytest.raises(MeasureError):
        M.measure_from_dict({"weight": {"kind": "nope"}})
