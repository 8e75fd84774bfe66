"""Monic orthogonal polynomials on the unit circle.

The system is built by the forward Szego recursion

    Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi_n^*(z),

with ``conj(alpha_n) = int tau Phi_n dmu / int Phi_n^* dmu`` read off the
moment table.  :func:`gram_schmidt_oracle` orthogonalizes the monomials
directly and never touches the recursion.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ONE, Z, LaurentPolynomial
from .errors import TrivialMeasureError
from .measure import CircleMeasure
from .report import IdentityResult

ALPHA_GUARD = 1e-13
TRIVIAL_GUARD = 1e-12


@dataclass(frozen=True)
class OpucSystem:
    """Monic OPUC ``Phi_0..Phi_N`` with their recursion data.

    ``alpha`` holds ``alpha_0..alpha_{N-1}``, ``kappa`` holds
    ``kappa_0..kappa_N`` and ``sublead[n]`` is ``a_{n+1,n}``, the coefficient
    of ``z^n`` in ``Phi_{n+1}`` (``n = 0..N-1``).
    """

    phi: tuple
    alpha: np.ndarray
    kappa: np.ndarray
    sublead: np.ndarray

    @property
    def N(self) -> int:
        return len(self.phi) - 1

    def reversed(self, n: int) -> LaurentPolynomial:
        return self.phi[n].reverse(n)

    def alpha_at(self, n: int) -> complex:
        """``alpha_n`` with the convention ``alpha_{-1} = -1``."""
        return -1.0 + 0j if n == -1 else complex(self.alpha[n])

    def orthonormal(self, n: int) -> LaurentPolynomial:
        return self.phi[n] * self.kappa[n]


def szego_recursion(alphas) -> list:
    """Monic ``Phi_0..Phi_N`` from Verblunsky coefficients ``alpha_0..alpha_{N-1}``."""
    phis = [ONE]
    for n, a in enumerate(alphas):
        phis.append(Z * phis[n] - np.conj(a) * phis[n].reverse(n))
    return phis


def orthonormal_from_verblunsky(alphas) -> LaurentPolynomial:
    """``phi_N = kappa_N Phi_N`` for the given Verblunsky coefficients."""
    alphas = np.asarray(alphas, dtype=complex)
    kappa = 1.0 / np.sqrt(np.prod(1.0 - np.abs(alphas) ** 2))
    return szego_recursion(alphas)[-1] * kappa


def _system_from_phis(phis, alphas) -> OpucSystem:
    alphas = np.asarray(alphas, dtype=complex)
    kappa = np.concatenate([[1.0], 1.0 / np.sqrt(np.cumprod(1.0 - np.abs(alphas) ** 2))])
    sublead = np.array([phis[n + 1].coeff(n) for n in range(len(phis) - 1)], dtype=complex)
    return OpucSystem(tuple(phis), alphas, kappa, sublead)


def _check_support(m: CircleMeasure, dim: int):
    if not m.has_weight and dim > len(m.atoms):
        raise TrivialMeasureError(
            f"trivial measure at this degree: {len(m.atoms)} atoms cannot "
            f"support a {dim}-dimensional orthogonal system")


def build_opuc(m: CircleMeasure, N: int) -> OpucSystem:
    """Monic OPUC up to degree ``N`` by the Szego recursion."""
    _check_support(m, N + 1)
    phis = [ONE]
    alphas = []
    for n in range(N):
        star = phis[n].reverse(n)
        abar = m.integrate(Z * phis[n]) / m.integrate(star)
        if abs(abar) >= 1 - TRIVIAL_GUARD:
            raise TrivialMeasureError(
                f"|alpha_{n}| = {abs(abar):.3g} is numerically 1; measure is trivial at degree {n + 1}")
        alphas.append(np.conj(abar))
        phis.append(Z * phis[n] - abar * star)
    return _system_from_phis(phis, alphas)


def gram_schmidt_oracle(m: CircleMeasure, N: int) -> OpucSystem:
    """Monic OPUC by classical Gram-Schmidt (two passes) on ``1, z, ..., z^N``.

    The Verblunsky coefficients are then read off as ``-conj(Phi_{n+1}(0))``.
    """
    _check_support(m, N + 1)
    phis = []
    norms = []
    for n in range(N + 1):
        p = LaurentPolynomial.monomial(n)
        for _ in range(2):
            for q, nq in zip(phis, norms):
                p = p - q * (m.inner_c(q, p) / nq)
        nrm = m.inner_c(p, p).real
        if nrm <= TRIVIAL_GUARD * max(norms[-1] if norms else 1.0, 1e-300):
            raise TrivialMeasureError(f"Gram matrix numerically singular at degree {n}")
        phis.append(p)
        norms.append(nrm)
    alphas = [-np.conj(phis[n + 1].coeff(0)) for n in range(N)]
    return _system_from_phis(phis, alphas)


def carath_schur_inputs(sys: OpucSystem) -> np.ndarray:
    return sys.alpha


def gram_matrix(sys: OpucSystem, m: CircleMeasure) -> np.ndarray:
    N = sys.N
    G = np.empty((N + 1, N + 1), dtype=complex)
    for i in range(N + 1):
        for j in range(N + 1):
            G[i, j] = m.inner_c(sys.phi[i], sys.phi[j])
    return G


def integral_identities(sys: OpucSystem, m: CircleMeasure, tol: float = 1e-8) -> list:
    """Moment-integral facts about ``Phi_n`` and ``Phi_n^*``.

    Returns residual records for ``int Phi_n^* dmu = kappa_n^-2``,
    ``int tau Phi_n dmu = alpha_n^-1 (kappa_n^-2 - kappa_{n+1}^-2)``,
    ``int tau Phi_n^* dmu = -a_{n+1,n}`` and
    ``int tau^2 Phi_n dmu = alpha_n^-1 (a_{n+2,n+1} - a_{n+1,n})``.
    The last two drop the normalizations; the ``-CORR`` records carry the
    factors ``kappa_n^-2`` and ``kappa_{n+1}^-2``.  Instances dividing by
    ``alpha_n`` are skipped when ``|alpha_n| < 1e-13``.
    """
    k2 = sys.kappa ** -2.0
    a_sub = sys.sublead
    phistar = IdentityResult("INT-PHISTAR", "int Phi_n^* dmu = kappa_n^-2", tol)
    zphi = IdentityResult("INT-ZPHI", "int tau Phi_n dmu = (kappa_n^-2 - kappa_{n+1}^-2)/alpha_n", tol)
    zstar = IdentityResult("INT-ZPHISTAR", "int tau Phi_n^* dmu = -a_{n+1,n}", tol)
    zstar_c = IdentityResult("INT-ZPHISTAR-CORR", "int tau Phi_n^* dmu = -a_{n+1,n} kappa_n^-2", tol)
    z2phi = IdentityResult("INT-Z2PHI", "int tau^2 Phi_n dmu = (a_{n+2,n+1} - a_{n+1,n})/alpha_n", tol)
    z2phi_c = IdentityResult("INT-Z2PHI-CORR", "int tau^2 Phi_n dmu = (a_{n+2,n+1} kappa_{n+1}^-2"
                             " - a_{n+1,n} kappa_n^-2)/alpha_n", tol)
    N = sys.N
    for n in range(N + 1):
        star = sys.reversed(n)
        phistar.add(n, m.integrate(star), k2[n])
        if n >= N:
            continue
        v = m.integrate(Z * star)
        zstar.add(n, v, -a_sub[n])
        zstar_c.add(n, v, -a_sub[n] * k2[n])
        a = sys.alpha[n]
        if abs(a) < ALPHA_GUARD:
            zphi.skip(n, "alpha~0")
        else:
            zphi.add(n, m.integrate(Z * sys.phi[n]), (k2[n] - k2[n + 1]) / a)
        if n + 1 < N:
            if abs(a) < ALPHA_GUARD:
                z2phi.skip(n, "alpha~0")
                z2phi_c.skip(n, "alpha~0")
            else:
                v = m.integrate(Z * Z * sys.phi[n])
                z2phi.add(n, v, (a_sub[n + 1] - a_sub[n]) / a)
                z2phi_c.add(n, v, (a_sub[n + 1] * k2[n + 1] - a_sub[n] * k2[n]) / a)
    return [phistar, zphi, zstar, zstar_c, z2phi, z2phi_c]


def szego_recursion_check(sys: OpucSystem, tol: float = 1e-12) -> list:
    """Coefficientwise residuals of the two Szego recursions."""
    fwd = IdentityResult("SZ-REC-FWD", "Phi_n = -conj(alpha_{n-1}) Phi_n^* + (kappa_{n-1}/kappa_n)^2 z Phi_{n-1}", tol)
    rev = IdentityResult("SZ-REC-REV", "Phi_n^* = Phi_{n-1}^* - alpha_{n-1} z Phi_{n-1}", tol)
    k = sys.kappa
    for n in range(1, sys.N + 1):
        a = sys.alpha[n - 1]
        rhs = -np.conj(a) * sys.reversed(n) + (k[n - 1] ** 2 / k[n] ** 2) * (Z * sys.phi[n - 1])
        fwd.add_poly(n, sys.phi[n], rhs)
        rhs = sys.reversed(n - 1) - a * (Z * sys.phi[n - 1])
        rev.add_poly(n, sys.reversed(n), rhs)
    return [fwd, rev]
