"""Orthonormal Laurent (trigonometric) polynomials of the first class.

Gram-Schmidt under the bilinear form ``<f, g>_R = int f g dmu`` on the
ordered basis ``1, s_1, c_1, s_2, c_2, ...`` with

    s_n = (z^n - z^-n) / (2i),    c_n = (z^n + z^-n) / 2.

Within each level ``s_n`` is processed first, giving ``b_n pi_n``, then
``c_n``, giving ``a_n sigma_n``.  The order matters: swapping it changes
all seven coefficient sequences.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ONE, LaurentPolynomial
from .errors import TrivialMeasureError
from .measure import CircleMeasure
from .report import IdentityResult

REAL_TOL = 1e-12
REAL_HARD = 1e-8


@dataclass(frozen=True)
class OtpSystem:
    """First-class orthonormal system with its seven coefficient sequences.

    All sequences are indexed ``0..N``.  Index 0 holds the conventions
    ``sigma_0 = 1, pi_0 = 0, a_0 = b_0 = 1, beta_0 = 0``; the entries
    ``iota[0], jmath[0], varsigma[0], zeta[0]`` are unused and set to 0.
    """

    sigma: tuple
    pi: tuple
    a: np.ndarray
    b: np.ndarray
    beta: np.ndarray
    iota: np.ndarray
    jmath: np.ndarray
    varsigma: np.ndarray
    zeta: np.ndarray
    imag_noise: float = 0.0

    @property
    def N(self) -> int:
        return len(self.sigma) - 1

    def monic_sigma(self, n: int) -> LaurentPolynomial:
        return self.sigma[n] * self.a[n]

    def monic_pi(self, n: int) -> LaurentPolynomial:
        return self.pi[n] * self.b[n]

    def basis(self):
        """Orthonormal elements in Gram-Schmidt order ``1, pi_1, sigma_1, ...``."""
        out = [self.sigma[0]]
        for n in range(1, self.N + 1):
            out += [self.pi[n], self.sigma[n]]
        return out


def _real(x, noise):
    noise[0] = max(noise[0], abs(x.imag))
    if abs(x.imag) > REAL_HARD * max(1.0, abs(x.real)):
        raise ArithmeticError(f"coefficient {x} is not real; bilinear form misused upstream")
    return x.real


def _project_out(p, basis, m):
    for _ in range(2):
        for q in basis:
            p = p - q * m.inner_r(q, p)
    return p


def build_otp(m: CircleMeasure, N: int) -> OtpSystem:
    """Orthonormal ``sigma_n, pi_n`` for ``n <= N`` and their coefficients."""
    if not m.has_weight and 2 * N + 1 > len(m.atoms):
        raise TrivialMeasureError(
            f"trivial measure at this size: {len(m.atoms)} atoms cannot "
            f"support {2 * N + 1} orthonormal Laurent polynomials")
    noise = [0.0]
    sig, pi = [ONE], [LaurentPolynomial.zero()]
    a, b, beta = [1.0], [1.0], [0.0]
    iota, jmath, vs, zeta = [0.0], [0.0], [0.0], [0.0]
    basis = [ONE]
    for n in range(1, N + 1):
        s_n = LaurentPolynomial.sin_basis(n)
        c_n = LaurentPolynomial.cos_basis(n)
        P = _project_out(s_n, basis, m)
        bb = _real(m.inner_r(P, P), noise)
        if bb <= 1e-24:
            raise TrivialMeasureError(f"Gram matrix singular at level {n} (sine direction)")
        b_n = np.sqrt(bb)
        pi_n = P / b_n
        basis.append(pi_n)
        S = _project_out(c_n, basis, m)
        aa = _real(m.inner_r(S, S), noise)
        if aa <= 1e-24:
            raise TrivialMeasureError(f"Gram matrix singular at level {n} (cosine direction)")
        a_n = np.sqrt(aa)
        sigma_n = S / a_n
        basis.append(sigma_n)

        beta.append(_real(m.inner_r(c_n, pi_n), noise) / b_n)
        iota.append(_real(m.inner_r(c_n, sig[n - 1]), noise) / a[n - 1])
        jmath.append(_real(m.inner_r(c_n, pi[n - 1]), noise) / b[n - 1])
        vs.append(_real(m.inner_r(s_n, sig[n - 1]), noise) / a[n - 1])
        zeta.append(_real(m.inner_r(s_n, pi[n - 1]), noise) / b[n - 1])
        sig.append(sigma_n)
        pi.append(pi_n)
        a.append(a_n)
        b.append(b_n)
    arr = lambda v: np.asarray(v, dtype=float)
    return OtpSystem(tuple(sig), tuple(pi), arr(a), arr(b), arr(beta),
                     arr(iota), arr(jmath), arr(vs), arr(zeta), noise[0])


def orthonormality_residual(sys: OtpSystem, m: CircleMeasure) -> float:
    """``max |G - I|`` for the Gram matrix of ``1, pi_1, sigma_1, ...`` under ``<,>_R``."""
    B = sys.basis()
    G = np.array([[m.inner_r(p, q) for q in B] for p in B])
    return float(np.max(np.abs(G - np.eye(len(B)))))


def otp_expansion_check(sys: OtpSystem, m: CircleMeasure, tol: float = 1e-10) -> list:
    """Check that the cosine and sine expansions leave only lower-order terms.

    For each ``n`` the remainders

        R_c = a_n sigma_n - [c_n - beta_n b_n pi_n - iota_n a_{n-1} sigma_{n-1}
                             - jmath_n b_{n-1} pi_{n-1}]
        R_s = b_n pi_n - [s_n - varsigma_n a_{n-1} sigma_{n-1} - zeta_n b_{n-1} pi_{n-1}]

    must be orthogonal to every orthonormal element of level ``n`` and
    ``n-1`` and carry no powers beyond ``|k| = n-2``.
    """
    rc = IdentityResult("OTP-EXPAND-COS", "a_n sigma_n = c_n - beta_n b_n pi_n - iota_n a_{n-1} sigma_{n-1}"
                        " - jmath_n b_{n-1} pi_{n-1} + lower order", tol)
    rs = IdentityResult("OTP-EXPAND-SIN", "b_n pi_n = s_n - varsigma_n a_{n-1} sigma_{n-1}"
                        " - zeta_n b_{n-1} pi_{n-1} + lower order", tol)
    for n in range(1, sys.N + 1):
        lower_s = sys.monic_sigma(n - 1)
        lower_p = sys.monic_pi(n - 1) if n > 1 else LaurentPolynomial.zero()
        Rc = sys.monic_sigma(n) - (LaurentPolynomial.cos_basis(n) - sys.beta[n] * sys.monic_pi(n)
                                   - sys.iota[n] * lower_s - sys.jmath[n] * lower_p)
        Rs = sys.monic_pi(n) - (LaurentPolynomial.sin_basis(n) - sys.varsigma[n] * lower_s
                                - sys.zeta[n] * lower_p)
        tests = [sys.pi[n], sys.sigma[n], sys.sigma[n - 1]] + ([sys.pi[n - 1]] if n > 1 else [])
        for res, R in ((rc, Rc), (rs, Rs)):
            r = max(abs(m.inner_r(q, R)) for q in tests)
            span = n - 2
            tail = [abs(c) for k, c in R.terms().items() if abs(k) > max(span, 0) or span < 0]
            res.add_residual(n, max([r] + tail))
    return [rc, rs]


def trig_view(sys: OtpSystem, theta_grid) -> tuple:
    """Real values of ``sigma_n(e^{i theta})`` and ``pi_n(e^{i theta})``.

    Returns arrays of shape ``(N + 1, len(theta_grid))``.
    """
    t = np.exp(1j * np.asarray(theta_grid, dtype=float))
    S = np.array([s.eval_grid(t) for s in sys.sigma])
    P = np.array([p.eval_grid(t) for p in sys.pi])
    worst = max(np.max(np.abs(S.imag) / np.maximum(1, np.abs(S))),
                np.max(np.abs(P.imag) / np.maximum(1, np.abs(P))))
    if worst > REAL_TOL:
        raise ArithmeticError(f"trigonometric values have imaginary part {worst:.2e}")
    return S.real, P.real


def coefficients(sys: OtpSystem) -> dict:
    """The seven coefficient sequences keyed by name."""
    return {"a": sys.a, "b": sys.b, "beta": sys.beta, "iota": sys.iota,
            "jmath": sys.jmath, "varsigma": sys.varsigma, "zeta": sys.zeta}
