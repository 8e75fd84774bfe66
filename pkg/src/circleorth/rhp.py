"""Riemann-Hilbert characterizations of OPUC and first-class OLP.

Cauchy transforms are taken against the whole measure,

    C[f dmu](z) = int f(tau) tau / (tau - z) dmu(tau),

which for ``dmu = w dtheta/2pi`` is ``(1/2 pi i) int f w / (tau - z) dtau``.
With ``g_k`` the Fourier coefficients of ``f w`` the transform is
``sum_{k>=0} g_k z^k`` inside the disc and ``-sum_{k>=1} g_{-k} z^-k``
outside; boundary values are the same two sums on the circle.  Atoms add
``mass f(t_j) t_j / (t_j - z)`` to both sides, so they drop out of every
jump but make the solutions meromorphic; boundary grids are half-shifted
so that no node lands on an atom.

The OPUC solution is

    Y = [[Phi_n, C[tau^-n Phi_n w]], [-kappa_{n-1}^2 Phi_{n-1}^*, -kappa_{n-1}^2 C[tau^-n Phi_{n-1}^* w]]]

and the OLP solution replaces the first column by ``z^n L``, ``z^n LL`` with

    L  = a_n sigma_n + (beta_n + i) b_n pi_n,
    LL = lambda_3 a_{n-1} sigma_{n-1} + lambda_4 b_{n-1} pi_{n-1}.

With ``a_0 = 1`` the stated ``lambda_{3,0} = -1/2`` makes ``LL = -1/2`` at
``n = 1``, so the (2,2) entry decays like ``-z^-1 / 2`` instead of
``z^-1``.  ``level_zero="edge"`` uses ``lambda_{3,0} = -1``, which restores
every condition.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import LaurentPolynomial
from .bridge import BridgeContext
from .measure import CircleMeasure
from .opuc import OpucSystem
from .report import IdentityResult

I = 1j
BOUNDARY_GAP = 1e-6
GROWTH_RADII = (20.0, 50.0)
GROWTH_SAMPLES = 8
SAMPLE_RADII = (0.4, 0.7, 1.5, 3.0)
ZERO_GROWTH = 1e-12
HEAD_TOL = 1e-10
ORIGIN_TOL = 1e-14


def half_grid(M: int, shift: float = 0.5) -> np.ndarray:
    """``theta_j = 2 pi (j + shift) / M``; the default interleaves the quadrature nodes."""
    return 2 * np.pi * (np.arange(M) + shift) / M


def sample_points(seed: int = 0, per_radius: int = 10) -> np.ndarray:
    """Seeded off-circle points, ``per_radius`` on each of |z| = 0.4, 0.7, 1.5, 3."""
    rng = np.random.default_rng(seed)
    return np.concatenate([r * np.exp(2j * np.pi * rng.random(per_radius)) for r in SAMPLE_RADII])


@dataclass(frozen=True)
class CauchyField:
    """Cauchy transform of ``f dmu`` with its Fourier data.

    ``g[j]`` is the Fourier coefficient of ``f w`` at ``k = j - K``.
    """

    f: LaurentPolynomial
    m: CircleMeasure
    g: np.ndarray
    K: int

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        r = np.abs(z)
        if np.any(np.abs(r - 1) < BOUNDARY_GAP):
            raise ValueError("Cauchy transform requested within 1e-6 of the circle; use boundary()")
        out = np.zeros(z.shape, dtype=complex)
        inside = r < 1
        if self.m.has_weight:
            K = self.K
            out[inside] = np.polynomial.polynomial.polyval(z[inside], self.g[K:])
            tail = np.concatenate([[0], self.g[:K][::-1]])
            out[~inside] = -np.polynomial.polynomial.polyval(1 / z[~inside], tail)
        return out + self._atoms(z)

    def _atoms(self, z):
        out = np.zeros(np.shape(z), dtype=complex)
        for a in self.m.atoms:
            t = np.exp(1j * a.theta)
            out = out + a.mass * self.f.eval(t) * t / (t - z)
        return out

    def boundary(self, theta):
        """``(C+, C-)`` at ``e^{i theta}``; ``theta`` must avoid atoms."""
        theta = np.asarray(theta, dtype=float)
        K = self.K
        E = np.exp(1j * np.outer(theta, np.arange(-K, K + 1)))
        plus = E[:, K:] @ self.g[K:]
        minus = -(E[:, :K] @ self.g[:K])
        at = self._atoms(np.exp(1j * theta))
        return plus + at, minus + at

    def boundary_grid(self, P: int, shift: float = 0.5):
        """``(C+, C-)`` on ``half_grid(P, shift)`` by folding the spectrum into one FFT."""
        K = self.K
        k = np.arange(-K, K + 1)
        tw = self.g * np.exp(2j * np.pi * k * shift / P)
        pos = np.zeros(P, dtype=complex)
        neg = np.zeros(P, dtype=complex)
        np.add.at(pos, np.mod(k[K:], P), tw[K:])
        np.add.at(neg, np.mod(k[:K], P), tw[:K])
        at = self._atoms(np.exp(1j * half_grid(P, shift)))
        return np.fft.ifft(pos) * P + at, -np.fft.ifft(neg) * P + at

    def exterior_scaled(self, z, q: int):
        """``z^q C(z)`` for ``|z| > 1`` from the exterior series, split in two.

        Returns ``(tail, head)`` where ``tail = -sum_{k>=q} G_k z^(q-k)`` and
        ``head = max_{k<q} |G_k|`` with ``G_k = int f tau^k dmu`` (atoms
        included).  ``head`` vanishes by orthogonality for the solution
        entries, so evaluating only the tail avoids multiplying those
        rounding-level moments by ``|z|^q``.
        """
        z = np.asarray(z, dtype=complex)
        K = self.K
        G = np.concatenate([[0], self.g[:K][::-1]]).astype(complex)
        for a in self.m.atoms:
            t = np.exp(1j * a.theta)
            G = G + a.mass * self.f.eval(t) * t ** np.arange(K + 1)
        G[0] = 0
        head = float(np.max(np.abs(G[1:q]))) if q > 1 else 0.0
        tail = -np.polynomial.polynomial.polyval(1 / z, G[q:]) if q <= K else np.zeros(z.shape, complex)
        return tail, head

    def density(self, theta):
        """``f w`` on the circle (the absolutely continuous part only)."""
        t = np.exp(1j * np.asarray(theta, dtype=float))
        return self.f.eval_grid(t) * self.m.weight(theta)


def cauchy_field(f: LaurentPolynomial, m: CircleMeasure) -> CauchyField:
    """Spectral data for ``C[f dmu]``, truncated at the largest alias-free index."""
    K = m.quadrature_points // 2 - 1 - max(abs(f.lo), abs(f.hi))
    k = np.arange(-K, K + 1)
    g = np.zeros(k.size, dtype=complex)
    if m.has_weight:
        for j, c in f.terms().items():
            g += c * m.weight_coefficient(k - j)
    return CauchyField(f, m, g, K)


def cauchy_transform(f: LaurentPolynomial, m: CircleMeasure, z):
    """``C[f dmu](z)`` off the circle."""
    return cauchy_field(f, m)(z)


def cauchy_quadrature(f: LaurentPolynomial, m: CircleMeasure, z):
    """Direct trapezoid sum of the Cauchy integral; an oracle for ``|z|`` away from 1."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    th = m.theta_grid
    t = np.exp(1j * th)
    vals = f.eval_grid(t) * m.weight_samples * t
    out = np.array([np.mean(vals / (t - zz)) for zz in z]) if m.has_weight else np.zeros(z.shape, complex)
    for a in m.atoms:
        s = np.exp(1j * a.theta)
        out = out + a.mass * f.eval(s) * s / (s - z)
    return out


def hilbert_transform(f: LaurentPolynomial, m: CircleMeasure, theta) -> np.ndarray:
    """``H[f w]`` at ``theta`` from the boundary values, ``H = -i (C+ + C-)``.

    An integer ``theta`` selects the fast path on ``half_grid(theta)``.
    """
    cf = cauchy_field(f, m)
    plus, minus = cf.boundary_grid(theta) if isinstance(theta, (int, np.integer)) else cf.boundary(theta)
    return -1j * (plus + minus)


def hilbert_pv_oracle(f: LaurentPolynomial, m: CircleMeasure, theta) -> np.ndarray:
    """Principal-value Hilbert transform by a singularity-subtracted trapezoid rule.

    ``H g(t) = (1/pi) int (g(tau) - g(t)) / (t - tau) dtau - i g(t)``, the
    last term being ``g(t) (1/pi) PV int dtau / (t - tau)``.  ``theta`` must
    avoid the quadrature nodes; atoms contribute their closed form.
    """
    theta = np.asarray(theta, dtype=float)
    nodes = m.theta_grid
    tau = np.exp(1j * nodes)
    t = np.exp(1j * theta)
    out = np.zeros(theta.shape, dtype=complex)
    if m.has_weight:
        g_nodes = f.eval_grid(tau) * m.weight_samples
        g_t = f.eval_grid(t) * m.weight(theta)
        # dtau = i tau dtheta, so (1/pi) int ... dtau = 2i mean(... tau)
        diff = (g_nodes[None, :] - g_t[:, None]) / (t[:, None] - tau[None, :]) * tau[None, :]
        out = 2j * diff.mean(axis=1) - 1j * g_t
    for a in m.atoms:
        s = np.exp(1j * a.theta)
        out = out - 2j * a.mass * f.eval(s) * s / (s - t)
    return out


# explicit solutions ---------------------------------------------------------

@dataclass(frozen=True)
class RhpSolution:
    """Explicit solution of one of the two Riemann-Hilbert problems.

    Column one holds the Laurent polynomials ``P11``, ``P21``; column two the
    Cauchy transforms of ``P tau^-jump_power`` against ``mu``.  The growth
    contract is ``Y(z) diag(z^-growth[0], z^-growth[1]) -> I``.
    """

    kind: str
    n: int
    P11: LaurentPolynomial
    P21: LaurentPolynomial
    C12: CauchyField
    C22: CauchyField
    jump_power: int
    growth: tuple
    m: CircleMeasure
    reflect: tuple | None = None
    delta: np.ndarray | None = None
    lambda_coeffs: tuple | None = None
    notes: list = field(default_factory=list)

    @property
    def entries(self):
        return (self.P11.eval_grid, self.C12, self.P21.eval_grid, self.C22)

    def __call__(self, z) -> np.ndarray:
        """``Y(z)`` with shape ``(2, 2) + z.shape``."""
        z = np.asarray(z, dtype=complex)
        return np.array([[self.P11.eval_grid(z), self.C12(z)], [self.P21.eval_grid(z), self.C22(z)]])

    def reflected(self, z) -> np.ndarray:
        """``conj(Y(1 / conj(z)))``."""
        return np.conj(self(1 / np.conj(np.asarray(z, dtype=complex))))

    def boundary(self, nodes: int):
        """``(Y+, Y-)`` on ``half_grid(nodes)``."""
        t = np.exp(1j * half_grid(nodes))
        p12, m12 = self.C12.boundary_grid(nodes)
        p22, m22 = self.C22.boundary_grid(nodes)
        c1 = np.array([self.P11.eval_grid(t), self.P21.eval_grid(t)])
        return (np.array([[c1[0], p12], [c1[1], p22]]), np.array([[c1[0], m12], [c1[1], m22]]))


def _solution(kind, n, P11, P21, power, growth, m, **kw) -> RhpSolution:
    return RhpSolution(kind, n, P11, P21, cauchy_field(P11.shift(-power), m),
                       cauchy_field(P21.shift(-power), m), power, growth, m, **kw)


def build_opuc_rhp(opuc: OpucSystem, m: CircleMeasure, n: int) -> RhpSolution:
    """``Y`` for the OPUC problem with jump ``[[1, t^-n w], [0, 1]]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = opuc.kappa[n - 1] ** 2
    a = opuc.alpha[n - 1]
    Mx = np.array([[-np.conj(a), -opuc.kappa[n] ** -2.0], [-k, a]])
    return _solution("opuc", n, opuc.phi[n], opuc.reversed(n - 1) * -k, n, (n, -n), m,
                     reflect=(Mx, n, n))


def otp_lambdas(otp, n: int, level_zero: str = "literal") -> tuple:
    """``(lambda_{1,n}, lambda_{2,n}, lambda_{3,n-1}, lambda_{4,n-1})``."""
    a, b, be = otp.a, otp.b, otp.beta
    l3 = -0.5 * a[n - 1] ** -2.0 * (1 + be[n - 1] * I)
    if n == 1 and level_zero == "edge":
        l3 = -1.0 + 0j
    return (1.0 + 0j, be[n] + I, l3, 0.5 * b[n - 1] ** -2.0 * I)


def otp_L(otp, n: int, lam) -> tuple:
    """``(L, LL)`` and their coefficient-conjugated versions ``(Lbar, LLbar)``.

    ``lam`` gives the four ``lambda`` values; the bar versions conjugate only
    the ``lambda`` (``sigma``, ``pi`` are real on the circle).
    """
    s1, p1 = otp.monic_sigma(n), otp.monic_pi(n)
    s0 = otp.monic_sigma(n - 1)
    p0 = otp.monic_pi(n - 1) if n > 1 else LaurentPolynomial.zero()
    l1, l2, l3, l4 = lam
    c = np.conj
    return (s1 * l1 + p1 * l2, s0 * l3 + p0 * l4, s1 * c(l1) + p1 * c(l2), s0 * c(l3) + p0 * c(l4))


def delta_matrix(opuc: OpucSystem, n: int) -> np.ndarray:
    """``Delta = [[-alpha_{2n-2}, kappa_{2n-1}^-2], [-kappa_{2n-2}^2, -conj(alpha_{2n-2})]]``."""
    a = opuc.alpha[2 * n - 2]
    return np.array([[-a, opuc.kappa[2 * n - 1] ** -2.0],
                     [-opuc.kappa[2 * n - 2] ** 2, -np.conj(a)]])


def build_otp_rhp(ctx: BridgeContext, m: CircleMeasure, n: int, level_zero: str = "literal") -> RhpSolution:
    """``Y`` for the OLP problem with jump ``[[1, t^-2n w], [0, 1]]``.

    ``level_zero`` only matters at ``n = 1``; see the module docstring.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = otp_lambdas(ctx.otp, n, level_zero)
    L, LL, _, _ = otp_L(ctx.otp, n, lam)
    D = delta_matrix(ctx.opuc, n)
    Mx = np.array([[D[1, 1], -D[0, 1]], [D[1, 0], -D[0, 0]]])
    sol = _solution("otp", n, L.shift(n), LL.shift(n), 2 * n, (2 * n, -2 * n + 1), m,
                    reflect=(Mx, 2 * n + 1, 2 * n - 1), delta=D, lambda_coeffs=lam)
    if n == 1:
        sol.notes.append(f"level_zero={level_zero}: lambda_(3,0) = {lam[2]:.3g}")
    return sol


# condition checks ------------------------------------------------------------

def _max(v) -> float:
    return float(np.max(np.abs(v))) if np.size(v) else 0.0


def jump_residual(sol: RhpSolution, nodes: int = 512) -> float:
    """``max |Y+ - Y- J|`` on ``nodes`` half-shifted boundary points."""
    th = half_grid(nodes)
    Yp, Ym = sol.boundary(nodes)
    t = np.exp(1j * th)
    J12 = t ** -sol.jump_power * sol.m.weight(th)
    rhs = Ym.copy()
    rhs[:, 1] = Ym[:, 1] + Ym[:, 0] * J12
    return _max(Yp - rhs)


def growth_deviation(sol: RhpSolution, R: float) -> tuple:
    """``R max |Y(z) diag(z^-g1, z^-g2) - I|`` over samples on ``|z| = R``.

    The second column is taken from :meth:`CauchyField.exterior_scaled`;
    the discarded head moments are returned alongside.
    """
    z = R * np.exp(2j * np.pi * np.arange(GROWTH_SAMPLES) / GROWTH_SAMPLES)
    g1, g2 = sol.growth
    c12, h12 = sol.C12.exterior_scaled(z, -g2)
    c22, h22 = sol.C22.exterior_scaled(z, -g2)
    G = np.array([[sol.P11.eval_grid(z) * z ** -g1 - 1, c12], [sol.P21.eval_grid(z) * z ** -g1, c22 - 1]])
    return R * _max(G), max(h12, h22)


def growth_residual(sol: RhpSolution) -> tuple:
    """Excess growth of ``R |Y diag - I|`` between the two radii.

    Under the ``I + O(1/z)`` contract the scaled deviation stays bounded, so
    ``s(50) / s(20) - 1`` is near 0 (or negative); an ``O(1)`` deviation
    makes it ``50/20 - 1 = 1.5``.  Head moments above ``HEAD_TOL`` (a broken
    orthogonality) make the residual infinite.
    """
    (s20, h), (s50, _) = (growth_deviation(sol, R) for R in GROWTH_RADII)
    if h > HEAD_TOL:
        return float("inf"), s20, s50
    if s50 < ZERO_GROWTH:
        return 0.0, s20, s50
    return max(0.0, s50 / s20 - 1.0), s20, s50


def origin_residual(sol: RhpSolution) -> float:
    """Value and pole content of ``Y11``, ``Y21`` at the origin (exact zero expected)."""
    out = 0.0
    for P in (sol.P11, sol.P21):
        out = max(out, abs(P.coeff(0)), *(abs(c) for k, c in P.terms().items() if k < 0))
    return out


def rhp_condition_check(sols, kind: str, nodes: int = 512, tol: float = 1e-9) -> list:
    """Jump, growth and (OLP) origin conditions over a list of solutions."""
    tag = kind.upper()
    jump = IdentityResult(f"RHP-JUMP-{tag}", "Y+ = Y- [[1, t^-p w], [0, 1]] on the circle", tol, grid=nodes)
    grow = IdentityResult(f"RHP-GROWTH-{tag}", "R |Y diag(z^-g1, z^-g2) - I| bounded between |z| = 20 and 50"
                          " (residual: relative increase)", 0.5)
    out = [jump, grow]
    origin = None
    if kind == "otp":
        origin = IdentityResult("RHP-ORIGIN-OTP", "Y11(0) = Y21(0) = 0 (constant and negative-power"
                                " coefficients of z^n L, z^n LL)", ORIGIN_TOL)
        out.append(origin)
    for sol in sols:
        jump.add_residual(sol.n, jump_residual(sol, nodes))
        r, s20, s50 = growth_residual(sol)
        grow.add_residual(sol.n, r)
        grow.note(f"n={sol.n}: R|Y diag - I| = {s20:.3e} (R=20), {s50:.3e} (R=50)")
        if origin is not None:
            origin.add_residual(sol.n, origin_residual(sol))
    return out


def reflection_identity_check(sols, points=None, tol: float = 1e-8) -> IdentityResult:
    """``Y(z) = M conj(Y(1/conj z)) diag(z^p, -z^-q)`` at off-circle points.

    OPUC: ``M = [[-conj(alpha_{n-1}), -kappa_n^-2], [-kappa_{n-1}^2, alpha_{n-1}]]``,
    ``(p, q) = (n, n)``.  OLP: ``M = [[Delta22, -Delta12], [Delta21, -Delta11]]``,
    ``(p, q) = (2n + 1, 2n - 1)``.
    """
    z = sample_points() if points is None else np.asarray(points, dtype=complex)
    kind = sols[0].kind if sols else "opuc"
    res = IdentityResult(f"REFLECT-{kind.upper()}", "Y(z) = M conj(Y(1/conj z)) diag(z^p, -z^-q)", tol)
    for sol in sols:
        Mx, p, q = sol.reflect
        Y = sol(z)
        R = np.einsum("ij,jkp->ikp", Mx, sol.reflected(z))
        R[:, 0] *= z ** p
        R[:, 1] *= -z ** -q
        res.add_residual(sol.n, _max((Y - R) / np.maximum(1.0, np.abs(Y) / 10)))
    return res


def _edge_skip(res: IdentityResult, literal: float):
    res.skip(1, f"index convention a_0 = 1 gives lambda_(3,0) LL = -1/2 instead of -1; literal residual "
                f"{literal:.3e}; checked under RHP-OTP-EDGE")


def delta_check(ctx: BridgeContext, m: CircleMeasure, N: int | None = None, tol: float = 1e-10) -> list:
    """``det Delta = 1`` and the entries of ``Delta``.

    ``DELTA-LIMIT`` evaluates ``lim_{z->inf} conj(Y(1/conj z)) diag(z, 1)``
    exactly: the first column is the ``z^1`` coefficient of ``z^n L``,
    ``z^n LL`` and the second is ``conj(C[...](0)) = conj(int ... dmu)``.
    ``DELTA-COEFF`` compares the ``(iota, jmath, varsigma, zeta)`` expressions
    for ``Delta_11``, ``Delta_22`` with ``-alpha_{2n-2}``, ``-conj(alpha_{2n-2})``.
    """
    o, s = ctx.otp, ctx.opuc
    N = min(o.N, (s.N + 1) // 2) if N is None else N
    det = IdentityResult("DELTA-DET", "det Delta = |alpha_{2n-2}|^2 + (kappa_{2n-2}/kappa_{2n-1})^2 = 1", tol)
    lim = IdentityResult("DELTA-LIMIT", "lim conj(Y(1/conj z)) diag(z, 1) = [[-alpha_{2n-2}, kappa_{2n-1}^-2],"
                         " [-kappa_{2n-2}^2, -conj alpha_{2n-2}]]", tol)
    coef = IdentityResult("DELTA-COEFF", "Delta_11 = -(1/2)(iota_n + beta_{n-1} varsigma_n - zeta_n)"
                          " + (i/2)(jmath_n - iota_n beta_{n-1} + varsigma_n) = -alpha_{2n-2}, Delta_22 its"
                          " conjugate, Delta_12 = a_n^2 + b_n^2 (1 + beta_n^2), Delta_21 ="
                          " -(1/4)[a_{n-1}^-2 (1 + beta_{n-1}^2) + b_{n-1}^-2]", tol)
    a, b, be = o.a, o.b, o.beta
    for n in range(1, N + 1):
        D = delta_matrix(s, n)
        det.add(n, D[0, 0] * D[1, 1] - D[0, 1] * D[1, 0], 1.0)
        level = "edge" if n == 1 else "literal"
        L, LL, _, _ = otp_L(o, n, otp_lambdas(o, n, level))
        got = np.array([[np.conj(L.shift(n).coeff(1)), np.conj(m.integrate(L.shift(-n)))],
                        [np.conj(LL.shift(n).coeff(1)), np.conj(m.integrate(LL.shift(-n)))]])
        lim.add(n, got, D)
        u = o.iota[n] + be[n - 1] * o.varsigma[n] - o.zeta[n]
        v = o.jmath[n] - o.iota[n] * be[n - 1] + o.varsigma[n]
        form = np.array([[-0.5 * u + 0.5j * v, a[n] ** 2 + b[n] ** 2 * (1 + be[n] ** 2)],
                         [-0.25 * (a[n - 1] ** -2.0 * (1 + be[n - 1] ** 2) + b[n - 1] ** -2.0),
                          -0.5 * u - 0.5j * v]])
        if n == 1:
            r = float(np.max(np.abs(form - D)))
            coef.skip(1, f"index convention a_0 = b_0 = 1: literal residual {r:.3e}"
                         " (level 0 reads alpha_0 = iota_1 - i varsigma_1; see ALPHA-EVEN-EDGE)")
        else:
            coef.add(n, form, D)
    if N >= 1:
        lim.note("n=1 uses lambda_(3,0) = -1 (see RHP-OTP-EDGE)")
    return [det, lim, coef]


def opuc_cauchy_identity_check(opuc: OpucSystem, m: CircleMeasure, N: int | None = None,
                               points=None, tol: float = 1e-8) -> list:
    """Cauchy-integral functional equations of ``Phi_n`` and ``Phi_{n-1}^*``.

    With ``hat C(z) = conj(C(1/conj z))``:

    ``CAUCHY-ID-PHI``       C[Phi_n] = z^n [conj(alpha_{n-1}) hat C[Phi_n]
                            - (kappa_{n-1}/kappa_n)^2 hat C[Phi_{n-1}^*] + kappa_n^-2]
    ``CAUCHY-ID-PHISTAR``   C[Phi_{n-1}^*] = -z^n [hat C[Phi_n] + alpha_{n-1} hat C[Phi_{n-1}^*]
                            - (1 + alpha_{n-1}) kappa_{n-1}^-2]   (as printed)
    ``CAUCHY-ID-PHISTAR-CORR`` the same with constant ``-alpha_{n-1} kappa_{n-1}^-2`` inside
                            the bracket and ``+ kappa_{n-1}^-2`` outside
    ``CAUCHY-SHIFT``        C[tau^-n Phi_n] = z^-n C[Phi_n],
                            C[tau^-n Phi_{n-1}^*] = z^-n (C[Phi_{n-1}^*] - kappa_{n-1}^-2)
    """
    z = sample_points() if points is None else np.asarray(points, dtype=complex)
    N = opuc.N if N is None else N
    phi = IdentityResult("CAUCHY-ID-PHI", "C[Phi_n w] = z^n [conj(alpha_{n-1}) hatC[Phi_n w] - (kappa_{n-1}"
                         "/kappa_n)^2 hatC[Phi_{n-1}^* w] + kappa_n^-2]", tol)
    star = IdentityResult("CAUCHY-ID-PHISTAR", "C[Phi_{n-1}^* w] = -z^n [hatC[Phi_n w] + alpha_{n-1}"
                          " hatC[Phi_{n-1}^* w] - (1 + alpha_{n-1}) kappa_{n-1}^-2]", tol)
    corr = IdentityResult("CAUCHY-ID-PHISTAR-CORR", "C[Phi_{n-1}^* w] = -z^n [hatC[Phi_n w] + alpha_{n-1}"
                          " hatC[Phi_{n-1}^* w] - alpha_{n-1} kappa_{n-1}^-2] + kappa_{n-1}^-2", tol)
    shift = IdentityResult("CAUCHY-SHIFT", "C[tau^-n Phi_n w] = z^-n C[Phi_n w] and C[tau^-n Phi_{n-1}^* w]"
                           " = z^-n (C[Phi_{n-1}^* w] - kappa_{n-1}^-2)", tol)
    zr = 1 / np.conj(z)
    k = opuc.kappa
    for n in range(1, N + 1):
        P, S = opuc.phi[n], opuc.reversed(n - 1)
        cP, cS = cauchy_field(P, m), cauchy_field(S, m)
        CP, CS = cP(z), cS(z)
        hP, hS = np.conj(cP(zr)), np.conj(cS(zr))
        a = opuc.alpha[n - 1]
        k2 = k[n - 1] ** -2.0
        phi.add(n, CP, z ** n * (np.conj(a) * hP - k[n - 1] ** 2 / k[n] ** 2 * hS + k[n] ** -2.0))
        star.add(n, CS, -z ** n * (hP + a * hS - (1 + a) * k2))
        corr.add(n, CS, -z ** n * (hP + a * hS - a * k2) + k2)
        shift.add(n, cauchy_transform(P.shift(-n), m, z), z ** -n * CP)
        shift.add(n, cauchy_transform(S.shift(-n), m, z), z ** -n * (CS - k2))
    return [phi, star, corr, shift]


def _otp_range(ctx, N):
    return min(ctx.otp.N, (ctx.opuc.N + 1) // 2) if N is None else N


def otp_cauchy_identity_check(ctx: BridgeContext, m: CircleMeasure, N: int | None = None,
                              points=None, tol: float = 1e-8) -> list:
    """Cauchy-integral equations of ``L`` and ``LL`` (levels ``n >= 2``).

    ``CAUCHY-ID-LL`` is the printed form whose last term carries
    ``lambda_{3,n}, lambda_{4,n}``; ``CAUCHY-ID-LL-CORR`` uses
    ``lambda_{3,n-1}, lambda_{4,n-1}`` as in the definition of ``LL``.
    """
    z = sample_points() if points is None else np.asarray(points, dtype=complex)
    o = ctx.otp
    N = _otp_range(ctx, N)
    rl = IdentityResult("CAUCHY-ID-L", "C[tau^-n L w] = z^-2(n-1) [Delta22 C[tau^(n-1) Lbar w]"
                        " - Delta12 C[tau^(n-1) LLbar w]]", tol)
    rll = IdentityResult("CAUCHY-ID-LL", "C[tau^-n LL w] = z^-2(n-1) [Delta21 C[tau^(n-1) Lbar w]"
                         " - Delta11 C[tau^(n-1) LLbar(lambda_(3,n), lambda_(4,n)) w]]", tol)
    rllc = IdentityResult("CAUCHY-ID-LL-CORR", "C[tau^-n LL w] = z^-2(n-1) [Delta21 C[tau^(n-1) Lbar w]"
                          " - Delta11 C[tau^(n-1) LLbar w]]", tol)
    for n in range(1, N + 1):
        edge = n == 1
        lam = otp_lambdas(o, n, "edge" if edge else "literal")
        L, LL, Lb, LLb = otp_L(o, n, lam)
        D = delta_matrix(ctx.opuc, n)
        CLb = cauchy_transform(Lb.shift(n - 1), m, z)
        CLLb = cauchy_transform(LLb.shift(n - 1), m, z)
        zf = z ** (-2 * (n - 1))
        lhs_l = cauchy_transform(L.shift(-n), m, z)
        lhs_ll = cauchy_transform(LL.shift(-n), m, z)
        r_l = _max(lhs_l - zf * (D[1, 1] * CLb - D[0, 1] * CLLb))
        r_llc = _max(lhs_ll - zf * (D[1, 0] * CLb - D[0, 0] * CLLb))
        if edge:
            for res in (rl, rll, rllc):
                _edge_skip(res, _literal_n1(ctx, m))
            continue
        rl.add_residual(n, r_l)
        rllc.add_residual(n, r_llc)
        if n < o.N:
            l3n = -0.5 * o.a[n] ** -2.0 * (1 - o.beta[n] * I)
            l4n = -0.5 * o.b[n] ** -2.0 * I
            LLbn = o.monic_sigma(n - 1) * l3n + o.monic_pi(n - 1) * l4n
            rhs = zf * (D[1, 0] * CLb - D[0, 0] * cauchy_transform(LLbn.shift(n - 1), m, z))
            rll.add_residual(n, _max(lhs_ll - rhs))
        else:
            rll.skip(n, "lambda_(3,n) needs level n of the OLP data")
    return [rl, rll, rllc]


def _literal_n1(ctx: BridgeContext, m: CircleMeasure) -> float:
    """Growth residual of the literal ``n = 1`` solution (the size of the convention slip)."""
    return growth_residual(build_otp_rhp(ctx, m, 1, "literal"))[0]


def four_term_check(ctx: BridgeContext, m: CircleMeasure, N: int | None = None, nodes: int = 256,
                    coeff_tol: float = 1e-10, hilbert_tol: float = 1e-7) -> list:
    """Four-term recurrences of the first-class OLP.

    ``FOUR-TERM-L``, ``FOUR-TERM-LL``: Laurent-coefficient identities
        (lambda_1 z^-1 - conj(lambda_1) Delta22) a_n sigma_n + (lambda_2 z^-1 - conj(lambda_2) Delta22) b_n pi_n
            = -Delta12 LLbar,
        (lambda_3 z^-1 + conj(lambda_3) Delta11) a_{n-1} sigma_{n-1} + (...) b_{n-1} pi_{n-1} = Delta21 Lbar.
    ``FOUR-TERM-THETA-*``: the same on the theta-grid.
    ``FOUR-TERM-HILBERT-*``: the Hilbert-transform forms; ``-LL`` as printed
    (``lambda_{.,n}`` in the last term) and ``-LL-CORR`` with ``lambda_{.,n-1}``.
    """
    o = ctx.otp
    N = _otp_range(ctx, N)
    c_l = IdentityResult("FOUR-TERM-L", "(lambda_1 z^-1 - conj lambda_1 Delta22) a_n sigma_n + (lambda_2 z^-1"
                         " - conj lambda_2 Delta22) b_n pi_n = -Delta12 LLbar", coeff_tol)
    c_ll = IdentityResult("FOUR-TERM-LL", "(lambda_3 z^-1 + conj lambda_3 Delta11) a_{n-1} sigma_{n-1}"
                          " + (lambda_4 z^-1 + conj lambda_4 Delta11) b_{n-1} pi_{n-1} = Delta21 Lbar", coeff_tol)
    t_l = IdentityResult("FOUR-TERM-THETA-L", "first four-term recurrence at e^{i theta}", hilbert_tol, grid=nodes)
    t_ll = IdentityResult("FOUR-TERM-THETA-LL", "second four-term recurrence at e^{i theta}", hilbert_tol,
                          grid=nodes)
    h_l = IdentityResult("FOUR-TERM-HILBERT-L", "H[tau^-n L w] = e^{-2i(n-1) theta} [Delta22 H[tau^(n-1) Lbar w]"
                         " - Delta12 H[tau^(n-1) LLbar w]]", hilbert_tol, grid=nodes)
    h_ll = IdentityResult("FOUR-TERM-HILBERT-LL", "H[tau^-n LL w] = e^{-2i(n-1) theta} [Delta21 H[tau^(n-1)"
                          " Lbar w] - Delta11 H[tau^(n-1) LLbar(lambda_(3,n), lambda_(4,n)) w]]", hilbert_tol,
                          grid=nodes)
    h_llc = IdentityResult("FOUR-TERM-HILBERT-LL-CORR", "H[tau^-n LL w] = e^{-2i(n-1) theta} [Delta21"
                           " H[tau^(n-1) Lbar w] - Delta11 H[tau^(n-1) LLbar w]]", hilbert_tol, grid=nodes)
    th = half_grid(nodes)
    t = np.exp(1j * th)
    zi = LaurentPolynomial.monomial(-1)
    for n in range(1, N + 1):
        edge = n == 1
        lam = otp_lambdas(o, n, "edge" if edge else "literal")
        l1, l2, l3, l4 = lam
        L, LL, Lb, LLb = otp_L(o, n, lam)
        D = delta_matrix(ctx.opuc, n)
        s1, p1 = o.monic_sigma(n), o.monic_pi(n)
        s0 = o.monic_sigma(n - 1)
        p0 = o.monic_pi(n - 1) if n > 1 else LaurentPolynomial.zero()
        lhs1 = (zi * l1 - np.conj(l1) * D[1, 1]) * s1 + (zi * l2 - np.conj(l2) * D[1, 1]) * p1
        rhs1 = LLb * -D[0, 1]
        lhs2 = (zi * l3 + np.conj(l3) * D[0, 0]) * s0 + (zi * l4 + np.conj(l4) * D[0, 0]) * p0
        rhs2 = Lb * D[1, 0]
        H = lambda f: hilbert_transform(f, m, nodes)
        zf = t ** (-2 * (n - 1))
        hl = _max(H(L.shift(-n)) - zf * (D[1, 1] * H(Lb.shift(n - 1)) - D[0, 1] * H(LLb.shift(n - 1))))
        hllc = _max(H(LL.shift(-n)) - zf * (D[1, 0] * H(Lb.shift(n - 1)) - D[0, 0] * H(LLb.shift(n - 1))))
        if edge:
            for res in (c_l, c_ll, t_l, t_ll, h_l, h_ll, h_llc):
                _edge_skip(res, _literal_n1(ctx, m))
            continue
        c_l.add_poly(n, lhs1, rhs1)
        c_ll.add_poly(n, lhs2, rhs2)
        t_l.add_residual(n, _max(lhs1.eval_grid(t) - rhs1.eval_grid(t)))
        t_ll.add_residual(n, _max(lhs2.eval_grid(t) - rhs2.eval_grid(t)))
        h_l.add_residual(n, hl)
        h_llc.add_residual(n, hllc)
        if n < o.N:
            l3n = -0.5 * o.a[n] ** -2.0 * (1 - o.beta[n] * I)
            l4n = -0.5 * o.b[n] ** -2.0 * I
            LLbn = s0 * l3n + p0 * l4n
            rhs = zf * (D[1, 0] * H(Lb.shift(n - 1)) - D[0, 0] * H(LLbn.shift(n - 1)))
            h_ll.add_residual(n, _max(H(LL.shift(-n)) - rhs))
        else:
            h_ll.skip(n, "lambda_(3,n) needs level n of the OLP data")
    return [c_l, c_ll, t_l, t_ll, h_l, h_ll, h_llc]


def plemelj_check(densities, m: CircleMeasure, nodes: int = 64, tol: float = 1e-10) -> list:
    """Plemelj relations for each Laurent density ``f``.

    ``PLEMELJ-JUMP``: ``C+ - C- = f w``.  ``PLEMELJ-H``:
    ``C+/- = +/- (1/2) f w + (i/2) H[f w]`` with ``H`` from the independent
    principal-value quadrature rather than from the boundary values.  The
    grid is shifted by a third of a cell so it meets neither quadrature nodes
    nor the suite's atoms.
    """
    shift = 1 / 3
    th = half_grid(nodes, shift)
    jump = IdentityResult("PLEMELJ-JUMP", "C+[fw] - C-[fw] = f w on the circle", tol, grid=nodes)
    hres = IdentityResult("PLEMELJ-H", "C+/-[fw] = +/-(1/2) f w + (i/2) H[fw], H by principal-value"
                          " quadrature", tol, grid=nodes)
    for key, f in densities:
        cf = cauchy_field(f, m)
        plus, minus = cf.boundary_grid(nodes, shift)
        fw = cf.density(th)
        jump.add_residual(key, _max(plus - minus - fw))
        H = hilbert_pv_oracle(f, m, th)
        hres.add_residual(key, max(_max(plus - (0.5 * fw + 0.5j * H)), _max(minus - (-0.5 * fw + 0.5j * H))))
    return [jump, hres]


def otp_edge_check(ctx: BridgeContext, m: CircleMeasure, points=None, nodes: int = 512,
                   tol: float = 1e-8) -> IdentityResult:
    """Every OLP condition at ``n = 1`` with ``lambda_{3,0} = -1``."""
    z = sample_points() if points is None else np.asarray(points, dtype=complex)
    res = IdentityResult("RHP-OTP-EDGE", "n = 1 OLP solution with lambda_(3,0) = -1: jump, growth, origin,"
                         " reflection, Cauchy and four-term identities", tol)
    sol = build_otp_rhp(ctx, m, 1, "edge")
    parts = {
        "jump": jump_residual(sol, nodes),
        "growth": growth_residual(sol)[0],
        "origin": origin_residual(sol),
        "reflect": reflection_identity_check([sol], z).max_residual,
    }
    o = ctx.otp
    lam = sol.lambda_coeffs
    L, LL, Lb, LLb = otp_L(o, 1, lam)
    D = sol.delta
    zi = LaurentPolynomial.monomial(-1)
    s1, p1, s0 = o.monic_sigma(1), o.monic_pi(1), o.monic_sigma(0)
    lhs1 = (zi * lam[0] - np.conj(lam[0]) * D[1, 1]) * s1 + (zi * lam[1] - np.conj(lam[1]) * D[1, 1]) * p1
    lhs2 = (zi * lam[2] + np.conj(lam[2]) * D[0, 0]) * s0
    parts["four-term"] = max(_max((lhs1 + LLb * D[0, 1]).coeffs), _max((lhs2 - Lb * D[1, 0]).coeffs))
    CLb, CLLb = cauchy_transform(Lb, m, z), cauchy_transform(LLb, m, z)
    parts["cauchy"] = max(_max(cauchy_transform(L.shift(-1), m, z) - (D[1, 1] * CLb - D[0, 1] * CLLb)),
                          _max(cauchy_transform(LL.shift(-1), m, z) - (D[1, 0] * CLb - D[0, 0] * CLLb)))
    for k, v in parts.items():
        res.add_residual(k, v)
    return res


def rhp_report(ctx: BridgeContext, m: CircleMeasure, N: int | None = None, seed: int = 0) -> list:
    """Every Riemann-Hilbert check for one measure.

    OPUC levels run to ``ctx.opuc.N``; OLP levels to the largest ``n`` with
    ``Phi_{2n-1}`` available.
    """
    z = sample_points(seed)
    Nop = ctx.opuc.N if N is None else min(N, ctx.opuc.N)
    Not = _otp_range(ctx, None) if N is None else min(N, _otp_range(ctx, None))
    opuc_sols = [build_opuc_rhp(ctx.opuc, m, n) for n in range(1, Nop + 1)]
    otp_sols = [build_otp_rhp(ctx, m, n) for n in range(1, Not + 1)]
    out = rhp_condition_check(opuc_sols, "opuc")
    otp_cond = rhp_condition_check(otp_sols[1:], "otp")
    literal = growth_residual(otp_sols[0])[0] if otp_sols else 0.0
    for r in otp_cond:
        _edge_skip(r, literal)
    out += otp_cond
    out.append(otp_edge_check(ctx, m, z))
    out.append(reflection_identity_check(opuc_sols, z))
    refl = reflection_identity_check(otp_sols[1:], z)
    refl.id = "REFLECT-OTP"
    _edge_skip(refl, literal)
    out.append(refl)
    out += delta_check(ctx, m, Not)
    out += opuc_cauchy_identity_check(ctx.opuc, m, Nop, z)
    out += otp_cauchy_identity_check(ctx, m, Not, z)
    out += four_term_check(ctx, m, Not)
    dens = [(f"opuc n={s.n} row 1", s.C12.f) for s in opuc_sols[:4]]
    dens += [(f"otp n={s.n} row 2", s.C22.f) for s in otp_sols[1:4]]
    out += plemelj_check(dens, m)
    return out
