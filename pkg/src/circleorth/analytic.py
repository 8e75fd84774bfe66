"""Schur algorithm, Geronimus checks, the Szego function and finite-n diagnostics.

Caratheodory and Schur functions are truncated Taylor series.  The Schur
step ``f -> (f - gamma) / (z (1 - conj(gamma) f))`` is exact on series (the
first ``k`` coefficients of ``f_{n+1}`` only need the first ``k + 1`` of
``f_n``), so each step costs one coefficient and no evaluation near the
removable singularity at 0 is ever needed.

The OLP forms of the Baxter, Rakhmanov, Szego and strong Szego sums are
built from the brackets

    E_n = 1 - (1/4)[a_n^-2 (1 + beta_n^2) + b_n^-2] Q_{n+1}   (= |alpha_{2n}|^2)
    R_n = [a^4 + b^4 (1 + beta^2)^2 + 2 a^2 b^2 (beta^2 - 1)]
          / [a^4 + b^4 (1 + beta^2)^2 + 2 a^2 b^2 (beta^2 + 1)]  (= |alpha_{2n-1}|^2)

with ``Q_n = a_n^2 + b_n^2 (1 + beta_n^2)``.  At ``n = 0`` the bracket in
``E_0`` is evaluated with ``kappa_0 = 1``, i.e. ``E_0 = 1 - Q_1``; the
literal ``a_0 = b_0 = 1`` value ``1 - Q_1 / 2`` is off by the same level-0
convention as elsewhere.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .bridge import BridgeContext
from .errors import SzegoConditionError
from .measure import CircleMeasure
from .opuc import OpucSystem
from .otp import OtpSystem
from .report import IdentityResult

SERIES_GUARD = 1e-6
GAMMA_LIMIT = 1 - 1e-10
WEIGHT_FLOOR = 1e-8


# power series helpers ---------------------------------------------------------

def _series_div(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Taylor coefficients of ``num / den`` to the length of ``num``."""
    K = len(num)
    out = np.zeros(K, dtype=complex)
    for k in range(K):
        j = np.arange(1, min(k, len(den) - 1) + 1)
        out[k] = (num[k] - np.dot(den[j], out[k - j])) / den[0]
    return out


def _series_eval(c: np.ndarray, z):
    return np.polynomial.polynomial.polyval(z, c)


@dataclass
class SchurState:
    """Caratheodory series, Schur iterates and Schur parameters.

    ``F_coeffs`` are ``1, 2 c_1, 2 c_2, ...`` with ``c_n = int conj(tau)^n dmu``;
    ``iterates[n]`` holds the Taylor coefficients of ``f_n`` (one fewer per
    step) and ``gamma[n] = f_n(0)``.
    """

    F_coeffs: np.ndarray
    iterates: list
    gamma: list = field(default_factory=list)
    stopped: str | None = None

    def F(self, z):
        """``F(z) = int (tau + z)/(tau - z) dmu``; ``|z| < 1 - 1e-6``."""
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) >= 1 - SERIES_GUARD):
            raise ValueError("Caratheodory series evaluated too close to the unit circle")
        return _series_eval(self.F_coeffs, z)

    def f(self, n: int, z):
        """Schur iterate ``f_n(z)`` from its truncated series."""
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) >= 1 - SERIES_GUARD):
            raise ValueError("Schur series evaluated too close to the unit circle")
        return _series_eval(self.iterates[n], z)

    def tail(self, z) -> float:
        """Bound ``2 |z|^{K} / (1 - |z|)`` on the truncation error of ``F(z)``."""
        r = abs(z)
        return 2 * r ** len(self.F_coeffs) / (1 - r)


def caratheodory(m: CircleMeasure, K: int) -> SchurState:
    """Caratheodory series of ``m`` to ``K`` terms and ``f_0 = (F - 1)/(z (F + 1))``."""
    c = np.array([m.tau_moment(-n) for n in range(K + 1)], dtype=complex)
    F = np.concatenate([[1.0], 2 * c[1:]]).astype(complex)
    num = F.copy()
    num[0] -= 1
    den = F.copy()
    den[0] += 1
    f0 = _series_div(num, den)[1:]
    return SchurState(F, [f0])


def schur_iterate(state: SchurState, K: int) -> SchurState:
    """Run ``K`` Schur steps from the last iterate, recording ``gamma``.

    Stops early (``state.stopped`` set) when ``|gamma_n|`` reaches 1 within
    ``1e-10`` or the series runs out of coefficients.
    """
    for _ in range(K):
        f = state.iterates[-1]
        if len(f) == 0:
            state.stopped = "series exhausted"
            break
        g = f[0]
        state.gamma.append(complex(g))
        if abs(g) >= GAMMA_LIMIT:
            state.stopped = f"|gamma_{len(state.gamma) - 1}| = {abs(g):.12f} reached 1"
            break
        num = f.copy()
        num[0] -= g
        den = -np.conj(g) * f
        den[0] += 1
        state.iterates.append(_series_div(num, den)[1:])
    return state


def schur_parameters(m: CircleMeasure, n: int) -> np.ndarray:
    """``gamma_0..gamma_{n-1}`` using series length ``n + 16``."""
    st = schur_iterate(caratheodory(m, n + 16), n)
    return np.asarray(st.gamma[:n])


def geronimus_check(state: SchurState, opuc: OpucSystem, N: int = 8, tol: float = 1e-7) -> list:
    """``GERONIMUS``: ``gamma_n = alpha_n`` for ``n <= N``."""
    res = IdentityResult("GERONIMUS", "Schur parameters equal Verblunsky coefficients", tol)
    for n in range(min(N + 1, len(state.gamma), len(opuc.alpha))):
        res.add(n, state.gamma[n], opuc.alpha[n])
    return [res]


def geronimus_otp_check(otp: OtpSystem, state: SchurState, tol: float = 1e-7) -> list:
    """Schur parameters against their OLP expressions.

    ``GERONIMUS-ODD``: ``gamma_{2n-1} = [a^2 - b^2 (1 - beta^2) - 2 b^2 beta i] / Q_n``.
    ``GERONIMUS-EVEN``: ``gamma_{2n-2} = (1/2)(iota_n + beta_{n-1} varsigma_n - zeta_n)
    - (i/2)(jmath_n - iota_n beta_{n-1} + varsigma_n)``; at ``n = 1`` the
    level-0 convention doubles the right side, checked as ``GERONIMUS-EVEN-EDGE``.
    """
    odd = IdentityResult("GERONIMUS-ODD", "gamma_{2n-1} = [a_n^2 - b_n^2 (1 - beta_n^2)"
                         " - 2 b_n^2 beta_n i] / [a_n^2 + b_n^2 (1 + beta_n^2)]", tol)
    even = IdentityResult("GERONIMUS-EVEN", "gamma_{2n-2} = (1/2)(iota_n + beta_{n-1} varsigma_n - zeta_n)"
                          " - (i/2)(jmath_n - iota_n beta_{n-1} + varsigma_n)", tol)
    edge = IdentityResult("GERONIMUS-EVEN-EDGE", "gamma_0 = (iota_1 - zeta_1) - i (jmath_1 + varsigma_1)"
                          " (level-0 convention kappa_0 = 1)", tol)
    g = state.gamma
    for n in range(1, otp.N + 1):
        a, b, be = otp.a[n], otp.b[n], otp.beta[n]
        Q = a * a + b * b * (1 + be * be)
        if 2 * n - 1 < len(g):
            odd.add(n, g[2 * n - 1], (a * a - b * b * (1 - be * be) - 2j * b * b * be) / Q)
        if 2 * n - 2 < len(g):
            bp = otp.beta[n - 1]
            u = otp.iota[n] + bp * otp.varsigma[n] - otp.zeta[n]
            v = otp.jmath[n] - otp.iota[n] * bp + otp.varsigma[n]
            rhs = 0.5 * u - 0.5j * v
            if n == 1:
                r = abs(g[0] - rhs)
                even.skip(1, f"level-0 convention: printed form gives half of gamma_0, residual {r:.3e}")
                edge.add(1, g[0], 2 * rhs)
            else:
                even.add(n, g[2 * n - 2], rhs)
    return [odd, even, edge]


# Szego function ---------------------------------------------------------------

@dataclass(frozen=True)
class SzegoData:
    """Szego function data of the absolutely continuous part of a measure.

    ``Lhat[k]`` are the Fourier coefficients ``(1/2pi) int e^{-ik theta} log w``,
    so ``D(z) = exp(Lhat_0 / 2 + sum_{k>=1} Lhat_k z^k)`` and
    ``szego_integral = Lhat_0``.
    """

    Lhat: np.ndarray
    szego_integral: float

    def D(self, z):
        z = np.asarray(z, dtype=complex)
        c = self.Lhat.copy()
        c[0] *= 0.5
        return np.exp(_series_eval(c, z))

    @property
    def geometric_mean(self) -> float:
        """``exp(szego_integral)``, the limit of ``kappa_n^-2``."""
        return float(np.exp(self.szego_integral))


def szego_function(m: CircleMeasure, K: int | None = None) -> SzegoData:
    """Szego data from ``log w`` on the quadrature grid (atoms excluded).

    Raises :class:`SzegoConditionError` when the weight is absent or drops
    below ``1e-8`` on the grid.
    """
    if not m.has_weight:
        raise SzegoConditionError("purely atomic measure: the Szego integral diverges")
    w = m.weight_samples
    if np.min(w) < WEIGHT_FLOOR:
        raise SzegoConditionError(
            f"weight drops to {np.min(w):.3e} on the grid (floor {WEIGHT_FLOOR:g}); "
            "Szego condition fails at this resolution")
    M = len(w)
    K = M // 2 - 1 if K is None else min(K, M // 2 - 1)
    L = np.fft.fft(np.log(w)) / M
    Lhat = L[:K + 1].copy()
    return SzegoData(Lhat, float(Lhat[0].real))


def verblunsky_support(m: CircleMeasure) -> int | None:
    """Number of leading Verblunsky coefficients that can be nonzero, if finite."""
    if m.atoms:
        return None
    if m.kind == "uniform":
        return 0
    if m.kind == "bernstein_szego":
        nz = [j for j, a in enumerate(m.params) if a != 0]
        return nz[-1] + 1 if nz else 0
    return None


# diagnostics ------------------------------------------------------------------

def _Q(otp, n):
    return otp.a[n] ** 2 + otp.b[n] ** 2 * (1 + otp.beta[n] ** 2)


def even_bracket(otp: OtpSystem, n: int) -> float:
    """``E_n``; equals ``|alpha_{2n}|^2`` (``n = 0`` with ``kappa_0 = 1``)."""
    if n == 0:
        return 1 - _Q(otp, 1)
    a, b, be = otp.a[n], otp.b[n], otp.beta[n]
    return 1 - 0.25 * (a ** -2.0 * (1 + be ** 2) + b ** -2.0) * _Q(otp, n + 1)


def odd_ratio(otp: OtpSystem, n: int) -> float:
    """``R_n``; equals ``|alpha_{2n-1}|^2`` (0 at ``n = 0``)."""
    a2, b2, be2 = otp.a[n] ** 2, otp.b[n] ** 2, otp.beta[n] ** 2
    base = a2 * a2 + b2 * b2 * (1 + be2) ** 2
    return (base + 2 * a2 * b2 * (be2 - 1)) / (base + 2 * a2 * b2 * (be2 + 1))


@dataclass
class DiagnosticTable:
    """Rows ``(n, quantity, value, reference, gap)`` plus gating identity checks."""

    rows: list = field(default_factory=list)
    identities: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, n, quantity, value, reference):
        self.rows.append((int(n), quantity, float(value), float(reference), float(abs(value - reference))))

    def series(self, quantity) -> list:
        return [r for r in self.rows if r[1] == quantity]

    def monotone(self, quantity) -> bool:
        """Whether the gap to the reference is non-increasing in ``n``."""
        g = [r[4] for r in self.series(quantity)]
        return all(y <= x * (1 + 1e-12) + 1e-15 for x, y in zip(g, g[1:]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        buf.write("# schema_version: 1\n")
        w.writerow(["n", "quantity", "value", "reference", "gap"])
        for r in self.rows:
            w.writerow([r[0], r[1], repr(r[2]), repr(r[3]), repr(r[4])])
        return buf.getvalue()


QUANTITIES = ("a_n*b_n", "Q_n", "kappa_n^-2", "Q_product", "rakhmanov_odd", "rakhmanov_even",
              "baxter_partial", "szego_partial", "strong_szego_partial")


def asymptotic_diagnostics(ctx: BridgeContext, szego: SzegoData, N: int | None = None,
                           support: int | None = None, tol: float = 1e-8,
                           term_tol: float = 1e-10) -> DiagnosticTable:
    """Finite-n trends of the OLP Szego-type quantities.

    References: ``exp(S)`` (``S`` the Szego integral) for ``Q_n``,
    ``kappa_n^-2`` and the partial product ``prod Q_{k+1}/Q_k``; ``exp(S)/2``
    for ``a_n b_n``; 0 and 1 for the two Rakhmanov quantities; the OPUC
    partial sums ``sum |alpha_j|``, ``sum |alpha_j|^2`` and ``sum j |alpha_j|^2``
    for the Baxter, Szego and strong Szego sums.

    Gating checks (``DIAG-*``) are the term-by-term bracket identities and,
    when ``support`` (number of possibly nonzero Verblunsky coefficients) is
    given, the exact Szego equalities beyond the cutoff.  The partial product
    uses ``Q_0 = kappa_{-1}^{-2} = 1``; the literal ``Q_0 = 2`` halves it.
    """
    o, s = ctx.otp, ctx.opuc
    N = ctx.N if N is None else min(N, ctx.N)
    G = szego.geometric_mean
    al = np.abs(s.alpha)
    t = DiagnosticTable()
    t.notes.append("partial product uses Q_0 = 1; with a_0 = b_0 = 1 taken literally it is halved")
    even = IdentityResult("DIAG-EVEN-TERM", "1 - (1/4)[a_n^-2 (1 + beta_n^2) + b_n^-2] Q_{n+1} = |alpha_{2n}|^2",
                          term_tol)
    odd = IdentityResult("DIAG-ODD-TERM", "Rakhmanov ratio R_n = |alpha_{2n-1}|^2", term_tol)
    kp = IdentityResult("DIAG-KAPPA-PROD", "kappa_{2n-1}^2 kappa_{2n}^2 = a_n^-2 b_n^-2 / 4", term_tol)
    ids = {k: IdentityResult(f"DIAG-SZEGO-{k}", desc, tol) for k, desc in (
        ("KAPPA", "kappa_n^-2 = exp(S) beyond the Verblunsky support"),
        ("AB", "a_n b_n = exp(S) / 2 beyond the Verblunsky support"),
        ("Q", "a_n^2 + b_n^2 (1 + beta_n^2) = exp(S) beyond the Verblunsky support"),
        ("PROD", "prod_{k<n} Q_{k+1} / Q_k = exp(S) beyond the Verblunsky support"))}
    bax = sz = ssz = 0.0
    prod = 1.0
    for n in range(N + 1):
        E, R = even_bracket(o, n), odd_ratio(o, n)
        if n == 0:
            even.skip(0, f"level-0 convention: literal bracket gives {1 - 0.5 * _Q(o, 1):.6g}, "
                         f"|alpha_0|^2 = {al[0] ** 2:.6g}; checked with kappa_0 = 1")
        even.add(n, E, al[2 * n] ** 2)
        if n >= 1:
            odd.add(n, R, al[2 * n - 1] ** 2)
            kp.add(n, s.kappa[2 * n - 1] ** 2 * s.kappa[2 * n] ** 2, 0.25 / (o.a[n] * o.b[n]) ** 2)
            prod *= _Q(o, n) / (_Q(o, n - 1) if n > 1 else 1.0)
        bax += np.sqrt(max(E, 0.0)) + np.sqrt(max(R, 0.0))
        sz += E + R
        ssz += 2 * n * E + (2 * n - 1) * R
        top = 2 * n + 1
        t.add(n, "baxter_partial", bax, al[:top].sum())
        t.add(n, "szego_partial", sz, (al[:top] ** 2).sum())
        t.add(n, "strong_szego_partial", ssz, (np.arange(top) * al[:top] ** 2).sum())
        t.add(n, "rakhmanov_odd", R, 0.0)
        t.add(n, "rakhmanov_even", 1 - E, 1.0)
        if n >= 1:
            ab, Q = o.a[n] * o.b[n], _Q(o, n)
            t.add(n, "a_n*b_n", ab, 0.5 * G)
            t.add(n, "Q_n", Q, G)
            t.add(n, "Q_product", prod, G)
            if support is not None:
                if 2 * n - 1 >= support:
                    ids["AB"].add(n, ab, 0.5 * G)
                    ids["Q"].add(n, Q, G)
                    ids["PROD"].add(n, prod, G)
                else:
                    for k in ("AB", "Q", "PROD"):
                        ids[k].skip(n, f"index 2n-1 = {2 * n - 1} inside the Verblunsky support")
    for j in range(min(2 * N + 2, len(s.kappa))):
        t.add(j, "kappa_n^-2", s.kappa[j] ** -2.0, G)
        if support is not None:
            if j >= support:
                ids["KAPPA"].add(j, s.kappa[j] ** -2.0, G)
            else:
                ids["KAPPA"].skip(j, "inside the Verblunsky support")
    if support is None:
        for r in ids.values():
            r.skip("all", "Verblunsky coefficients not finitely supported: trend only")
    t.identities = [even, odd, kp] + list(ids.values())
    return t


def analytic_report(m: CircleMeasure, ctx: BridgeContext, N: int = 8) -> list:
    """Geronimus and diagnostic identities for one measure."""
    st = schur_iterate(caratheodory(m, 2 * ctx.N + 16), 2 * ctx.N + 2)
    out = geronimus_check(st, ctx.opuc, N) + geronimus_otp_check(ctx.otp, st)
    try:
        sz = szego_function(m)
    except SzegoConditionError as e:
        r = IdentityResult("DIAG-SZEGO", "Szego function available", 0.0)
        r.skip("all", str(e))
        return out + [r]
    return out + asymptotic_diagnostics(ctx, sz, support=verblunsky_support(m)).identities
