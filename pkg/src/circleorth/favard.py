"""Favard-type reconstruction from OLP coefficient sequences.

The weak form takes triples ``(a_n, b_n, beta_n)``.  They fix

    kappa_{2n}^2   = (1/4)[a_n^-2 (1 + beta_n^2) + b_n^-2],
    kappa_{2n+1}^2 = [a_{n+1}^2 + b_{n+1}^2 (1 + beta_{n+1}^2)]^-1,
    alpha_{2n-1}   = (1/4) kappa_{2n}^-2 [b_n^-2 - a_n^-2 (1 - beta_n^2)]
                     - (1/2) kappa_{2n}^-2 a_n^-2 beta_n i,

and only the modulus ``|alpha_{2n}|^2 = 1 - kappa_{2n}^2 / kappa_{2n+1}^2``,
so the phases of the even coefficients are a free choice
(``phase_policy``).  The strong form adds ``(iota, jmath, varsigma, zeta)``
and reads the even coefficients off directly,

    alpha_{2n} = (1/2) u_n - (i/2) v_n,
    u_n = iota_{n+1} + beta_n varsigma_{n+1} - zeta_{n+1},
    v_n = jmath_{n+1} - iota_{n+1} beta_n + varsigma_{n+1}.

Level 0 follows the convention ``kappa_0 = 1`` (not the value the
``kappa_{2n}`` formula gives at ``a_0 = b_0 = 1``), which turns the level-0
relations into ``|alpha_0|^2 = 1 - Q_1`` and ``alpha_0 = u_0 - i v_0`` with
``Q_n = a_n^2 + b_n^2 (1 + beta_n^2)``.

Data of length ``N`` (triples ``0..N``, the four extra sequences ``1..N``)
produce ``alpha_0..alpha_{2N-1}``.  The measure is the Bernstein-Szego
measure of those coefficients.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import AdmissibilityError
from .measure import CircleMeasure, bernstein_szego
from .opuc import OpucSystem, build_opuc, orthonormal_from_verblunsky
from .otp import OtpSystem, build_otp
from .report import IdentityResult

STRICT = "strict"
CLOSED = "closed"
BOUNDARY_TOL = 1e-12
CONSISTENCY_TOL = 1e-8
ALPHA_MAX = 1 - 1e-12


@dataclass(frozen=True)
class TripleSeq:
    """``(a_n, b_n, beta_n)`` for ``n = 0..N`` with the level-0 convention."""

    a: np.ndarray
    b: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "beta"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if not (len(self.a) == len(self.b) == len(self.beta)):
            raise ValueError("a, b and beta must have the same length")
        if len(self.a) < 2:
            raise ValueError("need at least levels 0 and 1")

    @property
    def N(self) -> int:
        return len(self.a) - 1

    def Q(self, n: int) -> float:
        """``a_n^2 + b_n^2 (1 + beta_n^2) = kappa_{2n-1}^-2``."""
        return self.a[n] ** 2 + self.b[n] ** 2 * (1 + self.beta[n] ** 2)

    @classmethod
    def from_otp(cls, otp: OtpSystem, N: int | None = None) -> "TripleSeq":
        N = otp.N if N is None else N
        return cls(otp.a[:N + 1], otp.b[:N + 1], otp.beta[:N + 1])


@dataclass(frozen=True)
class SevenSeq:
    """Triples plus ``iota, jmath, varsigma, zeta`` indexed ``1..N`` (slot 0 unused)."""

    triple: TripleSeq
    iota: np.ndarray
    jmath: np.ndarray
    varsigma: np.ndarray
    zeta: np.ndarray

    def __post_init__(self):
        for name in ("iota", "jmath", "varsigma", "zeta"):
            v = np.asarray(getattr(self, name), dtype=float)
            if len(v) != self.triple.N + 1:
                raise ValueError(f"{name} must have length N + 1 = {self.triple.N + 1} (index 0 unused)")
            object.__setattr__(self, name, v)

    @property
    def N(self) -> int:
        return self.triple.N

    def uv(self, n: int) -> tuple:
        """``(u_n, v_n)``; ``alpha_{2n}`` is ``(u - i v)/2`` for ``n >= 1`` and ``u - i v`` at 0."""
        be = self.triple.beta[n]
        i1, j1, s1, z1 = (self.iota[n + 1], self.jmath[n + 1], self.varsigma[n + 1], self.zeta[n + 1])
        return i1 + be * s1 - z1, j1 - i1 * be + s1

    @classmethod
    def from_otp(cls, otp: OtpSystem, N: int | None = None) -> "SevenSeq":
        N = otp.N if N is None else N
        return cls(TripleSeq.from_otp(otp, N), otp.iota[:N + 1], otp.jmath[:N + 1],
                   otp.varsigma[:N + 1], otp.zeta[:N + 1])

    @classmethod
    def from_measure(cls, m: CircleMeasure, N: int) -> "SevenSeq":
        return cls.from_otp(build_otp(m, N), N)


# kappa and alpha from the data ----------------------------------------------

def kappa_from_triple(t: TripleSeq) -> np.ndarray:
    """``kappa_0..kappa_{2N-1}`` (``kappa_0 = 1`` by convention)."""
    k = np.empty(2 * t.N)
    k[0] = 1.0
    for n in range(1, t.N):
        k[2 * n] = 0.5 * np.sqrt(t.a[n] ** -2.0 * (1 + t.beta[n] ** 2) + t.b[n] ** -2.0)
    for n in range(t.N):
        k[2 * n + 1] = t.Q(n + 1) ** -0.5
    return k


def odd_alpha(t: TripleSeq, n: int) -> complex:
    """``alpha_{2n-1}`` from level ``n`` of the triples."""
    a, b, be = t.a[n], t.b[n], t.beta[n]
    k2 = 4.0 / (a ** -2.0 * (1 + be ** 2) + b ** -2.0)
    return 0.25 * k2 * (b ** -2.0 - a ** -2.0 * (1 - be ** 2)) - 0.5j * k2 * a ** -2.0 * be


def kappa_ratio(t: TripleSeq, n: int) -> float:
    """``kappa_{2n}^2 / kappa_{2n+1}^2``; below 1 exactly when the admissibility bound holds."""
    if n == 0:
        return t.Q(1)
    return t.Q(n) * t.Q(n + 1) / (4 * t.a[n] ** 2 * t.b[n] ** 2)


# validation -------------------------------------------------------------------

@dataclass
class ValidationReport:
    """Per-index admissibility entries.

    Each entry is a dict with ``n``, ``clause``, ``value``, ``ok`` and an
    optional ``note``.  ``kappa_ratio[n]`` is ``kappa_{2n}/kappa_{2n+1}``
    and ``enabled_solves[n]`` lists which 2x2 subleading solves (``A``..``F``)
    are available at level ``n``.
    """

    mode: str
    entries: list = field(default_factory=list)
    kappa_ratio: dict = field(default_factory=dict)
    enabled_solves: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, n, clause, value, ok, note=None):
        e = {"n": n, "clause": clause, "value": float(value), "ok": bool(ok)}
        if note:
            e["note"] = note
        self.entries.append(e)

    @property
    def violations(self) -> list:
        return [e for e in self.entries if not e["ok"]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_first(self):
        if self.violations:
            v = self.violations[0]
            raise AdmissibilityError(
                f"admissibility violated at n={v['n']}: {v['clause']} (value {v['value']:.6g})"
                + (f"; {v['note']}" if v.get("note") else ""), v["n"], v["clause"])


def _check_triple(t: TripleSeq, rep: ValidationReport):
    if t.a[0] != 1 or t.b[0] != 1 or t.beta[0] != 0:
        rep.add(0, "level-zero-convention", max(abs(t.a[0] - 1), abs(t.b[0] - 1), abs(t.beta[0])), False,
                "a_0 = b_0 = 1 and beta_0 = 0 are required")
    for n in range(1, t.N + 1):
        if t.a[n] <= 0 or t.b[n] <= 0:
            rep.add(n, "positive-a-b", min(t.a[n], t.b[n]), False)


def _bound(rep, n, clause, value, lower_open, mode, note=None):
    """Record ``0 (<|<=) value < 1`` (strict) or ``0 <= value <= 1`` (closed)."""
    tol = BOUNDARY_TOL
    if mode == STRICT:
        ok = value > tol and value < 1 - tol if lower_open else value < 1 - tol
    else:
        ok = value > -tol and value <= 1 + tol
    rep.add(n, clause, value, ok, note)


def validate(data, mode: str = STRICT) -> ValidationReport:
    """Admissibility of a :class:`TripleSeq` or :class:`SevenSeq`; never raises.

    Clauses
    -------
    ``kappa-ratio-below-one``
        ``Q_n Q_{n+1} / (4 a_n^2 b_n^2) < 1`` (level 0: ``Q_1 < 1``); the
        value is ``kappa_{2n}^2 / kappa_{2n+1}^2 = 1 - |alpha_{2n}|^2``.
    ``even-alpha-consistency``
        strong data only: ``(u_n^2 + v_n^2)/4`` must equal ``1 - kappa_{2n}^2/kappa_{2n+1}^2``
        (level 0: ``u_0^2 + v_0^2``); the literal sum-of-squares relation
        ``u^2 + v^2 = 1 - (1/4) Q_n Q_{n+1} / ...`` is reported in the note.
    ``even-alpha-in-disc``
        strong data only: ``0 < |alpha_{2n}|^2 < 1``.
    ``odd-alpha-nonzero``
        strong data only: ``beta_n != 0`` or ``a_n^2/b_n^2 + beta_n^2 != 1``,
        equivalently ``alpha_{2n-1} != 0``.  It guards the divisions by
        ``alpha_{2n-1}`` in the subleading solves; closed mode records it as
        a note.
    """
    if mode not in (STRICT, CLOSED):
        raise ValueError("mode must be 'strict' or 'closed'")
    seven = data if isinstance(data, SevenSeq) else None
    t = seven.triple if seven is not None else data
    rep = ValidationReport(mode)
    _check_triple(t, rep)
    if rep.violations:
        return rep
    for n in range(t.N):
        r = kappa_ratio(t, n)
        rep.kappa_ratio[n] = float(np.sqrt(r)) if r >= 0 else float("nan")
        _bound(rep, n, "kappa-ratio-below-one", r, False, mode)
        if seven is None:
            continue
        u, v = seven.uv(n)
        s = u * u + v * v
        mod2 = s if n == 0 else 0.25 * s
        gap = abs(mod2 - (1 - r))
        if n >= 1:
            literal = s - (1 - 0.25 * t.Q(n) * t.Q(n + 1))
            note = f"literal sum-of-squares residual {literal:.3e}"
        else:
            note = "level 0 uses kappa_0 = 1"
        rep.add(n, "even-alpha-consistency", gap, gap <= CONSISTENCY_TOL, note)
        _bound(rep, n, "even-alpha-in-disc", mod2, True, mode)
    if seven is not None:
        for n in range(1, t.N + 1):
            a1 = odd_alpha(t, n)
            val = abs(t.a[n] ** 2 / t.b[n] ** 2 + t.beta[n] ** 2 - 1) + abs(t.beta[n])
            nonzero = abs(a1) > BOUNDARY_TOL
            solves = ("ABCDE" + ("F" if abs(t.beta[n]) > BOUNDARY_TOL else "")) if nonzero else ""
            rep.enabled_solves[n] = solves
            if mode == STRICT:
                rep.add(n, "odd-alpha-nonzero", val, nonzero, f"|alpha_{2 * n - 1}| = {abs(a1):.3e}")
            elif not nonzero:
                rep.notes.append(f"n={n}: alpha_{2 * n - 1} = 0, subleading solves unavailable")
    return rep


# reconstruction ---------------------------------------------------------------

@dataclass
class FavardResult:
    """Recovered Verblunsky coefficients, reconstructed measure and checks."""

    alphas: np.ndarray
    kappa: np.ndarray
    measure: CircleMeasure
    validation: ValidationReport
    report: list = field(default_factory=list)
    phases: np.ndarray | None = None


def _phases(policy, N):
    if policy is None or policy == "positive-real":
        return np.zeros(N)
    if isinstance(policy, tuple) and policy[0] == "fixed-angle":
        return np.full(N, float(policy[1]))
    if isinstance(policy, (list, np.ndarray)):
        ph = np.asarray(policy)
        if np.iscomplexobj(ph):
            ph = np.angle(ph)
        if len(ph) < N:
            raise ValueError(f"supplied phase list has {len(ph)} entries, need {N}")
        return ph[:N].astype(float)
    raise ValueError("phase_policy must be 'positive-real', ('fixed-angle', phi) or a list of phases")


def _check_disc(alphas):
    for j, a in enumerate(alphas):
        if abs(a) >= ALPHA_MAX:
            raise AdmissibilityError(f"|alpha_{j}| = {abs(a):.6g} is not inside the unit disc; "
                                     "the coefficient data are inconsistent", j, "alpha-in-disc")


def weak_favard(t: TripleSeq, phase_policy="positive-real", mode: str = STRICT,
                quadrature_points: int | None = None) -> FavardResult:
    """Verblunsky coefficients from triples; even phases from ``phase_policy``.

    ``phase_policy`` is ``"positive-real"``, ``("fixed-angle", phi)`` or a
    list of ``N`` phases (angles, or complex numbers whose angle is used).
    """
    rep = validate(t, mode)
    rep.raise_first()
    N = t.N
    ph = _phases(phase_policy, N)
    alphas = np.zeros(2 * N, dtype=complex)
    for n in range(1, N + 1):
        alphas[2 * n - 1] = odd_alpha(t, n)
    for n in range(N):
        mod2 = 1 - kappa_ratio(t, n)
        mod = np.sqrt(max(mod2, 0.0)) if mode == CLOSED else np.sqrt(mod2)
        alphas[2 * n] = mod * np.exp(1j * ph[n])
    _check_disc(alphas)
    return _finish(alphas, kappa_from_triple(t), rep, quadrature_points, phases=ph)


def strong_favard(s: SevenSeq, mode: str = STRICT, verify: bool = True,
                  quadrature_points: int | None = None) -> FavardResult:
    """Verblunsky coefficients from seven-term data, with an automatic round trip.

    The round trip rebuilds the OLP of the reconstructed measure and compares
    all seven sequences (``FAVARD-ROUNDTRIP``) and ``alpha_{2n}`` against the
    modulus relation (``FAVARD-EVEN-MODULUS``).
    """
    rep = validate(s, mode)
    rep.raise_first()
    t = s.triple
    N = s.N
    alphas = np.zeros(2 * N, dtype=complex)
    for n in range(1, N + 1):
        alphas[2 * n - 1] = odd_alpha(t, n)
    for n in range(N):
        u, v = s.uv(n)
        alphas[2 * n] = (u - 1j * v) if n == 0 else 0.5 * (u - 1j * v)
    _check_disc(alphas)
    res = _finish(alphas, kappa_from_triple(t), rep, quadrature_points)
    if verify:
        res.report = roundtrip_report(s, res.measure)
    return res


def _finish(alphas, kappa, rep, M, phases=None) -> FavardResult:
    kw = {} if M is None else {"quadrature_points": M}
    m = bernstein_szego(alphas, name=f"favard[{len(alphas)}]", **kw)
    return FavardResult(alphas, kappa, m, rep, phases=phases)


def roundtrip_report(s: SevenSeq, m: CircleMeasure, tol: float = 1e-8) -> list:
    """Compare the seven sequences of ``m`` with the input data."""
    o = build_otp(m, s.N)
    res = IdentityResult("FAVARD-ROUNDTRIP", "OLP coefficients of the reconstructed measure equal the input"
                         " seven-term data", tol)
    t = s.triple
    for n in range(1, s.N + 1):
        got = np.array([o.a[n], o.b[n], o.beta[n], o.iota[n], o.jmath[n], o.varsigma[n], o.zeta[n]])
        want = np.array([t.a[n], t.b[n], t.beta[n], s.iota[n], s.jmath[n], s.varsigma[n], s.zeta[n]])
        res.add(n, got, want)
    return [res]


def alpha_roundtrip(m: CircleMeasure, N: int, mode: str = STRICT, tol: float = 1e-8) -> IdentityResult:
    """``measure -> SevenSeq -> strong_favard -> alpha`` against the measure's own alphas."""
    s = SevenSeq.from_measure(m, N)
    res = IdentityResult("FAVARD-ALPHA", "alpha recovered by the strong reconstruction equals the measure's"
                         " Verblunsky coefficients", tol)
    fav = strong_favard(s, mode=mode, verify=False)
    ref = build_opuc(m, 2 * N).alpha
    for j in range(2 * N):
        res.add(j, fav.alphas[j], ref[j])
    return res


# Bernstein-Szego density in OLP form -----------------------------------------

@dataclass(frozen=True)
class BSDensity:
    """Density of the degree-``n`` Bernstein-Szego approximant on ``theta``.

    ``otp`` uses the OLP form with the prefactor ``Q_m`` (odd) or
    ``4 kappa_{2m}^2 = a_m^-2 (1 + beta_m^2) + b_m^-2`` (even);
    ``otp_printed`` uses ``a_m^2 b_m^2 / Q_m`` in the even case, which equals
    ``kappa_{2m}^-2 / 4`` and is off by ``16 kappa_{2m}^4``; ``opuc`` is
    ``1 / |phi_n|^2``.
    """

    theta: np.ndarray
    otp: np.ndarray
    otp_printed: np.ndarray
    opuc: np.ndarray


def bernstein_szego_otp_form(otp: OtpSystem, opuc: OpucSystem, n: int, theta=None) -> BSDensity:
    """Both evaluations of ``d mu_n / (d theta / 2 pi)``; ``n`` odd or even, ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    theta = np.linspace(0, 2 * np.pi, 512, endpoint=False) if theta is None else np.asarray(theta, float)
    t = np.exp(1j * theta)
    m = (n + 1) // 2
    a, b, be = otp.a[m], otp.b[m], otp.beta[m]
    S, P = otp.sigma[m].eval_grid(t), otp.pi[m].eval_grid(t)
    Q = a ** 2 + b ** 2 * (1 + be ** 2)
    if n % 2:
        dens = Q / np.abs(a * S + (be + 1j) * b * P) ** 2
        printed = dens
    else:
        den = np.abs((be - 1j) * S / a - P / b) ** 2
        dens = (a ** -2.0 * (1 + be ** 2) + b ** -2.0) / den
        printed = a ** 2 * b ** 2 / Q / den
    phi = orthonormal_from_verblunsky(opuc.alpha[:n])
    ref = 1.0 / np.abs(phi.eval_grid(t)) ** 2
    assert np.all(np.isfinite(dens)) and np.all(dens > 0)
    return BSDensity(theta, dens.real, printed.real, ref)


def bs_measure_check(otp: OtpSystem, opuc: OpucSystem, N: int | None = None, tol: float = 1e-10) -> list:
    """``BS-MEASURE-ODD``, ``BS-MEASURE-EVEN`` (printed prefactor) and ``BS-MEASURE-EVEN-CORR``."""
    N = min(2 * otp.N, opuc.N) if N is None else N
    odd = IdentityResult("BS-MEASURE-ODD", "d mu_{2m-1} = Q_m / |a_m sigma_m + (beta_m + i) b_m pi_m|^2"
                         " d theta/2pi", tol, grid=512)
    even = IdentityResult("BS-MEASURE-EVEN", "d mu_{2m} = a_m^2 b_m^2 / Q_m / |a_m^-1 (beta_m - i) sigma_m"
                          " - b_m^-1 pi_m|^2 d theta/2pi", tol, grid=512)
    corr = IdentityResult("BS-MEASURE-EVEN-CORR", "d mu_{2m} = [a_m^-2 (1 + beta_m^2) + b_m^-2] /"
                          " |a_m^-1 (beta_m - i) sigma_m - b_m^-1 pi_m|^2 d theta/2pi", tol, grid=512)
    for n in range(1, N + 1):
        d = bernstein_szego_otp_form(otp, opuc, n)
        if n % 2:
            odd.add(n, d.otp, d.opuc)
        else:
            even.add(n, d.otp_printed, d.opuc)
            corr.add(n, d.otp, d.opuc)
    return [odd, even, corr]


# ingestion --------------------------------------------------------------------

TRIPLE_COLUMNS = ("a", "b", "beta")
SEVEN_COLUMNS = TRIPLE_COLUMNS + ("iota", "jmath", "varsigma", "zeta")


def sequences_from_columns(cols: dict):
    """:class:`TripleSeq` or :class:`SevenSeq` from named columns indexed ``0..N``.

    A missing level 0 is filled with the convention ``a_0 = b_0 = 1``,
    ``beta_0 = 0``; the four extra sequences are unused at index 0.
    """
    missing = [c for c in TRIPLE_COLUMNS if c not in cols]
    if missing:
        raise ValueError(f"coefficient data lacks columns {missing}")
    n = [int(v) for v in cols.get("n", range(len(cols["a"])))]
    if n != list(range(n[0], n[0] + len(n))) or n[0] not in (0, 1):
        raise ValueError("rows must be consecutive n starting at 0 or 1")
    seven = all(c in cols for c in SEVEN_COLUMNS[3:])
    names = SEVEN_COLUMNS if seven else TRIPLE_COLUMNS
    data = {c: [float(v) for v in cols[c]] for c in names}
    if n[0] == 1:
        for c in names:
            data[c].insert(0, 1.0 if c in ("a", "b") else 0.0)
    t = TripleSeq(data["a"], data["b"], data["beta"])
    if not seven:
        return t
    extra = {c: np.array(data[c]) for c in SEVEN_COLUMNS[3:]}
    for v in extra.values():
        v[0] = 0.0
    return SevenSeq(t, **extra)


def read_coefficients(path):
    """Read a coefficient file: CSV with header ``n,a,b,beta[,iota,jmath,varsigma,zeta]``
    (lines starting with ``#`` ignored) or JSON with the same keys as arrays."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return sequences_from_columns(json.loads(text))
    rows = list(csv.DictReader(line for line in text.splitlines() if line.strip() and not line.startswith("#")))
    if not rows:
        raise ValueError(f"{path}: no coefficient rows")
    cols = {k.strip(): [r[k] for r in rows] for k in rows[0]}
    return sequences_from_columns(cols)
