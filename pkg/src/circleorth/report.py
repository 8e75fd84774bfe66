"""Residual bookkeeping for the identity catalog.

An :class:`IdentityResult` collects per-index residuals of one identity;
a :class:`ResidualReport` is an ordered list of them with JSON output.
Skipped (guarded) instances are listed but never count against a pass.
Results marked as data (``gating=False``) are printed forms whose residual
pattern is reported but which do not decide the overall pass.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import LaurentPolynomial

SCHEMA_VERSION = 1
RELATIVE_ABOVE = 10.0


def residual(value, reference) -> float:
    """Absolute gap, made relative once ``|reference|`` exceeds 10."""
    value = np.asarray(value, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    gap = np.abs(value - reference)
    scale = np.maximum(np.abs(reference) / RELATIVE_ABOVE, 1.0)
    return float(np.max(gap / scale)) if gap.size else 0.0


@dataclass
class IdentityResult:
    """Residuals of one identity over a range of indices.

    Parameters
    ----------
    id : str
        Catalog identifier, e.g. ``"KAPPA-EVEN"``.
    eq : str
        Short plain-text statement of the identity.
    tol : float
        Pass threshold on the maximal residual.
    gating : bool
        Whether a failure of this identity fails the report.
    """

    id: str
    eq: str
    tol: float
    residuals: dict = field(default_factory=dict)
    skipped: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    grid: int | None = None
    gating: bool = True

    def as_data(self, reason: str):
        """Keep the residuals but stop this identity from deciding the report."""
        self.gating = False
        self.note(reason)
        return self

    def add(self, n, value, reference):
        self.add_residual(n, residual(value, reference))

    def add_poly(self, n, p: LaurentPolynomial, q: LaurentPolynomial):
        d = (p - q).coeffs
        scale = max(1.0, float(np.max(np.abs(q.coeffs))) / RELATIVE_ABOVE)
        self.add_residual(n, float(np.max(np.abs(d))) / scale)

    def add_residual(self, n, r: float):
        r = float(r)
        if not np.isfinite(r):
            r = float("inf")
        self.residuals[n] = max(r, self.residuals.get(n, 0.0))

    def skip(self, n, reason: str):
        self.skipped.append({"n": n, "reason": reason})

    def note(self, text: str):
        self.notes.append(text)

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else 0.0

    @property
    def n_range(self):
        if not self.residuals:
            return None
        keys = sorted(self.residuals, key=_sort_key)
        return [keys[0], keys[-1]]

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    @property
    def vacuous(self) -> bool:
        return not self.residuals

    def worst(self):
        if not self.residuals:
            return None
        return max(self.residuals, key=lambda k: self.residuals[k])

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "eq": self.eq,
            "n_range": self.n_range,
            "max_residual": self.max_residual,
            "tol": self.tol,
            "checked": len(self.residuals),
            "skipped": self.skipped,
            "pass": self.passed,
            "gating": self.gating,
        }
        if self.grid is not None:
            out["grid"] = self.grid
        if self.notes:
            out["notes"] = self.notes
        return out

    def __repr__(self):
        state = "pass" if self.passed else "FAIL"
        return (f"IdentityResult({self.id}: max={self.max_residual:.2e} tol={self.tol:.0e} "
                f"{state}, {len(self.residuals)} checked, {len(self.skipped)} skipped)")


def _sort_key(k):
    return (0, k, "") if isinstance(k, (int, np.integer)) else (1, 0, str(k))


class ResidualReport:
    """Ordered collection of :class:`IdentityResult`, keyed by id."""

    def __init__(self, results=(), meta=None):
        self.results = []
        self.meta = dict(meta or {})
        self.extend(results)

    def extend(self, results):
        for r in results:
            self.add(r)
        return self

    def add(self, r: IdentityResult):
        self.results.append(r)

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, key):
        for r in self.results:
            if r.id == key:
                return r
        raise KeyError(key)

    def select(self, ids):
        """Results whose id equals, or starts with ``prefix`` for ``"prefix*"``."""
        if not ids or ids == ["all"]:
            return list(self.results)
        out = []
        for r in self.results:
            for pat in ids:
                if r.id == pat or (pat.endswith("*") and r.id.startswith(pat[:-1])):
                    out.append(r)
                    break
        return out

    def retolerance(self, tol: float):
        """Return a copy where every identity is judged at ``tol``."""
        rep = ResidualReport(meta=self.meta)
        for r in self.results:
            rep.add(IdentityResult(r.id, r.eq, tol, dict(r.residuals), list(r.skipped),
                                   list(r.notes), r.grid, r.gating))
        return rep

    @property
    def passed(self) -> bool:
        return not self.failures()

    def failures(self):
        """Gating identities above tolerance."""
        return [r for r in self.results if r.gating and not r.passed]

    def data_mismatches(self):
        """Non-gating (printed-form) identities above tolerance."""
        return [r for r in self.results if not r.gating and not r.passed]

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "meta": self.meta,
                "identities": [r.to_dict() for r in self.results]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, default=_jsonable)

    def summary(self) -> str:
        lines = []
        for r in self.results:
            state = "PASS" if r.passed else ("FAIL" if r.gating else "DATA")
            lines.append(f"{state}  {r.id:<22s} max={r.max_residual:.3e}  tol={r.tol:.0e}  "
                         f"checked={len(r.residuals)} skipped={len(r.skipped)}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(type(x))
