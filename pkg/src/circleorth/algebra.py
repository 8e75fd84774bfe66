"""Complex Laurent polynomials and small matrix helpers.

Everything in the package that is a polynomial in ``z`` and ``1/z`` (monic
OPUC, their reversals, the first-class Laurent polynomials, and the Favard
constructions) is carried by :class:`LaurentPolynomial`.
"""
from __future__ import annotations

import numpy as np


class LaurentPolynomial:
    """Finite Laurent series ``sum_k c_k z^k`` with contiguous support.

    Coefficients are stored densely for powers ``lo .. lo + len(coeffs) - 1``.
    Leading and trailing exact zeros are trimmed on construction; no
    epsilon trimming is ever applied.  The zero polynomial is ``lo=0,
    coeffs=[0]``.  Instances are immutable.
    """

    __slots__ = ("_lo", "_c")

    def __init__(self, coeffs, lo: int = 0):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        nz = np.flatnonzero(c)
        if nz.size == 0:
            c, lo = np.zeros(1, dtype=complex), 0
        else:
            lo = int(lo) + int(nz[0])
            c = c[nz[0]:nz[-1] + 1]
        c.setflags(write=False)
        self._lo = lo
        self._c = c

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls([0.0])

    @classmethod
    def const(cls, value) -> "LaurentPolynomial":
        return cls([value])

    @classmethod
    def monomial(cls, k: int, coeff=1.0) -> "LaurentPolynomial":
        return cls([coeff], lo=k)

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPolynomial":
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in terms.items():
            c[k - lo] += v
        return cls(c, lo)

    @classmethod
    def cos_basis(cls, n: int) -> "LaurentPolynomial":
        """``(z^n + z^-n)/2``; equals 1 for ``n = 0``."""
        return cls.from_dict({n: 0.5}) + cls.from_dict({-n: 0.5})

    @classmethod
    def sin_basis(cls, n: int) -> "LaurentPolynomial":
        """``(z^n - z^-n)/(2i)``; zero for ``n = 0``."""
        return cls.from_dict({n: 0.5 / 1j}) - cls.from_dict({-n: 0.5 / 1j})

    # accessors ------------------------------------------------------------
    @property
    def lo(self) -> int:
        return self._lo

    @property
    def hi(self) -> int:
        return self._lo + self._c.size - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0

    @property
    def degree(self) -> int:
        return self.hi

    def coeff(self, k: int) -> complex:
        i = k - self._lo
        if 0 <= i < self._c.size:
            return complex(self._c[i])
        return 0j

    def dense(self, lo: int, hi: int) -> np.ndarray:
        """Coefficients for powers ``lo..hi`` (zero padded / cropped)."""
        out = np.zeros(hi - lo + 1, dtype=complex)
        a, b = max(lo, self.lo), min(hi, self.hi)
        if a <= b:
            out[a - lo:b - lo + 1] = self._c[a - self.lo:b - self.lo + 1]
        return out

    def terms(self):
        return {self._lo + i: complex(v) for i, v in enumerate(self._c) if v != 0}

    # arithmetic -----------------------------------------------------------
    def _binary(self, other, sign):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.const(other)
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        return LaurentPolynomial(self.dense(lo, hi) + sign * other.dense(lo, hi), lo)

    def __add__(self, other):
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPolynomial(-self._c, self._lo)

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            return LaurentPolynomial(np.convolve(self._c, other._c), self._lo + other._lo)
        return LaurentPolynomial(self._c * complex(other), self._lo)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return LaurentPolynomial(self._c / complex(scalar), self._lo)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._lo == other._lo and np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash((self._lo, self._c.tobytes()))

    def __repr__(self):
        return f"LaurentPolynomial(lo={self._lo}, coeffs={self._c.tolist()!r})"

    # structural operations ------------------------------------------------
    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``z**k``."""
        if self.is_zero():
            return self
        return LaurentPolynomial(self._c, self._lo + k)

    def reflect(self) -> "LaurentPolynomial":
        """``p_*(z) = conj(p(1/conj(z)))``: coefficient of ``z^k`` is ``conj(p_{-k})``."""
        return LaurentPolynomial(np.conj(self._c[::-1]), -self.hi)

    def reverse(self, n: int) -> "LaurentPolynomial":
        """Reversed polynomial ``z^n conj(p(1/conj(z)))`` of an ordinary polynomial."""
        if self.lo < 0:
            raise ValueError("reverse() needs an ordinary polynomial (no negative powers)")
        if not self.is_zero() and self.hi > n:
            raise ValueError(f"degree {self.hi} exceeds reversal order {n}")
        return self.reflect().shift(n)

    def conj_coeffs(self) -> "LaurentPolynomial":
        """Polynomial with conjugated coefficients (same powers)."""
        return LaurentPolynomial(np.conj(self._c), self._lo)

    # evaluation -----------------------------------------------------------
    def __call__(self, z):
        return self.eval(z)

    def eval(self, z):
        """Evaluate at a scalar or array ``z``.

        The nonnegative and negative tails are evaluated by separate Horner
        passes (the latter in ``1/z``) so that ``|z|`` far from 1 does not
        overflow either tail prematurely.
        """
        z = np.asarray(z, dtype=complex)
        if self.lo < 0 and np.any(z == 0):
            raise ValueError("cannot evaluate negative powers at z = 0")
        c = self._c
        pos_start = max(0, -self.lo)
        pos = c[pos_start:]                      # powers max(lo,0)..hi
        out = np.zeros_like(z)
        if pos.size:
            acc = np.zeros_like(z)
            for a in pos[::-1]:
                acc = acc * z + a
            base = max(self.lo, 0)
            out = acc * z ** base if base else acc
        if self.lo < 0:
            neg = c[:min(pos_start, c.size)]     # powers lo..min(hi,-1)
            top = min(self.hi, -1)
            w = 1.0 / z
            acc = np.zeros_like(z)
            for a in neg:                        # from power lo (highest in w)
                acc = acc * w + a
            out = out + acc * w ** (-top)
        return out if out.ndim else complex(out)

    def eval_grid(self, grid) -> np.ndarray:
        return np.asarray(self.eval(np.asarray(grid, dtype=complex)))


def poly(coeffs, lo: int = 0) -> LaurentPolynomial:
    """Shorthand constructor."""
    return LaurentPolynomial(coeffs, lo)


Z = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.const(1.0)


def max_coeff_diff(p: LaurentPolynomial, q: LaurentPolynomial) -> float:
    d = p - q
    return float(np.max(np.abs(d.coeffs)))


def mat2(e11, e12, e21, e22) -> np.ndarray:
    """A 2x2 complex matrix as a numpy array."""
    return np.array([[e11, e12], [e21, e22]], dtype=complex)


def det2(m) -> complex:
    m = np.asarray(m)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
