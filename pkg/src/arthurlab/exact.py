"""Exact Gaussian-rational scalars and small dense matrices over them.

Matrices are plain numpy object arrays holding :class:`Qi` entries, so the usual
``@``, ``+`` and ``.T`` work unchanged and stay exact.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np


class Qi:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Qi):
            re, im = re.re, re.im + Fraction(im)
        elif isinstance(re, complex):
            re, im = _exact_float(re.real), _exact_float(re.imag) + Fraction(im)
        self.re = Fraction(re) if not isinstance(re, float) else _exact_float(re)
        self.im = Fraction(im) if not isinstance(im, float) else _exact_float(im)

    @classmethod
    def coerce(cls, x) -> "Qi":
        return x if isinstance(x, Qi) else cls(x)

    def conjugate(self) -> "Qi":
        return Qi(self.re, -self.im)

    def __add__(self, other):
        o = Qi.coerce(other)
        return Qi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Qi(-self.re, -self.im)

    def __sub__(self, other):
        o = Qi.coerce(other)
        return Qi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Qi.coerce(other) - self

    def __mul__(self, other):
        o = Qi.coerce(other)
        return Qi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Qi.coerce(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return Qi(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return Qi.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (Qi, int, Fraction, Rational)):
            o = Qi.coerce(other)
            return self.re == o.re and self.im == o.im
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_json(self) -> list[str]:
        """``[re, im]`` as ``"num/den"`` strings."""
        return [_frac_str(self.re), _frac_str(self.im)]

    @classmethod
    def from_json(cls, pair) -> "Qi":
        return cls(Fraction(pair[0]), Fraction(pair[1]))


I = Qi(0, 1)


def _exact_float(x: float) -> Fraction:
    if x != int(x):
        raise ValueError(f"refusing inexact float {x!r}; pass a Fraction")
    return Fraction(int(x))


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# --- matrices --------------------------------------------------------------

def matrix(rows) -> np.ndarray:
    """Object array of :class:`Qi` from nested rows of numbers."""
    arr = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            arr[i, j] = Qi.coerce(x)
    return arr


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    arr = np.empty((n, m), dtype=object)
    arr.fill(Qi(0))
    # fill() shares one object; Qi is immutable so that is harmless
    return arr


def identity(n: int) -> np.ndarray:
    arr = zeros(n)
    for k in range(n):
        arr[k, k] = Qi(1)
    return arr


def diag(entries) -> np.ndarray:
    entries = list(entries)
    arr = zeros(len(entries))
    for k, x in enumerate(entries):
        arr[k, k] = Qi.coerce(x)
    return arr


def unit(n: int, i: int, j: int) -> np.ndarray:
    """Matrix unit ``E_{i,j}`` with 1-based indices."""
    arr = zeros(n)
    arr[i - 1, j - 1] = Qi(1)
    return arr


def block_diag(*blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros(n)
    k = 0
    for b in blocks:
        s = b.shape[0]
        out[k:k + s, k:k + s] = b
        k += s
    return out


def conj(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = Qi.coerce(x).conjugate()
    return out


def conj_t(a: np.ndarray) -> np.ndarray:
    return conj(a).T


def scale(a: np.ndarray, c) -> np.ndarray:
    c = Qi.coerce(c)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = c * x
    return out


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(Qi.coerce(x) == Qi.coerce(y) for x, y in zip(a.flat, b.flat))


def is_zero(a: np.ndarray) -> bool:
    return all(not Qi.coerce(x) for x in a.flat)


def is_real(a: np.ndarray) -> bool:
    return all(Qi.coerce(x).is_real() for x in a.flat)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def inverse(a: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse over Q(i)."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    work = np.concatenate([a.copy(), identity(n)], axis=1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r, col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        p = work[col, col]
        work[col] = np.array([x / p for x in work[col]], dtype=object)
        for r in range(n):
            if r != col and work[r, col]:
                f = work[r, col]
                work[r] = work[r] - np.array([f * x for x in work[col]], dtype=object)
    return work[:, n:]


def det(a: np.ndarray) -> Qi:
    n = a.shape[0]
    work = a.copy()
    result = Qi(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r, col]), None)
        if pivot is None:
            return Qi(0)
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
            result = -result
        p = work[col, col]
        result = result * p
        for r in range(col + 1, n):
            if work[r, col]:
                f = work[r, col] / p
                work[r] = work[r] - np.array([f * x for x in work[col]], dtype=object)
    return result


def expm_nilpotent(x: np.ndarray, max_terms: int = 64) -> np.ndarray:
    """``exp(x)`` for nilpotent ``x`` as a terminating series."""
    n = x.shape[0]
    result = identity(n)
    term = identity(n)
    for k in range(1, max_terms):
        term = scale(term @ x, Fraction(1, k))
        if is_zero(term):
            return result
        result = result + term
    raise ValueError("matrix is not nilpotent")


def to_complex(a: np.ndarray) -> np.ndarray:
    return np.array([[complex(Qi.coerce(x)) for x in row] for row in a], dtype=complex)


def to_json(a: np.ndarray) -> list:
    return [[Qi.coerce(x).to_json() for x in row] for row in a]


def from_json(rows) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, pair in enumerate(row):
            arr[i, j] = Qi.from_json(pair)
    return arr


class GaussMat:
    """Fast exact matrix over Q(i): ``(re + i*im) / den`` with int64 numerators.

    Kept in lowest terms so equality is structural. Entries are checked against
    overflow before every product.
    """

    __slots__ = ("re", "im", "den")
    _LIMIT = 2 ** 30

    def __init__(self, re, im=None, den: int = 1):
        re = np.asarray(re, dtype=np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im, dtype=np.int64)
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = int(np.gcd.reduce(np.concatenate([re.ravel(), im.ravel(), [den]])))
        if g > 1:
            re, im, den = re // g, im // g, den // g
        self.re, self.im, self.den = re, im, int(den)

    @classmethod
    def from_qi(cls, a: np.ndarray) -> "GaussMat":
        den = 1
        for x in a.flat:
            x = Qi.coerce(x)
            den = np.lcm(den, np.lcm(x.re.denominator, x.im.denominator))
        den = int(den)
        re = np.empty(a.shape, dtype=np.int64)
        im = np.empty(a.shape, dtype=np.int64)
        for idx, x in np.ndenumerate(a):
            x = Qi.coerce(x)
            re[idx] = int(x.re * den)
            im[idx] = int(x.im * den)
        return cls(re, im, den)

    def to_qi(self) -> np.ndarray:
        out = np.empty(self.re.shape, dtype=object)
        for idx in np.ndindex(self.re.shape):
            out[idx] = Qi(Fraction(int(self.re[idx]), self.den), Fraction(int(self.im[idx]), self.den))
        return out

    @property
    def shape(self):
        return self.re.shape

    @property
    def T(self) -> "GaussMat":
        return GaussMat(self.re.T, self.im.T, self.den)

    def conj(self) -> "GaussMat":
        return GaussMat(self.re, -self.im, self.den)

    def _guard(self, other: "GaussMat"):
        k = self.re.shape[-1]
        bound = max(int(np.abs(self.re).max(initial=0)), int(np.abs(self.im).max(initial=0)))
        obound = max(int(np.abs(other.re).max(initial=0)), int(np.abs(other.im).max(initial=0)))
        if 2 * k * bound * obound >= 2 ** 62 or self.den * other.den >= 2 ** 62:
            raise OverflowError("GaussMat entries too large; use object arrays")

    def __matmul__(self, other: "GaussMat") -> "GaussMat":
        self._guard(other)
        re = self.re @ other.re - self.im @ other.im
        im = self.re @ other.im + self.im @ other.re
        return GaussMat(re, im, self.den * other.den)

    def _align(self, other: "GaussMat"):
        den = int(np.lcm(self.den, other.den))
        a, b = den // self.den, den // other.den
        return a, b, den

    def __add__(self, other: "GaussMat") -> "GaussMat":
        a, b, den = self._align(other)
        return GaussMat(a * self.re + b * other.re, a * self.im + b * other.im, den)

    def __sub__(self, other: "GaussMat") -> "GaussMat":
        a, b, den = self._align(other)
        return GaussMat(a * self.re - b * other.re, a * self.im - b * other.im, den)

    def __neg__(self) -> "GaussMat":
        return GaussMat(-self.re, -self.im, self.den)

    def scale(self, c) -> "GaussMat":
        c = Qi.coerce(c)
        den = int(np.lcm(c.re.denominator, c.im.denominator))
        cr, ci = int(c.re * den), int(c.im * den)
        return GaussMat(cr * self.re - ci * self.im, cr * self.im + ci * self.re, self.den * den)

    def inverse(self) -> "GaussMat":
        return GaussMat.from_qi(inverse(self.to_qi()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussMat):
            return NotImplemented
        return (self.den == other.den and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.re.any() and not self.im.any()

    def is_real(self) -> bool:
        return not self.im.any()

    def to_complex(self) -> np.ndarray:
        return (self.re + 1j * self.im) / self.den
