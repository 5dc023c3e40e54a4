"""Dense univariate polynomials over complex doubles or Gaussian rationals.

Coefficients are stored low-to-high.  A polynomial is *exact* when every
coefficient is a :class:`~qdbezout.scalars.GaussRat`; mixing the two modes in
one polynomial is not allowed.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from . import scalars
from .errors import InvalidInput, RootFindingError
from .scalars import DOUBLE, EXACT, GaussRat


def _zero_like(mode):
    return GaussRat(0) if mode == EXACT else 0j


class Polynomial:
    """Immutable dense polynomial, coefficients low-to-high, trailing zeros trimmed."""

    __slots__ = ("coeffs", "_mode")

    def __init__(self, coeffs: Sequence = (), mode: str | None = None):
        cs = list(coeffs)
        if mode is None:
            mode = EXACT if cs and all(scalars.is_exact(c) for c in cs) else DOUBLE
        cs = [scalars.convert(c, mode) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_mode", mode)

    # construction helpers
    @classmethod
    def zero(cls, mode=DOUBLE):
        return cls((), mode)

    @classmethod
    def const(cls, c, mode=None):
        return cls((c,), mode)

    @classmethod
    def monomial(cls, k: int, c=1, mode=None):
        return cls([0] * k + [c], mode)

    @classmethod
    def from_roots(cls, roots, lead=1, mode=None):
        p = cls.const(lead, mode)
        for r in roots:
            p = p * cls((-r, 1), p.mode)
        return p

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else _zero_like(self.mode)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _zero_like(self.mode)

    def to_mode(self, mode: str) -> "Polynomial":
        return Polynomial(self.coeffs, mode)

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.mode != self.mode:
                raise InvalidInput("cannot mix exact and double polynomials")
            return other
        return Polynomial.const(other, self.mode)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Polynomial([self[k] + other[k] for k in range(n)], self.mode)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.mode)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return Polynomial.zero(self.mode)
        if self.mode == DOUBLE:
            return Polynomial(np.convolve(self.to_numpy(), other.to_numpy()), DOUBLE)
        out = [GaussRat(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, EXACT)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.const(1, self.mode)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        return Polynomial([c * a for a in self.coeffs], self.mode)

    def monic(self) -> "Polynomial":
        if not self:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        inv = 1 / self.lead
        return Polynomial([a * inv for a in self.coeffs[:-1]] + [1], self.mode)

    def divmod(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if self.degree < dq:
            return Polynomial.zero(self.mode), self
        inv = 1 / other.lead
        quot = [_zero_like(self.mode)] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(quot, self.mode), Polynomial(rem[:dq], self.mode)

    __divmod__ = divmod

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:], self.mode)

    def __call__(self, z):
        """Horner evaluation; exact when both operands are exact."""
        if self.mode == EXACT and scalars.is_exact(z):
            acc = GaussRat(0)
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def tau(self) -> "Polynomial":
        """Coefficient-wise conjugate, so that ``p.tau()(z) == conj(p(conj(z)))``."""
        return Polynomial([scalars.conj(c) for c in self.coeffs], self.mode)

    def compose(self, q: "Polynomial") -> "Polynomial":
        out = Polynomial.zero(self.mode)
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def taylor_shift(self, a) -> list:
        """Coefficients of ``p(u + a)`` in powers of ``u``."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + a * cs[k + 1]
        return cs

    def norm1(self) -> float:
        return float(sum(abs(complex(c)) for c in self.coeffs))

    def is_real(self, tol: float = 0.0) -> bool:
        if self.mode == EXACT:
            return all(c.im == 0 for c in self.coeffs)
        scale = max(1.0, max((abs(c) for c in self.coeffs), default=0.0))
        return all(abs(c.imag) <= tol * scale for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def allclose(self, other: "Polynomial", rtol=1e-9) -> bool:
        n = max(len(self), len(other))
        a = np.array([complex(self[k]) for k in range(n)])
        b = np.array([complex(other[k]) for k in range(n)])
        scale = max(1.0, float(np.abs(a).max(initial=0)), float(np.abs(b).max(initial=0)))
        return bool(np.all(np.abs(a - b) <= rtol * scale))

    def to_json(self) -> list:
        return [scalars.format_scalar(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, mode: str = DOUBLE) -> "Polynomial":
        if not isinstance(data, (list, tuple)):
            raise InvalidInput("polynomial must be a list of coefficients, low to high")
        return cls([scalars.parse_scalar(c, mode) for c in data], mode)

    def __repr__(self):
        return f"Polynomial({self.to_json()!r}, mode={self.mode!r})"


def poly_arith(lhs: Polynomial, rhs: Polynomial | None, op: str):
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "divmod":
        return lhs.divmod(rhs)
    if op == "derivative":
        return lhs.derivative()
    raise InvalidInput(f"unknown op {op!r}")


def classical_bezout(p1: Polynomial, p2: Polynomial, n: int) -> np.ndarray:
    """Coefficient matrix of ``(p1(t) p2(s) - p1(s) p2(t)) / (t - s)``.

    Entry ``[i, j]`` multiplies ``t**i * s**j``; the division by ``t - s`` is
    carried out by synthetic division in ``t`` and is exact.
    """
    if p1.mode != p2.mode:
        raise InvalidInput("cannot mix exact and double polynomials")
    if n < max(p1.degree, p2.degree, 0):
        raise InvalidInput(f"size {n} is smaller than the polynomial degrees")
    exact = p1.mode == EXACT
    dtype = object if exact else complex
    a = np.array([p1[k] for k in range(n + 1)], dtype=dtype)
    b = np.array([p2[k] for k in range(n + 1)], dtype=dtype)
    g = np.outer(a, b) - np.outer(b, a)  # g[i, j]: coefficient of t^i s^j
    c = np.empty((n, n), dtype=dtype)
    row = g[n].copy()
    for i in range(n, 0, -1):
        # row holds the t^(i-1) quotient coefficient, as a polynomial in s
        c[i - 1] = row[:n]
        shifted = np.empty_like(row)
        shifted[0] = _zero_like(p1.mode)
        shifted[1:] = row[:-1]
        row = g[i - 1] + shifted
    return c


def _trim_rel(p: Polynomial, tol: float, scale: float) -> Polynomial:
    cs = list(p.coeffs)
    while cs and abs(cs[-1]) <= tol * scale:
        cs.pop()
    return Polynomial(cs, p.mode)


def poly_gcd(p1: Polynomial, p2: Polynomial, tol: float = 1e-8) -> Polynomial:
    """Monic GCD: exact Euclid, or an approximate remainder sequence in double mode.

    In double mode each remainder is normalized to unit 1-norm and
    coefficients below ``tol`` (relative) are discarded.
    """
    if not p1 and not p2:
        raise InvalidInput("gcd of two zero polynomials")
    if p1.mode == EXACT:
        a, b = p1, p2
        while b:
            a, b = b, a % b
        return a.monic()
    a = p1.scale(1 / p1.norm1()) if p1 else p1
    b = p2.scale(1 / p2.norm1()) if p2 else p2
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a % b
        r = _trim_rel(r, tol, 1.0)
        a, b = b, (r.scale(1 / r.norm1()) if r else r)
    return a.monic()


def poly_gcd_extended(p1: Polynomial, p2: Polynomial, n: int, tol: float = 1e-8):
    """GCD of ``p1``, ``p2`` viewed as numerators over a degree-``n`` denominator.

    Returns ``(gcd, common_degree)`` where ``common_degree`` also counts the
    shared zero at infinity, ``min(n - deg p1, n - deg p2)``.
    """
    if not p1 and not p2:
        raise InvalidInput("both polynomials are zero")
    if n < max(p1.degree, p2.degree):
        raise InvalidInput("n must be at least the larger degree")
    g = poly_gcd(p1, p2, tol)
    d1 = n - p1.degree if p1 else n
    d2 = n - p2.degree if p2 else n
    if not p1 or not p2:
        # the zero function vanishes to every order; only the other one limits
        at_inf = d2 if not p1 else d1
    else:
        at_inf = min(d1, d2)
    return g, g.degree + at_inf


def _cluster(roots: np.ndarray, radius: float):
    """Single-linkage clustering; returns (centre, multiplicity) pairs."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    out = [(complex(np.mean(g)), len(g)) for g in groups.values()]
    out.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return out


def poly_roots(p: Polynomial, tol: float | None = None):
    """Roots with multiplicities as a list of ``(root, multiplicity)``.

    Companion-matrix eigenvalues followed by clustering within
    ``tol`` (default ``1e-6 * (1 + max |root|)``).  Exact polynomials are
    converted to double first.
    """
    if not p:
        raise InvalidInput("the zero polynomial has no finite root set")
    c = p.to_numpy()
    if p.degree == 0:
        return []
    # strip zero roots before scaling; np.roots does this too but keep count
    nz = 0
    while nz < len(c) and c[nz] == 0:
        nz += 1
    c = c[nz:]
    try:
        r = np.roots(c[::-1]) if len(c) > 1 else np.array([], dtype=complex)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise RootFindingError(str(exc)) from exc
    if not np.all(np.isfinite(r)):
        raise RootFindingError("root finder returned non-finite values")
    r = np.concatenate([np.zeros(nz, dtype=complex), r.astype(complex)])
    if tol is None:
        tol = 1e-6 * (1.0 + float(np.abs(r).max(initial=0.0)))
    return _cluster(r, tol)
