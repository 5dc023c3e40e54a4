"""Scalar fields: complex doubles and exact Gaussian rationals.

Exact values are stored as a pair of :class:`fractions.Fraction` parts.  The
canonical string form is ``(a+bi)/c`` with ``c > 0`` and ``gcd(a, b, c) = 1``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import ExactModeUnavailable, InvalidInput

EXACT = "exact"
DOUBLE = "double"
MODES = (EXACT, DOUBLE)


class GaussRat:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        if isinstance(x, float):
            return cls(Fraction(x), 0)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return parse_scalar(x, EXACT)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussRat")

    def _other(self, x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Rational)):
            return GaussRat(x)
        return NotImplemented

    def __add__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        return GaussRat(self.re + x.re, self.im + x.im)

    __radd__ = __add__

    def __sub__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        return GaussRat(self.re - x.re, self.im - x.im)

    def __rsub__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        return x - self

    def __mul__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        if not x.im:
            return GaussRat(self.re * x.re, self.im * x.re)
        if not self.im:
            return GaussRat(self.re * x.re, self.re * x.im)
        return GaussRat(self.re * x.re - self.im * x.im,
                        self.re * x.im + self.im * x.re)

    __rmul__ = __mul__

    def __truediv__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        if not x:
            raise ZeroDivisionError("GaussRat division by zero")
        if not x.im:
            return GaussRat(self.re / x.re, self.im / x.re)
        d = x.re * x.re + x.im * x.im
        return GaussRat((self.re * x.re + self.im * x.im) / d,
                        (self.im * x.re - self.re * x.im) / d)

    def __rtruediv__(self, x):
        x = self._other(x)
        if x is NotImplemented:
            return x
        return x / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussRat(1) / self) ** (-k)
        out, base = GaussRat(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, x):
        if isinstance(x, GaussRat):
            return self.re == x.re and self.im == x.im
        if isinstance(x, (int, Rational)):
            return self.im == 0 and self.re == x
        if isinstance(x, (float, complex)):
            return complex(self) == x
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return math.sqrt(float(self.abs2()))

    def canonical(self):
        """Return integers ``(a, b, c)`` with value ``(a + b i)/c``."""
        c = math.lcm(self.re.denominator, self.im.denominator)
        a = self.re.numerator * (c // self.re.denominator)
        b = self.im.numerator * (c // self.im.denominator)
        g = math.gcd(math.gcd(a, b), c)
        return a // g, b // g, c // g

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussRat({format_scalar(self)!r})"


def is_exact(x) -> bool:
    return isinstance(x, (GaussRat, int, Rational))


def to_exact(x) -> GaussRat:
    return GaussRat.coerce(x)


def to_double(x) -> complex:
    return complex(x)


def convert(x, mode: str):
    if mode == EXACT:
        return to_exact(x)
    if mode == DOUBLE:
        return to_double(x)
    raise InvalidInput(f"unknown mode {mode!r}")


def conj(x):
    if isinstance(x, (int, Rational)):
        return x
    return x.conjugate()


def is_zero(x, tol: float = 0.0) -> bool:
    if isinstance(x, GaussRat):
        return not x
    return abs(x) <= tol


def snap_gauss(z: complex, max_den: int = 10**6, tol: float = 1e-9) -> GaussRat:
    """Nearest Gaussian rational with bounded denominators.

    Raises :class:`ExactModeUnavailable` when ``z`` is not within ``tol`` of
    such a value; callers verify the snapped value exactly afterwards.
    """
    re = Fraction(z.real).limit_denominator(max_den)
    im = Fraction(z.imag).limit_denominator(max_den)
    g = GaussRat(re, im)
    if abs(complex(g) - z) > tol * (1.0 + abs(z)):
        raise ExactModeUnavailable(f"{z!r} is not close to a Gaussian rational")
    return g


def _fmt_float(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def format_scalar(x) -> str:
    """Serialize a scalar: ``"a+bi"`` for doubles, ``"(a+bi)/c"`` for exact."""
    if isinstance(x, (GaussRat, int, Rational)):
        a, b, c = GaussRat.coerce(x).canonical()
        sign = "-" if b < 0 else "+"
        return f"({a}{sign}{abs(b)}i)/{c}"
    z = complex(x)
    sign = "-" if (z.imag < 0 or (z.imag == 0 and math.copysign(1, z.imag) < 0)) else "+"
    return f"{_fmt_float(z.real)}{sign}{_fmt_float(abs(z.imag))}i"


_EXACT_RE = re.compile(r"^\((?P<body>[^()]*)\)/(?P<den>[+-]?\d+)$")
_FRAC_RE = re.compile(r"^(?P<num>[+-]?\d+)/(?P<den>\d+)$")
_UNUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_UNUM})?i$")
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_UNUM})(?:(?P<sign>[+-])(?P<mag>{_UNUM})?i)?$")


def _parse_parts(text: str):
    """Split ``"a+bi"``-style text into real and imaginary decimal strings."""
    m = _IMAG_RE.match(text)
    if m:
        return "0", m.group("sign") + (m.group("mag") or "1")
    m = _FULL_RE.match(text)
    if m:
        if m.group("sign") is None:
            return m.group("re"), "0"
        return m.group("re"), m.group("sign") + (m.group("mag") or "1")
    raise InvalidInput(f"cannot parse scalar {text!r}")


def parse_scalar(s, mode: str = DOUBLE):
    """Parse a number or scalar string into the given mode.

    Accepts JSON numbers and strings such as ``"3"``, ``"-2.5"``, ``"1-2i"``,
    ``"-i"``, ``"4j"``, ``"-1/4"`` and the exact form ``"(a+bi)/c"``.
    """
    if isinstance(s, bool):
        raise InvalidInput("booleans are not scalars")
    if isinstance(s, (int, float, complex, GaussRat, Fraction)):
        return convert(s, mode)
    if not isinstance(s, str):
        raise InvalidInput(f"cannot parse scalar from {type(s).__name__}")
    text = s.replace(" ", "").replace("j", "i")
    if not text:
        raise InvalidInput("empty scalar")
    den = 1
    m = _EXACT_RE.match(text) or _FRAC_RE.match(text)
    if m and "body" not in m.groupdict():
        text, den = m.group("num"), int(m.group("den"))
        if den == 0:
            raise InvalidInput("zero denominator")
    elif m:
        den = int(m.group("den"))
        if den == 0:
            raise InvalidInput("zero denominator")
        text = m.group("body")
    re_s, im_s = _parse_parts(text)
    if mode == EXACT or den != 1:
        return convert(GaussRat(Fraction(re_s) / den, Fraction(im_s) / den), mode)
    return convert(complex(float(re_s), float(im_s)), mode)


def _split_integer(A: np.ndarray):
    """``A = (R + i*I) / den`` with integer object arrays ``R, I``."""
    den = 1
    for x in A.flat:
        x = GaussRat.coerce(x)
        den = math.lcm(den, x.re.denominator, x.im.denominator)
    R = np.empty(A.shape, dtype=object)
    I = np.empty(A.shape, dtype=object)
    for idx, x in np.ndenumerate(A):
        x = GaussRat.coerce(x)
        R[idx] = x.re.numerator * (den // x.re.denominator)
        I[idx] = x.im.numerator * (den // x.im.denominator)
    return R, I, den


def gauss_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product of Gaussian-rational matrices via integer matrix products."""
    ar, ai, ad = _split_integer(A)
    br, bi, bd = _split_integer(B)
    rr = ar @ br - ai @ bi
    ii = ar @ bi + ai @ br
    den = ad * bd
    out = np.empty(rr.shape, dtype=object)
    for idx in np.ndindex(rr.shape):
        out[idx] = GaussRat(Fraction(rr[idx], den), Fraction(ii[idx], den))
    return out
