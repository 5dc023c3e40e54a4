"""Rational functions, pole divisors and the partial-fraction change of basis."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import scalars
from .errors import (DegreeOverflowError, ExactModeUnavailable, InvalidInput,
                     PoleConfigurationError)
from .poly import Polynomial, poly_gcd, poly_roots
from .scalars import DOUBLE, EXACT, GaussRat

REAL = "real"
PAIR_LOWER = "pair-lower"
PAIR_UPPER = "pair-upper"


class RationalFunction:
    """``num / den`` with ``den`` monic.

    Exact inputs are reduced to lowest terms; in double mode common factors are
    only cancelled on request (:meth:`reduced`), since approximate GCDs can
    silently drop genuine poles.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.const(1, num.mode)
        if num.mode != den.mode:
            mode = DOUBLE
            num, den = num.to_mode(mode), den.to_mode(mode)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.mode == EXACT and num and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            inv = 1 / lead
            num, den = num.scale(inv), den.monic()
        self.num = num
        self.den = den

    @classmethod
    def from_json(cls, data, mode=DOUBLE) -> "RationalFunction":
        try:
            return cls(Polynomial.from_json(data["num"], mode),
                       Polynomial.from_json(data["den"], mode))
        except (KeyError, TypeError) as exc:
            raise InvalidInput("rational function needs 'num' and 'den' arrays") from exc

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @property
    def mode(self):
        return self.num.mode

    @property
    def degree(self) -> int:
        """Degree as a map of the sphere (assumes lowest terms)."""
        return max(self.num.degree, self.den.degree)

    def to_mode(self, mode):
        return RationalFunction(self.num.to_mode(mode), self.den.to_mode(mode))

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def tau(self) -> "RationalFunction":
        return RationalFunction(self.num.tau(), self.den.tau())

    def is_real(self, tol=1e-12) -> bool:
        return self.num.is_real(tol) and self.den.is_real(tol)

    def reduced(self, tol=1e-8) -> "RationalFunction":
        g = poly_gcd(self.num, self.den, tol) if self.num else Polynomial.const(1, self.mode)
        if g.degree <= 0:
            return self
        return RationalFunction(self.num // g, self.den // g)

    def _binary(self, other, sign):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(Polynomial.const(other, self.mode))
        if self.den == other.den:
            return RationalFunction(self.num + other.num.scale(sign), self.den)
        return RationalFunction(self.num * other.den + (other.num * self.den).scale(sign),
                                self.den * other.den)

    def __add__(self, other):
        return self._binary(other, 1)

    def __sub__(self, other):
        return self._binary(other, -1)

    def scale(self, c) -> "RationalFunction":
        return RationalFunction(self.num.scale(c), self.den)

    def real_part(self) -> "RationalFunction":
        """``(f + f^tau) / 2``."""
        half = GaussRat(1, 0) / 2 if self.mode == EXACT else 0.5
        return (self + self.tau()).scale(half)

    def imag_part(self) -> "RationalFunction":
        """``(f - f^tau) / 2i``."""
        c = GaussRat(0, -1) / 2 if self.mode == EXACT else -0.5j
        return (self - self.tau()).scale(c)

    def __repr__(self):
        return f"RationalFunction({self.num.to_json()!r} / {self.den.to_json()!r})"


def compose_poly_ratfun(p: Polynomial, phi: RationalFunction) -> RationalFunction:
    """``p(phi)`` as ``sum a_j P^j Q^(n-j) / Q^n``."""
    if not p:
        raise InvalidInput("cannot compose the zero polynomial")
    mode = DOUBLE if DOUBLE in (p.mode, phi.mode) else EXACT
    p, phi = p.to_mode(mode), phi.to_mode(mode)
    n = p.degree
    P, Q = phi.num, phi.den
    ppow = [Polynomial.const(1, mode)]
    qpow = [Polynomial.const(1, mode)]
    for _ in range(n):
        ppow.append(ppow[-1] * P)
        qpow.append(qpow[-1] * Q)
    num = Polynomial.zero(mode)
    for j, a in enumerate(p.coeffs):
        if a:
            num = num + (ppow[j] * qpow[n - j]).scale(a)
    return RationalFunction(num, qpow[n])


def ratfun_tau(f: RationalFunction) -> RationalFunction:
    return f.tau()


def _exact_quotient(a: Polynomial, b: Polynomial, tol: float) -> Polynomial:
    q, r = a.divmod(b)
    if a.mode == EXACT:
        if r:
            raise PoleConfigurationError("denominator does not divide the common denominator")
    elif r and r.norm1() > tol * max(1.0, a.norm1()):
        raise PoleConfigurationError("denominator does not divide the common denominator")
    return q


def to_common_denominator(f: RationalFunction, g: RationalFunction, tol: float = 1e-8):
    """Return ``(P1, P2, Q)`` with ``f = P1/Q``, ``g = P2/Q`` and ``Q`` the monic lcm."""
    if f.mode != g.mode:
        f, g = f.to_mode(DOUBLE), g.to_mode(DOUBLE)
    h = poly_gcd(f.den, g.den, tol)
    # divide only by the gcd; long division by a full denominator loses accuracy
    fd = _exact_quotient(f.den, h, tol) if h.degree > 0 else f.den
    gd = _exact_quotient(g.den, h, tol) if h.degree > 0 else g.den
    q = f.den * gd
    p1, p2 = f.num * gd, g.num * fd
    if p1.degree > q.degree or p2.degree > q.degree:
        raise DegreeOverflowError(
            "numerator degree exceeds denominator degree (pole at infinity); "
            "apply a real Mobius change of variable first")
    return p1, p2, q


@dataclass(frozen=True)
class PoleEntry:
    pole: object
    multiplicity: int
    cls: str


@dataclass(frozen=True)
class PoleDivisor:
    """Ordered real divisor: real poles ascending, then conjugate pairs.

    Each pair is stored as adjacent ``pair-lower``, ``pair-upper`` entries;
    ``pairing`` maps a lower entry's index to its partner's index.
    """

    entries: tuple
    pairing: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def mode(self):
        if self.entries and all(isinstance(e.pole, GaussRat) for e in self.entries):
            return EXACT
        return DOUBLE

    @property
    def is_closed(self) -> bool:
        lows = sum(e.cls == PAIR_LOWER for e in self.entries)
        ups = sum(e.cls == PAIR_UPPER for e in self.entries)
        return lows == ups == len(self.pairing)

    def labels(self):
        """Basis labels ``(pole, k)`` in the canonical interleaved order."""
        out = []
        for e in self.entries:
            if e.cls == REAL:
                out.extend((e.pole, k) for k in range(e.multiplicity))
        for lo, up in self.pairing.items():
            a, b = self.entries[lo], self.entries[up]
            for k in range(a.multiplicity):
                out.append((a.pole, k))
                out.append((b.pole, k))
        # unpaired complex entries (open divisors) go last, k ascending
        paired = set(self.pairing) | set(self.pairing.values())
        for i, e in enumerate(self.entries):
            if e.cls != REAL and i not in paired:
                out.extend((e.pole, k) for k in range(e.multiplicity))
        return out

    def polynomial(self, mode=None) -> Polynomial:
        mode = mode or self.mode
        q = Polynomial.const(1, mode)
        for e in self.entries:
            lin = Polynomial((-scalars.convert(e.pole, mode), 1), mode)
            q = q * lin ** e.multiplicity
        return q

    def scaled(self, k: int) -> "PoleDivisor":
        return PoleDivisor(tuple(PoleEntry(e.pole, e.multiplicity * k, e.cls)
                                 for e in self.entries), dict(self.pairing))

    def to_json(self) -> list:
        return [{"pole": scalars.format_scalar(e.pole), "multiplicity": e.multiplicity,
                 "class": e.cls} for e in self.entries]


def _classify(pole, tol: float) -> str:
    im = pole.im if isinstance(pole, GaussRat) else pole.imag
    if isinstance(pole, GaussRat):
        if im == 0:
            return REAL
    elif abs(im) <= tol * (1.0 + abs(pole)):
        return REAL
    return PAIR_LOWER if im < 0 else PAIR_UPPER


def _sort_key(pole):
    z = complex(pole)
    return (z.real, z.imag)


def make_divisor(poles, tol: float = 1e-9, closed: bool = True) -> PoleDivisor:
    """Build an ordered divisor from ``(pole, multiplicity)`` pairs.

    In double mode near-real poles are snapped to the real axis and each
    lower pole is paired with the nearest upper candidate; both are replaced
    by the exactly conjugate-symmetric average.
    """
    merged: dict = {}
    for pole, m in poles:
        if m <= 0:
            raise InvalidInput("pole multiplicities must be positive")
        merged[pole] = merged.get(pole, 0) + int(m)
    items = list(merged.items())
    reals, lows, ups = [], [], []
    for pole, m in items:
        c = _classify(pole, tol)
        if c == REAL:
            if not isinstance(pole, GaussRat):
                pole = complex(complex(pole).real, 0.0)
            reals.append((pole, m))
        elif c == PAIR_LOWER:
            lows.append((pole, m))
        else:
            ups.append((pole, m))
    reals.sort(key=lambda pm: _sort_key(pm[0]))
    entries = [PoleEntry(p, m, REAL) for p, m in reals]
    pairing = {}
    pairs, open_lows = [], []
    remaining = list(ups)
    for pole, m in sorted(lows, key=lambda pm: _sort_key(pm[0])):
        best, best_d = None, None
        for j, (u, mu) in enumerate(remaining):
            d = abs(complex(u) - complex(pole).conjugate())
            if best is None or d < best_d:
                best, best_d = j, d
        ok = best is not None and (
            (remaining[best][0] == scalars.conj(pole)) if isinstance(pole, GaussRat)
            else best_d <= max(1e-6, 1e3 * tol) * (1.0 + abs(pole)))
        if ok and remaining[best][1] == m:
            u, _ = remaining.pop(best)
            if not isinstance(pole, GaussRat):
                avg = (complex(pole) + complex(u).conjugate()) / 2
                pole, u = avg, avg.conjugate()
            pairs.append((pole, u, m))
        else:
            open_lows.append((pole, m))
    if closed and (open_lows or remaining):
        raise PoleConfigurationError(
            "pole divisor is not conjugate-closed: "
            f"unpaired {[complex(p) for p, _ in open_lows + remaining]}")
    for lo, up, m in pairs:
        pairing[len(entries)] = len(entries) + 1
        entries.append(PoleEntry(lo, m, PAIR_LOWER))
        entries.append(PoleEntry(up, m, PAIR_UPPER))
    for pole, m in sorted(open_lows, key=lambda pm: _sort_key(pm[0])):
        entries.append(PoleEntry(pole, m, PAIR_LOWER))
    for pole, m in sorted(remaining, key=lambda pm: _sort_key(pm[0])):
        entries.append(PoleEntry(pole, m, PAIR_UPPER))
    return PoleDivisor(tuple(entries), pairing)


def _exact_roots(q: Polynomial):
    """Gaussian-rational roots of an exact polynomial, verified by division."""
    out = []
    rest = q
    # roots of the squarefree part are simple, so they snap reliably
    sqf = q // poly_gcd(q, q.derivative()) if q.degree > 1 else q
    for r, m in poly_roots(sqf):
        g = scalars.snap_gauss(r, tol=1e-6)
        lin = Polynomial((-g, 1), EXACT)
        mult = 0
        while rest.degree > 0:
            quo, rem = rest.divmod(lin)
            if rem:
                break
            rest, mult = quo, mult + 1
        if mult == 0:
            raise ExactModeUnavailable(f"root {r!r} is not Gaussian rational")
        out.append((g, mult))
    if rest.degree > 0:
        raise ExactModeUnavailable("denominator has roots that are not Gaussian rational")
    return out


def pole_divisor(q: Polynomial, tol: float = 1e-9, known_poles=None,
                 closed: bool = True) -> PoleDivisor:
    """Roots of ``q`` with multiplicities, classified and ordered.

    ``known_poles`` (``(pole, multiplicity)`` pairs) bypasses root finding.
    Pass ``closed=False`` for the divisor of a single non-real function.
    """
    if not q or q.degree < 0:
        raise InvalidInput("pole divisor of the zero polynomial")
    if known_poles is not None:
        poles = [(scalars.convert(p, q.mode), m) for p, m in known_poles]
        d = make_divisor(poles, tol, closed)
        _check_consistent(q, d, tol)
        return d
    if q.mode == EXACT:
        return make_divisor(_exact_roots(q.monic()), tol, closed)
    return make_divisor(poly_roots(q.monic()), tol, closed)


def _check_consistent(q: Polynomial, d: PoleDivisor, tol: float = 1e-9):
    qd = d.polynomial(q.mode)
    qm = q.monic()
    if q.mode == EXACT:
        if qd != qm:
            raise PoleConfigurationError("divisor is inconsistent with the denominator")
    elif qd.degree != qm.degree or not qd.allclose(qm, rtol=max(1e-6, 1e3 * tol)):
        raise PoleConfigurationError("divisor is inconsistent with the denominator")


def _series_reciprocal(c: list, m: int, mode) -> list:
    """First ``m`` Taylor coefficients of ``1 / sum c_k u^k``."""
    zero = GaussRat(0) if mode == EXACT else 0j
    inv = [zero] * m
    if m == 0:
        return inv
    inv[0] = 1 / c[0]
    for l in range(1, m):
        s = zero
        for q in range(1, min(l, len(c) - 1) + 1):
            s = s + c[q] * inv[l - q]
        inv[l] = -s * inv[0]
    return inv


def partial_fraction_matrix(q: Polynomial, d: PoleDivisor, check: bool = True) -> np.ndarray:
    """Matrix ``M`` with ``t**i / q(t) = sum_l M[i, l] * (t - a_l)**-(k_l + 1)``.

    Rows ``i = 0..N-1``; columns follow ``d.labels()``.  The principal part at
    each pole is read off the truncated Taylor series of ``t**i / R(t)``, where
    ``R`` is ``q`` with that pole's factor removed.
    """
    mode = q.mode
    n = q.degree
    if d.degree != n:
        raise PoleConfigurationError("divisor degree differs from denominator degree")
    if check:
        _check_consistent(q, d)
    lead_inv = 1 / q.lead
    labels = d.labels()
    col = {lab: j for j, lab in enumerate(labels)}
    dtype = object if mode == EXACT else complex
    M = np.empty((n, n), dtype=dtype)
    M[...] = GaussRat(0) if mode == EXACT else 0j
    for e in d.entries:
        a = scalars.convert(e.pole, mode)
        m = e.multiplicity
        r = Polynomial.const(1, mode)
        for o in d.entries:
            if o is not e:
                r = r * Polynomial((-scalars.convert(o.pole, mode), 1), mode) ** o.multiplicity
        rs = r.taylor_shift(a)[:m]
        inv = _series_reciprocal(rs, m, mode)
        one = GaussRat(1) if mode == EXACT else 1.0 + 0j
        apow = [one]
        for _ in range(n):
            apow.append(apow[-1] * a)
        for i in range(n):
            # (u + a)^i truncated to u^(m-1)
            top = min(i, m - 1)
            num = [comb(i, l) * apow[i - l] for l in range(top + 1)]
            for k in range(m):
                lvl = m - 1 - k
                s = GaussRat(0) if mode == EXACT else 0j
                for l in range(min(lvl, top) + 1):
                    s = s + num[l] * inv[lvl - l]
                M[i, col[(e.pole, k)]] = s * lead_inv
    return M
