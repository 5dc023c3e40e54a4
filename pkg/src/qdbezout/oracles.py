"""Independent checks of the counts: crossing counts, fibers and direct root membership.

None of these use Bezout matrices, so agreement with the inertia-based counts
is a genuine cross-check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .bezout import DEFAULT_RANK_TOL, signature_form
from .errors import InvalidInput, NumericalFailure, RootFindingError
from .poly import Polynomial, poly_roots
from .ratfun import RationalFunction, to_common_denominator
from .scalars import DOUBLE, format_scalar

UPPER, LOWER, ON_REAL = "upper", "lower", "real"
MEMBERSHIP_TOL = 1e-7

PSD, NSD, INDEFINITE = "positive-semidefinite", "negative-semidefinite", "indefinite"


@dataclass(frozen=True)
class FiberReport:
    lam: complex
    preimages: tuple  # (point, multiplicity, location)
    imbalance: int
    at_infinity: int = 0

    def to_json(self) -> dict:
        return {
            "lambda": format_scalar(self.lam),
            "preimages": [{"point": format_scalar(z), "multiplicity": m, "location": loc}
                          for z, m, loc in self.preimages],
            "at_infinity": self.at_infinity,
            "imbalance": self.imbalance,
        }


class DegenerateFiber(NumericalFailure):
    """The fiber meets the real line (or infinity); choose another value."""


def _as_double(h: RationalFunction):
    h = h.to_mode(DOUBLE)
    if h.degree < 1:
        raise InvalidInput("function must be nonconstant")
    return h


def _abs_eval(p: Polynomial, x) -> float:
    """``sum |c_k| |x|**k``: the scale against which ``p(x)`` is compared to zero."""
    return float(np.polyval(np.abs(p.to_numpy())[::-1], abs(x))) if p else 0.0


def _fiber_poly(h: RationalFunction, lam) -> Polynomial:
    return h.num - h.den.scale(lam)


def fiber_imbalance(h: RationalFunction, lam: complex, tol: float = 1e-9) -> FiberReport:
    """Preimages of ``lam`` under ``h`` split by half-plane.

    ``imbalance = (# upper) - (# lower)``, multiplicities included.  Raises
    :class:`DegenerateFiber` when a preimage is within ``tol`` of the real
    line or the fiber loses mass to infinity.
    """
    h = _as_double(h)
    lam = complex(lam)
    fp = _fiber_poly(h, lam)
    at_inf = h.degree - fp.degree
    pts = []
    up = low = 0
    for r, m in (poly_roots(fp) if fp.degree > 0 else []):
        # a preimage shared with the denominator is a cancelled pole, not a fiber point
        if abs(h.den(r)) <= tol * _abs_eval(h.den, r):
            continue
        if abs(r.imag) <= tol * (1 + abs(r)):
            loc = ON_REAL
        elif r.imag > 0:
            loc, up = UPPER, up + m
        else:
            loc, low = LOWER, low + m
        pts.append((r, m, loc))
    report = FiberReport(lam, tuple(pts), up - low, at_inf)
    if at_inf > 0 or any(loc == ON_REAL for _, _, loc in pts):
        raise DegenerateFiber(f"fiber over {lam} meets the real line")
    return report


def _real_crossings(h: RationalFunction, lam: float, tol: float):
    """Signed crossings of the level ``lam``; ``None`` when the value is not regular."""
    fp = _fiber_poly(h, lam)
    if fp.degree < h.degree:
        return None  # infinity lies in the fiber
    dh = h.num.derivative() * h.den - h.num * h.den.derivative()
    # real coefficients keep real eigenvalues exactly real in the companion solve
    c = fp.to_numpy().real[::-1]
    roots = np.roots(c / np.abs(c).max())
    total = 0
    for r in roots:
        im = abs(r.imag)
        if im > 1e-6 * (1 + abs(r)):
            continue
        if im > 0:
            return None  # near a ramification point
        x = r.real
        if abs(h.den(x)) <= tol * _abs_eval(h.den, x):
            continue  # cancelled factor of num and den
        # sign of h' = dh / den**2, and den(x)**2 > 0 on the real line
        d = dh(x).real
        if abs(d) <= tol * _abs_eval(dh, x):
            return None
        total += 1 if d > 0 else -1
    return total


def _value_radius(h: RationalFunction) -> float:
    dh = h.num.derivative() * h.den - h.num * h.den.derivative()
    vals = [1.0]
    if dh.degree > 0:
        for r, _ in poly_roots(dh):
            if abs(h.den(r)) > 1e-12:
                vals.append(abs(h(r)))
    return 1.0 + max(vals)


def cauchy_index(h: RationalFunction, trials: int = 7, tol: float = 1e-9,
                 seed: int | None = 0) -> int:
    """Winding number of a real rational function over the extended real line.

    Counts signed crossings of random regular real levels and takes the
    majority over ``trials`` successful samples.
    """
    h = _as_double(h)
    if not h.is_real(1e-9 * max(1.0, h.num.norm1(), h.den.norm1())):
        raise InvalidInput("cauchy_index needs a real rational function")
    rng = np.random.default_rng(seed)
    R = _value_radius(h)
    votes = Counter()
    attempts = 0
    while sum(votes.values()) < trials and attempts < 20 * trials:
        attempts += 1
        lam = float(rng.uniform(-R, R))
        c = _real_crossings(h, lam, tol)
        if c is not None:
            votes[c] += 1
    if not votes:
        raise NumericalFailure("no regular value found for the crossing count")
    return votes.most_common(1)[0][0]


def random_upper(rng, scale: float = 1.0) -> complex:
    return complex(rng.normal() * scale, abs(rng.normal()) * scale + 0.1 * scale)


def fiber_imbalance_generic(h: RationalFunction, rng, tries: int = 20,
                            tol: float = 1e-9) -> FiberReport:
    """``fiber_imbalance`` at a random upper value, resampled on degeneracy."""
    last = None
    for _ in range(tries):
        try:
            return fiber_imbalance(h, random_upper(rng), tol)
        except DegenerateFiber as exc:
            last = exc
    raise NumericalFailure(f"every sampled value gave a degenerate fiber: {last}")


def _preimages(phi: RationalFunction, w: complex):
    """Finite preimages of ``w`` under ``phi`` and the count lost to infinity."""
    fp = phi.num - phi.den.scale(w)
    if fp.degree < 0:
        raise RootFindingError("phi is constant at this value")
    roots = poly_roots(fp) if fp.degree > 0 else []
    return roots, phi.degree - fp.degree


def membership_count(p: Polynomial, phi: RationalFunction, tol: float = MEMBERSHIP_TOL):
    """``(inside, boundary, outside)`` for the roots of ``p`` relative to ``phi(H)``.

    A root ``w`` is inside when some preimage ``phi(t) = w`` has ``Im t > tol``
    and on the boundary when the preimage closest to the real line (infinity
    included) has ``|Im t| <= tol * (1 + |t|**2)``.
    """
    phi = phi.to_mode(DOUBLE)
    p = p.to_mode(DOUBLE)
    if not p:
        raise InvalidInput("zero polynomial")
    if p.degree < 1:
        return 0, 0, 0
    inside = boundary = outside = 0
    for w, m in poly_roots(p):
        roots, lost = _preimages(phi, w)
        ims = [t.imag for t, _ in roots]
        if any(im > tol * (1 + abs(t) ** 2) for (t, _), im in zip(roots, ims)):
            inside += m
        elif lost > 0 or any(abs(t.imag) <= tol * (1 + abs(t) ** 2) for t, _ in roots):
            boundary += m
        else:
            outside += m
    return inside, boundary, outside


def root_membership(p: Polynomial, phi: RationalFunction, tol: float = MEMBERSHIP_TOL):
    """Per-root classification ``[(root, multiplicity, 'inside'|'boundary'|'outside')]``."""
    out = []
    phi = phi.to_mode(DOUBLE)
    for w, m in poly_roots(p.to_mode(DOUBLE)):
        i, b, _ = membership_count(Polynomial((-w, 1)), phi, tol)
        out.append((w, m, "inside" if i else "boundary" if b else "outside"))
    return out


def dividing_check(f: RationalFunction, g: RationalFunction,
                   rank_tol: float = DEFAULT_RANK_TOL, pole_tol: float = 1e-9):
    """Classify ``J B(f, g)`` as semidefinite or indefinite.

    Returns ``(label, inertia)``; the zero matrix is reported as positive
    semidefinite with full kernel.
    """
    from .ratfun import pole_divisor
    p1, p2, q = to_common_denominator(f, g)
    d = pole_divisor(q, pole_tol)
    form = signature_form(f, g, d, rank_tol)
    n_plus, n_minus, _ = form.inertia
    if n_minus == 0:
        label = PSD
    elif n_plus == 0:
        label = NSD
    else:
        label = INDEFINITE
    return label, form.inertia
