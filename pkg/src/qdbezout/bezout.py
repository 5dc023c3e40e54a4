"""Genus-0 surface Bezoutian, signature matrix and Hermitian-form inertia.

Basis functions are ``(t - a)**-(k+1)`` in both variables.  For real ``f, g``
the matrix ``J @ B(f, g)`` is Hermitian; its signature equals the winding
number of ``h = f/g`` along the real line.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scalars
from .errors import AmbiguousRankError, InvalidInput, NumericalFailure, PoleConfigurationError
from .poly import Polynomial, classical_bezout
from .ratfun import (PAIR_LOWER, REAL, PoleDivisor, RationalFunction, _exact_quotient,
                     compose_poly_ratfun, make_divisor, partial_fraction_matrix,
                     pole_divisor, to_common_denominator)
from .scalars import DOUBLE, EXACT, GaussRat

DEFAULT_RANK_TOL = 1e-9
HERMITIAN_TOL = 1e-10


@dataclass(frozen=True)
class OrderedPoleBasis:
    divisor: PoleDivisor
    labels: tuple

    def __len__(self):
        return len(self.labels)

    def to_json(self) -> list:
        return [f"{scalars.format_scalar(a)}:{k}" for a, k in self.labels]


@dataclass(frozen=True)
class SignatureMatrix:
    J: np.ndarray

    def __matmul__(self, other):
        return self.J @ other


def ordered_basis_and_J(d: PoleDivisor):
    """Basis order of ``d`` and the matching signature matrix.

    ``J`` is the identity on real-pole coordinates and a 2x2 swap on each
    interleaved conjugate pair.
    """
    if not d.is_closed:
        raise PoleConfigurationError("unpaired complex pole in divisor")
    labels = tuple(d.labels())
    n = len(labels)
    J = np.zeros((n, n), dtype=int)
    i = 0
    for e in d.entries:
        if e.cls == REAL:
            for _ in range(e.multiplicity):
                J[i, i] = 1
                i += 1
    while i < n:
        J[i, i + 1] = J[i + 1, i] = 1
        i += 2
    return OrderedPoleBasis(d, labels), SignatureMatrix(J)


def congruence(M: np.ndarray, C: np.ndarray) -> np.ndarray:
    """``M.T @ C @ M``; exact matrices go through integer products."""
    if M.dtype == object or C.dtype == object:
        return scalars.gauss_matmul(scalars.gauss_matmul(M.T, C), M)
    return M.T @ C @ M


def apply_J(J: np.ndarray, B: np.ndarray) -> np.ndarray:
    """``J @ B`` for a permutation matrix ``J``, done as a row permutation."""
    return B[np.argmax(J, axis=1), :]


def surface_bezoutian(f: RationalFunction, g: RationalFunction, d: PoleDivisor,
                      tol: float = 1e-8):
    """Bezoutian of ``f, g`` in ``L(d)``; returns ``(B, basis)``.

    ``B = M.T @ C @ M`` with ``C`` the classical Bezoutian of the numerators
    over ``q = prod (t - a)**m`` and ``M`` the partial-fraction matrix of
    ``q``, so that ``(f(t) g(s) - f(s) g(t)) / (t - s)`` equals
    ``sum B[l, l'] e_l(t) e_l'(s)``.
    """
    mode = d.mode if f.mode == g.mode == d.mode else DOUBLE
    f, g = f.to_mode(mode), g.to_mode(mode)
    p1, p2, q = to_common_denominator(f, g, tol)
    n = d.degree
    if q.degree > n:
        raise PoleConfigurationError("the functions have poles outside the divisor")
    if q.degree < n:
        # pad both numerators so that the denominator is the divisor polynomial
        extra = _exact_quotient(d.polynomial(mode), q, tol)
        p1, p2, q = p1 * extra, p2 * extra, q * extra
    M = partial_fraction_matrix(q, d, check=(mode == EXACT))
    C = classical_bezout(p1, p2, n)
    B = congruence(M, C)
    labels = tuple(d.labels())
    return B, OrderedPoleBasis(d, labels)


def bezout_expansion(B: np.ndarray, labels, t, s) -> complex:
    """Evaluate ``sum B[l, l'] e_l(t) e_l'(s)`` in double precision."""
    et = np.array([(t - complex(a)) ** -(k + 1) for a, k in labels])
    es = np.array([(s - complex(a)) ** -(k + 1) for a, k in labels])
    Bd = np.array(B, dtype=complex)
    return complex(et @ Bd @ es)


@dataclass(frozen=True)
class HermitianForm:
    H: np.ndarray
    inertia: tuple
    rank_tol: float
    mode: str
    basis: OrderedPoleBasis | None = None
    J: np.ndarray | None = None
    B: np.ndarray | None = None
    eigenvalues: tuple = ()

    @property
    def size(self) -> int:
        return self.H.shape[0]

    @property
    def n_plus(self):
        return self.inertia[0]

    @property
    def n_minus(self):
        return self.inertia[1]

    @property
    def n_zero(self):
        return self.inertia[2]

    @property
    def signature(self) -> int:
        return self.inertia[0] - self.inertia[1]

    def to_json(self) -> dict:
        return {
            "labels": self.basis.to_json() if self.basis is not None else None,
            "H": [[scalars.format_scalar(x) for x in row] for row in self.H],
            "inertia": list(self.inertia),
            "mode": self.mode,
            "rank_tol": self.rank_tol,
        }


def _conj_transpose(A: np.ndarray) -> np.ndarray:
    if A.dtype == object:
        return np.vectorize(scalars.conj, otypes=[object])(A).T
    return A.conj().T


def hermitian_residual(H: np.ndarray) -> float:
    Hd = np.array(H, dtype=complex)
    return float(np.linalg.norm(Hd - Hd.conj().T))


def _inertia_exact(H: np.ndarray):
    """Sylvester congruence elimination with 1x1 and 2x2 anti-diagonal pivots."""
    A = [list(row) for row in H]
    active = list(range(len(A)))
    pos = neg = 0
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is not None:
            dv = A[piv][piv]
            if dv.im != 0:
                raise NumericalFailure("matrix is not Hermitian")
            if dv.re > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            inv = 1 / dv
            col = [(r, A[r][piv] * inv) for r in active if A[r][piv]]
            for r, fac in col:
                row_r = A[r]
                for c in active:
                    if A[piv][c]:
                        row_r[c] = row_r[c] - fac * A[piv][c]
            continue
        pair = next(((i, j) for i in active for j in active if j > i and A[i][j]), None)
        if pair is None:
            break
        i, j = pair
        # [[0, a], [conj a, 0]] has one positive and one negative eigenvalue
        pos += 1
        neg += 1
        a, b = A[i][j], A[j][i]
        active.remove(i)
        active.remove(j)
        ia, ib = 1 / a, 1 / b
        for r in active:
            x_i, x_j = A[r][i], A[r][j]
            if not x_i and not x_j:
                continue
            row_r = A[r]
            for c in active:
                row_r[c] = row_r[c] - (x_i * ib * A[j][c] + x_j * ia * A[i][c])
    n = len(A)
    return pos, neg, n - pos - neg


def equilibrate(H: np.ndarray, floor: float = 0.0, sweeps: int = 30) -> np.ndarray:
    """Symmetric Ruiz scaling ``D H D`` with positive diagonal ``D``.

    A congruence by a positive diagonal, so the inertia is unchanged.  Rows
    whose largest entry is at most ``floor`` are numerically zero and are
    left unscaled, so noise in a kernel direction is never amplified.
    """
    d = np.ones(H.shape[0])
    small = np.abs(H).max(axis=1) <= floor
    for _ in range(sweeps):
        Hs = d[:, None] * H * d[None, :]
        r = np.abs(Hs).max(axis=1)
        step = np.ones_like(r)
        ok = ~small & (r > 0)
        step[ok] = 1.0 / np.sqrt(r[ok])
        d = d * step
        if np.all(np.abs(step - 1.0) < 1e-3):
            break
    return d[:, None] * H * d[None, :]


def _inertia_double(H: np.ndarray, rank_tol: float, scale: bool = True):
    Hd = np.array(H, dtype=complex)
    Hd = (Hd + Hd.conj().T) / 2
    if scale and Hd.size:
        Hd = equilibrate(Hd, floor=rank_tol * float(np.abs(Hd).max()))
    if Hd.size == 0:
        return (0, 0, 0), ()
    ev = np.linalg.eigvalsh(Hd)
    thr = rank_tol * max(1.0, float(np.linalg.norm(Hd)))
    pos = int(np.sum(ev > thr))
    neg = int(np.sum(ev < -thr))
    result = (pos, neg, len(ev) - pos - neg)
    band = ev[(np.abs(ev) >= thr / 10) & (np.abs(ev) <= thr * 10)]
    if band.size:
        raise AmbiguousRankError(
            f"eigenvalues {band.tolist()} lie within a decade of the rank threshold {thr:.3g}",
            eigenvalues=band.tolist(), tentative=result)
    return result, tuple(float(x) for x in ev)


def inertia(H, mode: str | None = None, rank_tol: float = DEFAULT_RANK_TOL,
            scale: bool = True):
    """Return ``(n_plus, n_minus, n_zero)`` of a Hermitian matrix.

    Exact mode uses congruence elimination; double mode counts eigenvalues of
    the (equilibrated) matrix against ``rank_tol * max(1, ||H||_F)`` and raises
    :class:`AmbiguousRankError` when any eigenvalue lies within a factor of ten
    of that threshold.
    """
    if isinstance(H, HermitianForm):
        return H.inertia
    H = np.asarray(H)
    if mode is None:
        mode = EXACT if H.dtype == object else DOUBLE
    if mode == EXACT:
        H = np.vectorize(scalars.to_exact, otypes=[object])(H) if H.size else H
        if H.size and not all(H[i, j] == scalars.conj(H[j, i])
                              for i in range(H.shape[0]) for j in range(i, H.shape[0])):
            raise NumericalFailure("matrix is not Hermitian")
        return _inertia_exact(H)
    return _inertia_double(H, rank_tol, scale)[0]


def make_form(H, mode, rank_tol=DEFAULT_RANK_TOL, basis=None, J=None, B=None,
              check: bool = True) -> HermitianForm:
    """Validate Hermitian symmetry and attach the inertia."""
    if mode == EXACT:
        if check and not np.all(H == _conj_transpose(H)):
            raise NumericalFailure("exact form is not Hermitian")
        return HermitianForm(H, _inertia_exact(H), rank_tol, mode, basis, J, B)
    Hd = np.array(H, dtype=complex)
    nrm = float(np.linalg.norm(Hd))
    if check and hermitian_residual(Hd) > HERMITIAN_TOL * (1.0 + nrm):
        raise NumericalFailure(
            f"Hermitian residual {hermitian_residual(Hd):.3g} exceeds tolerance; "
            "check sign conventions or conditioning")
    result, ev = _inertia_double(Hd, rank_tol)
    return HermitianForm(Hd, result, rank_tol, mode, basis, J, B, ev)


def signature_form(f: RationalFunction, g: RationalFunction, d: PoleDivisor,
                   rank_tol: float = DEFAULT_RANK_TOL) -> HermitianForm:
    """``J @ B(f, g)`` for real ``f, g``."""
    B, basis = surface_bezoutian(f, g, d)
    _, J = ordered_basis_and_J(d)
    mode = EXACT if B.dtype == object else DOUBLE
    H = apply_J(J.J, B)
    return make_form(H, mode, rank_tol, basis, J.J, B)


def quadrature_divisor(phi: RationalFunction, n: int, tol: float = 1e-9,
                       known_poles=None) -> PoleDivisor:
    """``n * ((phi)_inf + (phi^tau)_inf)`` for a map with all poles strictly lower."""
    own = pole_divisor(phi.den, tol, known_poles, closed=False)
    if any(e.cls != PAIR_LOWER for e in own.entries):
        raise PoleConfigurationError(
            "the map must have all poles strictly in the lower half-plane")
    if phi.num.degree > phi.den.degree:
        raise PoleConfigurationError("the map has a pole at infinity")
    poles = []
    for e in own.entries:
        poles.append((e.pole, n * e.multiplicity))
        poles.append((scalars.conj(e.pole), n * e.multiplicity))
    return make_divisor(poles, tol, closed=True)


def _half_i(mode):
    return GaussRat(0, 1) / 2 if mode == EXACT else 0.5j


def hermitian_form(p: Polynomial, phi: RationalFunction, mode: str | None = None,
                   rank_tol: float = DEFAULT_RANK_TOL, pole_tol: float = 1e-9,
                   known_poles=None, corrupt_j: bool = False) -> HermitianForm:
    """Counting form of ``p`` on the domain ``phi(upper half-plane)``.

    Builds ``f = p(phi)`` and ``g = f^tau`` over ``D = n (phi)_inf + n (phi^tau)_inf``
    and returns ``H = (i/2) J B(f, f^tau)``, which equals ``J B(f_r, f_i)``.
    The number of zeros of ``p`` in the domain beyond the common ones is
    ``n_minus(H) - deg(p) * deg(phi)``.

    ``corrupt_j`` replaces ``J`` by the identity; it exists only so the
    verification path can be exercised against a known-bad form.
    """
    if mode is None:
        mode = EXACT if p.mode == EXACT and phi.mode == EXACT else DOUBLE
    p = p.to_mode(mode)
    phi = phi.to_mode(mode)
    if p.degree < 1:
        raise InvalidInput("polynomial must have degree at least 1")
    n = p.degree
    d = quadrature_divisor(phi, n, pole_tol, known_poles)
    f = compose_poly_ratfun(p, phi)
    if d.degree != 2 * n * phi.degree:
        raise PoleConfigurationError("divisor degree does not match 2 n deg(phi)")
    B, _ = surface_bezoutian(f, f.tau(), d)
    basis, J = ordered_basis_and_J(d)
    Jm = np.eye(d.degree, dtype=int) if corrupt_j else J.J
    H = _half_i(mode) * apply_J(Jm, B)
    return make_form(H, mode, rank_tol, basis, Jm, B, check=not corrupt_j)
