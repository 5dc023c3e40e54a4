"""Zero counts read off inertia triples.

``count_zeros_in_domain`` handles a polynomial on a quadrature domain given
by a map ``phi`` of the upper half-plane; ``count_by_corollary`` handles a
single rational function on the sphere; ``hermite_half_plane_count`` is the
classical half-plane count.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import scalars
from .bezout import (DEFAULT_RANK_TOL, HermitianForm, _half_i, _inertia_double, _inertia_exact,
                     apply_J, hermitian_form, make_form, ordered_basis_and_J,
                     surface_bezoutian)
from .errors import AmbiguousRankError, InvalidInput, PoleConfigurationError
from .poly import Polynomial, classical_bezout, poly_roots
from .ratfun import PAIR_LOWER, REAL, RationalFunction, make_divisor, pole_divisor
from .scalars import DOUBLE, EXACT, GaussRat

RULE_DOMAIN = "quadrature-domain"
RULE_REAL_POLES = "real-poles"
RULE_LOWER_POLES = "lower-poles"


@dataclass(frozen=True)
class ZeroCountReport:
    """Counts for one function.

    ``interior_additional`` is ``n_minus - offset``; it is a lower bound for the
    number of zeros in the region and is exact when ``common_zero_degree`` is 0.
    ``interior_total_if_no_boundary`` assumes no zeros on the boundary.
    """

    common_zero_degree: int
    interior_additional: int
    interior_total_if_no_boundary: int | None
    boundary_suspected: bool
    n: int
    map_degree: int
    inertia: tuple
    mode: str
    rank_tol: float
    rule: str = RULE_DOMAIN
    offset: int = 0
    ambiguous_rank: bool = False
    provenance: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def signature(self) -> int:
        return self.inertia[0] - self.inertia[1]

    @property
    def interior(self) -> int:
        """Best single count: total if determinable, else the additional count."""
        if self.interior_total_if_no_boundary is not None:
            return self.interior_total_if_no_boundary
        return self.interior_additional

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "provenance": self.provenance,
            "n": self.n,
            "map_degree": self.map_degree,
            "matrix_size": sum(self.inertia),
            "inertia": {"n_plus": self.inertia[0], "n_minus": self.inertia[1],
                        "n_zero": self.inertia[2]},
            "signature": self.signature,
            "offset": self.offset,
            "common_zero_degree": self.common_zero_degree,
            "interior_additional": self.interior_additional,
            "interior_total_if_no_boundary": self.interior_total_if_no_boundary,
            "interior": self.interior,
            "boundary_suspected": self.boundary_suspected,
            "ambiguous_rank": self.ambiguous_rank,
            "mode": self.mode,
            "rank_tol": self.rank_tol,
        }
        out.update(self.extra)
        return out


def _report(inertia, offset, n, map_degree, mode, rank_tol, rule, ambiguous=False,
            provenance=None, real_zeros=False) -> ZeroCountReport:
    n_plus, n_minus, n_zero = inertia
    additional = n_minus - offset
    total = None
    # common zeros pair up when none lie on the boundary, so n_zero must be even
    if n_zero % 2 == 0 and not real_zeros:
        total = additional + n_zero // 2
    return ZeroCountReport(
        common_zero_degree=n_zero,
        interior_additional=additional,
        interior_total_if_no_boundary=total,
        boundary_suspected=n_zero > 0 or ambiguous or real_zeros,
        n=n, map_degree=map_degree, inertia=tuple(inertia), mode=mode,
        rank_tol=rank_tol, rule=rule, offset=offset, ambiguous_rank=ambiguous,
        provenance=provenance)


def empty_report(map_degree=0, mode=DOUBLE, rank_tol=DEFAULT_RANK_TOL,
                 provenance=None) -> ZeroCountReport:
    """All-zero report for a nonzero constant polynomial."""
    return ZeroCountReport(0, 0, 0, False, 0, map_degree, (0, 0, 0), mode, rank_tol,
                           provenance=provenance)


def count_zeros_in_domain(p: Polynomial, phi: RationalFunction, mode: str | None = None,
                          rank_tol: float = DEFAULT_RANK_TOL, strict: bool = False,
                          known_poles=None, provenance=None) -> ZeroCountReport:
    """Count zeros of ``p`` in ``phi(upper half-plane)``.

    ``interior_additional = n_minus - deg(p) * deg(phi)``.  With ``strict`` an
    ambiguous rank raises :class:`AmbiguousRankError`; otherwise the tentative
    inertia is reported with ``ambiguous_rank`` and ``boundary_suspected`` set.
    """
    if p.degree < 1:
        raise InvalidInput("polynomial must be nonconstant")
    try:
        form = hermitian_form(p, phi, mode, rank_tol, known_poles=known_poles)
        inertia, ambiguous, mode_used = form.inertia, False, form.mode
    except AmbiguousRankError as exc:
        if strict or exc.tentative is None:
            raise
        inertia, ambiguous, mode_used = exc.tentative, True, DOUBLE
    offset = p.degree * phi.degree
    return _report(inertia, offset, p.degree, phi.degree, mode_used, rank_tol,
                   RULE_DOMAIN, ambiguous, provenance)


def hermite_half_plane_count(p: Polynomial, rank_tol: float = DEFAULT_RANK_TOL):
    """``(upper, lower, common)`` from the inertia of ``-i * Bez(p, p^tau)``."""
    if p.degree < 1:
        raise InvalidInput("polynomial must be nonconstant")
    C = classical_bezout(p, p.tau(), p.degree)
    if p.mode == EXACT:
        H = GaussRat(0, -1) * C
        return _inertia_exact(H)
    return _inertia_double(-1j * C, rank_tol)[0]


def _classify_poles(f: RationalFunction, tol: float):
    d = pole_divisor(f.den, tol, closed=False) if f.den.degree > 0 else None
    classes = {e.cls for e in d.entries} if d is not None else set()
    return d, classes


def _has_real_zero(f: RationalFunction, tol: float = 1e-7) -> bool:
    if f.num.degree < f.den.degree:
        return True  # zero at infinity, a real point
    if f.num.degree < 1:
        return False
    return any(abs(complex(r).imag) <= tol * (1 + abs(r)) for r, _ in poly_roots(f.num))


def tau_pair_form(f: RationalFunction, d, rank_tol=DEFAULT_RANK_TOL) -> HermitianForm:
    """``J B(f_r, f_i)`` computed as ``(i/2) J B(f, f^tau)`` over the divisor ``d``."""
    B, basis = surface_bezoutian(f, f.tau(), d)
    _, J = ordered_basis_and_J(d)
    H = _half_i(d.mode if f.mode == d.mode else DOUBLE) * apply_J(J.J, B)
    mode = EXACT if H.dtype == object else DOUBLE
    return make_form(H, mode, rank_tol, basis, J.J, B)


def count_by_corollary(f: RationalFunction, mode: str | None = None,
                       rank_tol: float = DEFAULT_RANK_TOL, pole_tol: float = 1e-9,
                       strict: bool = False) -> ZeroCountReport:
    """Zeros of ``f`` in the upper half-plane from the inertia of ``J B(f_r, f_i)``.

    All poles real: ``D = (f)_inf`` and ``a_+ + b_+ = n_minus``.
    No poles in the closed upper half-plane: ``D = (f)_inf + (f^tau)_inf`` and
    ``a_+ + b_+ = n_minus - deg f``.  Any other configuration is rejected.
    """
    if mode is not None:
        f = f.to_mode(mode)
    mode = f.mode
    if f.degree < 1:
        raise InvalidInput("function must be nonconstant")
    if f.num.degree > f.den.degree:
        raise PoleConfigurationError(
            "mixed pole configuration: pole at infinity; apply a real Mobius map first")
    d0, classes = _classify_poles(f, pole_tol)
    if classes == {REAL}:
        rule, offset = RULE_REAL_POLES, 0
        d = d0
    elif classes == {PAIR_LOWER}:
        rule, offset = RULE_LOWER_POLES, f.degree
        poles = []
        for e in d0.entries:
            poles += [(e.pole, e.multiplicity), (scalars.conj(e.pole), e.multiplicity)]
        d = make_divisor(poles, pole_tol)
    else:
        raise PoleConfigurationError(
            "mixed pole configuration: poles must be all real or all in the open lower half-plane")
    real_zeros = _has_real_zero(f)
    try:
        form = tau_pair_form(f, d, rank_tol)
        inertia, ambiguous = form.inertia, False
    except AmbiguousRankError as exc:
        if strict or exc.tentative is None:
            raise
        inertia, ambiguous = exc.tentative, True
    return _report(inertia, offset, 1, f.degree, mode, rank_tol, rule, ambiguous,
                   real_zeros=real_zeros)
